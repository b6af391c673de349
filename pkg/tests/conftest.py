import json
from pathlib import Path

import pytest

from ClanController.models.clan import PairKind
from ClanController.models.pair_model import build_pair_model
from Service import create_app
from Service.utils.settings import Settings

DATA = Path(__file__).parent / 'data'


@pytest.fixture(scope='session')
def a11():
    return build_pair_model(PairKind('A', 1, 1))


@pytest.fixture(scope='session')
def a21():
    return build_pair_model(PairKind('A', 2, 1))


@pytest.fixture(scope='session')
def a22():
    return build_pair_model(PairKind('A', 2, 2))


@pytest.fixture(scope='session')
def a32():
    return build_pair_model(PairKind('A', 3, 2))


@pytest.fixture(scope='session')
def c1():
    return build_pair_model(PairKind('C', 1))


@pytest.fixture(scope='session')
def c2():
    return build_pair_model(PairKind('C', 2))


@pytest.fixture(scope='session')
def a22_diagram():
    return json.loads((DATA / 'a22_diagram.json').read_text(encoding='utf-8'))


@pytest.fixture(scope='session')
def c2_diagram():
    return json.loads((DATA / 'c2_diagram.json').read_text(encoding='utf-8'))


@pytest.fixture
def client():
    app = create_app(Settings(max_rank_a=5, max_rank_c=2))
    app.config['TESTING'] = True
    with app.test_client() as client:
        yield client
