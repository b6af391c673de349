import csv
import io
import json

import pytest
from click.testing import CliRunner

from cli import cli


@pytest.fixture
def runner():
    return CliRunner()


@pytest.mark.parametrize('pair,count', [('A:2,2', 21), ('C:2', 11), ('A:1,1', 3)])
def test_orbits_lists_every_clan(runner, pair, count):
    result = runner.invoke(cli, ['orbits', '--pair', pair, '--format', 'csv'])
    assert result.exit_code == 0
    rows = list(csv.reader(io.StringIO(result.stdout)))
    assert rows[0] == ['clan', 'length', 'dimension', 'closed', 'open']
    assert len(rows) == count + 1


def test_orbits_as_json(runner):
    result = runner.invoke(cli, ['orbits', '--pair', 'C:2', '--format', 'json'])
    body = json.loads(result.stdout)
    assert body['pair'] == 'C:2'
    top = [o for o in body['orbits'] if o['open']]
    assert [o['clan'] for o in top] == ['1221']


def test_orbits_to_a_file(runner, tmp_path):
    target = tmp_path / 'orbits.txt'
    result = runner.invoke(cli, ['orbits', '--pair', 'A:1,1', '--out', str(target)])
    assert result.exit_code == 0
    assert '11' in target.read_text(encoding='utf-8')


def test_graph_draws_the_long_root_edge(runner):
    result = runner.invoke(cli, ['graph', '--pair', 'C:2', '--ordering', 'β,α'])
    assert result.exit_code == 0
    assert '"1122" -> "1212" [label="β"];' in result.stdout
    assert '"1+-1" [label="1+-1", shape=box];' in result.stdout


def test_verify_passes_for_every_ordering_of_a22(runner):
    result = runner.invoke(cli, ['verify', '--pair', 'A:2,2', '--all-orderings', '--format', 'text'])
    assert result.exit_code == 0
    assert result.stdout.strip().endswith('all checks passed')


def test_verify_json_for_c2(runner):
    result = runner.invoke(cli, ['verify', '--pair', 'C:2', '--ordering', 'β,α'])
    assert result.exit_code == 0
    body = json.loads(result.stdout)
    assert body['passed']
    assert body['orderings'][0]['ordering'] == [2, 1]


def test_klv_single_polynomial(runner):
    result = runner.invoke(cli, ['klv', '--pair', 'A:2,2', '--from', '1+-1', '--to', '1+-1'])
    assert result.exit_code == 0
    assert result.stdout.strip() == '1'


def test_klv_matrix_on_the_qs(runner):
    result = runner.invoke(cli, ['klv', '--pair', 'A:2,2', '--ordering', '2,1,3'])
    assert result.exit_code == 0
    assert 'torus comparison: 64/64 entries equal' in result.stdout


def test_klv_for_family_c_is_unsupported(runner):
    result = runner.invoke(cli, ['klv', '--pair', 'C:2'])
    assert result.exit_code == 2
    assert 'not implemented' in result.stderr


def test_atgroups_for_sl4(runner):
    result = runner.invoke(cli, ['atgroups', '--kind', 'SL:4', '--subset', 'all'])
    assert result.exit_code == 0
    assert 'Z/4' in result.stdout


def test_atgroups_for_sp2_shows_ak(runner):
    result = runner.invoke(cli, ['atgroups', '--kind', 'Sp:2', '--ordering', 'β,α', '--format', 'json'])
    rows = {r['S']: r for r in json.loads(result.stdout)['rows']}
    assert rows['{1,2}']['AT'] == 'Z/2'
    assert rows['{1,2}']['AK'] == 'Z/2'
    assert rows['{}']['AK'] == '1'


def test_phi_for_sp2(runner):
    result = runner.invoke(cli, ['phi', '--kind', 'Sp:2', '--ordering', 'α,β'])
    assert result.exit_code == 0
    assert result.stdout.strip() == 'Sp:2 ordering α,β: not surjective, witnesses {α,β} A_T=Z/2'


def test_phi_for_every_ordering_of_sp2(runner):
    result = runner.invoke(cli, ['phi', '--kind', 'Sp:2', '--all-orderings', '--format', 'json'])
    verdicts = json.loads(result.stdout)
    assert [v['surjective'] for v in verdicts] == [False, True]


@pytest.mark.parametrize('args', [
    ['orbits', '--pair', 'A:3,1'],
    ['orbits', '--pair', 'B:2'],
    ['graph', '--pair', 'A:2,2', '--ordering', '1,1,2'],
    ['phi', '--kind', 'SpinB:3'],
])
def test_bad_input_exits_with_two(runner, args):
    result = runner.invoke(cli, args)
    assert result.exit_code == 2
    assert 'error:' in result.stderr
