import pytest


def test_root_datum_of_sp4(client):
    response = client.get('/api/root-data', query_string={'kind': 'Sp:2'})
    assert response.status_code == 200
    body = response.get_json()
    assert body['cartanType'] == 'C'
    assert body['cartanMatrix'] == [[2, -1], [-2, 2]]
    assert len(body['positiveRoots']) == 4


def test_grading(client):
    response = client.get('/api/root-data/grading', query_string={'kind': 'SL:4', 'k': -2})
    assert response.get_json()['dimension'] == 2


def test_component_groups(client):
    response = client.get('/api/torus/groups', query_string={'kind': 'SL:4', 'subset': 'all'})
    rows = response.get_json()['rows']
    assert rows == [{'S': [1, 2, 3], 'label': '{1,2,3}', 'dimension': 3, 'AT': 'Z/4', 'order': 4}]


def test_torus_parameters(client):
    response = client.get('/api/torus/parameters', query_string={'kind': 'Sp:2'})
    assert response.get_json()['count'] == 6


def test_orbit_list(client):
    response = client.get('/api/orbits', query_string={'pair': 'A:2,2'})
    assert response.status_code == 200
    body = response.get_json()
    assert body['count'] == 21
    assert sum(o['closed'] for o in body['orbits']) == 6


def test_orbit_graph_with_boxes(client):
    response = client.get('/api/orbits/graph', query_string={'pair': 'C:2', 'ordering': 'β,α'})
    body = response.get_json()
    assert set(body['boxed']) == {'+-+-', '+11-', '1122', '1+-1'}
    assert body['dot'].startswith('digraph "C:2" {')


def test_saturation(client):
    response = client.get('/api/orbits/saturation', query_string={'pair': 'A:2,2', 'clan': '+-+-', 'root': '1'})
    body = response.get_json()
    assert body['open'] == '11+-'
    assert body['rootType'] == 'noncompact-imaginary'


def test_qs_report(client):
    response = client.get('/api/correspondence/qs', query_string={'pair': 'C:2', 'ordering': 'β,α'})
    body = response.get_json()
    assert body['dimensionPassed'] and body['closurePassed']
    top = next(e for e in body['entries'] if e['S'] == [1, 2])
    assert top['clan'] == '1+-1'
    assert top['AK'] == 'Z/2'


def test_phi(client):
    response = client.get('/api/correspondence/phi', query_string={'kind': 'SL:4'})
    body = response.get_json()
    assert body['surjective'] is False
    assert body['witnesses'][0]['AT'] == 'Z/4'


def test_klv_polynomial(client):
    response = client.get('/api/klv/polynomial', query_string={'pair': 'A:1,1', 'from': '+-', 'to': '11'})
    assert response.get_json()['polynomial'] == '1'


def test_klv_table(client):
    response = client.get('/api/klv/table', query_string={'pair': 'A:1,1'})
    assert len(response.get_json()['rows']) == 5


@pytest.mark.parametrize('url,query', [
    ('/api/orbits', {'pair': 'A:3,1'}),
    ('/api/orbits', {'pair': 'Z:2'}),
    ('/api/root-data', {'kind': 'E:6'}),
    ('/api/correspondence/qs', {'pair': 'A:2,2', 'ordering': '1,2'}),
])
def test_bad_input_is_a_400(client, url, query):
    response = client.get(url, query_string=query)
    assert response.status_code == 400
    body = response.get_json()
    assert body['message']
    assert body['error'] in ('InvalidInputError', 'UnsupportedKindError')


def test_rank_limit_from_the_settings(client):
    response = client.get('/api/orbits', query_string={'pair': 'C:3'})
    assert response.status_code == 400
    assert response.get_json()['limit'] == 2


def test_klv_for_family_c_is_not_implemented(client):
    response = client.get('/api/klv/table', query_string={'pair': 'C:2'})
    assert response.status_code == 501
    assert response.get_json()['error'] == 'NotImplementedForKindError'


def test_missing_argument(client):
    response = client.get('/api/orbits')
    assert response.status_code == 400
