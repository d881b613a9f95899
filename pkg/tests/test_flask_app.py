import io
import unittest
from unittest import mock

from zetabench.flask.app import app


class TestFlaskApp(unittest.TestCase):

    def setUp(self):
        app.config['TESTING'] = True
        self.client = app.test_client()

    def test_home(self):
        resp = self.client.get('/')
        assert resp.status_code == 200
        assert resp.get_json()['name'] == 'zetabench'

    def test_eval(self):
        resp = self.client.get('/eval?re=2&im=0')
        assert resp.status_code == 200
        body = resp.get_json()
        assert abs(body['value']['re'] - 1.644934067) < 1e-9
        assert body['method'] == 'dirichlet'

    def test_eval_errors(self):
        resp = self.client.get('/eval?re=1&im=0')
        assert resp.status_code == 400
        assert 'pole' in resp.get_json()['Error']
        assert self.client.get('/eval?re=abc').status_code == 400

    def test_zeros(self):
        resp = self.client.get('/zeros?tmax=15&step=0.1')
        assert resp.status_code == 200
        records = resp.get_json()
        assert len(records) == 1
        assert abs(records[0]['t'] - 14.134725) < 1e-5
        assert self.client.get('/zeros?tmax=15&step=0.5').status_code == 400

    def test_upload_table(self):
        data = {'file': (io.BytesIO(b"14.134725\n21.022040\n"), 'zeros.txt')}
        resp = self.client.post('/', data=data, content_type='multipart/form-data')
        assert resp.status_code == 200
        body = resp.get_json()
        assert [row['index'] for row in body['rows']] == [1, 2]
        assert body['max_delta'] < 1e-5

    def test_upload_errors(self):
        assert self.client.post('/', data={}, content_type='multipart/form-data').status_code == 400
        data = {'file': (io.BytesIO(b"14.134725\n"), 'zeros.pdf')}
        assert self.client.post('/', data=data, content_type='multipart/form-data').status_code == 400
        data = {'file': (io.BytesIO(b"21.0\n14.1\n"), 'zeros.txt')}
        resp = self.client.post('/', data=data, content_type='multipart/form-data')
        assert resp.status_code == 400
        assert 'line 2' in resp.get_json()['Error']

    def test_upload_url(self):
        assert self.client.get('/upload_url').status_code == 400
        response = mock.Mock()
        response.text = "# first zero\n14.134725\n"
        with mock.patch('zetabench.flask.app.requests.get', return_value=response):
            resp = self.client.get('/upload_url?url=https://example.org/zeros1&tmax=15')
        assert resp.status_code == 200
        assert len(resp.get_json()['rows']) == 1
