"""
Flask app for the zetabench workbench
"""
import requests
from flask import Flask, request, jsonify

from zetabench.config import DEFAULT_SCAN_CONFIG, MAX_COUNT_T, ZETABENCH_NAME_STRING, ZETABENCH_VERSION_STRING
from zetabench.errors import ZetaBenchError
from zetabench.records import ScanConfig
from zetabench.utils.format_util import jsonable
from zetabench.zeros.zero_locator import scan_zeros
from zetabench.zeros.zero_table import parse_zero_table, cross_check
from zetabench.zeta.zeta_engine import zeta

app = Flask(__name__)

ALLOWED_EXTENSIONS = {'txt', 'dat', 'csv'}


def _scan_config_from_args() -> ScanConfig:
    return ScanConfig(
        t_max=float(request.args.get('tmax', DEFAULT_SCAN_CONFIG['t_max'])),
        step=float(request.args.get('step', DEFAULT_SCAN_CONFIG['step']))
    )


def _cross_check_response(text: str):
    table = parse_zero_table(text)
    config = _scan_config_from_args()
    if table:
        config = config.with_t_max(max(config.t_max, min(table[-1] + config.step, MAX_COUNT_T)))
    rows = cross_check(scan_zeros(config), table)
    return jsonify(jsonable({
        "rows": [{"index": i, "t": t, "table_t": ref, "delta": d} for i, t, ref, d in rows],
        "max_delta": max((d for *_, d in rows), default=0.0)
    }))


@app.errorhandler(ZetaBenchError)
def numeric_error(e):
    return jsonify({"Error": str(e)}), 400


@app.errorhandler(ValueError)
def bad_argument(e):
    return jsonify({"Error": str(e)}), 400


@app.route('/')
def home():
    return jsonify({
        "name": ZETABENCH_NAME_STRING,
        "version": ZETABENCH_VERSION_STRING,
        "routes": ["/eval?re=&im=", "/zeros?tmax=&step=", "POST / (zero table file)", "/upload_url?url="]
    })


@app.route('/eval')
def evaluate():
    s = complex(float(request.args.get('re', 0.0)), float(request.args.get('im', 0.0)))
    return jsonify(jsonable(zeta(s).as_json()))


@app.route('/zeros')
def zeros():
    records = scan_zeros(_scan_config_from_args())
    return jsonify(jsonable([r.as_json() for r in records]))


@app.route('/', methods=['POST'])
def upload_file():
    uploaded_file = request.files.get('file')
    if uploaded_file is None or uploaded_file.filename == '':
        return jsonify({"Error": "No zero table uploaded!"}), 400
    if uploaded_file.filename.rsplit('.', 1)[-1].lower() not in ALLOWED_EXTENSIONS:
        return jsonify({"Error": "Unknown file type!"}), 400
    text = uploaded_file.stream.read().decode('utf-8')
    return _cross_check_response(text)


@app.route('/upload_url')
def upload_url():
    url = request.args.get('url')
    if not url:
        return jsonify({"Error": "Missing url parameter!"}), 400
    resp = requests.get(url)
    resp.raise_for_status()
    return _cross_check_response(resp.text)


if __name__ == '__main__':
    app.run(port=8080, host='0.0.0.0')
