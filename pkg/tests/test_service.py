import json
import warnings
from pathlib import Path

import jsonschema
import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from starlette.testclient import TestClient

from replcrit.service import app
from replcrit.service.schema import RESPONSE_MODELS, render_report_schema

SCHEMA_PATH = (
    Path(__file__).resolve().parents[1] / "src" / "replcrit" / "schemas" / "reports.schema.json"
)


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


@pytest.fixture(scope="module")
def schema():
    return json.loads(SCHEMA_PATH.read_text())


def validate_as(schema, payload, model_name):
    jsonschema.validate(
        payload, {"$ref": f"#/$defs/{model_name}", "$defs": schema["$defs"]}
    )


def test_shipped_schema_matches_models():
    assert SCHEMA_PATH.read_text() == render_report_schema()
    names = {m.__name__ for m in RESPONSE_MODELS}
    shipped = set(json.loads(SCHEMA_PATH.read_text())["$defs"])
    assert names <= shipped


def test_health(client, schema):
    data = client.get("/health").json()
    assert data["status"] == "ok"
    validate_as(schema, data, "HealthResponse")


def test_generate(client, schema):
    r = client.post("/gallai/generate", json={"n": 4})
    assert r.status_code == 200
    data = r.json()
    assert data["vertices"] == 12 and data["edges"] == 24
    validate_as(schema, data, "GenerateResponse")
    assert client.post("/gallai/generate", json={"n": 3}).status_code == 422


def test_chromatic(client, schema):
    r = client.post("/graphs/chromatic", json={"graph6": "C~"})
    data = r.json()
    assert data["chi"] == 4
    validate_as(schema, data, "ChromaticResponse")
    assert client.post("/graphs/chromatic", json={"graph6": "!!"}).status_code == 400


def test_criticality(client, schema):
    r = client.post("/graphs/criticality", json={"graph6": "C~", "k": 4, "edges": True})
    data = r.json()
    assert data["is_vertex_critical"] and data["is_edge_critical"]
    validate_as(schema, data, "CriticalityResponse")


def test_fractional(client, schema):
    h4_g6 = client.post("/gallai/generate", json={"n": 4}).json()["graph6"]
    data = client.post("/graphs/fractional", json={"graph6": h4_g6}).json()
    assert data["value"] == "3" and data["chi"] == 4 and data["fractional_gap_condition"] is False
    validate_as(schema, data, "FractionalResponse")
    c5 = client.post("/graphs/fractional", json={"graph6": "Dhc"}).json()
    assert c5["value"] == "5/2"


def test_replicate(client, schema):
    data = client.post("/gallai/replicate", json={"n": 4, "w": "0,0"}).json()
    assert data["vertices"] == 13 and data["edges"] == 29
    assert data["clones"] == [{"index": 12, "original": 0, "name": "0,0'"}]
    validate_as(schema, data, "ReplicateResponse")
    assert (
        client.post("/gallai/replicate", json={"n": 4, "w": "0,9"}).status_code == 400
    )


def test_encode_sigma(client, schema):
    data = client.post(
        "/signseq/encode", json={"n": 4, "w": "0,0;1,1;2,2;3,0"}
    ).json()
    assert data["sigma"] == "+++0" and data["z"] == 1
    validate_as(schema, data, "EncodeSigmaResponse")
    r = client.post("/signseq/encode", json={"n": 4, "w": "0,0"})
    assert r.status_code == 400 and "one vertex per column" in r.json()["detail"]


def test_classify_sigma(client, schema):
    data = client.post("/strolls/classify", json={"sigma": "0+00-"}).json()
    assert data["good"] is True
    assert data["good_stroll"]["patterns"][0] == "[12]34"
    assert data["good_stroll"]["patterns"][-1] == "[12]43"
    validate_as(schema, data, "ClassifySigmaResponse")


def test_theorem_verify(client, schema):
    data = client.post(
        "/theorem/verify", json={"n": 4, "mode": "constructive", "detail": "sparse"}
    ).json()
    assert data["passed"] is True and data["subset_count"] == 4096
    validate_as(schema, data, "TheoremResponse")


def test_conjecture(client, schema):
    data = client.post("/conjecture/check", json={"graph6": "C~", "k": 4}).json()
    assert data["holds"] is True and data["witness"] == [0]
    assert data["witness_report"]["chi"] == 5
    validate_as(schema, data, "ConjectureResponse")
    # a path is not vertex-critical: usage error
    r = client.post("/conjecture/check", json={"graph6": "Bg", "k": 2})
    assert r.status_code == 400


def test_scan(client, schema):
    h4_g6 = client.post("/gallai/generate", json={"n": 4}).json()["graph6"]
    data = client.post(
        "/scan/corpus", json={"text": f"C~\n{h4_g6}\nnot-a-graph\n", "k": 4}
    ).json()
    assert data["counterexamples"] == [h4_g6]
    assert data["entries"][2]["error"] is not None
    validate_as(schema, data, "ScanResponse")


def test_covers_export(client, schema):
    data = client.post("/covers/export", json={"graph6": "Bw", "max_power": 2}).json()
    assert data["generators"] == [[0, 1], [0, 2], [1, 2]]
    assert "x1*x2" in data["script"]
    validate_as(schema, data, "CoverExportResponse")
    assert client.post("/covers/export", json={"max_power": 2}).status_code == 400
    assert (
        client.post(
            "/covers/export", json={"graph6": "Bw", "n": 4, "max_power": 2}
        ).status_code
        == 400
    )
