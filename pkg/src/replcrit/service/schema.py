"""Build the JSON schema that every service report validates against.

The schema shipped in ``replcrit/schemas/reports.schema.json`` is generated
from the response models by this module; a test guards against drift.
"""

from __future__ import annotations

import json

from pydantic.json_schema import models_json_schema

from . import models as m

RESPONSE_MODELS = (
    m.HealthResponse,
    m.GenerateResponse,
    m.ChromaticResponse,
    m.CriticalityResponse,
    m.FractionalResponse,
    m.ReplicateResponse,
    m.EncodeSigmaResponse,
    m.ClassifySigmaResponse,
    m.TheoremResponse,
    m.ConjectureResponse,
    m.ScanResponse,
    m.CoverExportResponse,
)


def build_report_schema() -> dict:
    _, defs = models_json_schema(
        [(model, "validation") for model in RESPONSE_MODELS],
        ref_template="#/$defs/{model}",
    )
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "title": "replcrit service reports",
        "oneOf": [
            {"$ref": f"#/$defs/{model.__name__}"} for model in RESPONSE_MODELS
        ],
        "$defs": defs["$defs"],
    }


def render_report_schema() -> str:
    return json.dumps(build_report_schema(), indent=2, sort_keys=True) + "\n"


if __name__ == "__main__":
    print(render_report_schema(), end="")
