import json
from pathlib import Path

import jsonschema
import pytest
from hypothesis import given

from ugc_audio.content_model import dumps
from ugc_audio.fixtures import fixtures_dir

from test_content_model import level_docs, vehicle_docs

SCHEMAS = Path(__file__).resolve().parents[1] / "docs" / "schemas"
LEVEL_SCHEMA = json.loads((SCHEMAS / "level.schema.json").read_text())
VEHICLE_SCHEMA = json.loads((SCHEMAS / "vehicle.schema.json").read_text())


@pytest.mark.parametrize("path", sorted(fixtures_dir().glob("level_*.json")))
def test_level_fixtures_match_schema(path):
    jsonschema.validate(json.loads(path.read_text()), LEVEL_SCHEMA)


@pytest.mark.parametrize("path", sorted(fixtures_dir().glob("vehicle_*.json")))
def test_vehicle_fixtures_match_schema(path):
    jsonschema.validate(json.loads(path.read_text()), VEHICLE_SCHEMA)


@given(level_docs)
def test_serialized_levels_match_schema(doc):
    jsonschema.validate(json.loads(dumps(doc)), LEVEL_SCHEMA)


@given(vehicle_docs)
def test_serialized_vehicles_match_schema(doc):
    jsonschema.validate(json.loads(dumps(doc)), VEHICLE_SCHEMA)


def test_schema_rejects_wrong_kind():
    doc = json.loads((fixtures_dir() / "level_all_blue.json").read_text())
    doc["kind"] = "vehicle"
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(doc, LEVEL_SCHEMA)
