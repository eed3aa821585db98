"""Tests for JSON schemas and report serialization."""
import json

import pytest

from src.errors import InputError, InvalidLambda, LiteralParseError, SchemaError
from src.moduli.classify import classify
from src.utils.io_utils import (
    automorphism_to_dict,
    classification_to_dict,
    curve_from_dict,
    curve_to_dict,
    load_configuration,
    load_curve,
    parse_sphere_point,
    read_json,
)


def test_parse_sphere_point():
    assert parse_sphere_point("inf").is_infinity
    assert parse_sphere_point("-2+1i").to_complex() == -2 + 1j
    with pytest.raises(LiteralParseError):
        parse_sphere_point("2 + i")


def test_load_curve(curve_file):
    curve = load_curve(curve_file(2, ["-6", "-2+1.4142135623730951i", "2-1.4142135623730951i"]))
    assert curve.k == 2
    assert curve.lambdas[0] == -6
    assert curve.genus == 17


def test_curve_dict_keeps_full_precision(hidalgo):
    again = curve_from_dict(curve_to_dict(hidalgo))
    assert again.lambdas == hidalgo.lambdas


@pytest.mark.parametrize(
    "data",
    [[], {"k": 2}, {"k": "2", "lambdas": ["3"]}, {"k": True, "lambdas": ["3"]}, {"k": 2, "lambdas": "3"}],
)
def test_curve_schema_errors(data):
    with pytest.raises(SchemaError):
        curve_from_dict(data)


def test_curve_with_bad_lambda():
    with pytest.raises(InvalidLambda):
        curve_from_dict({"k": 2, "lambdas": ["0", "5"]})


def test_points_file(tmp_path):
    path = tmp_path / "points.json"
    path.write_text(json.dumps({"points": ["inf", "0", "1", "-1", "2"]}), encoding="utf-8")
    cfg = load_configuration(path)
    assert cfg.size == 5 and cfg.points[0].is_infinity


def test_read_json_errors(tmp_path):
    with pytest.raises(InputError):
        read_json(tmp_path / "nope.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(SchemaError):
        read_json(bad)


def test_automorphism_dict_is_one_based(real_curve):
    w = classify(real_curve).witness
    data = automorphism_to_dict(w)
    assert sorted(data["perm"]) == [1, 2, 3, 4, 5]
    assert data["anticonformal"] is True
    assert len(data["c"]) == 5 and data["c"][0] == "1.0"


def test_classification_dict(hidalgo):
    data = classification_to_dict(classify(hidalgo))
    assert data["verdict"] == "moduli_R_not_real"
    assert data["witness_order"] == 4
    assert data["assumption"] == "unconditional"
    assert set(data["exhaustion"]) == {
        "antisymmetries", "lifts_scanned", "lifts_excluded_by_permutation", "involutions_found"}
    json.dumps(data)
