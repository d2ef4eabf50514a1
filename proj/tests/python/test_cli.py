import json
import subprocess

import jsonschema
import pytest


def run(cli, data_dir, *args):
    proc = subprocess.run([cli, *args], cwd=data_dir, capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


COMMANDS = [
    ["validate", "pair2.gdf"],
    ["info", "bundle.gdf"],
    ["sub", "enumerate", "--wide", "pair3.gdf"],
    ["sub", "check", "s3.gdf", "--members", "id,(12)"],
    ["normal", "check", "s3.gdf", "--members", "id,(12)"],
    ["quotient", "s3.gdf", "--by", "s3_a3.gdf"],
    ["hom", "check", "z6.gdf", "z2.gdf", "z6_to_z2.gdf"],
    ["iso", "z6.gdf", "s3.gdf"],
    ["iso-theorem", "first", "z6.gdf", "z3.gdf", "z6_to_z3.gdf"],
    ["iso-theorem", "second", "z6.gdf", "z6_even.gdf", "z6_half.gdf"],
    ["iso-theorem", "third", "z6.gdf", "z6_even.gdf", "z6_trivial.gdf"],
    ["series", "validate", "z6.gdf", "z6_series_a.gdf"],
    ["series", "composition", "z12.gdf"],
    ["series", "equivalent", "z6.gdf", "z6_series_a.gdf", "z6_series_b.gdf"],
    ["series", "jordan-holder", "s3.gdf"],
    ["series", "zassenhaus", "z6.gdf", "z6_trivial.gdf", "z6_even.gdf", "z6_trivial.gdf", "z6_half.gdf"],
    ["series", "schreier", "z6.gdf", "z6_series_a.gdf", "z6_series_b.gdf"],
    ["exel", "build", "z3.gdf"],
    ["exel", "normal-form", "z3.gdf", "--word", "1,1,2"],
    ["exel", "groupoid", "z2.gdf"],
    ["paction", "check", "z3_on_2.gdf"],
    ["paction", "to-exel", "z2_on_2.gdf"],
    ["paction", "from-exel", "z2_on_2_exel.gdf"],
    ["paction", "roundtrip", "z3.gdf", "--points", "1"],
    ["corpus", "--count", "50", "--seed", "5"],
]


@pytest.fixture(scope="module")
def schema(schema_dir):
    return json.loads((schema_dir / "cli_output.schema.json").read_text())


@pytest.mark.parametrize("args", COMMANDS, ids=lambda a: " ".join(a[:2]))
def test_machine_output_matches_schema(cli, data_dir, schema, args):
    code, out, err = run(cli, data_dir, "--json", *args)
    assert code in (0, 1), err
    doc = json.loads(out)
    jsonschema.validate(doc, schema)
    assert doc["ok"] == (code == 0)
    # Byte-stable across runs.
    assert run(cli, data_dir, "--json", *args)[1] == out


def test_failure_envelope(cli, data_dir, schema):
    code, out, _ = run(cli, data_dir, "--json", "normal", "check", "s3.gdf", "--members", "id,(12)")
    assert code == 1
    doc = json.loads(out)
    jsonschema.validate(doc, schema)
    assert doc["witness"] == ["(13)", "(12)", "(23)"]


@pytest.mark.parametrize(
    "args, code",
    [
        (["validate", "bad_syntax.gdf"], 2),
        (["validate", "bad_unknown_field.gdf"], 2),
        (["validate", "bad_conflict.gdf"], 2),
        (["validate", "missing.gdf"], 2),
        (["validate", "bad_axioms.gdf"], 1),
        (["--max-size", "3", "info", "s3.gdf"], 3),
        (["exel", "build", "z12.gdf"], 3),
        (["no-such-command"], 2),
    ],
)
def test_exit_codes(cli, data_dir, args, code):
    got, out, err = run(cli, data_dir, "--json", *args)
    assert got == code
    if code >= 2:
        assert out == ""
        assert err.startswith("error [")


def test_human_output(cli, data_dir):
    code, out, _ = run(cli, data_dir, "info", "s3.gdf")
    assert code == 0
    assert "6 elements" in out
    assert not out.lstrip().startswith("{")
