import json

import pytest

grpd = pytest.importorskip("grpd")


def test_constructions():
    s3 = grpd.symmetric_group_3()
    assert len(s3) == 6
    assert s3.is_group()
    assert s3.identities == ["id"]
    p = grpd.pair_groupoid(["x", "y"])
    assert p.compose("(y,x)", "(x,y)") == "(x,x)"
    assert p.compose("(x,y)", "(x,y)") is None
    assert p.inverse("(x,y)") == "(y,x)"


def test_subgroupoids_and_quotients():
    s3 = grpd.symmetric_group_3()
    assert len(grpd.subgroupoids(s3)) == 6
    assert len(grpd.subgroupoids(s3, "normal")) == 3
    assert grpd.is_normal(s3, ["id", "(123)", "(132)"])
    q = grpd.quotient(s3, ["id", "(123)", "(132)"])
    assert grpd.isomorphic(q, grpd.cyclic_group(2))
    with pytest.raises(grpd.GrpdError) as info:
        grpd.quotient(s3, ["id", "(12)"])
    assert info.value.args[0] == "NotNormal"


def test_series():
    assert sorted(grpd.composition_factors(grpd.cyclic_group(12))) == [2, 2, 3]
    assert len(grpd.all_composition_series(grpd.cyclic_group(12))) == 3


def test_axioms():
    ok_id, ok_inv, verdicts = grpd.check_axioms(["e", "a"], [("e", "e", "e"), ("e", "a", "a"), ("a", "e", "a")])
    assert not ok_id and not ok_inv
    assert any(not holds for holds, _ in verdicts.values())


def test_exel():
    assert len(grpd.exel_semigroup(grpd.cyclic_group(2))) == 3
    assert len(grpd.exel_semigroup(grpd.cyclic_group(3))) == 8
    z3 = grpd.cyclic_group(3)
    assert grpd.exel_normal_form(z3, ["0", "1"]) == grpd.exel_normal_form(z3, ["1"])


def test_action_counts():
    r = grpd.action_counts(grpd.cyclic_group(2), 2)
    assert r["partial_actions"] == r["semigroup_actions"] == r["inductive_homs"] == r["global_actions"] == 5
    assert r["counts_match"] and r["maps_inverse"]


def test_load_and_cli(data_dir):
    g = grpd.load(str(data_dir / "pair2.gdf"))
    assert len(g) == 4
    assert grpd.parse(g.to_json()) == g
    code, out, err = grpd.run_cli(["--json", "info", str(data_dir / "pair2.gdf")])
    assert code == 0 and err == ""
    assert json.loads(out)["result"]["size"] == 4
