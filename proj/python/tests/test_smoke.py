"""Smoke tests for the ecpgroups extension module (plain asserts, no deps)."""

import ecpgroups as ecp


def test_perm_arithmetic():
    p = ecp.Perm.parse("(1,2,3)(4,5)", 5)
    assert p.format() == "(1,2,3)(4,5)"
    assert p.order() == 6
    assert (p * p.inverse()) == ecp.Perm.identity(5)
    q = ecp.Perm.parse("(1,2)", 3)
    r = ecp.Perm.parse("(2,3)", 3)
    assert (q * r).format() == "(1,3,2)"  # q applied first
    try:
        ecp.Perm.parse("(1,9)", 5)
        raise AssertionError("expected ParseError")
    except ecp.ParseError:
        pass


def test_group_basics():
    s3 = ecp.symmetric(3)
    assert s3.order == 6
    assert not ecp.is_nilpotent(s3)
    assert ecp.is_ecp(s3)["holds"] is False
    cert = ecp.is_ecp(s3)["certificate"]
    assert cert["replays"] is True

    m = ecp.Group.metacyclic(27, 9, 4)
    assert m.order == 243
    a, b = m.generators
    assert m.label(m.conjugate(a, b)) == "a^4"
    assert ecp.is_ecp(m)["holds"] is True
    assert ecp.all_subgroups_permutable(m) is True


def test_lattice_and_engel():
    q8 = ecp.quaternion8()
    assert len(ecp.all_subgroups(q8)) == 6
    i = q8.find_label("i")
    h = ecp.subgroup_closure(q8, [i])
    report = ecp.theorem4_check(q8, h, i)
    assert report["n"] == 1 and report["t"] == 2 and report["bound"] == 4
    assert report["depth_in_g"] == 2 and report["holds"]
    sweep = ecp.theorem4_sweep(q8)
    assert sweep["all_hold"]


def test_catalog_and_specs():
    names = ecp.catalog_names()
    assert "paper-81-10" in names and "paper-big-group" in names
    g81 = ecp.build_group("paper-81-10")
    assert g81.order == 81
    assert ecp.is_regular(g81)["regular"] is False
    rebuilt = ecp.build_from_spec_json(ecp.group_spec_json("metacyclic-27-9-4"))
    assert rebuilt.order == 243


def test_big_group_counterexample():
    big = ecp.paper_big_group()
    assert big.order == 59049
    assert big.central("c^9")
    members = big.closure(["a^3b^2c^3d"])
    assert len(members) == 9 and members[1] == "a^3b^2c^3d"
    assert big.mul("a^21b^14c^21d^7", "a^6b^8c^9d^4") == "a^18b^4c^3d^2"
    r = big.refute_conjugate_permutability(["a^3b^2c^3d"], ["abcd"])
    assert r["refuted"] and r["witness"] == "b^4c^3d^2"
    clean = big.refute_conjugate_permutability(["a^3b^2c^3d"], ["c^9"])
    assert not clean["refuted"]


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    main()
