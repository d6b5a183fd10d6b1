"""Full-pipeline runs on extensions beyond the three builtins.

These exercise code paths the builtins miss: a commutative ambient algebra,
a Klein-four quotient recognized from the generic quotient construction, a
12-dimensional normal part, an order-6 bismash with inverting action, and a
sweep of further exact factorizations where every internal theorem
cross-check runs for every character.
"""

import pytest

from hopfclifford.scenarios import Scenario, run_scenario


def test_functions_on_s4_over_v4_cosets():
    # A = functions on the order-24 group, B = functions constant on
    # Klein-four cosets; the quotient is recognized as the Klein four-group
    sc = Scenario.from_dict({
        "name": "dual_s4_v4",
        "construction": "dual_group_algebra",
        "group": {"generators": ["(1 2 3 4)", "(1 2)"], "names": ["g", "t"]},
        "b_generators": ["(1 2)(3 4)", "(1 3)(2 4)"],
    })
    rep = run_scenario(sc)
    assert rep.dims_a == [1] * 24
    assert rep.dims_b == [1] * 6
    assert rep.dims_dual == [1, 1, 2, 3, 3]
    assert rep.f_labels is not None and len(rep.f_labels) == 4
    assert rep.cocentral is False
    # commutative ambient algebra: conjugation is trivial, so Z = A always
    for r in rep.alpha_reports:
        assert r.dim_z == 24
        assert r.direct_holds
        assert len(r.graded.h_members) == 4
    assert all(len(c) == 4 for c in rep.class_data["a_classes"])


def test_group_algebra_s4_over_a4():
    sc = Scenario.from_dict({
        "name": "s4_a4_classical",
        "construction": "group_algebra",
        "group": {"generators": ["(1 2 3 4)", "(1 2)"], "names": ["g", "t"]},
        "b_generators": ["(1 2 3)", "(1 2)(3 4)"],
    })
    rep = run_scenario(sc)
    assert rep.dims_a == [1, 1, 2, 3, 3]
    assert rep.dims_b == [1, 1, 1, 3]
    assert rep.cocentral is True
    assert rep.all_verdicts_hold()
    by_degree = {}
    for r in rep.alpha_reports:
        by_degree.setdefault((r.alpha_degree, r.b_class_degree), []).append(r)
    # the two nontrivial linear characters have stabilizer kA4
    for r in by_degree[(1, 2)]:
        assert r.dim_z == 12 and str(r.bound) == "12"
    # the 3-dimensional character is fixed by conjugation
    (three,) = by_degree[(3, 9)]
    assert three.dim_z == 24


FACTORIZATION_SWEEP = [
    # (name, sigma generators, f generators, g generators,
    #  expected block dims of A, expected cocentral, expected failing alphas)
    ("a4_v4_c3", ["(1 2 3)", "(1 2)(3 4)", "(1 3)(2 4)"],
     ["(1 2)(3 4)", "(1 3)(2 4)"], ["(1 2 3)"], [1] * 12, False, 0),
    ("a4_c3_v4", ["(1 2 3)", "(1 2)(3 4)", "(1 3)(2 4)"],
     ["(1 2 3)"], ["(1 2)(3 4)", "(1 3)(2 4)"], [1, 1, 1, 3], True, 0),
    ("s4_d4_c3", ["(1 2 3 4)", "(1 2)", "(1 2 3)"],
     ["(1 2 3 4)", "(1 3)"], ["(1 2 3)"], [1, 1, 1, 1, 2, 2, 2, 2, 2], False, 0),
    ("s4_v4_s3", ["(1 2 3 4)", "(1 2)", "(1 2 3)"],
     ["(1 2)(3 4)", "(1 3)(2 4)"], ["(1 2)", "(1 2 3)"], [1] * 24, False, 0),
]


@pytest.mark.parametrize(
    "name,gens,f_gens,g_gens,dims,cocentral,failing",
    FACTORIZATION_SWEEP, ids=[c[0] for c in FACTORIZATION_SWEEP])
def test_factorization_sweep(name, gens, f_gens, g_gens, dims, cocentral, failing):
    # analyze_alpha raises on any criterion mismatch, so completion of the
    # run is itself the cross-validation; expectations below are frozen
    sc = Scenario.from_dict({
        "name": name, "construction": "bismash",
        "sigma": {"generators": gens},
        "f_generators": f_gens, "g_generators": g_gens,
    })
    rep = run_scenario(sc)
    assert rep.dims_a == dims
    assert rep.cocentral is cocentral
    fails = [r for r in rep.alpha_reports if not r.direct_holds]
    assert len(fails) == failing


def test_order_six_bismash_with_inversion():
    # the order-6 group factors as a three-cycle times a transposition;
    # the derived right action inverts, the left action is trivial
    sc = Scenario.from_dict({
        "name": "c3_c2_bismash",
        "construction": "bismash",
        "sigma": {"generators": ["(1 2 3)", "(1 2)"], "names": ["s", "t"]},
        "g_generators": ["s"],
        "f_generators": ["t"],
    })
    rep = run_scenario(sc)
    assert rep.dims_a == [1, 1, 2]
    assert rep.dims_b == [1, 1, 1]
    assert rep.cocentral is True
    assert rep.all_verdicts_hold()
    nontrivial = [r for r in rep.alpha_reports if r.b_class_degree == 2]
    assert len(nontrivial) == 2
    for r in nontrivial:
        assert r.dim_z == 3
        assert len(r.graded.h_members) == 1
        assert r.graded.orbit_size == 2
