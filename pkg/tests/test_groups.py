"""Groups, exact factorizations, and the derived matched-pair actions."""

import numpy as np
import pytest

from hopfclifford.errors import FactorizationError, SizeLimitError
from hopfclifford.groups import (FiniteGroup, MatchedPair, Subgroup,
                                 all_subgroups, cycle_string, derive_actions,
                                 group_from_permutations,
                                 is_exact_factorization,
                                 is_invariant_subgroup_under_lact,
                                 orbit_and_stabilizer, parse_cycles,
                                 subgroup_closure, verify_matched_pair)

# the two action tables of the order-24 example, transcribed cell by cell
RACT_TABLE = {
    "t": {"g": "g", "g^2": "g^3", "g^3": "g^2"},
    "s": {"g": "g^2", "g^2": "g^3", "g^3": "g"},
    "s^2": {"g": "g^3", "g^2": "g", "g^3": "g^2"},
    "st": {"g": "g^3", "g^2": "g^2", "g^3": "g"},
    "ts": {"g": "g^2", "g^2": "g", "g^3": "g^3"},
}
LACT_TABLE = {
    "g": {"t": "ts", "s": "t", "s^2": "s", "st": "st", "ts": "s^2"},
    "g^2": {"t": "s^2", "s": "ts", "s^2": "t", "st": "st", "ts": "s"},
    "g^3": {"t": "s", "s": "s^2", "s^2": "ts", "st": "st", "ts": "t"},
}


def test_cycle_parsing_round_trip():
    p = parse_cycles("(1 2 3 4)")
    assert p == (1, 2, 3, 0)
    assert cycle_string(p) == "(1 2 3 4)"
    assert parse_cycles("(1 2)(3 4)") == (1, 0, 3, 2)
    assert parse_cycles("e", degree=3) == (0, 1, 2)
    with pytest.raises(ValueError):
        parse_cycles("(1 1 2)")


def test_closure_orders():
    assert group_from_permutations(["(1 2 3 4)"]).order == 4
    assert group_from_permutations(["(1 2)", "(1 2 3)"]).order == 6
    assert group_from_permutations(["(1 2 3 4)", "(1 2)"]).order == 24


def test_closure_is_validated_group(s4_sigma):
    n = s4_sigma.order
    for row in s4_sigma.cayley:
        assert sorted(row) == list(range(n))
    assert s4_sigma.labels[0] == "1"
    assert list(s4_sigma.cayley[0]) == list(range(n))


def test_size_cap():
    with pytest.raises(SizeLimitError):
        group_from_permutations(["(1 2 3 4)", "(1 2)"], size_cap=10)


def test_bad_cayley_rejected():
    with pytest.raises(ValueError):
        FiniteGroup([[0, 1], [0, 1]])
    with pytest.raises(ValueError):
        FiniteGroup([[1, 0], [0, 1]])


def test_subgroup_validation(s3_group):
    with pytest.raises(ValueError):
        Subgroup(s3_group, (0, s3_group.label_index("t"), s3_group.label_index("s")))
    sub = subgroup_closure(s3_group, [s3_group.label_index("s")])
    assert sub.order == 3


def test_exact_factorization_s4(s4_sigma):
    f = subgroup_closure(s4_sigma, [s4_sigma.label_index("t"),
                                    s4_sigma.label_index("s")])
    g = subgroup_closure(s4_sigma, [s4_sigma.label_index("g")])
    assert is_exact_factorization(s4_sigma, f, g)
    # F = G = S3 fixing 4: intersection is everything
    assert not is_exact_factorization(s4_sigma, f, f)


def test_exact_factorization_s3_by_hand(s3_group):
    f = subgroup_closure(s3_group, [s3_group.label_index("t")])
    g = subgroup_closure(s3_group, [s3_group.label_index("s")])
    # oracle: enumerate the six products directly
    products = sorted(s3_group.mul(a, x) for a in g.members for x in f.members)
    assert products == list(range(6))
    assert is_exact_factorization(s3_group, f, g)


def test_derived_tables_match_reference(s4_pair):
    for x_label, row in RACT_TABLE.items():
        for g_label, want in row.items():
            assert s4_pair.ract_label(g_label, x_label) == want
    for g_label, row in LACT_TABLE.items():
        for x_label, want in row.items():
            assert s4_pair.lact_label(g_label, x_label) == want


def test_unit_laws(s4_pair):
    F, G = s4_pair.f_group, s4_pair.g_group
    for x in F.elements():
        assert s4_pair.lact[0, x] == x
        assert s4_pair.ract[0, x] == 0
    for g in G.elements():
        assert s4_pair.lact[g, 0] == 0
        assert s4_pair.ract[g, 0] == g


def test_verify_matched_pair_passes(s4_pair):
    rep = verify_matched_pair(s4_pair)
    assert rep.ok
    assert rep.violations == []


def test_corrupted_pair_reported(s4_pair):
    bad = MatchedPair(f_group=s4_pair.f_group, g_group=s4_pair.g_group,
                      ract=s4_pair.ract.copy(), lact=s4_pair.lact.copy(),
                      sigma=s4_pair.sigma, f_sub=s4_pair.f_sub,
                      g_sub=s4_pair.g_sub)
    bad.ract[1, 1] = (bad.ract[1, 1] + 1) % bad.g_group.order
    rep = verify_matched_pair(bad)
    assert not rep.ok
    assert any("reconstruction" in v for v in rep.violations)


def test_corrupted_lact_breaks_compatibility(s4_pair):
    bad = MatchedPair(f_group=s4_pair.f_group, g_group=s4_pair.g_group,
                      ract=s4_pair.ract.copy(), lact=s4_pair.lact.copy())
    bad.lact[1, 1] = (bad.lact[1, 1] + 1) % bad.f_group.order
    rep = verify_matched_pair(bad)
    assert not rep.ok
    assert any("|> over product" in v or "<| over product" in v
               for v in rep.violations)


def test_abstract_inversion_pair():
    c2 = group_from_permutations(["(1 2)"], names=["r"])
    c4 = group_from_permutations(["(1 2 3 4)"], names=["g"])
    # rows g, columns x: g <| r = g^{-1}, left action trivial
    ract = np.array([[a, c4.inverse[a]] for a in range(4)])
    lact = np.array([[x for x in range(2)] for _ in range(4)])
    mp = MatchedPair(f_group=c2, g_group=c4, ract=ract, lact=lact)
    rep = verify_matched_pair(mp)
    assert rep.ok
    orbit, stab = orbit_and_stabilizer(mp, 2)
    assert orbit == (2,)
    assert stab.members == (0, 1)


def test_orbit_and_stabilizer_counterexample(s4_pair):
    G, F = s4_pair.g_group, s4_pair.f_group
    orbit, stab = orbit_and_stabilizer(s4_pair, G.label_index("g"))
    assert sorted(G.labels[i] for i in orbit) == ["g", "g^2", "g^3"]
    assert [F.labels[i] for i in stab.members] == ["1", "t"]
    # identity is fixed by everything
    orbit, stab = orbit_and_stabilizer(s4_pair, 0)
    assert orbit == (0,)
    assert stab.order == F.order


def test_invariance_under_left_action(s4_pair):
    F = s4_pair.f_group
    stab = Subgroup(F, (0, F.label_index("t")))
    assert not is_invariant_subgroup_under_lact(s4_pair, stab)
    # g |> t = ts leaves the subgroup
    assert s4_pair.lact_label("g", "t") == "ts"
    assert is_invariant_subgroup_under_lact(s4_pair, Subgroup(F, tuple(F.elements())))
    assert is_invariant_subgroup_under_lact(s4_pair, Subgroup(F, (0,)))


def _exact_factorizations(group):
    subs = all_subgroups(group)
    for f in subs:
        for g in subs:
            if f.order * g.order == group.order and is_exact_factorization(group, f, g):
                yield f, g


@pytest.mark.parametrize("gens", [["(1 2)", "(1 2 3)"], ["(1 2 3 4)", "(1 2)"]])
def test_every_exact_factorization_gives_matched_pair(gens):
    group = group_from_permutations(gens)
    count = 0
    for f, g in _exact_factorizations(group):
        mp = derive_actions(group, f, g)
        assert verify_matched_pair(mp).ok
        count += 1
    assert count > 0


def test_orbits_partition_g(s4_pair, c4c2_pair):
    for mp in (s4_pair, c4c2_pair):
        F, G = mp.f_group, mp.g_group
        covered = set()
        for g in G.elements():
            orbit, stab = orbit_and_stabilizer(mp, g)
            assert len(orbit) * stab.order == F.order
            assert g in orbit
            covered.update(orbit)
        assert covered == set(G.elements())


def test_derive_actions_requires_exact(s3_group):
    f = subgroup_closure(s3_group, [s3_group.label_index("t")])
    with pytest.raises(FactorizationError):
        derive_actions(s3_group, f, f)


def test_group_json_round_trip(s4_sigma):
    data = s4_sigma.to_json_dict()
    back = FiniteGroup.from_json_dict(data)
    assert np.array_equal(back.cayley, s4_sigma.cayley)
    assert back.labels == s4_sigma.labels


def test_matched_pair_json_round_trip(s4_pair):
    back = MatchedPair.from_json_dict(s4_pair.to_json_dict())
    assert np.array_equal(back.ract, s4_pair.ract)
    assert np.array_equal(back.lact, s4_pair.lact)
    assert verify_matched_pair(back).ok


def test_all_subgroups_s4(s4_sigma):
    subs = all_subgroups(s4_sigma)
    assert len(subs) == 30
    orders = sorted({s.order for s in subs})
    assert orders == [1, 2, 3, 4, 6, 8, 12, 24]
