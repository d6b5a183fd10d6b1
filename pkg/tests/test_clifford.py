"""Equivalence classes, conjugation, stabilizers, and the correspondence checks."""

from fractions import Fraction

import numpy as np
import pytest

from hopfclifford import clifford, hopf
from hopfclifford.clifford import (analyze_alpha, compute_stabilizer,
                                   conjugate_character, conjugate_class_indices,
                                   conjugate_module, coset_projection_check,
                                   direct_correspondence_check,
                                   equivalence_classes,
                                   check_stabilizer_induction,
                                   graded_tensor_character,
                                   stabilizer_dimension_bound,
                                   subcoalgebra_as_dual_module,
                                   verify_class_formulas)
from hopfclifford.errors import TheoremViolationError
from hopfclifford.repcalc import (Character, construct_irreducible_module,
                                  decompose)


def analyze(ext, k, **kw):
    sup = None
    if ext.mp is not None:
        v = ext.dec_b.irr[k].values
        sup = int(np.argmax(np.abs(v)))
    return analyze_alpha(ext.A, ext.inc, k, ext.ecd, ext.dec_a, ext.dec_b,
                         ext.dec_dual, piF=ext.piF, F=ext.F,
                         components=ext.components,
                         cocentral=hopf.is_cocentral(ext.A, ext.piF),
                         mp=ext.mp, alpha_group_index=sup, **kw)


# ---------------------------------------------------------------------------
# classes and formulas

def test_classes_classical(classical):
    ecd = classical.ecd
    assert ecd.num_classes == 2
    sizes = sorted((len(a), len(b)) for a, b in zip(ecd.a_classes, ecd.b_classes))
    assert sizes == [(1, 2), (2, 1)]
    assert sorted(b.degree for b in ecd.b_sums) == [1, 2]
    for i in range(2):
        assert ecd.a_sums[i].degree == 2 * ecd.b_sums[i].degree


def test_classes_counterexample(counterexample):
    ecd = counterexample.ecd
    assert ecd.num_classes == 2
    trivial = counterexample.alpha_with_support("d(1)")
    i0 = ecd.class_of_alpha(trivial)
    assert len(ecd.b_classes[i0]) == 1
    i1 = 1 - i0
    assert len(ecd.b_classes[i1]) == 3
    assert ecd.b_sums[i1].degree == 3
    assert ecd.a_sums[i1].degree == 18
    assert sorted(counterexample.dec_a.dims[c] for c in ecd.a_classes[i1]) == [3, 3]


def test_classes_when_b_equals_a(classical):
    A = classical.A
    inc = hopf.HopfInclusion(small=A, big=A,
                             embedding=np.eye(A.dim, dtype=complex))
    dec = classical.dec_a
    ecd = equivalence_classes(A, inc, dec, dec)
    assert ecd.num_classes == len(dec.irr)
    assert all(len(c) == 1 for c in ecd.a_classes)


def test_class_formulas(classical, counterexample, cocentral8):
    for ext in (classical, counterexample, cocentral8):
        res = verify_class_formulas(ext.ecd, ext.inc, ext.dec_a, ext.dec_b)
        assert max(res.values()) < 1e-10, res


# ---------------------------------------------------------------------------
# conjugation

def test_conjugate_by_unit(classical):
    A = classical.A
    alpha = classical.dec_b.irr[0]
    conj = conjugate_character(A, classical.inc, A.unit, alpha)
    assert conj.close_to(alpha)


def test_conjugate_by_transposition_swaps_omegas(classical, s3_group):
    A = classical.A
    t_vec = np.zeros(A.dim, dtype=complex)
    t_vec[s3_group.label_index("t")] = 1.0
    dec_b = classical.dec_b
    omegas = [k for k, ch in enumerate(dec_b.irr)
              if np.max(np.abs(ch.values - 1.0)) > 1e-8]
    a, b = omegas
    conj = conjugate_character(A, classical.inc, t_vec, dec_b.irr[a])
    assert conj.close_to(dec_b.irr[b])
    conj = conjugate_character(A, classical.inc, t_vec, dec_b.irr[b])
    assert conj.close_to(dec_b.irr[a])


def test_conjugate_by_element_of_b(counterexample):
    # dual characters with coefficient space inside B act by eps(d)
    A = counterexample.A
    alpha = counterexample.dec_b.irr[counterexample.alpha_with_support("d(g)")]
    found = 0
    for d in counterexample.dec_dual.irr:
        C = hopf.coefficient_space(A, d.values)
        if counterexample.b_sub.contains(C):
            conj = conjugate_character(A, counterexample.inc, d.values, alpha)
            assert conj.close_to(Character(alpha.parent, d.degree * alpha.values))
            found += 1
    assert found == 4


def test_conjugation_composes(classical):
    A = classical.A
    inc = classical.inc
    alpha = classical.dec_b.irr[0]
    duals = classical.dec_dual.irr
    for d1 in duals:
        for d2 in duals:
            lhs = conjugate_character(A, inc, d1.values,
                                      conjugate_character(A, inc, d2.values, alpha))
            prod = A.product(d1.values, d2.values)
            rhs = conjugate_character(A, inc, prod, alpha)
            assert float(np.max(np.abs(lhs.values - rhs.values))) < 1e-8


def test_conjugation_composes_counterexample(counterexample):
    # same identity on the order-24 algebra, including the 4-dim dual block
    ext = counterexample
    alpha = ext.dec_b.irr[ext.alpha_with_support("d(g)")]
    duals = ext.dec_dual.irr
    d4 = [ch for ch in duals if ch.degree == 4][0]
    one = [ch for ch in duals if np.max(np.abs(ch.values - ext.A.unit)) < 1e-8]
    picks = [d4] + duals[:3]
    for d1 in picks:
        for d2 in picks:
            lhs = conjugate_character(
                ext.A, ext.inc, d1.values,
                conjugate_character(ext.A, ext.inc, d2.values, alpha))
            rhs = conjugate_character(ext.A, ext.inc,
                                      ext.A.product(d1.values, d2.values), alpha)
            assert float(np.max(np.abs(lhs.values - rhs.values))) < 1e-7


def test_conjugate_module_matches_character(classical, s3_group):
    A = classical.A
    t_vec = np.zeros(A.dim, dtype=complex)
    t_vec[s3_group.label_index("t")] = 1.0
    C = hopf.coefficient_space(A, t_vec)
    W = subcoalgebra_as_dual_module(A, C)
    dec_b = classical.dec_b
    omegas = [k for k, ch in enumerate(dec_b.irr)
              if np.max(np.abs(ch.values - 1.0)) > 1e-8]
    M = construct_irreducible_module(classical.inc.small, dec_b, omegas[0])
    out = conjugate_module(A, classical.inc, W, M)
    want = conjugate_character(A, classical.inc, t_vec, dec_b.irr[omegas[0]])
    assert out.character().close_to(want)


def test_conjugate_module_trivial_comodule(classical):
    A = classical.A
    one = hopf.SubspaceBasis.from_vectors(A, A.unit[:, None])
    W = subcoalgebra_as_dual_module(A, one)
    dec_b = classical.dec_b
    M = construct_irreducible_module(classical.inc.small, dec_b, 0)
    out = conjugate_module(A, classical.inc, W, M)
    assert out.character().close_to(dec_b.irr[0])


def test_isotypic_iff_stabilized(counterexample):
    # C (x) M is a sum of copies of M exactly when the dual character fixes alpha
    ext = counterexample
    A = ext.A
    k = ext.alpha_with_support("d(g)")
    alpha = ext.dec_b.irr[k]
    M = construct_irreducible_module(ext.inc.small, ext.dec_b, k)
    sr = compute_stabilizer(A, ext.inc, k, ext.dec_b, ext.dec_dual)
    for idx, d in enumerate(ext.dec_dual.irr):
        C = hopf.coefficient_space(A, d.values)
        W = subcoalgebra_as_dual_module(A, C)
        out = conjugate_module(A, ext.inc, W, M)
        isotypic = out.character().close_to(
            Character(alpha.parent, C.dim * alpha.values), 1e-7)
        assert isotypic == (idx in sr.stabilizing)


# ---------------------------------------------------------------------------
# the stabilizer and the correspondence criteria

def test_stabilizer_of_counit_is_everything(classical):
    eps_index = [k for k, ch in enumerate(classical.dec_b.irr)
                 if np.max(np.abs(ch.values - 1.0)) < 1e-8][0]
    sr = compute_stabilizer(classical.A, classical.inc, eps_index,
                            classical.dec_b, classical.dec_dual)
    assert sr.dim_z == classical.A.dim


def test_stabilizer_classical_omega(classical):
    dec_b = classical.dec_b
    omegas = [k for k, ch in enumerate(dec_b.irr)
              if np.max(np.abs(ch.values - 1.0)) > 1e-8]
    sr = compute_stabilizer(classical.A, classical.inc, omegas[0],
                            dec_b, classical.dec_dual)
    assert sr.dim_z == 3
    assert sr.Z.equals(classical.b_sub)
    assert sr.z_class == (omegas[0],) or len(sr.z_class) == 1


def test_stabilizer_counterexample_is_b(counterexample):
    k = counterexample.alpha_with_support("d(g)")
    sr = compute_stabilizer(counterexample.A, counterexample.inc, k,
                            counterexample.dec_b, counterexample.dec_dual)
    assert sr.dim_z == 4
    assert sr.Z.equals(counterexample.b_sub)
    assert len(sr.stabilizing) == 4
    assert len(sr.z_class) == 1


def test_stabilizing_set_closed(counterexample):
    # products and duals of stabilizing characters stabilize
    ext = counterexample
    A = ext.A
    k = ext.alpha_with_support("d(g)")
    alpha = ext.dec_b.irr[k]
    sr = compute_stabilizer(A, ext.inc, k, ext.dec_b, ext.dec_dual)
    stab = set(sr.stabilizing)
    for i in stab:
        d = ext.dec_dual.irr[i]
        # the dual character S(d) stabilizes
        sdual = A.antipode @ d.values
        conj = conjugate_character(A, ext.inc, sdual, alpha)
        assert float(np.max(np.abs(conj.values - d.degree * alpha.values))) < 1e-8
        for j in stab:
            prod = Character(ext.dual, A.product(d.values,
                                                 ext.dec_dual.irr[j].values))
            for c in np.nonzero(decompose(prod, ext.dec_dual))[0]:
                assert int(c) in stab


def test_conjugates_span_the_class(counterexample):
    ext = counterexample
    for k in range(len(ext.dec_b.irr)):
        got = conjugate_class_indices(ext.A, ext.inc, ext.dec_b.irr[k],
                                      ext.dec_b, ext.dec_dual)
        i = ext.ecd.class_of_alpha(k)
        assert got == tuple(sorted(ext.ecd.b_classes[i]))


def test_restriction_within_z_class(counterexample, classical):
    # psi restricted to B is (psi(1)/alpha(1)) alpha for psi over alpha
    for ext in (classical, counterexample):
        for k in range(len(ext.dec_b.irr)):
            alpha = ext.dec_b.irr[k]
            sr = compute_stabilizer(ext.A, ext.inc, k, ext.dec_b, ext.dec_dual)
            for j in sr.z_class:
                psi = sr.z_dec.irr[j]
                down = Character(ext.inc.small, sr.b_in_z.T @ psi.values)
                scale = Fraction(psi.degree, alpha.degree)
                assert float(np.max(np.abs(
                    down.values - float(scale) * alpha.values))) < 1e-8


def test_stabilizer_induction_formula(classical, counterexample, cocentral8):
    for ext in (classical, counterexample, cocentral8):
        for k in range(len(ext.dec_b.irr)):
            sr = compute_stabilizer(ext.A, ext.inc, k, ext.dec_b, ext.dec_dual)
            rep = check_stabilizer_induction(ext.A, ext.inc, sr, ext.ecd,
                                             ext.dec_a)
            assert rep["residual"] < 1e-8


def test_bound_classical(classical):
    dec_b = classical.dec_b
    omegas = [k for k, ch in enumerate(dec_b.irr)
              if np.max(np.abs(ch.values - 1.0)) > 1e-8]
    sr = compute_stabilizer(classical.A, classical.inc, omegas[0],
                            dec_b, classical.dec_dual)
    rep = stabilizer_dimension_bound(classical.A, classical.inc, sr,
                                     classical.ecd, classical.dec_a, dec_b)
    assert rep.bound == 3 and rep.equality and rep.socle_equality


def test_bound_counterexample_strict(counterexample):
    k = counterexample.alpha_with_support("d(g)")
    sr = compute_stabilizer(counterexample.A, counterexample.inc, k,
                            counterexample.dec_b, counterexample.dec_dual)
    rep = stabilizer_dimension_bound(counterexample.A, counterexample.inc, sr,
                                     counterexample.ecd, counterexample.dec_a,
                                     counterexample.dec_b)
    assert rep.bound == 8 and sr.dim_z == 4
    assert not rep.equality and not rep.socle_equality
    assert rep.mult_z == 1 and rep.mult_full == 2


def test_bound_trivial_class(counterexample):
    k = counterexample.alpha_with_support("d(1)")
    sr = compute_stabilizer(counterexample.A, counterexample.inc, k,
                            counterexample.dec_b, counterexample.dec_dual)
    rep = stabilizer_dimension_bound(counterexample.A, counterexample.inc, sr,
                                     counterexample.ecd, counterexample.dec_a,
                                     counterexample.dec_b)
    assert rep.bound == 24 and rep.equality


def test_direct_check_counterexample(counterexample):
    k = counterexample.alpha_with_support("d(g)")
    sr = compute_stabilizer(counterexample.A, counterexample.inc, k,
                            counterexample.dec_b, counterexample.dec_dual)
    rep = direct_correspondence_check(counterexample.A, sr, counterexample.ecd,
                                      counterexample.dec_a)
    assert not rep.direct_holds
    assert len(rep.induction_table) == 1
    row = rep.induction_table[0]
    assert not row["irreducible"]
    i = counterexample.ecd.class_of_alpha(k)
    assert len(sr.z_class) == 1 != len(counterexample.ecd.a_classes[i])
    # the induced character is theta_1 + theta_2
    dims = [counterexample.dec_a.dims[c]
            for c in np.nonzero(row["image"])[0]]
    assert dims == [3, 3]


def test_full_sweep_consistency(classical, counterexample, cocentral8):
    verdicts = {}
    for name, ext in (("classical", classical), ("counterexample", counterexample),
                      ("cocentral", cocentral8)):
        for k in range(len(ext.dec_b.irr)):
            rep = analyze(ext, k)
            verdicts[(name, k)] = rep.direct_holds
            assert rep.socle_equality == rep.direct_holds
            if rep.graded is not None:
                assert rep.graded.z_equals_s == rep.direct_holds
                assert rep.graded.s_is_hopf == rep.direct_holds
    assert len(verdicts) >= 10
    fails = [key for key, held in verdicts.items() if not held]
    assert sorted(fails) == [("counterexample", 0), ("counterexample", 2)]


def test_graded_section_counterexample(counterexample):
    ext = counterexample
    k = ext.alpha_with_support("d(g)")
    rep = analyze(ext, k)
    g = rep.graded
    assert g.h_labels == ["1", "t"]
    assert g.orbit_size == 3
    assert g.dim_s == 8
    assert not g.s_is_hopf
    assert rep.dim_z == 4 and not g.z_equals_s
    assert not g.cocentral
    assert rep.verdict == "FAILS"


def test_graded_section_cocentral(cocentral8):
    ext = cocentral8
    k = ext.alpha_with_support("d(g)")
    rep = analyze(ext, k)
    g = rep.graded
    assert g.h_labels == ["1"]
    assert g.orbit_size == 2
    assert g.dim_s == 4 and g.z_equals_s and g.s_is_hopf
    assert g.cocentral
    assert rep.verdict == "HOLDS"


def test_graded_section_trivial_alpha(counterexample):
    ext = counterexample
    k = ext.alpha_with_support("d(1)")
    rep = analyze(ext, k)
    g = rep.graded
    assert len(g.h_members) == ext.F.order
    assert g.dim_s == ext.A.dim
    assert rep.dim_z == ext.A.dim and g.z_equals_s
    assert rep.verdict == "HOLDS"


def test_graded_tensor_dimensions(counterexample):
    ext = counterexample
    k = ext.alpha_with_support("d(g)")
    M = construct_irreducible_module(ext.inc.small, ext.dec_b, k)
    for f in range(ext.F.order):
        ch = graded_tensor_character(ext.A, ext.inc, ext.components[f], M)
        assert abs(ch.degree - M.dimension) < 1e-8


def test_orbit_identity_integers(counterexample, cocentral8, classical):
    # b_i(1) |H| = |F| alpha(1)^2 holds exactly for every alpha
    for ext in (classical, counterexample, cocentral8):
        for k in range(len(ext.dec_b.irr)):
            rep = analyze(ext, k)
            g = rep.graded
            i = rep.class_index
            assert (ext.ecd.b_sums[i].degree * len(g.h_members)
                    == ext.F.order * rep.alpha_degree ** 2)


def test_coset_projection_checks(classical, counterexample, cocentral8):
    for ext in (classical, counterexample, cocentral8):
        out = coset_projection_check(ext.A, ext.inc, ext.piF, ext.F,
                                     ext.components, ext.dec_dual)
        assert out["uniform_coefficient_residual"] < 1e-10
        assert out["image_spans_match"]
        assert out["coset_components_match"]
        assert out["supports_partition"]
        assert out["coset_decomposition"]


def test_counterexample_coset_count(counterexample):
    out = coset_projection_check(counterexample.A, counterexample.inc,
                                 counterexample.piF, counterexample.F,
                                 counterexample.components,
                                 counterexample.dec_dual)
    assert out["num_cosets"] == 3


def test_cocentral_sweep(classical, cocentral8):
    for ext in (classical, cocentral8):
        assert hopf.is_cocentral(ext.A, ext.piF)
        reports = [analyze(ext, k) for k in range(len(ext.dec_b.irr))]
        clifford.cocentral_sweep_check(reports)


def test_crosscheck_raises_on_forged_mismatch(counterexample):
    k = counterexample.alpha_with_support("d(g)")
    sr = compute_stabilizer(counterexample.A, counterexample.inc, k,
                            counterexample.dec_b, counterexample.dec_dual)
    bound = stabilizer_dimension_bound(counterexample.A, counterexample.inc,
                                       sr, counterexample.ecd,
                                       counterexample.dec_a,
                                       counterexample.dec_b)
    direct = direct_correspondence_check(counterexample.A, sr,
                                         counterexample.ecd,
                                         counterexample.dec_a)
    forged = clifford.DirectReport(direct_holds=True,
                                   induction_table=direct.induction_table,
                                   image_indices=direct.image_indices)
    with pytest.raises(TheoremViolationError):
        clifford.crosscheck_correspondence(bound, forged)
