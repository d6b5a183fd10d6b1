"""Finite-dimensional Hopf algebras as structure-constant tensors.

Conventions, for an algebra of dimension d with basis e_0..e_{d-1}:

    mult[i, j, k]    coefficient of e_k in e_i * e_j
    unit[k]          coefficients of the unit element
    comult[k, i, j]  coefficient of e_i (x) e_j in Delta(e_k)
    counit[k]        value of the counit on e_k
    antipode[p, i]   coefficient of e_p in S(e_i), i.e. columns are images

Scalars are complex double precision; every constructor here produces exact
0/1 entries, so axiom residuals measure only solver error.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import linalg
from .errors import (ConsistencyError, NoAntipodeError, NormalityError,
                     PreconditionError)
from .groups import FiniteGroup, MatchedPair, verify_matched_pair

TOL_ALG = 1e-8


class AlgebraData:
    """Associative unital algebra given by structure constants."""

    def __init__(self, mult, unit, labels: Optional[Sequence[str]] = None):
        self.mult = np.ascontiguousarray(mult, dtype=complex)
        self.unit = np.ascontiguousarray(unit, dtype=complex)
        self.dim = int(self.unit.shape[0])
        if self.mult.shape != (self.dim,) * 3:
            raise ValueError("mult tensor shape mismatch")
        self.labels = list(labels) if labels is not None else [f"e{i}" for i in range(self.dim)]

    def product(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.einsum("i,j,ijk->k", x, y, self.mult, optimize=True)

    def left_mult_matrix(self, x: np.ndarray) -> np.ndarray:
        """Matrix L with L @ y = x * y."""
        return np.einsum("i,ijk->jk", np.asarray(x, complex), self.mult, optimize=True).T

    def right_mult_matrix(self, y: np.ndarray) -> np.ndarray:
        """Matrix R with R @ x = x * y."""
        return np.einsum("j,ijk->ik", np.asarray(y, complex), self.mult, optimize=True).T

    def regular_trace_vector(self) -> np.ndarray:
        """tr of left multiplication by each basis element."""
        return np.einsum("ijj->i", self.mult, optimize=True)

    def regular_trace(self, x: np.ndarray) -> complex:
        return complex(self.regular_trace_vector() @ np.asarray(x, complex))


class HopfAlgebraData(AlgebraData):
    """Hopf algebra structure constants; antipode may stay unset until solved."""

    def __init__(self, mult, unit, comult, counit,
                 labels: Optional[Sequence[str]] = None,
                 antipode: Optional[np.ndarray] = None):
        super().__init__(mult, unit, labels=labels)
        self.comult = np.ascontiguousarray(comult, dtype=complex)
        self.counit = np.ascontiguousarray(counit, dtype=complex)
        if self.comult.shape != (self.dim,) * 3 or self.counit.shape != (self.dim,):
            raise ValueError("coalgebra tensor shape mismatch")
        self.antipode = None if antipode is None else np.asarray(antipode, dtype=complex)

    def apply_comult(self, x: np.ndarray) -> np.ndarray:
        """Delta(x) as a (d, d) coefficient matrix over e_i (x) e_j."""
        return np.einsum("k,kij->ij", np.asarray(x, complex), self.comult, optimize=True)

    def is_group_like_basis(self, tol: float = TOL_ALG) -> bool:
        """True iff every basis element is group-like with counit one."""
        expect = np.zeros_like(self.comult)
        for k in range(self.dim):
            expect[k, k, k] = 1.0
        return (float(np.max(np.abs(self.comult - expect))) < tol
                and float(np.max(np.abs(self.counit - 1.0))) < tol)

    def is_commutative(self, tol: float = TOL_ALG) -> bool:
        return float(np.max(np.abs(self.mult - self.mult.transpose(1, 0, 2)))) < tol

    def is_cocommutative(self, tol: float = TOL_ALG) -> bool:
        return float(np.max(np.abs(self.comult - self.comult.transpose(0, 2, 1)))) < tol

    def to_json_dict(self, digits: int = 10) -> dict:
        def triples(t):
            out = []
            for idx in np.argwhere(np.abs(t) > 10.0 ** (-digits)):
                v = t[tuple(idx)]
                out.append([int(idx[0]), int(idx[1]), int(idx[2]),
                            linalg.round_for_json(v.real, digits),
                            linalg.round_for_json(v.imag, digits)])
            return out

        def vec(v):
            return [[linalg.round_for_json(x.real, digits),
                     linalg.round_for_json(x.imag, digits)] for x in v]

        data = {
            "dim": self.dim,
            "basis_labels": list(self.labels),
            "mult": triples(self.mult),
            "comult": triples(self.comult),
            "unit": vec(self.unit),
            "counit": vec(self.counit),
            "antipode": None if self.antipode is None else [vec(row) for row in self.antipode],
        }
        return data

    @classmethod
    def from_json_dict(cls, data: dict) -> "HopfAlgebraData":
        d = int(data["dim"])

        def tensor(triple_list):
            t = np.zeros((d, d, d), dtype=complex)
            for i, j, k, re, im in triple_list:
                t[i, j, k] = re + 1j * im
            return t

        def vec(pairs):
            return np.array([re + 1j * im for re, im in pairs], dtype=complex)

        antipode = None
        if data.get("antipode") is not None:
            antipode = np.array([[re + 1j * im for re, im in row]
                                 for row in data["antipode"]], dtype=complex)
        return cls(tensor(data["mult"]), vec(data["unit"]),
                   tensor(data["comult"]), vec(data["counit"]),
                   labels=data.get("basis_labels"), antipode=antipode)


@dataclass
class SubspaceBasis:
    """Subspace of an algebra, stored as orthonormal columns."""

    parent: AlgebraData
    matrix: np.ndarray

    @classmethod
    def from_vectors(cls, parent: AlgebraData, vectors: np.ndarray) -> "SubspaceBasis":
        return cls(parent, linalg.orthonormal_columns(np.asarray(vectors, complex)))

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[1])

    def contains_vector(self, v: np.ndarray, tol: float = TOL_ALG) -> bool:
        return linalg.projection_residual(self.matrix, v) < tol

    def contains(self, other: "SubspaceBasis", tol: float = TOL_ALG) -> bool:
        return linalg.subspace_contains(self.matrix, other.matrix, tol)

    def equals(self, other: "SubspaceBasis", tol: float = TOL_ALG) -> bool:
        return linalg.subspace_equal(self.matrix, other.matrix, tol)


@dataclass
class HopfInclusion:
    """Injective map small -> big, columns of `embedding` are basis images."""

    small: AlgebraData
    big: AlgebraData
    embedding: np.ndarray


@dataclass
class HopfSurjection:
    """Surjective map source -> target given by `matrix` (target_dim x source_dim)."""

    source: AlgebraData
    target: AlgebraData
    matrix: np.ndarray


# ---------------------------------------------------------------------------
# constructors

def group_algebra(G: FiniteGroup) -> HopfAlgebraData:
    """kG: basis the group, Delta(g) = g (x) g, S(g) = g^{-1}."""
    n = G.order
    mult = np.zeros((n, n, n), dtype=complex)
    comult = np.zeros((n, n, n), dtype=complex)
    for i in range(n):
        comult[i, i, i] = 1.0
        for j in range(n):
            mult[i, j, G.cayley[i, j]] = 1.0
    unit = np.zeros(n, dtype=complex)
    unit[0] = 1.0
    counit = np.ones(n, dtype=complex)
    A = HopfAlgebraData(mult, unit, comult, counit, labels=list(G.labels))
    closed = np.zeros((n, n), dtype=complex)
    for j in range(n):
        closed[G.inverse[j], j] = 1.0
    solved = solve_antipode(A)
    if float(np.max(np.abs(solved - closed))) > TOL_ALG:
        raise ConsistencyError("solved antipode disagrees with g -> g^{-1}")
    A.antipode = closed
    return A


def dual_group_algebra(G: FiniteGroup) -> HopfAlgebraData:
    """k^G: orthogonal idempotents delta_g, Delta(delta_g) = sum_{st=g} delta_s (x) delta_t."""
    n = G.order
    mult = np.zeros((n, n, n), dtype=complex)
    comult = np.zeros((n, n, n), dtype=complex)
    for i in range(n):
        mult[i, i, i] = 1.0
        for j in range(n):
            comult[G.cayley[i, j], i, j] = 1.0
    unit = np.ones(n, dtype=complex)
    counit = np.zeros(n, dtype=complex)
    counit[0] = 1.0
    labels = [f"d({lbl})" for lbl in G.labels]
    A = HopfAlgebraData(mult, unit, comult, counit, labels=labels)
    closed = np.zeros((n, n), dtype=complex)
    for j in range(n):
        closed[G.inverse[j], j] = 1.0
    solved = solve_antipode(A)
    if float(np.max(np.abs(solved - closed))) > TOL_ALG:
        raise ConsistencyError("solved antipode disagrees with delta_g -> delta_{g^{-1}}")
    A.antipode = closed
    return A


def dual_hopf(A: HopfAlgebraData) -> HopfAlgebraData:
    """Dual Hopf algebra on the dual basis: transpose every structure tensor."""
    if A.antipode is None:
        raise PreconditionError("dual_hopf needs the antipode")
    mult = A.comult.transpose(1, 2, 0)
    comult = A.mult.transpose(2, 0, 1)
    labels = [f"{lbl}^" for lbl in A.labels]
    return HopfAlgebraData(mult, A.counit.copy(), comult, A.unit.copy(),
                           labels=labels, antipode=A.antipode.T.copy())


def solve_antipode(A: HopfAlgebraData, tol: float = TOL_ALG) -> np.ndarray:
    """Solve sum S(a_1) a_2 = eps(a) 1 for the antipode matrix.

    Verifies the right convolution law and S o S = id afterwards, both of
    which must hold in the semisimple characteristic-zero setting.
    """
    d = A.dim
    # coefficient of unknown S[p, i] in equation (k, q)
    K = np.einsum("kij,pjq->kqpi", A.comult, A.mult, optimize=True).reshape(d * d, d * d)
    rhs = np.outer(A.counit, A.unit).reshape(d * d)
    try:
        sol = np.linalg.solve(K, rhs)
    except np.linalg.LinAlgError as exc:
        raise NoAntipodeError(f"antipode system is singular: {exc}") from exc
    if float(np.max(np.abs(K @ sol - rhs))) > tol:
        raise NoAntipodeError("antipode system has no solution within tolerance")
    S = sol.reshape(d, d)
    right = np.einsum("kij,pj,ipq->kq", A.comult, S, A.mult, optimize=True)
    if float(np.max(np.abs(right - np.outer(A.counit, A.unit)))) > tol:
        raise ConsistencyError("left antipode fails the right convolution law")
    if float(np.max(np.abs(S @ S - np.eye(d)))) > tol:
        raise ConsistencyError("S^2 is not the identity")
    return S


@dataclass
class BismashResult:
    algebra: HopfAlgebraData
    b_inclusion: HopfInclusion
    pi: HopfSurjection
    pair: MatchedPair


def bismash(mp: MatchedPair, crosscheck_quotient: bool = True) -> BismashResult:
    """Smash product and coproduct k^G # kF of a matched pair.

    Basis delta_g x with (delta_g x)(delta_h y) = [g <| x = h] delta_g (xy)
    and Delta(delta_g x) = sum_{st=g} delta_s (t |> x) (x) delta_t x.
    The k^G factor embeds as span{delta_g 1}; the projection sends
    delta_g x to [g = 1] x and is cross-checked against the quotient
    construction.
    """
    rep = verify_matched_pair(mp)
    if not rep.ok:
        raise PreconditionError(
            "matched pair fails verification: " + "; ".join(rep.violations[:3]))
    F, G = mp.f_group, mp.g_group
    nF, nG = F.order, G.order
    d = nF * nG

    def bi(g: int, x: int) -> int:
        return g * nF + x

    mult = np.zeros((d, d, d), dtype=complex)
    comult = np.zeros((d, d, d), dtype=complex)
    counit = np.zeros(d, dtype=complex)
    unit = np.zeros(d, dtype=complex)
    for g in range(nG):
        unit[bi(g, 0)] = 1.0
        for x in range(nF):
            h = int(mp.ract[g, x])
            for y in range(nF):
                mult[bi(g, x), bi(h, y), bi(g, F.mul(x, y))] = 1.0
            for t in range(nG):
                s = G.mul(g, G.inv(t))
                comult[bi(g, x), bi(s, int(mp.lact[t, x])), bi(t, x)] = 1.0
    for x in range(nF):
        counit[bi(0, x)] = 1.0
    labels = [f"d({G.labels[g]})*{F.labels[x]}" for g in range(nG) for x in range(nF)]
    A = HopfAlgebraData(mult, unit, comult, counit, labels=labels)
    A.antipode = solve_antipode(A)

    kG = dual_group_algebra(G)
    embed = np.zeros((d, nG), dtype=complex)
    for g in range(nG):
        embed[bi(g, 0), g] = 1.0
    inc = HopfInclusion(small=kG, big=A, embedding=embed)
    rep_inc = verify_hopf_inclusion(inc)
    if rep_inc > TOL_ALG:
        raise ConsistencyError(f"k^G embedding fails Hopf-map checks ({rep_inc:.2e})")

    kF = group_algebra(F)
    piM = np.zeros((nF, d), dtype=complex)
    for x in range(nF):
        piM[x, bi(0, x)] = 1.0
    pi = HopfSurjection(source=A, target=kF, matrix=piM)
    rep_pi = verify_hopf_surjection(pi)
    if rep_pi > TOL_ALG:
        raise ConsistencyError(f"projection onto kF fails Hopf-map checks ({rep_pi:.2e})")

    if crosscheck_quotient:
        _crosscheck_bismash_quotient(A, inc, pi)
    return BismashResult(algebra=A, b_inclusion=inc, pi=pi, pair=mp)


def _crosscheck_bismash_quotient(A: HopfAlgebraData, inc: HopfInclusion,
                                 pi: HopfSurjection) -> None:
    """The closed-form projection must agree with the generic quotient."""
    Bsub = SubspaceBasis.from_vectors(A, inc.embedding)
    Hq, pi_q = quotient_hopf(A, Bsub)
    # transport the quotient onto the closed form through any linear section
    section = np.linalg.pinv(pi_q.matrix)
    phi = pi.matrix @ section
    if float(np.max(np.abs(phi @ pi_q.matrix - pi.matrix))) > 1e-7:
        raise ConsistencyError("closed-form projection does not factor through the quotient")
    if np.linalg.matrix_rank(phi) != Hq.dim:
        raise ConsistencyError("quotient and closed-form projections have different ranks")
    resid = _hopf_iso_residual(Hq, pi.target, phi)
    if resid > 1e-7:
        raise ConsistencyError(
            f"quotient is not isomorphic to kF via the closed form ({resid:.2e})")


def _hopf_iso_residual(src: HopfAlgebraData, dst: HopfAlgebraData,
                       phi: np.ndarray) -> float:
    """Max residual of phi: src -> dst being a bialgebra map."""
    r = 0.0
    mult_push = np.einsum("ijk,ak->ija", src.mult, phi, optimize=True)
    mult_pull = np.einsum("ai,bj,abc->ijc", phi, phi, dst.mult, optimize=True)
    r = max(r, float(np.max(np.abs(mult_push - mult_pull))))
    r = max(r, float(np.max(np.abs(phi @ src.unit - dst.unit))))
    com_push = np.einsum("kij,ai,bj->kab", src.comult, phi, phi, optimize=True)
    com_pull = np.einsum("ak,abc->kbc", phi, dst.comult, optimize=True)
    r = max(r, float(np.max(np.abs(com_push - com_pull))))
    r = max(r, float(np.max(np.abs(dst.counit @ phi - src.counit))))
    return r


# ---------------------------------------------------------------------------
# axiom verification

@dataclass
class AxiomReport:
    residuals: dict[str, float]
    tol: float

    @property
    def ok(self) -> bool:
        return self.max_residual < self.tol

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values())

    def failing(self) -> list[str]:
        return [k for k, v in self.residuals.items() if v >= self.tol]


def verify_hopf_axioms(A: HopfAlgebraData, tol: float = TOL_ALG) -> AxiomReport:
    """Residual per axiom: associativity through S^2 = id."""
    M, D = A.mult, A.comult
    d = A.dim
    res: dict[str, float] = {}

    assoc = np.einsum("ijp,pkq->ijkq", M, M, optimize=True) - np.einsum("jkp,ipq->ijkq", M, M, optimize=True)
    res["associativity"] = float(np.max(np.abs(assoc)))
    eye = np.eye(d)
    res["unit"] = max(
        float(np.max(np.abs(np.einsum("i,ijk->jk", A.unit, M, optimize=True) - eye))),
        float(np.max(np.abs(np.einsum("j,ijk->ik", A.unit, M, optimize=True) - eye))))

    coassoc = np.einsum("kij,iab->kabj", D, D, optimize=True) - np.einsum("kij,jab->kiab", D, D, optimize=True)
    res["coassociativity"] = float(np.max(np.abs(coassoc)))
    res["counit"] = max(
        float(np.max(np.abs(np.einsum("kij,i->kj", D, A.counit, optimize=True) - eye))),
        float(np.max(np.abs(np.einsum("kij,j->ki", D, A.counit, optimize=True) - eye))))

    # Delta and eps are algebra maps
    lhs = np.einsum("ijp,pab->ijab", M, D, optimize=True)
    x = np.einsum("iab,acu->ibcu", D, M, optimize=True)
    y = np.einsum("jcd,bdv->jcbv", D, M, optimize=True)
    rhs = np.einsum("ibcu,jcbv->ijuv", x, y, optimize=True)
    res["bialgebra_mult"] = float(np.max(np.abs(lhs - rhs)))
    res["bialgebra_counit"] = float(np.max(np.abs(
        np.einsum("ijp,p->ij", M, A.counit, optimize=True) - np.outer(A.counit, A.counit))))
    res["bialgebra_unit"] = max(
        float(np.max(np.abs(np.einsum("k,kij->ij", A.unit, D, optimize=True) - np.outer(A.unit, A.unit)))),
        abs(complex(A.counit @ A.unit) - 1.0))

    if A.antipode is not None:
        S = A.antipode
        target = np.outer(A.counit, A.unit)
        left = np.einsum("kij,pi,pjq->kq", D, S, M, optimize=True)
        right = np.einsum("kij,pj,ipq->kq", D, S, M, optimize=True)
        res["antipode_left"] = float(np.max(np.abs(left - target)))
        res["antipode_right"] = float(np.max(np.abs(right - target)))
        res["antipode_squared"] = float(np.max(np.abs(S @ S - eye)))
    return AxiomReport(residuals=res, tol=tol)


# ---------------------------------------------------------------------------
# subspace calculus

def is_hopf_subalgebra(A: HopfAlgebraData, V: SubspaceBasis, tol: float = TOL_ALG) -> bool:
    """1 in V, V closed under product, Delta(V) in V (x) V, S(V) in V."""
    if A.antipode is None:
        raise PreconditionError("is_hopf_subalgebra needs the antipode")
    Vb = V.matrix
    if not V.contains_vector(A.unit, tol):
        return False
    k = Vb.shape[1]
    prods = np.einsum("ia,jb,ijk->kab", Vb, Vb, A.mult, optimize=True).reshape(A.dim, k * k)
    if not linalg.contains_vectors(Vb, prods, tol):
        return False
    kron = np.kron(Vb, Vb)
    for c in range(k):
        vec = A.apply_comult(Vb[:, c]).reshape(-1)
        if linalg.projection_residual(kron, vec) >= tol:
            return False
    if not linalg.contains_vectors(Vb, A.antipode @ Vb, tol):
        return False
    return True


def is_normal_hopf_subalgebra(A: HopfAlgebraData, B: SubspaceBasis,
                              tol: float = TOL_ALG) -> bool:
    """True iff a_1 b S(a_2) stays in span(B) for all basis a and b in B."""
    if not is_hopf_subalgebra(A, B, tol):
        raise PreconditionError("B is not a Hopf subalgebra")
    S, M, D = A.antipode, A.mult, A.comult
    for c in range(B.dim):
        b = B.matrix[:, c]
        pb = np.einsum("j,pjk->pk", b, M, optimize=True)                # e_p * b
        t2 = np.einsum("rq,ark->aqk", S, M, optimize=True)              # e_a * S(e_q)
        w = np.einsum("kpq,pa,aqr->kr", D, pb, t2, optimize=True)       # rows: a_1 b S(a_2)
        if not linalg.contains_vectors(B.matrix, w.T, tol):
            return False
    return True


def subspace_product(U: SubspaceBasis, V: SubspaceBasis) -> SubspaceBasis:
    """Span of all pairwise products of the two subspaces."""
    if U.parent is not V.parent:
        raise PreconditionError("subspaces live in different algebras")
    A = U.parent
    prods = np.einsum("ia,jb,ijk->kab", U.matrix, V.matrix, A.mult, optimize=True)
    return SubspaceBasis.from_vectors(A, prods.reshape(A.dim, -1))


def coefficient_space(A: HopfAlgebraData, d_vec: np.ndarray,
                      tol: float = TOL_ALG) -> SubspaceBasis:
    """Simple subcoalgebra spanned by the matrix coefficients of d.

    d is an irreducible character of the dual, given as an element of A;
    the result has dimension eps(d)^2.
    """
    d_vec = np.asarray(d_vec, complex)
    spans = np.einsum("k,kpq->qp", d_vec, A.comult, optimize=True)
    sub = SubspaceBasis.from_vectors(A, spans)
    deg = complex(A.counit @ d_vec)
    expected = int(round(deg.real)) ** 2
    if abs(deg.imag) > tol or abs(deg.real - round(deg.real)) > 1e-6 or sub.dim != expected:
        raise PreconditionError(
            f"not an irreducible dual character: dim {sub.dim} != eps(d)^2 = {expected}")
    return sub


def comodule_map_rho(A: HopfAlgebraData, pi: HopfSurjection) -> np.ndarray:
    """rho = (id (x) pi) Delta as a (dim*dim_H, dim) matrix, row index p*dim_H + f."""
    piM = pi.matrix
    h = piM.shape[0]
    rho = np.einsum("kpq,fq->pfk", A.comult, piM, optimize=True)
    return rho.reshape(A.dim * h, A.dim)


def graded_component(A: HopfAlgebraData, pi: HopfSurjection, f: int,
                     tol: float = TOL_ALG) -> SubspaceBasis:
    """A_f = rho^{-1}(A (x) kf) for a group-algebra quotient kF."""
    target = pi.target
    if not isinstance(target, HopfAlgebraData) or not target.is_group_like_basis(tol):
        raise PreconditionError("quotient is not a group algebra on its basis")
    h = target.dim
    rho = comodule_map_rho(A, pi).reshape(A.dim, h, A.dim)
    rows = rho[:, [x for x in range(h) if x != f], :].reshape(-1, A.dim)
    return SubspaceBasis(A, linalg.null_space(rows))


def is_cocentral(A: HopfAlgebraData, pi: HopfSurjection, tol: float = TOL_ALG) -> bool:
    """Check pi(a_1) (x) a_2 = pi(a_2) (x) a_1 on every basis element."""
    piM = pi.matrix
    t1 = np.einsum("kpq,fp->kfq", A.comult, piM, optimize=True)
    t2 = np.einsum("kpq,fq->kfp", A.comult, piM, optimize=True)
    return float(np.max(np.abs(t1 - t2))) < tol


# ---------------------------------------------------------------------------
# quotients and structure maps

def quotient_hopf(A: HopfAlgebraData, B: SubspaceBasis,
                  tol: float = TOL_ALG) -> tuple[HopfAlgebraData, HopfSurjection]:
    """Quotient by the ideal A B+ where B+ = B intersect ker(eps)."""
    if not is_normal_hopf_subalgebra(A, B, tol):
        raise NormalityError("quotient requires a normal Hopf subalgebra")
    eps_on_b = (A.counit @ B.matrix)[None, :]
    bplus_coords = linalg.null_space(eps_on_b)
    bplus = B.matrix @ bplus_coords
    cols = [A.right_mult_matrix(bplus[:, j]) for j in range(bplus.shape[1])]
    ideal = linalg.orthonormal_columns(np.hstack(cols)) if cols else np.zeros((A.dim, 0))
    for j in range(bplus.shape[1]):
        left = A.left_mult_matrix(bplus[:, j])
        if not linalg.contains_vectors(ideal, left, tol):
            raise ConsistencyError("A B+ is not a two-sided ideal")
    comp = linalg.null_space(ideal.conj().T)
    piM = comp.conj().T
    h = comp.shape[1]
    mult = np.zeros((h, h, h), dtype=complex)
    for i in range(h):
        for j in range(h):
            mult[i, j] = piM @ A.product(comp[:, i], comp[:, j])
    unit = piM @ A.unit
    comult = np.zeros((h, h, h), dtype=complex)
    for k in range(h):
        comult[k] = piM @ A.apply_comult(comp[:, k]) @ piM.T
    counit = A.counit @ comp
    H = HopfAlgebraData(mult, unit, comult, counit,
                        labels=[f"h{i}" for i in range(h)])
    H.antipode = solve_antipode(H)
    rep = verify_hopf_axioms(H, tol=max(tol, 1e-7))
    if not rep.ok:
        raise ConsistencyError(
            f"induced quotient structure fails axioms: {rep.failing()}")
    pi = HopfSurjection(source=A, target=H, matrix=piM)
    resid = verify_hopf_surjection(pi)
    if resid > 1e-7:
        raise ConsistencyError(f"quotient projection is not a Hopf map ({resid:.2e})")
    return H, pi


def verify_hopf_inclusion(inc: HopfInclusion, check_antipode: bool = True) -> float:
    """Max residual of the embedding being an injective Hopf map."""
    E = np.asarray(inc.embedding, complex)
    small, big = inc.small, inc.big
    r = 0.0
    if np.linalg.matrix_rank(E) != small.dim:
        return float("inf")
    push = np.einsum("ijk,pk->ijp", small.mult, E, optimize=True)
    pull = np.einsum("pi,qj,pqr->ijr", E, E, big.mult, optimize=True)
    r = max(r, float(np.max(np.abs(push - pull))))
    r = max(r, float(np.max(np.abs(E @ small.unit - big.unit))))
    if isinstance(small, HopfAlgebraData) and isinstance(big, HopfAlgebraData):
        push = np.einsum("kij,pi,qj->kpq", small.comult, E, E, optimize=True)
        pull = np.einsum("pk,pab->kab", E, big.comult, optimize=True)
        r = max(r, float(np.max(np.abs(push - pull))))
        r = max(r, float(np.max(np.abs(big.counit @ E - small.counit))))
        if check_antipode and small.antipode is not None and big.antipode is not None:
            r = max(r, float(np.max(np.abs(E @ small.antipode - big.antipode @ E))))
    return r


def verify_hopf_surjection(pi: HopfSurjection) -> float:
    """Max residual of the projection being a surjective Hopf map."""
    P = np.asarray(pi.matrix, complex)
    src, dst = pi.source, pi.target
    if np.linalg.matrix_rank(P) != dst.dim:
        return float("inf")
    r = 0.0
    push = np.einsum("ijk,fk->ijf", src.mult, P, optimize=True)
    pull = np.einsum("fi,gj,fgh->ijh", P, P, dst.mult, optimize=True)
    r = max(r, float(np.max(np.abs(push - pull))))
    r = max(r, float(np.max(np.abs(P @ src.unit - dst.unit))))
    push = np.einsum("kij,ai,bj->kab", src.comult, P, P, optimize=True)
    pull = np.einsum("ak,abc->kbc", P, dst.comult, optimize=True)
    r = max(r, float(np.max(np.abs(push - pull))))
    r = max(r, float(np.max(np.abs(dst.counit @ P - src.counit))))
    if src.antipode is not None and dst.antipode is not None:
        r = max(r, float(np.max(np.abs(P @ src.antipode - dst.antipode @ P))))
    return r


def subalgebra_data(A: AlgebraData, basis: SubspaceBasis,
                    tol: float = TOL_ALG,
                    labels: Optional[Sequence[str]] = None) -> AlgebraData:
    """Algebra structure induced on a unital subalgebra (orthonormal basis)."""
    Vb = basis.matrix
    k = Vb.shape[1]
    mult = np.zeros((k, k, k), dtype=complex)
    proj = Vb.conj().T
    for i in range(k):
        for j in range(k):
            prod = A.product(Vb[:, i], Vb[:, j])
            coords = proj @ prod
            if float(np.max(np.abs(Vb @ coords - prod))) > tol:
                raise PreconditionError("subspace is not closed under multiplication")
            mult[i, j] = coords
    unit = proj @ A.unit
    if float(np.max(np.abs(Vb @ unit - A.unit))) > tol:
        raise PreconditionError("subspace does not contain the unit")
    return AlgebraData(mult, unit, labels=labels)
