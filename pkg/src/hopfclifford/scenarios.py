"""Scenario configuration, builtin reproductions, and run reports.

A scenario names a construction (group_algebra, dual_group_algebra or
bismash), the group data, the normal Hopf subalgebra B, and which
irreducible B-characters to analyze.  Three builtins ship with the
package:

  s4_counterexample   the order-24 bismash where the correspondence fails,
  s3_a3_classical     the classical group case kS3 over kA3,
  cocentral_c4_c2     a cocentral order-8 bismash where it always holds.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import clifford, hopf, linalg, repcalc
from .errors import ConfigError, ConsistencyError
from .groups import (FiniteGroup, MatchedPair, Subgroup, derive_actions,
                     group_from_permutations, parse_cycles, subgroup_as_group,
                     subgroup_closure, verify_matched_pair)

BUILTIN_NAMES = ("s4_counterexample", "s3_a3_classical", "cocentral_c4_c2")

# expected action tables for the order-24 builtin, asserted before analysis
S4_RACT = {
    "t": {"g": "g", "g^2": "g^3", "g^3": "g^2"},
    "s": {"g": "g^2", "g^2": "g^3", "g^3": "g"},
    "s^2": {"g": "g^3", "g^2": "g", "g^3": "g^2"},
    "st": {"g": "g^3", "g^2": "g^2", "g^3": "g"},
    "ts": {"g": "g^2", "g^2": "g", "g^3": "g^3"},
}
S4_LACT = {
    "g": {"t": "ts", "s": "t", "s^2": "s", "st": "st", "ts": "s^2"},
    "g^2": {"t": "s^2", "s": "ts", "s^2": "t", "st": "st", "ts": "s"},
    "g^3": {"t": "s", "s": "s^2", "s^2": "ts", "st": "st", "ts": "t"},
}


@dataclass
class Scenario:
    name: str
    construction: str
    group_generators: list[str] = field(default_factory=list)
    group_names: Optional[list[str]] = None
    group_cayley: Optional[dict] = None
    f_generators: list[str] = field(default_factory=list)
    g_generators: list[str] = field(default_factory=list)
    b_generators: list[str] = field(default_factory=list)
    alpha: object = "all"
    seed: Optional[int] = None
    size_cap: int = 10000
    tol_alg: float = 1e-8
    expected_ract: Optional[dict] = None
    expected_lact: Optional[dict] = None

    @classmethod
    def from_dict(cls, data: dict) -> "Scenario":
        try:
            construction = data["construction"]
            if construction not in ("group_algebra", "dual_group_algebra", "bismash"):
                raise ConfigError(f"unknown construction {construction!r}")
            group = data.get("sigma") or data.get("group") or {}
            tolerances = data.get("tolerances", {})
            sc = cls(
                name=str(data.get("name", "scenario")),
                construction=construction,
                group_generators=list(group.get("generators", [])),
                group_names=group.get("names"),
                group_cayley=group if "cayley" in group else None,
                f_generators=list(data.get("f_generators", [])),
                g_generators=list(data.get("g_generators", [])),
                b_generators=list(data.get("b_generators", [])),
                alpha=data.get("alpha", "all"),
                seed=data.get("seed"),
                size_cap=int(data.get("size_cap", 10000)),
                tol_alg=float(tolerances.get("alg", 1e-8)),
            )
        except ConfigError:
            raise
        except Exception as exc:
            raise ConfigError(f"bad scenario data: {exc}") from exc
        if not sc.group_generators and sc.group_cayley is None:
            raise ConfigError("scenario needs group generators or a Cayley table")
        if construction == "bismash" and not (sc.f_generators and sc.g_generators):
            raise ConfigError("bismash scenario needs f_generators and g_generators")
        if construction in ("group_algebra", "dual_group_algebra") and not sc.b_generators:
            raise ConfigError(f"{construction} scenario needs b_generators")
        return sc

    def to_dict(self) -> dict:
        if self.group_cayley is not None:
            group: dict = {"order": self.group_cayley["order"],
                           "cayley": self.group_cayley["cayley"],
                           "labels": self.group_cayley.get("labels")}
        else:
            group = {"generators": self.group_generators}
            if self.group_names:
                group["names"] = self.group_names
        out = {
            "name": self.name,
            "construction": self.construction,
            "group": group,
            "alpha": self.alpha,
        }
        if self.construction == "bismash":
            out["f_generators"] = self.f_generators
            out["g_generators"] = self.g_generators
        else:
            out["b_generators"] = self.b_generators
        if self.seed is not None:
            out["seed"] = self.seed
        return out


def builtin_scenario(name: str) -> Scenario:
    if name == "s4_counterexample":
        return Scenario(
            name=name, construction="bismash",
            group_generators=["(1 2 3 4)", "(1 2)", "(1 2 3)"],
            group_names=["g", "t", "s"],
            f_generators=["t", "s"], g_generators=["g"],
            expected_ract=S4_RACT, expected_lact=S4_LACT)
    if name == "s3_a3_classical":
        return Scenario(
            name=name, construction="group_algebra",
            group_generators=["(1 2)", "(1 2 3)"], group_names=["t", "s"],
            b_generators=["s"])
    if name == "cocentral_c4_c2":
        return Scenario(
            name=name, construction="bismash",
            group_generators=["(1 2 3 4)", "(1 3)"], group_names=["g", "r"],
            f_generators=["r"], g_generators=["g"])
    raise ConfigError(f"unknown builtin {name!r}; choose from {BUILTIN_NAMES}")


def load_scenario(path: str) -> Scenario:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read scenario file {path}: {exc}") from exc
    return Scenario.from_dict(data)


# ---------------------------------------------------------------------------
# building the extension named by a scenario

@dataclass
class BuiltExtension:
    scenario: Scenario
    A: hopf.HopfAlgebraData
    inc: hopf.HopfInclusion
    mp: Optional[MatchedPair]
    pair_report: Optional[object]
    piF: Optional[hopf.HopfSurjection]
    F: Optional[FiniteGroup]
    alpha_aliases: dict[str, int] = field(default_factory=dict)
    group: Optional[FiniteGroup] = None


def _resolve_elements(group: FiniteGroup, refs: list[str],
                      names: Optional[list[str]],
                      generator_strings: list[str]) -> list[int]:
    """Element indices for generator names, labels, or cycle strings."""
    out = []
    for ref in refs:
        text = ref
        if names and ref in names:
            text = generator_strings[names.index(ref)]
        elif ref in group.labels:
            out.append(group.label_index(ref))
            continue
        if group.perms is None:
            raise ConfigError(f"cannot resolve element {ref!r} without permutations")
        try:
            perm = parse_cycles(text, degree=len(group.perms[0]))
        except ValueError as exc:
            raise ConfigError(f"cannot resolve element {ref!r}: {exc}") from exc
        hits = [i for i, p in enumerate(group.perms) if p == perm]
        if len(hits) != 1:
            raise ConfigError(f"element {ref!r} not found in the group")
        out.append(hits[0])
    return out


def _quotient_group(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, list[int]]:
    """Cosets of a normal subgroup as a group, plus element -> coset map."""
    nset = set(N.members)
    for n in N.members:
        for a in G.elements():
            if G.mul(G.mul(a, n), G.inv(a)) not in nset:
                raise ConfigError("b_generators do not generate a normal subgroup")
    coset_of = [-1] * G.order
    reps = []
    for a in G.elements():
        if coset_of[a] != -1:
            continue
        idx = len(reps)
        reps.append(a)
        for n in N.members:
            coset_of[G.mul(a, n)] = idx
    q = len(reps)
    cayley = np.zeros((q, q), dtype=np.int64)
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            cayley[i, j] = coset_of[G.mul(a, b)]
    labels = [f"[{G.labels[a]}]" for a in reps]
    return FiniteGroup(cayley, labels=labels), coset_of


def build_scenario(sc: Scenario, seed: int) -> BuiltExtension:
    try:
        if sc.group_cayley is not None:
            group = FiniteGroup.from_json_dict(sc.group_cayley)
        else:
            group = group_from_permutations(sc.group_generators,
                                            names=sc.group_names,
                                            size_cap=sc.size_cap)
    except ValueError as exc:
        raise ConfigError(f"bad group data: {exc}") from exc

    if sc.construction == "bismash":
        f_idx = _resolve_elements(group, sc.f_generators, sc.group_names,
                                  sc.group_generators)
        g_idx = _resolve_elements(group, sc.g_generators, sc.group_names,
                                  sc.group_generators)
        f_sub = subgroup_closure(group, f_idx)
        g_sub = subgroup_closure(group, g_idx)
        mp = derive_actions(group, f_sub, g_sub)
        pair_report = verify_matched_pair(mp)
        if sc.expected_ract is not None:
            _assert_action_tables(mp, sc.expected_ract, sc.expected_lact)
        bm = hopf.bismash(mp)
        aliases = {mp.g_group.labels[g]: g for g in mp.g_group.elements()}
        return BuiltExtension(scenario=sc, A=bm.algebra, inc=bm.b_inclusion,
                              mp=mp, pair_report=pair_report, piF=bm.pi,
                              F=mp.f_group, alpha_aliases=aliases, group=group)

    n_idx = _resolve_elements(group, sc.b_generators, sc.group_names,
                              sc.group_generators)
    n_sub = subgroup_closure(group, n_idx)
    if sc.construction == "group_algebra":
        A = hopf.group_algebra(group)
        B = hopf.group_algebra(subgroup_as_group(n_sub))
        E = np.zeros((group.order, n_sub.order), dtype=complex)
        for i, m in enumerate(n_sub.members):
            E[m, i] = 1.0
        inc = hopf.HopfInclusion(small=B, big=A, embedding=E)
    else:
        A = hopf.dual_group_algebra(group)
        Q, coset_of = _quotient_group(group, n_sub)
        B = hopf.dual_group_algebra(Q)
        E = np.zeros((group.order, Q.order), dtype=complex)
        for a in group.elements():
            E[a, coset_of[a]] = 1.0
        inc = hopf.HopfInclusion(small=B, big=A, embedding=E)
    resid = hopf.verify_hopf_inclusion(inc)
    if resid > 1e-8:
        raise ConsistencyError(f"B embedding fails Hopf-map checks ({resid:.2e})")
    return BuiltExtension(scenario=sc, A=A, inc=inc, mp=None, pair_report=None,
                          piF=None, F=None, group=group)


def _assert_action_tables(mp: MatchedPair, ract_expect: dict, lact_expect: dict) -> None:
    for x_label, row in ract_expect.items():
        for g_label, want in row.items():
            got = mp.ract_label(g_label, x_label)
            if got != want:
                raise ConsistencyError(
                    f"derived right action at ({g_label}, {x_label}) is "
                    f"{got}, expected {want}")
    for g_label, row in lact_expect.items():
        for x_label, want in row.items():
            got = mp.lact_label(g_label, x_label)
            if got != want:
                raise ConsistencyError(
                    f"derived left action at ({g_label}, {x_label}) is "
                    f"{got}, expected {want}")


# ---------------------------------------------------------------------------
# running the analysis

@dataclass
class RunReport:
    scenario: Scenario
    seed: int
    dims_a: list[int]
    dims_b: list[int]
    dims_dual: list[int]
    axiom_residuals: dict[str, float]
    pair_ok: Optional[bool]
    cocentral: Optional[bool]
    f_labels: Optional[list[str]]
    class_data: dict
    formula_residuals: dict[str, float]
    coset_check: Optional[dict]
    alpha_reports: list[clifford.AlphaReport]
    alpha_labels: list[str]
    action_tables: Optional[dict]
    elapsed: float

    def all_verdicts_hold(self) -> bool:
        return all(r.direct_holds for r in self.alpha_reports)

    def to_json_dict(self) -> dict:
        reps = []
        for r in self.alpha_reports:
            rep = {
                "alpha_index": r.alpha_index,
                "alpha_label": r.alpha_label,
                "alpha_degree": r.alpha_degree,
                "class_index": r.class_index,
                "b_class_degree": r.b_class_degree,
                "bound": str(r.bound),
                "dim_z": r.dim_z,
                "stabilizing_dual_characters": list(r.stabilizing),
                "socle_equality": r.socle_equality,
                "direct_holds": r.direct_holds,
                "verdict": r.verdict,
                "induction_table": r.induction_table,
                "conjugate_class": list(r.conjugate_class),
                "stabilizer_induction_residual": linalg.round_for_json(
                    r.stabilizer_induction_residual),
            }
            if r.graded is not None:
                g = r.graded
                rep["graded"] = {
                    "h_members": list(g.h_members),
                    "h_labels": list(g.h_labels),
                    "orbit_size": g.orbit_size,
                    "dim_s": g.dim_s,
                    "s_is_hopf_subalgebra": g.s_is_hopf,
                    "z_equals_s": g.z_equals_s,
                    "orbit_class": list(g.orbit_class),
                    "cocentral": g.cocentral,
                }
            reps.append(rep)
        out = {
            "scenario": self.scenario.to_dict(),
            "seed": self.seed,
            "dims": {"A": self.dims_a, "B": self.dims_b, "A_dual": self.dims_dual},
            "axiom_residuals": {k: linalg.round_for_json(v)
                                for k, v in self.axiom_residuals.items()},
            "matched_pair_ok": self.pair_ok,
            "cocentral": self.cocentral,
            "quotient_group_labels": self.f_labels,
            "classes": self.class_data,
            "formula_residuals": {k: linalg.round_for_json(v)
                                  for k, v in self.formula_residuals.items()},
            "coset_check": _round_tree(self.coset_check),
            "alphas": reps,
            "action_tables": self.action_tables,
            "all_verdicts_hold": self.all_verdicts_hold(),
        }
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2,
                          ensure_ascii=True) + "\n"

    def render_text(self) -> str:
        lines = []
        sc = self.scenario
        lines.append(f"scenario {sc.name} ({sc.construction}), seed {self.seed}")
        lines.append(f"  dims: A {self.dims_a}  B {self.dims_b}  A* {self.dims_dual}")
        worst = max(self.axiom_residuals.values())
        lines.append(f"  axioms: max residual {worst:.2e} "
                     f"({'pass' if worst < 1e-8 else 'FAIL'})")
        if self.pair_ok is not None:
            lines.append(f"  matched pair verified: {self.pair_ok}")
        if self.action_tables is not None:
            lines.append("  right action (rows x, cols g):")
            for row in self.action_tables["ract_rows"]:
                lines.append("    " + row)
            lines.append("  left action (rows g, cols x):")
            for row in self.action_tables["lact_rows"]:
                lines.append("    " + row)
        if self.cocentral is not None:
            lines.append(f"  cocentral: {self.cocentral}")
        lines.append(f"  classes: {self.class_data['a_classes']} over "
                     f"{self.class_data['b_classes']}")
        worst = max(self.formula_residuals.values())
        lines.append(f"  class formulas: max residual {worst:.2e}")
        if self.coset_check is not None:
            cc = self.coset_check
            lines.append(
                f"  coset decomposition: {cc['num_cosets']} cosets, uniform "
                f"residual {cc['uniform_coefficient_residual']:.2e}, "
                f"partition {cc['supports_partition']}, "
                f"decomposition {cc['coset_decomposition']}")
        for r in self.alpha_reports:
            lines.append(
                f"  alpha[{r.alpha_index}] {r.alpha_label} (degree {r.alpha_degree}): "
                f"class {r.class_index}, bound {r.bound}, dim Z {r.dim_z}, "
                f"socle equality {r.socle_equality} -> {r.verdict}")
            for row in r.induction_table:
                tag = "irreducible" if row["irreducible"] else "reducible"
                lines.append(f"      psi {row['psi']} (deg {row['psi_degree']}) "
                             f"induces to {row['image']} ({tag})")
            if r.graded is not None:
                g = r.graded
                lines.append(
                    f"      graded: H = {{{', '.join(g.h_labels)}}}, orbit size "
                    f"{g.orbit_size}, dim S {g.dim_s}, S Hopf subalgebra "
                    f"{g.s_is_hopf}, Z = S {g.z_equals_s}")
        lines.append(f"  all verdicts hold: {self.all_verdicts_hold()}")
        lines.append(f"  elapsed: {self.elapsed:.2f}s")
        return "\n".join(lines) + "\n"


def _round_tree(obj):
    if isinstance(obj, dict):
        return {k: _round_tree(v) for k, v in obj.items()}
    if isinstance(obj, float):
        return linalg.round_for_json(obj)
    return obj


def _action_table_rows(mp: MatchedPair) -> dict:
    F, G = mp.f_group, mp.g_group
    ract_rows = []
    for x in range(1, F.order):
        cells = [f"{G.labels[g]}<|{F.labels[x]} = {G.labels[int(mp.ract[g, x])]}"
                 for g in range(1, G.order)]
        ract_rows.append("  ".join(cells))
    lact_rows = []
    for g in range(1, G.order):
        cells = [f"{G.labels[g]}|>{F.labels[x]} = {F.labels[int(mp.lact[g, x])]}"
                 for x in range(1, F.order)]
        lact_rows.append("  ".join(cells))
    return {"ract_rows": ract_rows, "lact_rows": lact_rows}


def resolve_alpha_selection(selection, dec_b: repcalc.SemisimpleDecomposition,
                            aliases: dict[str, int],
                            support_of: list[Optional[int]]) -> list[int]:
    """Indices of Irr(B) selected by 'all', an index, or a label."""
    n = len(dec_b.irr)
    if selection is None or selection == "all":
        return list(range(n))
    if isinstance(selection, int) or (isinstance(selection, str) and selection.isdigit()):
        k = int(selection)
        if not 0 <= k < n:
            raise ConfigError(f"alpha index {k} out of range 0..{n - 1}")
        return [k]
    if isinstance(selection, str):
        if selection.startswith("chi") and selection[3:].isdigit():
            return resolve_alpha_selection(selection[3:], dec_b, aliases, support_of)
        if selection in aliases:
            want = aliases[selection]
            hits = [k for k, sup in enumerate(support_of) if sup == want]
            if len(hits) == 1:
                return hits
        raise ConfigError(f"cannot resolve alpha selection {selection!r}")
    raise ConfigError(f"cannot resolve alpha selection {selection!r}")


def _character_supports(dec_b: repcalc.SemisimpleDecomposition) -> list[Optional[int]]:
    """Basis support when a character is a 0/1 indicator, else None."""
    out: list[Optional[int]] = []
    for ch in dec_b.irr:
        v = ch.values
        k = int(np.argmax(np.abs(v)))
        ind = np.zeros_like(v)
        ind[k] = 1.0
        out.append(k if float(np.max(np.abs(v - ind))) < 1e-8 else None)
    return out


def run_scenario(sc: Scenario, alpha_selection=None, seed: Optional[int] = None) -> RunReport:
    """Build, verify, and analyze one scenario end to end."""
    t0 = time.perf_counter()
    if seed is None:
        seed = sc.seed if sc.seed is not None else repcalc.DEFAULT_SEED
    built = build_scenario(sc, seed)
    A, inc = built.A, built.inc

    axioms: dict[str, float] = {}
    for tag, alg in (("A", A), ("B", inc.small), ("A_dual", hopf.dual_hopf(A))):
        rep = hopf.verify_hopf_axioms(alg, tol=sc.tol_alg)
        axioms.update({f"{tag}.{k}": v for k, v in rep.residuals.items()})
        if not rep.ok:
            raise ConsistencyError(f"{tag} fails Hopf axioms: {rep.failing()}")

    dec_a = repcalc.wedderburn(A, seed=seed)
    dec_b = repcalc.wedderburn(inc.small, seed=seed)
    dec_dual = repcalc.wedderburn(hopf.dual_hopf(A), seed=seed)

    ecd = clifford.equivalence_classes(A, inc, dec_a, dec_b)
    formulas = clifford.verify_class_formulas(ecd, inc, dec_a, dec_b)

    piF, F = built.piF, built.F
    if piF is None:
        Bsub = hopf.SubspaceBasis.from_vectors(A, inc.embedding)
        _, pi_q = hopf.quotient_hopf(A, Bsub)
        found = repcalc.as_group_algebra_surjection(pi_q, seed=seed)
        if found is not None:
            F, piF = found

    coset_check = None
    cocentral = None
    components = None
    if piF is not None and F is not None:
        components = [hopf.graded_component(A, piF, f) for f in range(F.order)]
        cocentral = hopf.is_cocentral(A, piF)
        coset_check = clifford.coset_projection_check(
            A, inc, piF, F, components, dec_dual)

    supports = _character_supports(dec_b)
    selected = resolve_alpha_selection(
        alpha_selection if alpha_selection is not None else sc.alpha,
        dec_b, built.alpha_aliases, supports)

    alpha_labels = []
    for k, sup in enumerate(supports):
        if sup is not None and built.mp is not None:
            alpha_labels.append(built.mp.g_group.labels[sup])
        elif sup is not None:
            alpha_labels.append(inc.small.labels[sup])
        else:
            alpha_labels.append(f"chi{k}")

    reports = []
    for k in selected:
        alpha_group_index = supports[k] if built.mp is not None else None
        rep = clifford.analyze_alpha(
            A, inc, k, ecd, dec_a, dec_b, dec_dual,
            alpha_label=alpha_labels[k], piF=piF, F=F, components=components,
            cocentral=bool(cocentral), mp=built.mp,
            alpha_group_index=alpha_group_index, seed=seed)
        reports.append(rep)
    if cocentral and len(selected) == len(dec_b.irr):
        clifford.cocentral_sweep_check(reports)

    class_data = {
        "a_classes": [list(c) for c in ecd.a_classes],
        "b_classes": [list(c) for c in ecd.b_classes],
        "a_degrees": [c.degree for c in ecd.a_sums],
        "b_degrees": [c.degree for c in ecd.b_sums],
    }
    return RunReport(
        scenario=sc, seed=seed,
        dims_a=list(dec_a.dims), dims_b=list(dec_b.dims), dims_dual=list(dec_dual.dims),
        axiom_residuals=axioms,
        pair_ok=None if built.pair_report is None else built.pair_report.ok,
        cocentral=cocentral,
        f_labels=None if F is None else list(F.labels),
        class_data=class_data, formula_residuals=formulas,
        coset_check=coset_check, alpha_reports=reports,
        alpha_labels=alpha_labels,
        action_tables=None if built.mp is None else _action_table_rows(built.mp),
        elapsed=time.perf_counter() - t0)


def list_irr(sc: Scenario, seed: Optional[int] = None) -> tuple[str, dict]:
    """Degrees and labels of Irr(A), Irr(B), Irr(A^*) in canonical order."""
    if seed is None:
        seed = sc.seed if sc.seed is not None else repcalc.DEFAULT_SEED
    built = build_scenario(sc, seed)
    dec_a = repcalc.wedderburn(built.A, seed=seed)
    dec_b = repcalc.wedderburn(built.inc.small, seed=seed)
    dec_dual = repcalc.wedderburn(hopf.dual_hopf(built.A), seed=seed)
    data = {
        "A_degrees": list(dec_a.dims),
        "B_degrees": list(dec_b.dims),
        "A_dual_degrees": list(dec_dual.dims),
    }
    lines = [f"scenario {sc.name}"]
    for tag, dims in (("Irr(A)", dec_a.dims), ("Irr(B)", dec_b.dims),
                      ("Irr(A*)", dec_dual.dims)):
        lines.append(f"  {tag}: {len(dims)} characters, degrees {dims}")
    return "\n".join(lines) + "\n", data


def verify_axioms(sc: Scenario, seed: Optional[int] = None) -> tuple[str, dict]:
    """Axiom residual report for the scenario's algebras."""
    if seed is None:
        seed = sc.seed if sc.seed is not None else repcalc.DEFAULT_SEED
    built = build_scenario(sc, seed)
    out = {}
    lines = [f"scenario {sc.name}"]
    for tag, alg in (("A", built.A), ("B", built.inc.small),
                     ("A_dual", hopf.dual_hopf(built.A))):
        rep = hopf.verify_hopf_axioms(alg)
        out[tag] = {"ok": rep.ok, "max_residual": rep.max_residual}
        lines.append(f"  {tag} (dim {alg.dim}): max residual "
                     f"{rep.max_residual:.2e} ({'pass' if rep.ok else 'FAIL'})")
        if not rep.ok:
            lines.append(f"    failing: {rep.failing()}")
    return "\n".join(lines) + "\n", out
