"""Invariant suite run by ``twistordef verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .cycle import build_cycle, classify_subgroup, isotropy_weight, pointwise_stabilizer
from .deformation import Configuration, assemble, closed_form_rep, dimension_audit, gamma_vectors, gamma_matrix
from .exact import rank
from .moduli import (
    excess_subgroups,
    excess_subgroups_unbounded,
    fixed_dimension,
    moduli_dimension,
    torus_invariant_dimension,
)
from .weights import k_subgroup, negate_rep


@dataclass(frozen=True)
class Check:
    n: int
    name: str
    passed: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {"n": self.n, "name": self.name, "passed": self.passed, "detail": self.detail}


def expected_moduli_dimension(n: int, i: int) -> int:
    if i == 0:
        return 3 * n - 6
    if i in (1, n - 1):
        return n
    return n + 2


def check_n(n: int, samples: int = 5, rng: random.Random | None = None) -> list[Check]:
    rng = rng or random.Random(n)
    out: list[Check] = []

    def add(name, ok, detail=""):
        out.append(Check(n, name, bool(ok), detail))

    closed = closed_form_rep(n)
    add("closed_form_invariants", not closed.check(), "; ".join(closed.check()))
    configs = [Configuration.default(n)] + [Configuration.random(n, rng) for _ in range(samples)]
    mismatched = [c for c in configs if assemble(c) != closed]
    add("assemble_matches_closed_form", not mismatched, f"{len(configs)} configurations, {len(mismatched)} mismatches")
    ranks = sorted({rank(gamma_matrix(c)) for c in configs})
    add("image_rank_5", ranks == [5], f"ranks seen: {ranks}")
    gammas = [gamma_vectors(c) for c in configs]
    add("gamma1_plus_gamma4_zero", all(not any((g[0] + g[3]).coords) for g in gammas))
    add("gamma_homogeneous", all(len(v.support_blocks()) == 1 for g in gammas for v in g))
    add("total_dimension", closed.total.dimension == 7 * n - 13, f"{closed.total.dimension} vs 7n-13 = {7 * n - 13}")
    add("conjugation_symmetry", negate_rep(closed.total) == closed.total)
    add("rep3_is_negated_rep2", closed.rep3 == negate_rep(closed.rep2))
    add("torus_invariant_dim", torus_invariant_dimension(n) == n - 1)
    failed_audit = [c.name for c in dimension_audit(n) if not c.passed]
    add("dimension_audit", not failed_audit, ", ".join(failed_audit))

    expected_excess = [k_subgroup(i) for i in range(n)] if n >= 3 else []
    got = excess_subgroups(n, n + 5)
    add("excess_set", sorted(got) == sorted(expected_excess), ", ".join(map(str, got)))
    add("excess_set_complete", sorted(excess_subgroups_unbounded(n)) == sorted(expected_excess))
    if n < 3:
        return out

    wrong_moduli = [
        i for i in range(n) if moduli_dimension(n, k_subgroup(i)) != expected_moduli_dimension(n, i)
    ]
    add("moduli_dimensions", not wrong_moduli, f"wrong for K_i, i in {wrong_moduli}" if wrong_moduli else "")
    sample_cfg = configs[-1]
    via_la = assemble(sample_cfg)
    disagree = [
        k for k in got + [k_subgroup(n + 1)] if fixed_dimension(n, k, via_la) != fixed_dimension(n, k)
    ]
    add("fixed_dimension_pipelines_agree", not disagree)

    cycle = build_cycle(n)
    add("cycle_length", len(cycle.curves) == 2 * n + 4)
    stabs = [pointwise_stabilizer(cycle.curve(lbl)) for lbl in ["C0"] + [f"E{j}" for j in range(1, n)]]
    add("stabilizers_are_K", stabs == [k_subgroup(i) for i in range(n)])
    iso_ok = all(
        isotropy_weight(cycle.curve("B0"), k_subgroup(i)) == i
        and isotropy_weight(cycle.curve("Bn"), k_subgroup(i)) == n - i
        for i in range(1, n)
    )
    add("isotropy_B0_Bn", iso_ok)
    adjacent_ok = all(
        a.tangent_character.m * b.tangent_character.n - a.tangent_character.n * b.tangent_character.m != 0
        for a, b in cycle.adjacent_pairs()
    )
    add("adjacent_characters_independent", adjacent_ok)
    k0 = classify_subgroup(n, k_subgroup(0), cycle)
    add("K0_semifree", k0.semifree and k0.is_lebrun)
    bad = [
        i for i in range(1, n)
        if (c := classify_subgroup(n, k_subgroup(i), cycle)).semifree or c.is_lebrun
    ]
    add("Ki_non_lebrun", not bad, f"failed for i in {bad}" if bad else "")
    return out


def run_suite(n_from: int, n_to: int, samples: int = 5, seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    checks: list[Check] = []
    for n in range(n_from, n_to + 1):
        checks.extend(check_n(n, samples, rng))
    return checks
