"""Which circles in the torus carry deformations breaking the torus symmetry, and how many.

A circle K gives such deformations exactly when the K-fixed part of
H^1(Theta_Z) is strictly larger than the torus-fixed part (dimension n-1).
The local moduli dimension is then the fixed dimension minus one, the
residual circle acting non-trivially on the fixed subspace.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cycle import Classification, build_cycle, classify_subgroup
from .deformation import AssembledRep, closed_form_rep
from .weights import (
    SubgroupDirection,
    Weight,
    WeightRep,
    fixed_subrep,
    normalize_direction,
    primitive_directions,
)


def _total(n: int, rep: AssembledRep | None) -> WeightRep:
    if rep is None:
        return closed_form_rep(n).total
    if rep.n != n:
        raise ValueError(f"representation is for n={rep.n}, not n={n}")
    return rep.total


def fixed_dimension(n: int, k: SubgroupDirection, rep: AssembledRep | None = None) -> int:
    """dim H^1(Theta_Z)^K. Uses the closed form unless an assembled ``rep`` is passed."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    return fixed_subrep(_total(n, rep), k).dimension


def torus_invariant_dimension(n: int, rep: AssembledRep | None = None) -> int:
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    return _total(n, rep).multiplicity(Weight(0, 0))


def kernel_directions(rep: WeightRep) -> list[SubgroupDirection]:
    """Every circle fixing some nonzero weight of ``rep``.

    A nonzero weight (m, n) is fixed by exactly one circle, the normalized
    (-n, m). Any circle with excess fixed dimension is therefore in this list,
    whatever its height.
    """
    return sorted({normalize_direction(-w.n, w.m) for w, _ in rep.items() if (w.m, w.n) != (0, 0)})


def excess_subgroups(n: int, height_bound: int, rep: AssembledRep | None = None) -> list[SubgroupDirection]:
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    total = _total(n, rep)
    base = total.multiplicity(Weight(0, 0))
    return [k for k in primitive_directions(height_bound) if fixed_subrep(total, k).dimension > base]


def excess_subgroups_unbounded(n: int, rep: AssembledRep | None = None) -> list[SubgroupDirection]:
    """The excess set with no height bound, from the finite candidate list."""
    total = _total(n, rep)
    base = total.multiplicity(Weight(0, 0))
    return [k for k in kernel_directions(total) if fixed_subrep(total, k).dimension > base]


def moduli_dimension(n: int, k: SubgroupDirection, rep: AssembledRep | None = None) -> int | None:
    """Local moduli dimension of K-equivariant deformations, or None if K has no excess."""
    if n < 3:
        raise ValueError(f"moduli dimensions are defined for n >= 3, got {n}")
    fixed = fixed_dimension(n, k, rep)
    if fixed <= torus_invariant_dimension(n, rep):
        return None
    return fixed - 1


@dataclass(frozen=True)
class SubgroupReport:
    direction: SubgroupDirection
    k_label: str | None
    fixed_dim: int
    is_excess: bool
    moduli_dim: int | None
    classification: Classification

    def as_dict(self) -> dict:
        return {
            "p": self.direction.p,
            "q": self.direction.q,
            "k_label": self.k_label,
            "fixed_dim": self.fixed_dim,
            "excess": self.is_excess,
            "moduli_dim": self.moduli_dim,
            "semifree": self.classification.semifree,
            "lebrun": self.classification.is_lebrun,
        }


@dataclass(frozen=True)
class ScanResult:
    n: int
    height_bound: int
    torus_invariant_dim: int
    reports: tuple[SubgroupReport, ...]

    @property
    def excess_set(self) -> list[SubgroupDirection]:
        return [r.direction for r in self.reports if r.is_excess]

    def report_for(self, p: int, q: int) -> SubgroupReport:
        k = normalize_direction(p, q)
        for r in self.reports:
            if r.direction == k:
                return r
        raise KeyError(f"{k} is outside the scanned height bound {self.height_bound}")


def scan(n: int, height_bound: int | None = None, rep: AssembledRep | None = None) -> ScanResult:
    """Report on every circle with max(|p|, |q|) <= height_bound (default n + 5), in lexicographic order."""
    if n < 3:
        raise ValueError(f"scan needs n >= 3, got {n}")
    height_bound = n + 5 if height_bound is None else height_bound
    total = _total(n, rep)
    base = total.multiplicity(Weight(0, 0))
    cycle = build_cycle(n)
    reports = []
    for k in primitive_directions(height_bound):
        fixed = fixed_subrep(total, k).dimension
        excess = fixed > base
        reports.append(
            SubgroupReport(
                direction=k,
                k_label=k.k_label(n),
                fixed_dim=fixed,
                is_excess=excess,
                moduli_dim=fixed - 1 if excess else None,
                classification=classify_subgroup(n, k, cycle),
            )
        )
    return ScanResult(n, height_bound, base, tuple(reports))
