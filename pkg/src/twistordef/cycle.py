"""The torus-invariant cycle of 2n+4 rational curves in Z and isotropy along it.

Each curve carries the character by which the torus scales a distinguished
affine coordinate on it. The characters come from the action
``(u, v, x, y, z) -> (s u, s v, t x, s^n t^-1 y, z)`` traced through the
small resolution ``x~ = x~_1 (v - a_1 u)``, ``x~_1 = x~_2 (v - a_2 u)``, ...
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .weights import SubgroupDirection, Weight, k_subgroup, normalize_direction


@dataclass(frozen=True)
class CycleCurve:
    label: str
    tangent_character: Weight
    coordinate_name: str

    @property
    def is_conjugate(self) -> bool:
        return self.label.endswith("bar") and self.label != "C0bar"


@dataclass(frozen=True)
class CycleModel:
    n: int
    curves: tuple[CycleCurve, ...]

    def __post_init__(self):
        if len(self.curves) != 2 * self.n + 4:
            raise ValueError(f"cycle must have {2 * self.n + 4} curves, got {len(self.curves)}")

    def curve(self, label: str) -> CycleCurve:
        """Look up by label; ``"Bn"`` and ``"Bnbar"`` alias ``B{n}`` and ``B{n}bar``."""
        label = label.replace("Bn", f"B{self.n}", 1) if label.startswith("Bn") else label
        for c in self.curves:
            if c.label == label:
                return c
        raise KeyError(label)

    def adjacent_pairs(self) -> list[tuple[CycleCurve, CycleCurve]]:
        return [(c, self.curves[(i + 1) % len(self.curves)]) for i, c in enumerate(self.curves)]


def action_on_coordinate(s_exp: int, t_exp: int, divisions: int) -> Weight:
    # Each division by a factor (v - a_j u) subtracts the weight of v - a_j u, i.e. (1, 0).
    return Weight(s_exp - divisions, t_exp)


def build_cycle(n: int) -> CycleModel:
    """C0bar, B0, E1..E_{n-1}, Bn, C0, then B0bar, E1bar..E_{n-1}bar, Bnbar back to C0bar."""
    if n < 3:
        raise ValueError(f"the invariant cycle needs n >= 3 (E and Ebar contract only then), got {n}")
    x_tilde = Weight(0, 1)  # x~ = x/z
    y_tilde = Weight(n, -1)  # y~ = y/z
    string = [
        CycleCurve("C0bar", Weight(1, 0), "v"),
        CycleCurve("B0", x_tilde, "x~ = x/z"),
    ]
    string += [
        CycleCurve(f"E{j}", action_on_coordinate(x_tilde.m, x_tilde.n, j), f"x~_{j}")
        for j in range(1, n)
    ]
    string += [
        CycleCurve(f"B{n}", y_tilde, "y~ = y/z"),
        CycleCurve("C0", Weight(1, 0), "u"),
    ]
    # conjugates: same chain from C0 back to C0bar, characters negated
    conj = [
        CycleCurve(c.label + "bar", -c.tangent_character, c.coordinate_name + " (conj)")
        for c in string[1:-1]
    ]
    return CycleModel(n, tuple(string + conj))


def pointwise_stabilizer(curve: CycleCurve) -> SubgroupDirection:
    """The circle acting trivially on the curve: the kernel direction of its character."""
    m, nn = curve.tangent_character.m, curve.tangent_character.n
    if (m, nn) == (0, 0):
        raise ValueError(f"curve {curve.label} has trivial tangent character")
    return normalize_direction(-nn, m)


def isotropy_weight(curve: CycleCurve, k: SubgroupDirection) -> int:
    return curve.tangent_character.pair(k.p, k.q)


class Freeness(str, Enum):
    SEMIFREE = "semifree"
    NOT_SEMIFREE = "not_semifree"


class LeBrunStatus(str, Enum):
    COMPATIBLE = "lebrun_compatible"
    NON_LEBRUN = "non_lebrun"


@dataclass(frozen=True)
class Classification:
    freeness: Freeness
    lebrun: LeBrunStatus
    max_isotropy: int
    witness: str | None  # label of a curve realising max |isotropy|

    @property
    def semifree(self) -> bool:
        return self.freeness is Freeness.SEMIFREE

    @property
    def is_lebrun(self) -> bool:
        return self.lebrun is LeBrunStatus.COMPATIBLE


def classify_subgroup(n: int, k: SubgroupDirection, cycle: CycleModel | None = None) -> Classification:
    """Semi-freeness of the circle ``k`` as seen on the invariant cycle.

    Only the cycle is inspected; non-semi-freeness is detected from isotropy
    weights of absolute value >= 2 along its curves. The non-LeBrun verdict
    is issued only for K_1..K_{n-1}, the subgroups that carry non-torus
    equivariant deformations.
    """
    cycle = cycle or build_cycle(n)
    weights = [(abs(isotropy_weight(c, k)), c.label) for c in cycle.curves]
    top, label = max(weights, key=lambda wl: wl[0])
    freeness = Freeness.SEMIFREE if top <= 1 else Freeness.NOT_SEMIFREE
    distinguished = {k_subgroup(i) for i in range(1, n)}
    lebrun = LeBrunStatus.NON_LEBRUN if (k in distinguished and top >= 2) else LeBrunStatus.COMPATIBLE
    return Classification(freeness, lebrun, top, label if top >= 2 else None)
