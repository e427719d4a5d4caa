"""Line bundle cohomology on P^1 and on Q = P^1 x P^1, plus equivariant Cech H^1 weights on P^1."""

from __future__ import annotations

from dataclasses import dataclass

from .weights import Weight, WeightRep


@dataclass(frozen=True)
class LineBundleP1:
    degree: int

    def h(self, i: int) -> int:
        return h_p1(self.degree, i)


@dataclass(frozen=True)
class LineBundleQ:
    a: int
    b: int

    def h(self, i: int) -> int:
        return h_q(self.a, self.b, i)


@dataclass(frozen=True)
class EquivariantChart:
    """Fiber character over the chart where the base coordinate transforms as ``v -> s*v``.

    E.g. the fiber coordinate ``z/y`` transforming by ``s**-n * t`` is ``Weight(-n, 1)``.
    """

    fiber_character: Weight


def h_p1(d: int, i: int) -> int:
    """dim H^i(P^1, O(d))."""
    if i == 0:
        return max(d + 1, 0)
    if i == 1:
        return max(-d - 1, 0)
    raise ValueError(f"cohomological degree {i} out of range for a curve (expected 0 or 1)")


def h_q(a: int, b: int, i: int) -> int:
    """dim H^i(P^1 x P^1, O(a, b)) by Kunneth."""
    if i not in (0, 1, 2):
        raise ValueError(f"cohomological degree {i} out of range for a surface (expected 0, 1 or 2)")
    return sum(h_p1(a, j) * h_p1(b, i - j) for j in (0, 1) if 0 <= i - j <= 1)


def cech_h1_weights(d: int, chart: EquivariantChart) -> WeightRep:
    # zeta_k : v -> v**-k for k = 1..-d-1.  With fiber character c and v -> s*v,
    # c * v**-k = (c * s**k) * (s*v)**-k, so zeta_k has weight c + (k, 0).
    alpha, beta = chart.fiber_character.m, chart.fiber_character.n
    return WeightRep(Weight(alpha + k, beta) for k in range(1, -d))
