"""Characters of the torus C* x C* and finite representations built from them.

A weight ``(m, n)`` is the character ``(s, t) -> s**m * t**n``. A
representation is a multiset of weights. A one-parameter subgroup is named by
a primitive direction ``(p, q)``, i.e. the circle ``lambda -> (lambda**p, lambda**q)``;
the character ``(m, n)`` restricts to it as ``lambda**(m*p + n*q)``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Mapping


@dataclass(frozen=True, order=True)
class Weight:
    m: int
    n: int

    def __neg__(self) -> Weight:
        return Weight(-self.m, -self.n)

    def pair(self, p: int, q: int) -> int:
        return self.m * p + self.n * q

    def __str__(self) -> str:
        return f"({self.m},{self.n})"

    @classmethod
    def parse(cls, text: str) -> Weight:
        match = re.fullmatch(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)", text.strip())
        if not match:
            raise ValueError(f"not a weight: {text!r}")
        return cls(int(match[1]), int(match[2]))


def _report_key(w: Weight) -> tuple[int, int]:
    return (w.n, w.m)


class WeightRep:
    """Multiset of weights. Immutable; equality is multiset equality."""

    __slots__ = ("_counts",)

    def __init__(self, entries: Mapping[Weight, int] | Iterable[Weight] = ()):
        if isinstance(entries, Mapping):
            counts = Counter()
            for w, k in entries.items():
                if k < 0:
                    raise ValueError(f"negative multiplicity {k} for weight {w}")
                counts[w] += k
        else:
            counts = Counter(entries)
        self._counts = {w: k for w, k in counts.items() if k > 0}

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> WeightRep:
        return cls(Weight(m, n) for m, n in pairs)

    @property
    def dimension(self) -> int:
        return sum(self._counts.values())

    def multiplicity(self, w: Weight) -> int:
        return self._counts.get(w, 0)

    def items(self) -> list[tuple[Weight, int]]:
        """(weight, multiplicity) pairs, sorted lexicographically on (n, m)."""
        return sorted(self._counts.items(), key=lambda kv: _report_key(kv[0]))

    def elements(self) -> Iterator[Weight]:
        for w, k in self.items():
            for _ in range(k):
                yield w

    def __add__(self, other: WeightRep) -> WeightRep:
        return WeightRep(Counter(self._counts) + Counter(other._counts))

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightRep):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self) -> int:
        return hash(frozenset(self._counts.items()))

    def __len__(self) -> int:
        return self.dimension

    def __repr__(self) -> str:
        return f"WeightRep({self.serialize()})"

    def serialize(self) -> list[str]:
        """Entries as ``"(m,n)xk"`` strings."""
        return [f"{w}x{k}" for w, k in self.items()]


@dataclass(frozen=True, order=True)
class SubgroupDirection:
    p: int
    q: int

    def __post_init__(self):
        if (self.p, self.q) == (0, 0):
            raise ValueError("the zero vector does not name a subgroup")
        if gcd(self.p, self.q) != 1 or not (self.p > 0 or (self.p == 0 and self.q == 1)):
            raise ValueError(f"({self.p},{self.q}) is not a normalized direction; use normalize_direction")

    def __str__(self) -> str:
        return f"({self.p},{self.q})"

    def k_label(self, n: int | None = None) -> str | None:
        """``"K0"`` or ``"Ki"`` for the distinguished subgroups, else None.

        With ``n`` given, ``Ki`` is only recognised for ``1 <= i <= n-1``.
        """
        if (self.p, self.q) == (0, 1):
            return "K0"
        if self.p == 1 and self.q >= 1 and (n is None or self.q <= n - 1):
            return f"K{self.q}"
        return None


def normalize_direction(p: int, q: int) -> SubgroupDirection:
    if p == 0 and q == 0:
        raise ValueError("the zero vector does not name a subgroup")
    g = gcd(p, q)
    p, q = p // g, q // g
    if p < 0 or (p == 0 and q < 0):
        p, q = -p, -q
    return SubgroupDirection(p, q)


def k_subgroup(i: int) -> SubgroupDirection:
    """K0 fixes C0 pointwise (s = 1); Ki for i >= 1 is {t = s**i}."""
    if i < 0:
        raise ValueError("subgroup index must be non-negative")
    return SubgroupDirection(0, 1) if i == 0 else SubgroupDirection(1, i)


def is_fixed(w: Weight, k: SubgroupDirection) -> bool:
    return w.pair(k.p, k.q) == 0


def fixed_subrep(rep: WeightRep, k: SubgroupDirection) -> WeightRep:
    return WeightRep({w: mult for w, mult in rep.items() if is_fixed(w, k)})


def negate_rep(rep: WeightRep) -> WeightRep:
    return WeightRep({-w: mult for w, mult in rep.items()})


def primitive_directions(height: int) -> list[SubgroupDirection]:
    """All normalized directions with max(|p|, |q|) <= height, lexicographically sorted."""
    if height < 1:
        raise ValueError("height bound must be at least 1")
    out = [SubgroupDirection(0, 1)]
    for p in range(1, height + 1):
        for q in range(-height, height + 1):
            if gcd(p, q) == 1:
                out.append(SubgroupDirection(p, q))
    return out
