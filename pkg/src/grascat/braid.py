"""Braid-group action on consecutively generic vector tuples.

All arithmetic is exact (Fractions or F_p-like exact rationals are not
needed: plain Fractions suffice), because the checked relations are
polynomial identities that floats would blur.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

import numpy as np

from .errors import BadParameters, DegenerateDenominator, DimensionMismatch, NotGeneric
from .linalg import det

__all__ = [
    "VectorTuple",
    "is_consecutively_generic",
    "twisted_shift",
    "sigma",
    "braid_property_check",
    "random_tuple",
    "plucker_vector",
    "plucker_proportional",
]

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class VectorTuple:
    """n vectors of length k over the rationals, indexed cyclically."""

    k: int
    n: int
    vectors: tuple[Vector, ...]

    def __post_init__(self):
        if len(self.vectors) != self.n:
            raise DimensionMismatch(f"expected {self.n} vectors, got {len(self.vectors)}")
        vecs = tuple(tuple(Fraction(x) for x in v) for v in self.vectors)
        object.__setattr__(self, "vectors", vecs)
        if any(len(v) != self.k for v in vecs):
            raise DimensionMismatch("all vectors must have length k")

    @property
    def d(self) -> int:
        return gcd(self.k, self.n)

    def vec(self, i: int) -> Vector:
        """1-based cyclic access."""
        return self.vectors[(i - 1) % self.n]

    def window_minor(self, start: int) -> Fraction:
        """det(v_start, ..., v_{start+k-1}) with cyclic indices."""
        return det([self.vec(start + t) for t in range(self.k)])

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "field": "rational",
            "vectors": [[str(x) for x in v] for v in self.vectors],
        }

    @classmethod
    def from_json(cls, data: dict) -> "VectorTuple":
        return cls(
            int(data["k"]),
            int(data["n"]),
            tuple(tuple(Fraction(x) for x in v) for v in data["vectors"]),
        )


def is_consecutively_generic(t: VectorTuple) -> bool:
    """All n cyclic k x k minors are nonzero."""
    return all(t.window_minor(i) != 0 for i in range(1, t.n + 1))


def twisted_shift(t: VectorTuple) -> VectorTuple:
    """rho: rotate left, the wrapped vector picking up the sign (-1)^(k-1)."""
    sign = (-1) ** (t.k - 1)
    rotated = t.vectors[1:] + (tuple(sign * x for x in t.vectors[0]),)
    return VectorTuple(t.k, t.n, rotated)


def sigma(i: int, t: VectorTuple) -> VectorTuple:
    """Braid generator: acts on each length-d window of the tuple.

    Window positions i, i+1 become v_{i+1}, w with
    w = (det(v_i, v_{i+2}, ..., v_{i+k}) / det(v_{i+1}, ..., v_{i+k})) v_{i+1} - v_i,
    everything computed from the input tuple; other positions are untouched.
    """
    d = t.d
    if d < 2 or not 1 <= i <= d - 1:
        raise BadParameters(f"need 1 <= i <= gcd(k,n)-1 = {d - 1}, got {i}")
    if not is_consecutively_generic(t):
        raise NotGeneric("sigma requires a consecutively generic tuple")
    new_vectors = list(t.vectors)
    for j in range(t.n // d):
        base = i + j * d
        denominator = t.window_minor(base + 1)
        if denominator == 0:
            raise DegenerateDenominator(f"vanishing window minor at position {base + 1}")
        numerator = det([t.vec(base)] + [t.vec(base + s) for s in range(2, t.k + 1)])
        ratio = numerator / denominator
        w = tuple(ratio * a - b for a, b in zip(t.vec(base + 1), t.vec(base)))
        new_vectors[(base - 1) % t.n] = t.vec(base + 1)
        new_vectors[base % t.n] = w
    out = VectorTuple(t.k, t.n, tuple(new_vectors))
    if not is_consecutively_generic(out):
        raise NotGeneric("sigma image lost consecutive genericity")
    return out


def plucker_vector(t: VectorTuple) -> tuple[Fraction, ...]:
    """All C(n, k) maximal minors of the k x n matrix, subsets in lex order."""
    return tuple(
        det([t.vectors[j] for j in subset])
        for subset in combinations(range(t.n), t.k)
    )


def plucker_proportional(a: VectorTuple, b: VectorTuple) -> bool:
    """Equality as points of the Grassmannian: proportional Plücker vectors."""
    pa, pb = plucker_vector(a), plucker_vector(b)
    pivot = next((idx for idx, x in enumerate(pa) if x != 0), None)
    if pivot is None:
        return all(x == 0 for x in pb)
    if pb[pivot] == 0:
        return False
    ratio = pa[pivot] / pb[pivot]
    return all(x == ratio * y for x, y in zip(pa, pb))


@dataclass(frozen=True)
class BraidCheckReport:
    """Per-relation verdicts for one tuple; reported, never asserted."""

    d: int
    genericity_preserved: bool
    periodicity: dict[int, bool]
    commutation: dict[tuple[int, int], bool]
    braid_tuple_equal: dict[tuple[int, int], bool]
    braid_plucker: dict[tuple[int, int], bool]

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "genericity_preserved": self.genericity_preserved,
            "periodicity": {str(i): v for i, v in self.periodicity.items()},
            "commutation": {f"{i},{j}": v for (i, j), v in self.commutation.items()},
            "braid_tuple_equal": {f"{i},{j}": v for (i, j), v in self.braid_tuple_equal.items()},
            "braid_plucker": {f"{i},{j}": v for (i, j), v in self.braid_plucker.items()},
        }


def braid_property_check(t: VectorTuple) -> BraidCheckReport:
    """Evaluate d-periodicity, distant commutation, and the braid relation.

    The braid relation is compared both as raw tuples and as points of the
    Grassmannian (proportional Plücker vectors); the level at which it holds
    is reported rather than asserted.
    """
    d = t.d
    if d < 2:
        raise BadParameters("braid checks need gcd(k, n) >= 2")

    def rho_d(x: VectorTuple) -> VectorTuple:
        for _ in range(d):
            x = twisted_shift(x)
        return x

    generic_ok = True
    periodicity = {}
    for i in range(1, d):
        left = sigma(i, rho_d(t))
        right = rho_d(sigma(i, t))
        periodicity[i] = left.vectors == right.vectors

    commutation = {}
    for i in range(1, d):
        for j in range(i + 2, d):
            commutation[(i, j)] = (
                sigma(i, sigma(j, t)).vectors == sigma(j, sigma(i, t)).vectors
            )

    braid_tuple, braid_pluck = {}, {}
    for i in range(1, d - 1):
        j = i + 1
        try:
            left = sigma(i, sigma(j, sigma(i, t)))
            right = sigma(j, sigma(i, sigma(j, t)))
        except (NotGeneric, DegenerateDenominator):
            generic_ok = False
            continue
        braid_tuple[(i, j)] = left.vectors == right.vectors
        braid_pluck[(i, j)] = plucker_proportional(left, right)

    return BraidCheckReport(d, generic_ok, periodicity, commutation, braid_tuple, braid_pluck)


def random_tuple(k: int, n: int, rng: np.random.Generator, bound: int = 9) -> VectorTuple:
    """Random integer tuple, re-sampled until consecutively generic."""
    while True:
        vecs = tuple(
            tuple(Fraction(int(x)) for x in rng.integers(-bound, bound + 1, size=k))
            for _ in range(n)
        )
        t = VectorTuple(k, n, vecs)
        if is_consecutively_generic(t):
            return t
