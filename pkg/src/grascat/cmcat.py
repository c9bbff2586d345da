"""Rank-one module combinatorics: k-subsets, rims, tau, and profiles.

A k-subset of the cyclically ordered set [n] labels a rank-one module; its
rim height function is the zig-zag upper boundary of the lattice diagram
(down-steps exactly at the elements of the subset).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadParameters, DimensionMismatch, NotTwoIntervals

__all__ = [
    "KSubset",
    "Profile",
    "rim_height",
    "tau_two_interval",
    "tau_inverse_two_interval",
    "profile_balance_check",
    "cyclic_shift_profile",
]


@dataclass(frozen=True, order=True)
class KSubset:
    """A sorted k-element subset of [n], n taken cyclically."""

    n: int
    elems: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.elems)) != len(self.elems):
            raise BadParameters(f"repeated elements in {self.elems}")
        if tuple(sorted(self.elems)) != self.elems:
            object.__setattr__(self, "elems", tuple(sorted(self.elems)))
        if self.elems and not (1 <= self.elems[0] and self.elems[-1] <= self.n):
            raise BadParameters(f"elements of {self.elems} outside [1, {self.n}]")

    @property
    def k(self) -> int:
        return len(self.elems)

    def cyclic_intervals(self) -> list[tuple[int, int]]:
        """Maximal cyclic runs as (start, length) pairs, sorted by start.

        A run that wraps past n is reported with its true start, e.g.
        {7,8,9,1} in [9] is the single run (7, 4).
        """
        s = set(self.elems)
        if len(s) == self.n:
            return [(1, self.n)]
        starts = sorted(e for e in s if (e - 2) % self.n + 1 not in s)
        runs = []
        for a in starts:
            length = 1
            while (a + length - 1) % self.n + 1 in s:
                length += 1
            runs.append((a, length))
        return runs

    def shift(self, a: int) -> "KSubset":
        """Add a to every element, modulo n (representatives in [1, n])."""
        return KSubset(self.n, tuple(sorted((e + a - 1) % self.n + 1 for e in self.elems)))

    def __str__(self) -> str:
        return "".join(map(str, self.elems)) if self.n < 10 else ",".join(map(str, self.elems))


@dataclass(frozen=True)
class Profile:
    """Ordered filtration factors of a module, top factor first."""

    factors: tuple[KSubset, ...]

    def __post_init__(self):
        if self.factors:
            k, n = self.factors[0].k, self.factors[0].n
            if any(f.k != k or f.n != n for f in self.factors):
                raise DimensionMismatch("profile factors must share (k, n)")

    def __str__(self) -> str:
        return "|".join(str(f) for f in self.factors)


def cyclic_interval(n: int, a: int, b: int) -> tuple[int, ...]:
    """Elements of the cyclic interval [a, b] in [n], e.g. [7,1] in [9] = {7,8,9,1}."""
    a = (a - 1) % n + 1
    length = (b - a) % n + 1
    return tuple(sorted((a + t - 1) % n + 1 for t in range(length)))


def rim_height(subset: KSubset) -> np.ndarray:
    """Height profile h(0..n) of the rim: h(i) = h(i-1) - 1 iff i is in the subset."""
    h = np.zeros(subset.n + 1, dtype=np.int64)
    s = set(subset.elems)
    for i in range(1, subset.n + 1):
        h[i] = h[i - 1] + (-1 if i in s else 1)
    return h


def _two_runs(subset: KSubset) -> tuple[tuple[int, int], tuple[int, int]]:
    runs = subset.cyclic_intervals()
    if len(runs) != 2:
        raise NotTwoIntervals(f"{subset.elems} has {len(runs)} cyclic interval(s), need 2")
    return runs[0], runs[1]


def _gap_after(n: int, run: tuple[int, int], other: tuple[int, int]) -> int:
    """Cyclic gap between the end of `run` and the start of `other`."""
    end = (run[0] + run[1] - 1 - 1) % n + 1
    return (other[0] - end - 1) % n


def _kernel_params(subset: KSubset) -> list[tuple[int, int, int]]:
    """All (i, m, v) with subset = I^(v)_{i,m} mod n.

    The first interval of I^(v)_{i,m} has length k-i and starts at
    (i-m+1)/2; the gap following it equals v.  Both readings of the
    two-interval decomposition are returned; they parametrise the same
    module and must produce the same tau image.
    """
    k, n = subset.k, subset.n
    r1, r2 = _two_runs(subset)
    params = []
    for first, second in ((r1, r2), (r2, r1)):
        i = second[1]
        if first[1] != k - i or not (1 <= i <= k - 1):
            continue
        a = first[0]
        m = i + 1 - 2 * a
        while m > -1:
            m -= 2 * n  # same subset mod n; tau is invariant under this shift
        v = _gap_after(n, first, second)
        params.append((i, m, v))
    if not params:
        raise NotTwoIntervals(f"{subset.elems} does not match a kernel-subset pattern")
    return params


def _tau_image(i: int, m: int, v: int, k: int, n: int) -> KSubset:
    lo1, hi1 = (1 - i - m) // 2, (i - m - 1) // 2
    lo2, hi2 = (i - m + 2 * v + 1) // 2, (i - m + 2 * v - 1) // 2 + k - i
    elems = [(x - 1) % n + 1 for x in range(lo1, hi1 + 1)]
    elems += [(x - 1) % n + 1 for x in range(lo2, hi2 + 1)]
    return KSubset(n, tuple(sorted(elems)))


def tau_two_interval(subset: KSubset) -> KSubset:
    """Auslander-Reiten translate of a rank-one module with a two-interval subset."""
    k, n = subset.k, subset.n
    images = {_tau_image(i, m, v, k, n) for i, m, v in _kernel_params(subset)}
    if len(images) != 1:
        raise NotTwoIntervals(f"ambiguous tau image for {subset.elems}")
    return images.pop()


def tau_inverse_two_interval(subset: KSubset) -> KSubset:
    """Inverse translate; extends the rim beyond its two lowest points."""
    k, n = subset.k, subset.n
    r1, r2 = _two_runs(subset)
    images = set()
    for first, second in ((r1, r2), (r2, r1)):
        i = first[1]
        if second[1] != k - i or not (1 <= i <= k - 1):
            continue
        m = 1 - i - 2 * first[0]
        v = _gap_after(n, first, second)
        lo1 = (i - m + 1) // 2
        lo2 = (i - m + 2 * v - 1) // 2 + k - i + 1
        elems = [(x - 1) % n + 1 for x in range(lo1, lo1 + k - i)]
        elems += [(x - 1) % n + 1 for x in range(lo2, lo2 + i)]
        images.add(KSubset(n, tuple(sorted(elems))))
    if len(images) != 1:
        raise NotTwoIntervals(f"ambiguous inverse tau image for {subset.elems}")
    return images.pop()


def profile_balance_check(profile: Profile, sub, quot) -> bool:
    """Lattice-diagram balance of a profile against a cone presentation.

    The filtration rims plus the sub-term rims must cancel the quotient-term
    rims up to a single even vertical offset.  This is a necessary condition
    for the short exact sequence, not a synthesis rule.
    """
    factors = list(profile.factors)
    sub = list(sub)
    quot = list(quot)
    every = factors + sub + quot
    if not every:
        return True
    n = every[0].n
    if any(f.n != n for f in every):
        raise DimensionMismatch("profile and presentation must share n")
    total = np.zeros(n + 1, dtype=np.int64)
    for f in factors:
        total += rim_height(f)
    for f in sub:
        total += rim_height(f)
    for f in quot:
        total -= rim_height(f)
    return bool(np.all(total == total[0]) and total[0] % 2 == 0)


def cyclic_shift_profile(profile: Profile, a: int) -> Profile:
    """Shift every entry of every factor by a modulo n."""
    return Profile(tuple(f.shift(a) for f in profile.factors))
