"""Piecewise-linear path model generating the irreducible crystals.

A path starts at the origin and is stored in a normalized form: the tuple
of displacement vectors of its maximal linear pieces (exact Fractions in
the fundamental-weight basis), with consecutive positively-parallel pieces
merged and zero pieces dropped.  Two paths are equal exactly when their
normalized forms coincide, which quotients out reparametrization.  The
segment view exposes (direction, duration) pairs with durations summing
to one (the zero path, for the trivial highest weight, has no segments).

Root operators use the height function h_i(t) = <alpha_i^vee, path(t)>.
Cut-point convention: the lowering operator cuts at the LAST attainment of
the integral minimum m of h_i and at the FIRST later time h_i reaches
m + 1, reflecting the displacements in between; the raising operator
mirrors this (first attainment of m, latest earlier crossing of m + 1).
The convention is validated against the dimension formula and the string
axioms by the test suites.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cartan import RootDatum, Weight, ensure_dominant, reflect, weyl_dim
from .errors import BudgetError, InputError, StructureError
from .graph import CrystalGraph, highest_weight_vertices, validate
from .stringdata import canonical_relabel

_ZERO = Fraction(0)


def _same_direction(a, b) -> bool:
    """True when b is a positive multiple of a (both nonzero)."""
    for x, y in zip(a, b):
        if (x == 0) != (y == 0):
            return False
        if x != 0 and (x > 0) != (y > 0):
            return False
    for k in range(len(a)):
        for l in range(k + 1, len(a)):
            if a[k] * b[l] != a[l] * b[k]:
                return False
    return True


@dataclass(frozen=True)
class LSPath:
    """Normalized piecewise-linear path from the origin."""

    displacements: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_displacements(cls, disps) -> "LSPath":
        merged: list[tuple[Fraction, ...]] = []
        for raw in disps:
            d = tuple(Fraction(x) for x in raw)
            if all(x == 0 for x in d):
                continue
            if merged and _same_direction(merged[-1], d):
                merged[-1] = tuple(x + y for x, y in zip(merged[-1], d))
            else:
                merged.append(d)
        return cls(tuple(merged))

    @property
    def segments(self) -> tuple[tuple[tuple[Fraction, ...], Fraction], ...]:
        """(direction, duration) pairs; durations are equal and sum to one."""
        s = len(self.displacements)
        if s == 0:
            return ()
        dur = Fraction(1, s)
        return tuple((tuple(x * s for x in d), dur) for d in self.displacements)

    @property
    def endpoint(self) -> tuple[Fraction, ...]:
        if not self.displacements:
            return ()
        acc = list(self.displacements[0])
        for d in self.displacements[1:]:
            for k, x in enumerate(d):
                acc[k] += x
        return tuple(acc)

    def endpoint_weight(self, rank: int) -> Weight:
        end = self.endpoint or (_ZERO,) * rank
        out = []
        for x in end:
            if x.denominator != 1:
                raise StructureError(f"path endpoint {end} is not an integral weight")
            out.append(int(x))
        return tuple(out)


def straight_path(d: RootDatum, lam: Weight) -> LSPath:
    """The single-segment path t -> t*lam (empty for lam = 0)."""
    ensure_dominant(lam)
    if all(c == 0 for c in lam):
        return LSPath(())
    return LSPath.from_displacements([tuple(Fraction(c) for c in lam)])


def _heights(p: LSPath, i: int, rank: int) -> list[Fraction]:
    h = [_ZERO]
    for d in p.displacements:
        h.append(h[-1] + d[i - 1])
    return h


def _min_height(h) -> Fraction:
    m = min(h)
    if m.denominator != 1:
        raise StructureError(
            "height minimum is not an integer; path lies outside the integral class")
    return m


def path_phi(d: RootDatum, i: int, p: LSPath) -> int:
    h = _heights(p, i, d.rank)
    m = _min_height(h)
    val = h[-1] - m
    return int(val)


def path_eps(d: RootDatum, i: int, p: LSPath) -> int:
    h = _heights(p, i, d.rank)
    return int(-_min_height(h))


def root_f(d: RootDatum, i: int, p: LSPath):
    """Lowering root operator; None exactly when the lowering string is empty."""
    disps = p.displacements
    h = _heights(p, i, d.rank)
    m = _min_height(h)
    if h[-1] - m < 1:
        return None
    k1 = max(k for k, v in enumerate(h) if v == m)
    idx = k1
    while h[idx + 1] < m + 1:
        idx += 1
    if h[idx + 1] == m + 1:
        pre = list(disps[:k1])
        mid = list(disps[k1:idx + 1])
        post = list(disps[idx + 1:])
    else:
        step = disps[idx]
        c = (m + 1 - h[idx]) / step[i - 1]
        first = tuple(x * c for x in step)
        rest = tuple(x * (1 - c) for x in step)
        pre = list(disps[:k1])
        mid = list(disps[k1:idx]) + [first]
        post = [rest] + list(disps[idx + 1:])
    mid = [reflect(d, i, seg) for seg in mid]
    return LSPath.from_displacements(pre + mid + post)


def root_e(d: RootDatum, i: int, p: LSPath):
    """Raising root operator; None exactly when the raising string is empty."""
    disps = p.displacements
    h = _heights(p, i, d.rank)
    m = _min_height(h)
    if -m < 1:
        return None
    k2 = min(k for k, v in enumerate(h) if v == m)
    idx = k2 - 1
    while h[idx] < m + 1:
        idx -= 1
    if h[idx] == m + 1:
        pre = list(disps[:idx])
        mid = list(disps[idx:k2])
        post = list(disps[k2:])
    else:
        step = disps[idx]
        c = (m + 1 - h[idx]) / step[i - 1]
        first = tuple(x * c for x in step)
        rest = tuple(x * (1 - c) for x in step)
        pre = list(disps[:idx]) + [first]
        mid = [rest] + list(disps[idx + 1:k2])
        post = list(disps[k2:])
    mid = [reflect(d, i, seg) for seg in mid]
    return LSPath.from_displacements(pre + mid + post)


def concatenate(p: LSPath, q: LSPath) -> LSPath:
    """The path traversing p then q (normalized)."""
    return LSPath.from_displacements(p.displacements + q.displacements)


def generate_crystal(d: RootDatum, lam: Weight, *, budget=None, check=True) -> CrystalGraph:
    """Closure of the straight path under the lowering operators, relabeled
    canonically.  The vertex budget guards against operator bugs; by default
    it is exactly the dimension formula value."""
    ensure_dominant(lam)
    limit = weyl_dim(d, lam) if budget is None else budget
    start = straight_path(d, lam)
    index: dict[LSPath, int] = {start: 0}
    order: list[LSPath] = [start]
    f_cols: dict[int, list] = {i: [] for i in range(1, d.rank + 1)}
    pos = 0
    while pos < len(order):
        p = order[pos]
        for i in range(1, d.rank + 1):
            q = root_f(d, i, p)
            if q is None:
                f_cols[i].append(None)
                continue
            t = index.get(q)
            if t is None:
                t = len(order)
                if t >= limit:
                    raise BudgetError(
                        f"crystal generation for {d.type} {lam} exceeded {limit} vertices")
                index[q] = t
                order.append(q)
            f_cols[i].append(t)
        pos += 1
    weights = [p.endpoint_weight(d.rank) for p in order]
    raw = CrystalGraph(d, weights, {i: col for i, col in f_cols.items()},
                       kind="irreducible", labels=tuple(order), highest_weight=lam)
    out = canonical_relabel(raw)
    if out.n != weyl_dim(d, lam):
        raise StructureError(
            f"path closure for {d.type} {lam} produced {out.n} vertices, "
            f"expected {weyl_dim(d, lam)}")
    if check:
        validate(out)
        highs = highest_weight_vertices(out)
        if len(highs) != 1 or out.weight(highs[0]) != tuple(lam):
            raise StructureError("generated crystal does not have a unique top of the right weight")
    return out


def irreducible(d: RootDatum, lam: Weight) -> CrystalGraph:
    """Memoized canonical irreducible crystal of highest weight lam."""
    lam = tuple(lam)
    store = d.cache.setdefault("irreducibles", {})
    got = store.get(lam)
    if got is None:
        got = generate_crystal(d, lam)
        store[lam] = got
    return got
