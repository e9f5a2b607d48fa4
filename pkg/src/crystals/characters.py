"""Character-level oracle: weight multiplicities and tensor decompositions.

This module deliberately avoids the crystal machinery.  It works directly
from the root system, so it can serve as an independent cross-check on
crystal sizes and on the component decomposition of tensor products.

Multiplicities come from the recursive multiplicity formula driven by the
invariant bilinear form; tensor decompositions from the reflection-with-sign
expansion of a character product over the weights of one factor.
"""
from __future__ import annotations

from fractions import Fraction

from .cartan import (
    RootDatum,
    Weight,
    bilinear,
    ensure_dominant,
    is_dominant,
    positive_root_coords,
    reflect,
    root_coords,
    root_to_weight,
    weight_add,
    weight_neg,
    weight_sub,
    weyl_act,
    weyl_dim,
    longest_word,
)
from .errors import StructureError


def _dominant_conjugate(d: RootDatum, wt: Weight) -> Weight:
    """The dominant Weyl conjugate of wt (sign not tracked)."""
    wt = tuple(wt)
    while True:
        for k, c in enumerate(wt):
            if c < 0:
                wt = reflect(d, k + 1, wt)
                break
        else:
            return wt


def _signed_dominant(d: RootDatum, wt: Weight):
    """Reflect wt into the dominant chamber tracking the determinant sign.

    Returns (dominant weight, sign), or None when wt lies on a wall.
    """
    wt = tuple(wt)
    sign = 1
    while True:
        if 0 in wt:
            return None
        for k, c in enumerate(wt):
            if c < 0:
                wt = reflect(d, k + 1, wt)
                sign = -sign
                break
        else:
            return wt, sign


def weyl_orbit(d: RootDatum, wt: Weight) -> frozenset[Weight]:
    seen = {tuple(wt)}
    queue = [tuple(wt)]
    while queue:
        v = queue.pop()
        for i in range(1, d.rank + 1):
            w = reflect(d, i, v)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


def dominant_multiplicities(d: RootDatum, lam: Weight) -> dict[Weight, int]:
    """Multiplicities of the dominant weights of the irreducible of highest
    weight lam, by descending recursion from lam."""
    ensure_dominant(lam)
    low = weyl_act(d, longest_word(d), lam)
    box = root_coords(d, weight_sub(lam, low))
    bounds = []
    for b in box:
        if b.denominator != 1 or b < 0:
            raise StructureError("weight support box is not integral")
        bounds.append(int(b))

    roots = positive_root_coords(d)
    roots_wt = [root_to_weight(d, c) for c in roots]

    # dominant candidates lam - sum c_i alpha_i inside the box, by height
    candidates = []

    def rec(idx, coords):
        if idx == d.rank:
            mu = weight_sub(lam, root_to_weight(d, coords))
            if is_dominant(mu):
                candidates.append((sum(coords), mu))
            return
        for c in range(bounds[idx] + 1):
            rec(idx + 1, coords + [c])

    rec(0, [])
    candidates.sort()

    shifted_norm = bilinear(d, weight_add(lam, d.rho), weight_add(lam, d.rho))
    mult: dict[Weight, int] = {}
    for height, mu in candidates:
        if height == 0:
            mult[mu] = 1
            continue
        total = Fraction(0)
        for alpha in roots_wt:
            k = 1
            while True:
                nu = weight_add(mu, tuple(k * a for a in alpha))
                m = mult.get(_dominant_conjugate(d, nu))
                if not m:
                    break
                total += 2 * m * bilinear(d, nu, alpha)
                k += 1
        denom = shifted_norm - bilinear(d, weight_add(mu, d.rho), weight_add(mu, d.rho))
        if denom == 0:
            raise StructureError("singular denominator in multiplicity recursion")
        value = total / denom
        if value.denominator != 1 or value < 0:
            raise StructureError(f"non-integral multiplicity {value} at {mu}")
        if value > 0:
            mult[mu] = int(value)
    return mult


def all_weight_multiplicities(d: RootDatum, lam: Weight) -> dict[Weight, int]:
    """Multiplicities of every weight of the irreducible of highest weight lam."""
    out: dict[Weight, int] = {}
    for mu, m in dominant_multiplicities(d, lam).items():
        for nu in weyl_orbit(d, mu):
            out[nu] = m
    return out


def tensor_multiplicities(d: RootDatum, lam: Weight, mu: Weight) -> dict[Weight, int]:
    """Decomposition multiplicities of the product of the irreducibles with
    highest weights lam and mu, by signed reflection of lam + eta + rho over
    the weights eta of the second factor."""
    ensure_dominant(lam)
    ensure_dominant(mu)
    out: dict[Weight, int] = {}
    for eta, m in all_weight_multiplicities(d, mu).items():
        x = weight_add(weight_add(lam, eta), d.rho)
        res = _signed_dominant(d, x)
        if res is None:
            continue
        dom, sign = res
        nu = weight_sub(dom, d.rho)
        out[nu] = out.get(nu, 0) + sign * m
    out = {nu: n for nu, n in out.items() if n != 0}
    if any(n < 0 for n in out.values()):
        raise StructureError("negative multiplicity in tensor decomposition")
    total = sum(n * weyl_dim(d, nu) for nu, n in out.items())
    if total != weyl_dim(d, lam) * weyl_dim(d, mu):
        raise StructureError("tensor decomposition does not preserve dimension")
    return out
