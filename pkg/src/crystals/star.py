"""Kashiwara's involution on embedded crystal elements, by two routes.

The direct limit of the irreducibles under the top-aligned inclusions is
never materialized: every element is handled through a representative
inside a finite carrier crystal, with operations that are independent of
the chosen carrier (checked by the suites).

Route one ("formula"): for a representative c with eps(c) bounded by lam,
the downward string data of the image in the lam-carrier, taken against
the theta-reversed word, complements the downward data of c against the
original word to the reflection-pairing profile of nu = lam + wt(c).

Route two ("bz"): the downward data of c over every reduced word is
assembled into a single integer-valued function M on chamber coweights
(seeded with zero on the fundamental coweights; cross-word consistency is
asserted, not assumed).  Negating the underlying polytope corresponds to
N(g) = M(-g) + <g, nu>; reading successive N-differences along the
theta-reversed word yields the downward data of the image.  Individual
N-values may be proper fractions since the normalization pins M, not N,
to the integer lattice; the differences must come out as nonnegative
integers, and that integrality is asserted.

The commutor built this way maps each highest-weight pair (top, c) of a
product of irreducibles to (top', image of c) in the flipped product and
extends by the unique isomorphism.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .cartan import (
    RootDatum,
    Weight,
    all_reduced_words,
    canonical_word,
    chamber_coweights,
    chamber_walk,
    dominates,
    ensure_dominant,
    pair_coweight,
    theta_reversed,
    weight_add,
    weight_neg,
    weight_sub,
    word_coroot_pairings,
)
from .errors import InputError, StructureError
from .graph import CrystalGraph, component_of, highest_weight_vertices, unique_iso
from .involutions import CommutorMap
from .paths import irreducible
from .stringdata import StringData, downward_values, element_from_downward_data
from .tensor import hw_pairs, tensor_cached, tensor_index


@dataclass(frozen=True)
class EmbeddedElement:
    """A crystal element carried by an explicit irreducible crystal."""

    datum: RootDatum
    carrier: Weight
    vertex: int

    def graph(self) -> CrystalGraph:
        return irreducible(self.datum, self.carrier)

    def eps(self) -> Weight:
        return self.graph().eps_vec(self.vertex)

    def weight(self) -> Weight:
        return self.graph().weight(self.vertex)


def element(d: RootDatum, carrier: Weight, vertex: int) -> EmbeddedElement:
    carrier = tuple(carrier)
    ensure_dominant(carrier)
    B = irreducible(d, carrier)
    if not (0 <= vertex < B.n):
        raise InputError(f"vertex {vertex} out of range for carrier {carrier}")
    return EmbeddedElement(d, carrier, vertex)


# ---------------------------------------------------------------------------
# inclusions between carriers

def embed_map(d: RootDatum, lam: Weight, gamma: Weight) -> dict[int, int]:
    """The inclusion of the lam-crystal into the (lam+gamma)-crystal.

    Realized by locating b (x) top_gamma inside the product, identifying the
    top component with the (lam+gamma)-crystal, and pulling back.  Memoized
    per (lam, gamma).
    """
    lam, gamma = tuple(lam), tuple(gamma)
    ensure_dominant(gamma)
    key = ("embed", lam, gamma)
    got = d.cache.get(key)
    if got is not None:
        return got
    src = irreducible(d, lam)
    if all(c == 0 for c in gamma):
        result = {v: v for v in src.vertices}
        d.cache[key] = result
        return result
    G = irreducible(d, gamma)
    T = tensor_cached(d, lam, gamma)
    [top_l] = highest_weight_vertices(src)
    [top_g] = highest_weight_vertices(G)
    total = irreducible(d, weight_add(lam, gamma))
    [top_t] = highest_weight_vertices(total)
    iso = unique_iso(total, T, {top_t: tensor_index(T, top_l, top_g)})
    inverse = {tv: bv for bv, tv in iso.items()}
    result = {}
    for b in src.vertices:
        tv = tensor_index(T, b, top_g)
        img = inverse.get(tv)
        if img is None:
            raise StructureError(
                "an element paired with the top of the translating factor fell "
                "outside the top component; the inclusion is broken")
        result[b] = img
    if result[top_l] != top_t:
        raise StructureError("inclusion does not send top to top")
    d.cache[key] = result
    return result


def embed(x: EmbeddedElement, gamma: Weight) -> EmbeddedElement:
    mapping = embed_map(x.datum, x.carrier, gamma)
    return EmbeddedElement(x.datum, weight_add(x.carrier, tuple(gamma)), mapping[x.vertex])


def eps_embedded(x: EmbeddedElement) -> Weight:
    """The raising-string profile; an invariant of the embedded class."""
    return x.eps()


def _carrier_interval(mu: Weight):
    return product(*(range(c + 1) for c in mu))


def tau(x: EmbeddedElement) -> Weight:
    """The least carrier containing the element.

    Brute-force membership over every dominant lam below the carrier with
    dominant complement; the member set must be upward closed with a least
    element, otherwise the embedding structure is corrupt.
    """
    d, mu, v = x.datum, x.carrier, x.vertex
    members = []
    for lam in _carrier_interval(mu):
        gamma = weight_sub(mu, lam)
        image = d.cache.get(("embed_image", lam, gamma))
        if image is None:
            image = frozenset(embed_map(d, lam, gamma).values())
            d.cache[("embed_image", lam, gamma)] = image
        if v in image:
            members.append(lam)
    if not members:
        raise StructureError("element is not in the image of its own carrier")
    least = tuple(min(m[k] for m in members) for k in range(d.rank))
    if least not in members:
        raise StructureError("carrier membership set has no least element")
    for lam in _carrier_interval(mu):
        if dominates(lam, least) and lam not in members:
            raise StructureError("carrier membership set is not upward closed")
    return least


# ---------------------------------------------------------------------------
# chamber-coweight data

@dataclass(frozen=True)
class BZDatum:
    """Integer function on chamber coweights assembled from string data.

    ``values`` maps each chamber coweight (fundamental-coweight coordinates)
    to its integer level; the normalization puts zero on every fundamental
    coweight.  ``carrier`` and ``weight`` record the context of the element.
    """

    values: dict
    carrier: Weight
    weight: Weight


def bz_from_string(x: EmbeddedElement) -> BZDatum:
    """Assemble the chamber-coweight function from the downward data of the
    representative over every reduced word, asserting cross-word consistency."""
    d = x.datum
    B = x.graph()
    store = B.cache.setdefault("bz", {})
    cached = store.get(x.vertex)
    if cached is None:
        values: dict = {}
        for i in range(1, d.rank + 1):
            values[tuple(int(k == i - 1) for k in range(d.rank))] = 0
        for word in all_reduced_words(d):
            p = downward_values(B, x.vertex, word)
            for (before, after), pk in zip(chamber_walk(d, word), p):
                base = values.get(before)
                if base is None:
                    raise StructureError(
                        f"walk reached coweight {before} before its level was set")
                level = base - pk
                known = values.get(after)
                if known is None:
                    values[after] = level
                elif known != level:
                    raise StructureError(
                        f"chamber-coweight level at {after} differs across words "
                        f"({known} vs {level}); string data is inconsistent")
        if set(values) != set(chamber_coweights(d)):
            raise StructureError("walks did not cover every chamber coweight")
        cached = BZDatum(values, x.carrier, x.weight())
        store[x.vertex] = cached
    return cached


def _require_context(x: EmbeddedElement, lam: Weight) -> Weight:
    lam = tuple(lam)
    ensure_dominant(lam)
    if not dominates(lam, x.eps()):
        raise InputError(
            f"element with eps {x.eps()} does not fit the context bound {lam}")
    return lam


def star_formula(x: EmbeddedElement, lam: Weight, word) -> EmbeddedElement:
    """Direct route: complement the downward data of the representative to
    the reflection-pairing profile of nu, then reconstruct in the lam-carrier
    against the theta-reversed word."""
    d = x.datum
    lam = _require_context(x, lam)
    word = tuple(word)
    B = x.graph()
    nu = weight_add(lam, x.weight())
    p = downward_values(B, x.vertex, word)
    r = word_coroot_pairings(d, word, nu)
    m = len(word)
    q = [0] * m
    for k in range(m):
        val = r[k] - p[k]
        if val < 0:
            raise StructureError(
                f"complemented entry {val} is negative at position {k}; the "
                "pairing identity failed")
        q[m - 1 - k] = val
    target_word = theta_reversed(d, word)
    target = irreducible(d, lam)
    v = element_from_downward_data(
        target, None, StringData(target_word, tuple(q), "downward"))
    return EmbeddedElement(d, lam, v)


def star_bz(x: EmbeddedElement, lam: Weight) -> EmbeddedElement:
    """Chamber-coweight route: negate the assembled datum, translate by nu,
    and read downward data along the theta-reversed word.  The result must
    not depend on the word, and every difference must be a nonnegative
    integer."""
    d = x.datum
    lam = _require_context(x, lam)
    bz = bz_from_string(x)
    nu = weight_add(lam, x.weight())
    negated = {}
    for g in chamber_coweights(d):
        negated[g] = Fraction(bz.values[weight_neg(g)]) + pair_coweight(d, g, nu)
    target = irreducible(d, lam)
    result = None
    result_word = None
    for word in all_reduced_words(d):
        tword = theta_reversed(d, word)
        q = []
        for before, after in chamber_walk(d, tword):
            diff = negated[before] - negated[after]
            if diff.denominator != 1 or diff < 0:
                raise StructureError(
                    f"negated level difference {diff} is not a nonnegative "
                    "integer; the normalization is broken")
            q.append(int(diff))
        v = element_from_downward_data(
            target, None, StringData(tword, tuple(q), "downward"))
        if result is None:
            result, result_word = v, word
        elif result != v:
            raise StructureError(
                f"negated-datum route depends on the word ({result_word} vs {word})")
    return EmbeddedElement(d, lam, result)


def star(x: EmbeddedElement, lam: Weight) -> EmbeddedElement:
    """The involution with the canonical word, by the direct route."""
    return star_formula(x, lam, canonical_word(x.datum))


def commutor_star(d: RootDatum, lam: Weight, mu: Weight,
                  src: CrystalGraph | None = None,
                  tgt: CrystalGraph | None = None) -> CommutorMap:
    """The commutor defined on highest-weight pairs through the involution
    and extended by the unique isomorphism."""
    lam, mu = tuple(lam), tuple(mu)
    ensure_dominant(lam)
    ensure_dominant(mu)
    A = irreducible(d, lam)
    B = irreducible(d, mu)
    T = src if src is not None else tensor_cached(d, lam, mu)
    U = tgt if tgt is not None else tensor_cached(d, mu, lam)
    [top_a] = highest_weight_vertices(A)
    [top_b] = highest_weight_vertices(B)
    pairing = {}
    for _, c in hw_pairs(A, B, T):
        img = star(element(d, mu, c), lam)
        if not dominates(mu, img.eps()):
            raise StructureError(
                "image of a highest-weight partner violates the bound on the "
                "flipped side")
        if not dominates(lam, tau(img)):
            raise StructureError(
                "image of a highest-weight partner does not fit its carrier")
        pairing[tensor_index(T, top_a, c)] = tensor_index(U, top_b, img.vertex)
    mapping = unique_iso(T, U, pairing)
    return CommutorMap("star", T, U, mapping)
