"""Tensor products of crystals and highest-weight-pair enumeration.

Vertices of a product are ordered pairs; the pair (a, b) gets index
a * |B| + b, so tensor indices are canonical whenever the factor indices
are.  The operator rules send the lowering operator to the left factor
exactly when phi_left > eps_right and the raising operator to the left
exactly when phi_left >= eps_right.
"""
from __future__ import annotations

from .cartan import RootDatum, Weight, dominates, weight_add
from .errors import InputError, StructureError
from .graph import CrystalGraph, highest_weight_vertices
from .paths import irreducible


def tensor_index(T: CrystalGraph, a: int, b: int) -> int:
    return a * T.right.n + b


def tensor_pair(T: CrystalGraph, v: int) -> tuple[int, int]:
    return divmod(v, T.right.n)


def tensor(A: CrystalGraph, B: CrystalGraph) -> CrystalGraph:
    if A.datum != B.datum:
        raise InputError(f"cannot tensor crystals over {A.datum.type} and {B.datum.type}")
    d = A.datum
    nB = B.n
    weights = [weight_add(A.weight(a), B.weight(b))
               for a in A.vertices for b in B.vertices]
    f_edges = {}
    for i in A.nodes:
        eps_a, phi_a = A._string_tables(i)
        eps_b, phi_b = B._string_tables(i)
        col = []
        for a in A.vertices:
            fa = A.f(i, a)
            pa = phi_a[a]
            for b in B.vertices:
                if pa > eps_b[b]:
                    col.append(fa * nB + b)
                else:
                    fb = B.f(i, b)
                    col.append(None if fb is None else a * nB + fb)
        f_edges[i] = col
    return CrystalGraph(d, weights, f_edges, kind="tensor", left=A, right=B)


def tensor_cached(d: RootDatum, lam: Weight, mu: Weight) -> CrystalGraph:
    """Memoized product of two irreducibles (shared across suites)."""
    key = ("tensor", tuple(lam), tuple(mu))
    got = d.cache.get(key)
    if got is None:
        got = tensor(irreducible(d, lam), irreducible(d, mu))
        d.cache[key] = got
    return got


def hw_pairs(A: CrystalGraph, B: CrystalGraph, T: CrystalGraph | None = None) -> list[tuple[int, int]]:
    """Highest-weight vertices of the product of an irreducible A with B.

    Each is of the form (top of A, c) with eps(c) bounded by the highest
    weight of A coefficient-wise.  Both characterizations (the bound and
    direct kill testing on the product) are computed and must agree.
    """
    if A.highest_weight is None:
        raise InputError("left factor must be an irreducible crystal")
    lam = A.highest_weight
    [top] = highest_weight_vertices(A)
    by_bound = [(top, c) for c in B.vertices if dominates(lam, B.eps_vec(c))]
    if T is None:
        T = tensor(A, B)
    by_kill = sorted(tensor_pair(T, v) for v in highest_weight_vertices(T))
    if sorted(by_bound) != by_kill:
        raise StructureError(
            "highest-weight pair characterizations disagree; tensor rule or "
            "string data is corrupt")
    return sorted(by_bound)


def hw_pairs_of(d: RootDatum, lam: Weight, mu: Weight) -> list[tuple[int, int]]:
    A = irreducible(d, lam)
    B = irreducible(d, mu)
    return hw_pairs(A, B, tensor_cached(d, lam, mu))
