"""Generic finite crystal graphs.

A :class:`CrystalGraph` is a finite vertex set with partial lowering maps
per node index, a weight function, and a root datum.  Raising maps are
derived by inverting the lowering maps.  The same engine carries
irreducible crystals built from paths, tensor products, and anything
parsed back from disk; model-specific identity (paths, tensor pairs,
string-data keys) lives in side tables.

Graphs are immutable after construction.  Derived tables (string lengths,
components, memo caches used by other modules) are computed lazily and
only ever grow, so concurrent readers are safe.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cartan import RootDatum, Weight, weight_sub, weyl_act, longest_word
from .errors import InputError, StructureError


class CrystalGraph:
    def __init__(self, datum: RootDatum, weights, f_edges, *, kind="crystal",
                 labels=None, keys=None, key_word=None, highest_weight=None,
                 left=None, right=None):
        self.datum = datum
        self.weights = tuple(tuple(w) for w in weights)
        self.n = len(self.weights)
        self.f_edges = {i: tuple(col) for i, col in f_edges.items()}
        self.kind = kind
        self.labels = labels
        self.keys = keys                # canonical string-data key per vertex
        self.key_word = key_word        # word the keys are taken against
        self.highest_weight = highest_weight
        self.left = left                # factor graphs for tensor products
        self.right = right
        self.cache: dict = {}
        if sorted(self.f_edges) != list(range(1, datum.rank + 1)):
            raise StructureError("lowering maps must cover nodes 1..rank")
        for i, col in self.f_edges.items():
            if len(col) != self.n:
                raise StructureError(f"lowering map for node {i} has wrong size")
            targets = [t for t in col if t is not None]
            if any(not (0 <= t < self.n) for t in targets):
                raise StructureError(f"lowering map for node {i} has out-of-range target")
            if len(set(targets)) != len(targets):
                raise StructureError(f"lowering map for node {i} is not injective")

    def __repr__(self):
        return f"CrystalGraph({self.datum.type}, n={self.n}, kind={self.kind})"

    @property
    def nodes(self):
        return range(1, self.datum.rank + 1)

    @property
    def vertices(self):
        return range(self.n)

    def weight(self, v: int) -> Weight:
        return self.weights[v]

    def f(self, i: int, v: int):
        return self.f_edges[i][v]

    def e(self, i: int, v: int):
        return self._e_edges()[i][v]

    def _e_edges(self):
        e = self.cache.get("e_edges")
        if e is None:
            e = {}
            for i, col in self.f_edges.items():
                inv = [None] * self.n
                for src, tgt in enumerate(col):
                    if tgt is not None:
                        inv[tgt] = src
                e[i] = tuple(inv)
            self.cache["e_edges"] = e
        return e

    def _string_tables(self, i: int):
        key = ("strings", i)
        tables = self.cache.get(key)
        if tables is None:
            eps = [-1] * self.n
            phi = [-1] * self.n
            for v in self.vertices:
                if eps[v] >= 0:
                    continue
                top = v
                while (u := self.e(i, top)) is not None:
                    top = u
                chain = [top]
                x = top
                while (y := self.f(i, x)) is not None:
                    chain.append(y)
                    x = y
                last = len(chain) - 1
                for k, x in enumerate(chain):
                    eps[x] = k
                    phi[x] = last - k
            tables = (tuple(eps), tuple(phi))
            self.cache[key] = tables
        return tables

    def eps_i(self, v: int, i: int) -> int:
        """Length of the raising string at v in direction i."""
        return self._string_tables(i)[0][v]

    def phi_i(self, v: int, i: int) -> int:
        """Length of the lowering string at v in direction i."""
        return self._string_tables(i)[1][v]

    def eps_vec(self, v: int) -> Weight:
        return tuple(self.eps_i(v, i) for i in self.nodes)

    def phi_vec(self, v: int) -> Weight:
        return tuple(self.phi_i(v, i) for i in self.nodes)


@dataclass(frozen=True)
class Component:
    highest: int
    lowest: int
    vertices: tuple[int, ...]
    weight: Weight


def highest_weight_vertices(B: CrystalGraph) -> list[int]:
    """Vertices killed by every raising operator."""
    return [v for v in B.vertices if all(B.e(i, v) is None for i in B.nodes)]


def lowest_weight_vertices(B: CrystalGraph) -> list[int]:
    return [v for v in B.vertices if all(B.f(i, v) is None for i in B.nodes)]


def components(B: CrystalGraph) -> list[Component]:
    """Weakly connected components, each with its unique highest and lowest
    vertex.  Raises when a component fails normality."""
    comps = B.cache.get("components")
    if comps is not None:
        return comps
    seen = [False] * B.n
    comps = []
    for start in B.vertices:
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        members = []
        while stack:
            v = stack.pop()
            members.append(v)
            for i in B.nodes:
                for w in (B.f(i, v), B.e(i, v)):
                    if w is not None and not seen[w]:
                        seen[w] = True
                        stack.append(w)
        members.sort()
        highs = [v for v in members if all(B.e(i, v) is None for i in B.nodes)]
        lows = [v for v in members if all(B.f(i, v) is None for i in B.nodes)]
        if len(highs) != 1 or len(lows) != 1:
            raise StructureError(
                f"component has {len(highs)} highest and {len(lows)} lowest vertices; "
                "input is not a direct sum of irreducible crystals")
        comps.append(Component(highs[0], lows[0], tuple(members), B.weight(highs[0])))
    comps.sort(key=lambda c: c.highest)
    B.cache["components"] = comps
    return comps


def component_of(B: CrystalGraph, v: int) -> Component:
    for comp in components(B):
        if v in comp.vertices:
            return comp
    raise InputError(f"vertex {v} not in graph")


def unique_iso(A: CrystalGraph, B: CrystalGraph, pairing: dict[int, int]) -> dict[int, int]:
    """The unique edge- and weight-preserving bijection extending a pairing
    of highest-weight vertices, by parallel traversal of lowering edges.

    The result covers exactly the components of the paired vertices.  Any
    weight or structural mismatch raises.
    """
    if A.datum != B.datum:
        raise InputError("graphs over different root data")
    mapping: dict[int, int] = {}
    queue = []
    for a, b in pairing.items():
        if A.weight(a) != B.weight(b):
            raise StructureError(
                f"paired vertices have different weights: {A.weight(a)} vs {B.weight(b)}")
        mapping[a] = b
        queue.append(a)
    while queue:
        a = queue.pop()
        b = mapping[a]
        for i in A.nodes:
            fa, fb = A.f(i, a), B.f(i, b)
            if (fa is None) != (fb is None):
                raise StructureError(f"lowering structure mismatch at node {i}")
            if fa is None:
                continue
            known = mapping.get(fa)
            if known is None:
                if A.weight(fa) != B.weight(fb):
                    raise StructureError("weight mismatch during traversal")
                mapping[fa] = fb
                queue.append(fa)
            elif known != fb:
                raise StructureError("traversal assigned two images to one vertex")
    if len(set(mapping.values())) != len(mapping):
        raise StructureError("computed map is not injective")
    return mapping


def validate(B: CrystalGraph) -> None:
    """Check the axioms on a materialized graph: weight steps along lowering
    edges, and phi - eps = <alpha_i^vee, wt> at every vertex and node."""
    for i in B.nodes:
        alpha = B.datum.simple_roots[i - 1]
        for v in B.vertices:
            w = B.f(i, v)
            if w is not None and weight_sub(B.weight(v), B.weight(w)) != alpha:
                raise StructureError(
                    f"lowering edge {v}->{w} at node {i} does not shift weight by alpha_{i}")
        eps, phi = B._string_tables(i)
        for v in B.vertices:
            if phi[v] - eps[v] != B.weight(v)[i - 1]:
                raise StructureError(
                    f"string lengths at vertex {v}, node {i} violate "
                    f"phi - eps = <alpha^vee, wt>")


def structural_equal(A: CrystalGraph, B: CrystalGraph) -> bool:
    return (A.datum == B.datum and A.weights == B.weights
            and A.f_edges == B.f_edges and A.keys == B.keys
            and A.key_word == B.key_word and A.kind == B.kind
            and A.highest_weight == B.highest_weight)


def lowest_dual_weight(B: CrystalGraph, comp: Component) -> Weight:
    """Weight of the lowest vertex of a component: w0 applied to its highest."""
    return weyl_act(B.datum, longest_word(B.datum), comp.weight)
