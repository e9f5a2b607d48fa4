"""String data: maximal-operator cascades along reduced words.

The downward data of a vertex records, letter by letter along a reduced
word for the long element, how many times the lowering operator applies
before it dies; upward data is the mirror with raising operators.  Within
one component the downward data is injective, which makes it usable as a
canonical vertex key.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cartan import RootDatum, ReducedWord, canonical_word, ensure_w0_word
from .errors import InputError, StructureError
from .graph import CrystalGraph, components


@dataclass(frozen=True)
class StringData:
    word: ReducedWord
    values: tuple[int, ...]
    direction: str  # "downward" | "upward"

    def __post_init__(self):
        if self.direction not in ("downward", "upward"):
            raise InputError(f"bad direction {self.direction!r}")
        if len(self.values) != len(self.word):
            raise InputError("values and word must have equal length")
        if any(v < 0 for v in self.values):
            raise InputError("string data entries must be nonnegative")


def _cascade_down(B: CrystalGraph, v: int, word) -> tuple[tuple[int, ...], int]:
    values = []
    for i in word:
        k = B.phi_i(v, i)
        values.append(k)
        for _ in range(k):
            v = B.f(i, v)
    return tuple(values), v


def _cascade_up(B: CrystalGraph, v: int, word) -> tuple[tuple[int, ...], int]:
    values = []
    for i in word:
        k = B.eps_i(v, i)
        values.append(k)
        for _ in range(k):
            v = B.e(i, v)
    return tuple(values), v


def downward_values(B: CrystalGraph, v: int, word) -> tuple[int, ...]:
    """Downward data without the validation wrapper; memoized per word."""
    table = B.cache.setdefault(("down", tuple(word)), {})
    got = table.get(v)
    if got is None:
        got, _ = _cascade_down(B, v, word)
        table[v] = got
    return got


def upward_values(B: CrystalGraph, v: int, word) -> tuple[int, ...]:
    table = B.cache.setdefault(("up", tuple(word)), {})
    got = table.get(v)
    if got is None:
        got, _ = _cascade_up(B, v, word)
        table[v] = got
    return got


def downward_data(B: CrystalGraph, v: int, word) -> StringData:
    word = ensure_w0_word(B.datum, word)
    return StringData(word, downward_values(B, v, word), "downward")


def upward_data(B: CrystalGraph, v: int, word) -> StringData:
    word = ensure_w0_word(B.datum, word)
    return StringData(word, upward_values(B, v, word), "upward")


def cascade_endpoint_down(B: CrystalGraph, v: int, word) -> int:
    return _cascade_down(B, v, word)[1]


def cascade_endpoint_up(B: CrystalGraph, v: int, word) -> int:
    return _cascade_up(B, v, word)[1]


def element_from_downward_data(B: CrystalGraph, comp_vertices, s: StringData) -> int:
    """The unique vertex with the given downward data, by exhaustive matching
    over the component (or the whole graph when comp_vertices is None).

    Injectivity of the data is only guaranteed within one component, so the
    whole-graph form is valid for connected graphs only.
    """
    if s.direction != "downward":
        raise InputError("element reconstruction needs downward data")
    word = ensure_w0_word(B.datum, s.word)
    scope = tuple(comp_vertices) if comp_vertices is not None else None
    cache_key = ("down_index", word, scope)
    index = B.cache.get(cache_key)
    if index is None:
        index = {}
        for v in (scope if scope is not None else B.vertices):
            data = downward_values(B, v, word)
            if data in index:
                raise StructureError("downward data is not injective on this vertex set")
            index[data] = v
        B.cache[cache_key] = index
    got = index.get(s.values)
    if got is None:
        raise InputError(f"no vertex with downward data {s.values} for word {word}")
    return got


def canonical_relabel(B: CrystalGraph) -> CrystalGraph:
    """Relabel a connected graph so vertex order follows the downward data
    with respect to the lexicographically least reduced word.

    Injectivity of the data on a component makes the order total; the result
    carries the keys and the word used.
    """
    if len(components(B)) != 1:
        raise InputError("canonical relabeling needs a connected graph")
    word = canonical_word(B.datum)
    data = [downward_values(B, v, word) for v in B.vertices]
    if len(set(data)) != B.n:
        raise StructureError("downward data failed to separate vertices")
    order = sorted(B.vertices, key=lambda v: data[v])
    new_index = {v: k for k, v in enumerate(order)}
    weights = [B.weight(v) for v in order]
    f_edges = {}
    for i in B.nodes:
        col = []
        for v in order:
            t = B.f(i, v)
            col.append(None if t is None else new_index[t])
        f_edges[i] = col
    labels = None if B.labels is None else tuple(B.labels[v] for v in order)
    keys = tuple(data[v] for v in order)
    return CrystalGraph(B.datum, weights, f_edges, kind=B.kind, labels=labels,
                        keys=keys, key_word=word, highest_weight=B.highest_weight)
