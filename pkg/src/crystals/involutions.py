"""The Schuetzenberger involution and the commutor built from it.

The involution is defined per component by sending the highest vertex to
the lowest and propagating xi(f_i x) = e_{theta(i)}(xi x) down the lowering
edges; well-definedness is enforced edge by edge, so non-normal input fails
loudly instead of silently producing a non-involution.

The commutor on a product A (x) B sends a (x) b to
xi(xi_B(b) (x) xi_A(a)) computed in B (x) A.  The flipped composite
Flip . (xi_A (x) xi_B) . xi_{A(x)B} is evaluated as well and the two must
agree pointwise.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .cartan import longest_word, theta, weyl_act
from .errors import StructureError
from .graph import CrystalGraph, components
from .tensor import tensor, tensor_index, tensor_pair


def schutzenberger(B: CrystalGraph) -> tuple[int, ...]:
    """The vertex involution exchanging lowering and theta-twisted raising
    operators, acting by the long element on weights."""
    cached = B.cache.get("schutzenberger")
    if cached is not None:
        return cached
    d = B.datum
    th = theta(d)
    w0 = longest_word(d)
    xi = [-1] * B.n
    for comp in components(B):
        xi[comp.highest] = comp.lowest
        queue = [comp.highest]
        while queue:
            v = queue.pop()
            for i in B.nodes:
                w = B.f(i, v)
                if w is None:
                    continue
                img = B.e(th[i - 1], xi[v])
                if img is None:
                    raise StructureError(
                        f"involution propagation stalled on edge {v}->{w} (node {i})")
                if xi[w] == -1:
                    xi[w] = img
                    queue.append(w)
                elif xi[w] != img:
                    raise StructureError(
                        "involution propagation is inconsistent; input is not normal")
    for v in B.vertices:
        if weyl_act(d, w0, B.weight(v)) != B.weight(xi[v]):
            raise StructureError("involution does not act by the long element on weights")
    result = tuple(xi)
    B.cache["schutzenberger"] = result
    return result


@dataclass
class CommutorMap:
    """A vertex bijection between two tensor products with its construction tag."""

    method: str
    source: CrystalGraph
    target: CrystalGraph
    mapping: dict[int, int] = field(repr=False)

    def __post_init__(self):
        if len(self.mapping) != self.source.n or len(set(self.mapping.values())) != self.source.n:
            raise StructureError("commutor mapping is not a bijection")

    def __call__(self, v: int) -> int:
        return self.mapping[v]

    def check_isomorphism(self) -> None:
        """Weight preservation and commutation with every operator."""
        src, tgt = self.source, self.target
        for v in src.vertices:
            w = self.mapping[v]
            if src.weight(v) != tgt.weight(w):
                raise StructureError(f"commutor changes the weight of vertex {v}")
            for i in src.nodes:
                fv, fw = src.f(i, v), tgt.f(i, w)
                if (fv is None) != (fw is None) or (fv is not None and self.mapping[fv] != fw):
                    raise StructureError(
                        f"commutor fails to commute with the lowering operator {i} at {v}")


def commutor_hk(A: CrystalGraph, B: CrystalGraph,
                AB: CrystalGraph | None = None,
                BA: CrystalGraph | None = None) -> CommutorMap:
    """The involution-based commutor A (x) B -> B (x) A, materialized on
    every vertex.  Both defining expressions are evaluated and compared."""
    AB = AB if AB is not None else tensor(A, B)
    BA = BA if BA is not None else tensor(B, A)
    xi_a = schutzenberger(A)
    xi_b = schutzenberger(B)
    xi_ab = schutzenberger(AB)
    xi_ba = schutzenberger(BA)
    mapping = {}
    for a in A.vertices:
        for b in B.vertices:
            v = tensor_index(AB, a, b)
            first = xi_ba[tensor_index(BA, xi_b[b], xi_a[a])]
            a2, b2 = tensor_pair(AB, xi_ab[v])
            second = tensor_index(BA, xi_b[b2], xi_a[a2])
            if first != second:
                raise StructureError(
                    "the two defining expressions of the commutor disagree "
                    f"at vertex {v}")
            mapping[v] = first
    return CommutorMap("hk", AB, BA, mapping)


@dataclass(frozen=True)
class CactusReport:
    ok: bool
    checked: int
    discrepancy: dict | None


def check_cactus(A: CrystalGraph, B: CrystalGraph, C: CrystalGraph) -> CactusReport:
    """Evaluate both triple-product composites on every vertex.

    Left side: commute A past C(x)B after commuting B with C inside.
    Right side: commute B(x)A past C after commuting A with B inside.
    Both composites are evaluated on flattened triples (re-bracketing is the
    identity on underlying triples).
    """
    BC, CB = tensor(B, C), tensor(C, B)
    AB, BA = tensor(A, B), tensor(B, A)
    s_bc = commutor_hk(B, C, BC, CB).mapping
    s_ab = commutor_hk(A, B, AB, BA).mapping
    A_CB, CB_A = tensor(A, CB), tensor(CB, A)
    s_a_cb = commutor_hk(A, CB, A_CB, CB_A).mapping
    BA_C, C_BA = tensor(BA, C), tensor(C, BA)
    s_ba_c = commutor_hk(BA, C, BA_C, C_BA).mapping

    checked = 0
    for a in A.vertices:
        for b in B.vertices:
            for c in C.vertices:
                # left composite
                cb = s_bc[tensor_index(BC, b, c)]
                img = s_a_cb[tensor_index(A_CB, a, cb)]
                cb2, a2 = tensor_pair(CB_A, img)
                c2, b2 = tensor_pair(CB, cb2)
                left = (c2, b2, a2)
                # right composite
                ba = s_ab[tensor_index(AB, a, b)]
                b3, a3 = tensor_pair(BA, ba)
                img2 = s_ba_c[tensor_index(BA_C, tensor_index(BA, b3, a3), c)]
                c3, ba3 = tensor_pair(C_BA, img2)
                b4, a4 = tensor_pair(BA, ba3)
                right = (c3, b4, a4)
                checked += 1
                if left != right:
                    return CactusReport(False, checked, {
                        "triple": (a, b, c), "left": left, "right": right})
    return CactusReport(True, checked, None)
