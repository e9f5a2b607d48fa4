"""JSON and DOT serialization, and the on-disk crystal cache.

The JSON form lists vertices with their canonical string-data key, weight,
and lowering targets per node (raising edges are derived).  Emission is
canonical: sorted keys, no whitespace, UTF-8, a single trailing newline.
Regenerating a crystal therefore reproduces the bytes exactly, which the
round-trip suite checks.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

from .cartan import CartanType, RootDatum, build_root_datum
from .errors import InputError, StructureError
from .graph import CrystalGraph, structural_equal, validate
from .involutions import CommutorMap
from .paths import irreducible
from .tensor import tensor_pair

FORMAT_VERSION = 1


def graph_to_dict(B: CrystalGraph) -> dict:
    if B.kind != "irreducible" or B.keys is None:
        raise InputError("only irreducible crystals with canonical keys are serialized")
    vertices = []
    for v in B.vertices:
        vertices.append({
            "id": v,
            "key": list(B.keys[v]),
            "wt": list(B.weight(v)),
            "f": {str(i): B.f(i, v) for i in B.nodes},
        })
    return {
        "format": FORMAT_VERSION,
        "family": B.datum.type.family,
        "rank": B.datum.type.rank,
        "kind": "irreducible",
        "highest_weight": list(B.highest_weight),
        "key_word": list(B.key_word),
        "vertices": vertices,
    }


def graph_from_dict(obj: dict, datum: RootDatum | None = None) -> CrystalGraph:
    if obj.get("format") != FORMAT_VERSION:
        raise InputError(f"unsupported format version {obj.get('format')!r}")
    d = datum if datum is not None else build_root_datum(
        CartanType(obj["family"], obj["rank"]))
    rows = sorted(obj["vertices"], key=lambda r: r["id"])
    if [r["id"] for r in rows] != list(range(len(rows))):
        raise InputError("vertex ids must be 0..n-1")
    weights = [tuple(r["wt"]) for r in rows]
    f_edges = {i: [r["f"][str(i)] for r in rows] for i in range(1, d.rank + 1)}
    keys = tuple(tuple(r["key"]) for r in rows)
    B = CrystalGraph(d, weights, f_edges, kind="irreducible", keys=keys,
                     key_word=tuple(obj["key_word"]),
                     highest_weight=tuple(obj["highest_weight"]))
    validate(B)
    return B


def to_canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"


def graph_json_bytes(B: CrystalGraph) -> bytes:
    return to_canonical_json(graph_to_dict(B)).encode("utf-8")


def graph_to_dot(B: CrystalGraph) -> str:
    """Directed graph of lowering edges, labeled by node index."""
    lines = ["digraph crystal {", "  rankdir=TB;"]
    for v in B.vertices:
        label = list(B.keys[v]) if B.keys is not None else list(B.weight(v))
        lines.append(f'  {v} [label="{label}"];')
    for i in B.nodes:
        for v in B.vertices:
            w = B.f(i, v)
            if w is not None:
                lines.append(f'  {v} -> {w} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def commutor_to_dict(cm: CommutorMap) -> dict:
    pairs = []
    for v in sorted(cm.mapping):
        a, b = tensor_pair(cm.source, v)
        c, e = tensor_pair(cm.target, cm.mapping[v])
        pairs.append([[a, b], [c, e]])
    return {
        "format": FORMAT_VERSION,
        "method": cm.method,
        "family": cm.source.datum.type.family,
        "rank": cm.source.datum.type.rank,
        "left_weight": list(cm.source.left.highest_weight),
        "right_weight": list(cm.source.right.highest_weight),
        "pairs": pairs,
    }


@dataclass(frozen=True)
class CrystalStore:
    """Key-derived on-disk cache of canonical crystal JSON files."""

    root: Path

    def path_for(self, ctype: CartanType, lam) -> Path:
        name = ",".join(str(c) for c in lam) or "0"
        return self.root / f"v{FORMAT_VERSION}" / str(ctype) / f"{name}.json"

    def fetch(self, d: RootDatum, lam) -> CrystalGraph:
        """Load from the cache, generating and storing on a miss.

        A cached file that disagrees with a fresh generation raises; the
        cache never silently overrides the generator.
        """
        path = self.path_for(d.type, lam)
        if path.exists():
            B = graph_from_dict(json.loads(path.read_text(encoding="utf-8")), d)
            if B.highest_weight != tuple(lam):
                raise StructureError(f"cache file {path} holds the wrong crystal")
            return B
        B = irreducible(d, lam)
        self.write(B)
        return B

    def write(self, B: CrystalGraph) -> Path:
        path = self.path_for(B.datum.type, B.highest_weight)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_bytes(graph_json_bytes(B))
        os.replace(tmp, path)
        return path

    def verify_round_trip(self, d: RootDatum, lam) -> bool:
        """Parse-emit identity plus byte-identical regeneration."""
        B = irreducible(d, lam)
        first = graph_json_bytes(B)
        parsed = graph_from_dict(json.loads(first.decode("utf-8")), d)
        if not structural_equal(B, parsed):
            return False
        return graph_json_bytes(parsed) == first
