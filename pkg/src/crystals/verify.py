"""Exhaustive verification suites over coefficient-box grids.

Each suite sweeps a grid of small dominant weights per Cartan type and
checks one family of identities exhaustively.  A report records how many
elementary checks ran and carries a reproducible counterexample for the
first failing case.  Case runners are top-level functions of picklable
payloads so grids can fan out over processes; results are collected in
submission order, which keeps reports deterministic for a fixed grid.

Suite names are part of the CLI contract:

    dims         crystal sizes match the dimension formula; axioms hold
    roundtrip    JSON round trip and byte-identical cache regeneration
    tensor-char  component multiplicities match the character oracle
    lemma41      string data injective; cascades land on the lowest vertex
    lemma42      top-vertex string data equals the reflection-pairing
                 profile; raising strings vanish along the cascade
    lemma43      downward/upward data of a highest-weight pair complement
                 to the pairing profile of the pair weight
    lemma44      the involution image's data complements likewise, and the
                 two involution routes agree for every word
    star-props   tau/eps swap, weight shift, involutivity, embedding
                 coherence of the involution
    theorem1     the involution-based and negation-based commutors are
                 equal as full bijections, and both are involutive
    cactus       the triple-product compatibility of the commutor
"""
from __future__ import annotations

import itertools
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .cartan import (
    CartanType,
    all_reduced_words,
    build_root_datum,
    dominates,
    root_datum,
    theta_reversed,
    weight_add,
    weight_sub,
    weyl_dim,
    word_coroot_pairings,
)
from .characters import tensor_multiplicities
from .errors import CrystalError, InputError
from .graph import component_of, components, highest_weight_vertices, validate
from .involutions import check_cactus, commutor_hk
from .paths import irreducible
from .serialize import CrystalStore, graph_json_bytes
from .star import commutor_star, element, embed, eps_embedded, star, star_bz, star_formula, tau
from .stringdata import downward_values, upward_values, cascade_endpoint_down
from .tensor import hw_pairs, tensor_cached, tensor_index, tensor_pair

SUITES = ("dims", "roundtrip", "tensor-char", "lemma41", "lemma42",
          "lemma43", "lemma44", "star-props", "theorem1", "cactus")

DEFAULT_MAX_COEFF = {"A1": 2, "A2": 2, "B2": 2, "C2": 2, "A3": 1, "G2": 1}

_DATA: dict[str, object] = {}


def _datum(type_str: str):
    d = _DATA.get(type_str)
    if d is None:
        d = root_datum(type_str)
        _DATA[type_str] = d
    return d


def default_max_coeff(type_str: str) -> int:
    return DEFAULT_MAX_COEFF.get(type_str.upper(), 1)


def dominant_box(rank: int, top: int) -> list[tuple[int, ...]]:
    return list(itertools.product(range(top + 1), repeat=rank))


@dataclass
class VerificationReport:
    suite: str
    grid: dict
    cases: int = 0
    checked: int = 0
    failed: int = 0
    counterexample: dict | None = None
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "grid": self.grid,
            "cases": self.cases,
            "checked": self.checked,
            "failed": self.failed,
            "counterexample": self.counterexample,
            "seconds": round(self.seconds, 3),
        }


# ---------------------------------------------------------------------------
# cached commutor maps (shared within one process across suites)

def commutor_hk_cached(d, lam, mu):
    key = ("commutor_hk", tuple(lam), tuple(mu))
    got = d.cache.get(key)
    if got is None:
        got = commutor_hk(irreducible(d, lam), irreducible(d, mu),
                          tensor_cached(d, lam, mu), tensor_cached(d, mu, lam))
        d.cache[key] = got
    return got


def commutor_star_cached(d, lam, mu):
    key = ("commutor_star", tuple(lam), tuple(mu))
    got = d.cache.get(key)
    if got is None:
        got = commutor_star(d, lam, mu,
                            tensor_cached(d, lam, mu), tensor_cached(d, mu, lam))
        d.cache[key] = got
    return got


# ---------------------------------------------------------------------------
# case runners; each returns (number of elementary checks, failure or None)

def _case_dims(type_str, payload):
    (lam,) = payload
    d = _datum(type_str)
    B = irreducible(d, lam)      # generation re-validates the axioms
    validate(B)
    expected = weyl_dim(d, lam)
    if B.n != expected:
        return B.n, {"lam": lam, "size": B.n, "dimension_formula": expected}
    return B.n * d.rank + 1, None


def _case_roundtrip(type_str, payload):
    (lam,) = payload
    d = _datum(type_str)
    with tempfile.TemporaryDirectory() as tmp:
        store = CrystalStore(Path(tmp))
        first = store.fetch(d, lam)
        path = store.path_for(d.type, lam)
        bytes_one = path.read_bytes()
        path.unlink()
        store.fetch(d, lam)
        bytes_two = path.read_bytes()
        if bytes_one != bytes_two:
            return 1, {"lam": lam, "reason": "cache regeneration changed bytes"}
        if bytes_one != graph_json_bytes(first):
            return 2, {"lam": lam, "reason": "cache bytes differ from direct emission"}
        if not store.verify_round_trip(d, lam):
            return 3, {"lam": lam, "reason": "parse-emit round trip failed"}
    return 3, None


def _case_tensor_char(type_str, payload):
    lam, mu = payload
    d = _datum(type_str)
    T = tensor_cached(d, lam, mu)
    got: dict = {}
    for comp in components(T):
        got[comp.weight] = got.get(comp.weight, 0) + 1
    expected = tensor_multiplicities(d, lam, mu)
    if got != expected:
        return 1, {"lam": lam, "mu": mu,
                   "components": sorted(got.items()),
                   "character_oracle": sorted(expected.items())}
    return len(expected) + 1, None


def _case_lemma41(type_str, payload):
    (lam,) = payload
    d = _datum(type_str)
    B = irreducible(d, lam)
    [comp] = components(B)
    checked = 0
    for word in all_reduced_words(d):
        seen = {}
        for v in B.vertices:
            data = downward_values(B, v, word)
            other = seen.get(data)
            if other is not None:
                return checked, {"lam": lam, "word": word,
                                 "vertices": (other, v), "data": data,
                                 "reason": "downward data not injective"}
            seen[data] = v
            end = cascade_endpoint_down(B, v, word)
            checked += 2
            if end != comp.lowest:
                return checked, {"lam": lam, "word": word, "vertex": v,
                                 "cascade_end": end, "lowest": comp.lowest}
    return checked, None


def _case_lemma42(type_str, payload):
    (lam,) = payload
    d = _datum(type_str)
    B = irreducible(d, lam)
    [top] = highest_weight_vertices(B)
    checked = 0
    for word in all_reduced_words(d):
        profile = word_coroot_pairings(d, word, lam)
        data = downward_values(B, top, word)
        checked += 1
        if data != profile:
            return checked, {"lam": lam, "word": word,
                             "string_data": data, "pairing_profile": profile}
        x = top
        for k, i in enumerate(word):
            checked += 1
            if B.eps_i(x, i) != 0:
                return checked, {"lam": lam, "word": word, "position": k,
                                 "reason": "raising string does not vanish on cascade"}
            for _ in range(data[k]):
                x = B.f(i, x)
    return checked, None


def _case_lemma43(type_str, payload):
    lam, mu = payload
    d = _datum(type_str)
    A, B = irreducible(d, lam), irreducible(d, mu)
    T = tensor_cached(d, lam, mu)
    low_mu = components(B)[0].lowest
    checked = 0
    for top, c in hw_pairs(A, B, T):
        comp = component_of(T, tensor_index(T, top, c))
        b, right = tensor_pair(T, comp.lowest)
        if right != low_mu:
            return checked, {"lam": lam, "mu": mu, "c": c,
                             "reason": "component lowest is not paired with the "
                                       "lowest of the right factor"}
        nu = weight_add(lam, B.weight(c))
        for word in all_reduced_words(d):
            m = len(word)
            p = downward_values(B, c, word)
            q = upward_values(A, b, tuple(reversed(word)))
            r = word_coroot_pairings(d, word, nu)
            for k in range(m):
                checked += 1
                if p[k] + q[m - 1 - k] != r[k]:
                    return checked, {"lam": lam, "mu": mu, "c": c, "word": word,
                                     "k": k, "p": p, "q": q, "profile": r}
    return checked, None


def _case_lemma44(type_str, payload):
    lam, mu = payload
    d = _datum(type_str)
    A, B = irreducible(d, lam), irreducible(d, mu)
    T = tensor_cached(d, lam, mu)
    target = irreducible(d, lam)
    checked = 0
    for _, c in hw_pairs(A, B, T):
        x = element(d, mu, c)
        nu = weight_add(lam, B.weight(c))
        reference = star(x, lam)
        via_bz = star_bz(x, lam)
        checked += 1
        if via_bz != reference:
            return checked, {"lam": lam, "mu": mu, "c": c,
                             "formula": reference.vertex, "bz": via_bz.vertex}
        for word in all_reduced_words(d):
            by_word = star_formula(x, lam, word)
            checked += 1
            if by_word != reference:
                return checked, {"lam": lam, "mu": mu, "c": c, "word": word,
                                 "reason": "formula route depends on the word"}
            m = len(word)
            p = downward_values(B, c, word)
            q = downward_values(target, reference.vertex, theta_reversed(d, word))
            r = word_coroot_pairings(d, word, nu)
            for k in range(m):
                checked += 1
                if p[k] + q[m - 1 - k] != r[k]:
                    return checked, {"lam": lam, "mu": mu, "c": c, "word": word,
                                     "k": k, "p": p, "q": q, "profile": r}
    return checked, None


def _case_star_props(type_str, payload):
    mu, max_coeff = payload
    d = _datum(type_str)
    B = irreducible(d, mu)
    rank = d.rank
    checked = 0
    fundamentals = [tuple(int(k == j) for k in range(rank)) for j in range(rank)]
    for v in B.vertices:
        x = element(d, mu, v)
        tau_x = tau(x)
        eps_x = eps_embedded(x)
        for lam in dominant_box(rank, max_coeff):
            if not dominates(lam, eps_x):
                continue
            y = star(x, lam)
            checked += 4
            if tau(y) != eps_x:
                return checked, {"mu": mu, "vertex": v, "lam": lam,
                                 "tau_image": tau(y), "eps": eps_x}
            if eps_embedded(y) != tau_x:
                return checked, {"mu": mu, "vertex": v, "lam": lam,
                                 "eps_image": eps_embedded(y), "tau": tau_x}
            if weight_sub(y.weight(), lam) != weight_sub(x.weight(), mu):
                return checked, {"mu": mu, "vertex": v, "lam": lam,
                                 "reason": "carrier-aligned weight changed"}
            if star(y, mu) != x:
                return checked, {"mu": mu, "vertex": v, "lam": lam,
                                 "reason": "involution applied twice is not the identity"}
            for gamma in fundamentals:
                big = weight_add(mu, gamma)
                if any(c > max_coeff for c in big):
                    continue
                checked += 1
                if star(embed(x, gamma), lam) != y:
                    return checked, {"mu": mu, "vertex": v, "lam": lam,
                                     "gamma": gamma,
                                     "reason": "involution not coherent under embedding"}
    return checked, None


def _case_theorem1(type_str, payload):
    lam, mu = payload
    d = _datum(type_str)
    fwd_star = commutor_star_cached(d, lam, mu)
    fwd_hk = commutor_hk_cached(d, lam, mu)
    checked = len(fwd_star.mapping)
    if fwd_star.mapping != fwd_hk.mapping:
        diffs = sorted(v for v in fwd_star.mapping
                       if fwd_star.mapping[v] != fwd_hk.mapping[v])
        v = diffs[0]
        return checked, {"lam": lam, "mu": mu, "vertex": tensor_pair(fwd_star.source, v),
                         "star_image": tensor_pair(fwd_star.target, fwd_star.mapping[v]),
                         "hk_image": tensor_pair(fwd_hk.target, fwd_hk.mapping[v]),
                         "differing_vertices": len(diffs)}
    back_star = commutor_star_cached(d, mu, lam)
    back_hk = commutor_hk_cached(d, mu, lam)
    for v in fwd_star.mapping:
        checked += 2
        if back_star.mapping[fwd_star.mapping[v]] != v:
            return checked, {"lam": lam, "mu": mu, "vertex": v,
                             "reason": "negation-based commutor is not involutive"}
        if back_hk.mapping[fwd_hk.mapping[v]] != v:
            return checked, {"lam": lam, "mu": mu, "vertex": v,
                             "reason": "involution-based commutor is not involutive"}
    return checked, None


def _case_cactus(type_str, payload):
    weights = payload
    d = _datum(type_str)
    A, B, C = (irreducible(d, w) for w in weights)
    report = check_cactus(A, B, C)
    if not report.ok:
        return report.checked, {"weights": weights, **report.discrepancy}
    return report.checked, None


_RUNNERS = {
    "dims": _case_dims,
    "roundtrip": _case_roundtrip,
    "tensor-char": _case_tensor_char,
    "lemma41": _case_lemma41,
    "lemma42": _case_lemma42,
    "lemma43": _case_lemma43,
    "lemma44": _case_lemma44,
    "star-props": _case_star_props,
    "theorem1": _case_theorem1,
    "cactus": _case_cactus,
}


# ---------------------------------------------------------------------------
# grids

def build_cases(suite: str, types: list[str], max_coeff: int | None) -> list[tuple]:
    """The ordered case list for a suite.  ``max_coeff`` of None applies the
    per-type defaults; the cactus suite then restricts to triples of
    fundamental-weight crystals, matching the acceptance grid."""
    cases = []
    for type_str in types:
        t = str(CartanType.parse(type_str))
        top = max_coeff if max_coeff is not None else default_max_coeff(t)
        rank = CartanType.parse(t).rank
        box = dominant_box(rank, top)
        if suite in ("dims", "roundtrip", "lemma41", "lemma42"):
            cases.extend((suite, t, (lam,)) for lam in box)
        elif suite == "tensor-char":
            cases.extend((suite, t, (lam, mu))
                         for lam in box for mu in box if lam <= mu)
        elif suite in ("lemma43", "lemma44", "theorem1"):
            cases.extend((suite, t, (lam, mu)) for lam in box for mu in box)
        elif suite == "star-props":
            cases.extend((suite, t, (mu, top)) for mu in box)
        elif suite == "cactus":
            if max_coeff is None:
                factors = [tuple(int(k == j) for k in range(rank))
                           for j in range(rank)]
            else:
                factors = box
            cases.extend((suite, t, triple)
                         for triple in itertools.product(factors, repeat=3))
        else:
            raise InputError(f"unknown suite {suite!r}; expected one of {SUITES}")
    return cases


def _run_case(case: tuple) -> tuple[int, dict | None]:
    suite, type_str, payload = case
    try:
        return _RUNNERS[suite](type_str, payload)
    except CrystalError as exc:
        return 0, {"payload": payload, "error": str(exc)}


def run_suite(suite: str, types: list[str] | None = None,
              max_coeff: int | None = None, jobs: int = 1,
              include_g2: bool = False) -> VerificationReport:
    if suite not in SUITES:
        raise InputError(f"unknown suite {suite!r}; expected one of {SUITES}")
    if types is None:
        types = ["A1", "A2", "B2", "C2", "A3"]
        if include_g2:
            types.append("G2")
    grid = {
        "types": [str(CartanType.parse(t)) for t in types],
        "max_coeff": {str(CartanType.parse(t)):
                      (max_coeff if max_coeff is not None
                       else default_max_coeff(str(CartanType.parse(t))))
                      for t in types},
    }
    cases = build_cases(suite, types, max_coeff)
    report = VerificationReport(suite=suite, grid=grid, cases=len(cases))
    start = time.perf_counter()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_case, cases))
    else:
        results = [_run_case(case) for case in cases]
    for case, (checked, failure) in zip(cases, results):
        report.checked += checked
        if failure is not None:
            report.failed += 1
            if report.counterexample is None:
                report.counterexample = {
                    "suite": case[0], "type": case[1],
                    "case": repr(case[2]), "detail": _stringify(failure),
                }
    report.seconds = time.perf_counter() - start
    return report


def _stringify(obj):
    if isinstance(obj, dict):
        return {str(k): _stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify(v) for v in obj]
    if isinstance(obj, (int, float, str)) or obj is None:
        return obj
    return repr(obj)
