"""Root-system arithmetic for the finite Cartan families A, B, C, D and G.

Conventions, fixed once for the whole package:

* Weights are integer tuples in the fundamental-weight basis, so pairing
  with a simple coroot reads off a coordinate: <alpha_i^vee, wt> = wt[i-1].
* The Cartan matrix is a[i][j] = <alpha_i^vee, alpha_j>.  Column j gives the
  simple root alpha_j in the fundamental-weight basis; row i gives the
  simple coroot alpha_i^vee in the fundamental-coweight basis.
* Orientation of the non-simply-laced families: the last simple root of
  B_n is short (a[n-1][n-2] = -2), the last simple root of C_n is long
  (a[n-2][n-1] = -2), and G2 has a[0][1] = -1, a[1][0] = -3.
* Node indices are 1-based everywhere (words, operators, CLI).

All arithmetic is exact (int or Fraction).  Weyl-group elements are handled
through their action on coordinate tuples and are never materialized as
matrices; for dedup and descent tests an element is identified by its action
on rho, which is faithful in finite type.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InputError, StructureError

Weight = tuple[int, ...]
Coweight = tuple[int, ...]
ReducedWord = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "G": 2}
_MAX_RANK = {"G": 2}


@dataclass(frozen=True)
class CartanType:
    """A finite Cartan family label and rank, e.g. ``CartanType("B", 2)``."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _MIN_RANK:
            raise InputError(f"unknown family {self.family!r}; expected one of A, B, C, D, G")
        if not isinstance(self.rank, int) or self.rank < _MIN_RANK[self.family]:
            raise InputError(f"rank {self.rank} invalid for family {self.family} "
                             f"(minimum {_MIN_RANK[self.family]})")
        if self.family in _MAX_RANK and self.rank > _MAX_RANK[self.family]:
            raise InputError(f"family {self.family} only exists in rank {_MAX_RANK[self.family]}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        """Parse strings like "A2", "b2", "D4" (case-insensitive)."""
        t = text.strip()
        if len(t) < 2 or not t[0].isalpha():
            raise InputError(f"cannot parse Cartan type from {text!r}")
        try:
            rank = int(t[1:])
        except ValueError:
            raise InputError(f"cannot parse rank from {text!r}") from None
        return cls(t[0].upper(), rank)

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    a = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        a[i][i] = 2
    if family in ("A", "B", "C"):
        for i in range(rank - 1):
            a[i][i + 1] = a[i + 1][i] = -1
        if family == "B":
            a[rank - 1][rank - 2] = -2
        elif family == "C":
            a[rank - 2][rank - 1] = -2
    elif family == "D":
        for i in range(rank - 2):
            a[i][i + 1] = a[i + 1][i] = -1
        a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1
    elif family == "G":
        a[0][1], a[1][0] = -1, -3
    return tuple(tuple(row) for row in a)


def _invert(rows: tuple[tuple[int, ...], ...]) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse of a small integer matrix by Gauss-Jordan elimination."""
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


class RootDatum:
    """Immutable root-system tables for one Cartan type.

    ``cache`` is a private monotone memo dict used by other modules to store
    derived immutable objects (generated crystals, embeddings, ...); it never
    affects observable semantics.
    """

    def __init__(self, ctype: CartanType):
        self.type = ctype
        self.rank = ctype.rank
        self.cartan = _cartan_matrix(ctype.family, ctype.rank)
        # column j of the Cartan matrix = alpha_j in the fundamental-weight basis
        self.simple_roots = tuple(tuple(self.cartan[i][j] for i in range(self.rank))
                                  for j in range(self.rank))
        # row i = alpha_i^vee in the fundamental-coweight basis
        self.simple_coroots = tuple(self.cartan)
        self.rho: Weight = (1,) * self.rank
        self.zero: Weight = (0,) * self.rank
        self.inv_cartan = _invert(self.cartan)
        self.cache: dict = {}

    def __repr__(self) -> str:
        return f"RootDatum({self.type})"

    def __eq__(self, other) -> bool:
        return isinstance(other, RootDatum) and self.type == other.type

    def __hash__(self) -> int:
        return hash(self.type)


def build_root_datum(ctype: CartanType) -> RootDatum:
    return RootDatum(ctype)


def root_datum(text: str) -> RootDatum:
    """Shortcut: ``root_datum("A2")``."""
    return RootDatum(CartanType.parse(text))


# ---------------------------------------------------------------------------
# weight arithmetic

def weight_add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def weight_sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def weight_neg(x):
    return tuple(-a for a in x)


def is_dominant(wt) -> bool:
    return all(c >= 0 for c in wt)


def dominates(x, y) -> bool:
    """True when x - y has nonnegative fundamental coefficients."""
    return all(a >= b for a, b in zip(x, y))


def ensure_dominant(wt) -> None:
    if not is_dominant(wt):
        raise InputError(f"weight {wt} is not dominant")


def reflect(d: RootDatum, i: int, wt):
    """Simple reflection s_i on a weight-space vector (int or Fraction coords)."""
    c = wt[i - 1]
    if c == 0:
        return tuple(wt)
    alpha = d.simple_roots[i - 1]
    return tuple(x - c * a for x, a in zip(wt, alpha))


def weyl_act(d: RootDatum, word, wt):
    """Apply s_{i_1} ... s_{i_k} to wt, rightmost reflection first."""
    for i in reversed(word):
        wt = reflect(d, i, wt)
    return wt


def reflect_coweight(d: RootDatum, i: int, g):
    """Simple reflection s_i on a coweight in fundamental-coweight coordinates."""
    c = g[i - 1]
    if c == 0:
        return tuple(g)
    row = d.cartan[i - 1]
    return tuple(x - c * a for x, a in zip(g, row))


def act_coweight(d: RootDatum, word, g):
    for i in reversed(word):
        g = reflect_coweight(d, i, g)
    return g


def root_coords(d: RootDatum, wt) -> tuple[Fraction, ...]:
    """Coordinates of a weight-space vector in the simple-root basis."""
    return tuple(sum(row[j] * wt[j] for j in range(d.rank)) for row in d.inv_cartan)


def pair_coweight(d: RootDatum, g, wt) -> Fraction:
    """Pairing of a coweight (fundamental-coweight coords) with a weight."""
    rc = root_coords(d, wt)
    return sum((gi * ci for gi, ci in zip(g, rc)), start=Fraction(0))


def fundamental_coweight(d: RootDatum, i: int) -> Coweight:
    return tuple(int(k == i - 1) for k in range(d.rank))


# ---------------------------------------------------------------------------
# positive roots and coroots

def _positive_roots_of(matrix) -> tuple[tuple[int, ...], ...]:
    """All positive roots of the root system with the given Cartan matrix,
    as coordinate vectors in the simple-root basis."""
    rank = len(matrix)
    simples = [tuple(int(k == j) for k in range(rank)) for j in range(rank)]
    seen = set(simples)
    queue = list(simples)
    while queue:
        c = queue.pop()
        for j in range(rank):
            t = sum(matrix[j][k] * c[k] for k in range(rank))
            c2 = list(c)
            c2[j] -= t
            c2 = tuple(c2)
            if all(x >= 0 for x in c2) and c2 not in seen:
                seen.add(c2)
                queue.append(c2)
    return tuple(sorted(seen))


def positive_root_coords(d: RootDatum) -> tuple[tuple[int, ...], ...]:
    if "pos_roots" not in d.cache:
        d.cache["pos_roots"] = _positive_roots_of(d.cartan)
    return d.cache["pos_roots"]


def positive_coroot_coords(d: RootDatum) -> tuple[tuple[int, ...], ...]:
    """Positive coroots in simple-coroot coordinates (roots of the transposed
    Cartan matrix).  Pairing against a weight is a plain dot product."""
    if "pos_coroots" not in d.cache:
        at = tuple(tuple(d.cartan[j][i] for j in range(d.rank)) for i in range(d.rank))
        d.cache["pos_coroots"] = _positive_roots_of(at)
    return d.cache["pos_coroots"]


def num_positive_roots(d: RootDatum) -> int:
    return len(positive_root_coords(d))


def root_to_weight(d: RootDatum, coords) -> Weight:
    """Convert simple-root coordinates to the fundamental-weight basis."""
    return tuple(sum(d.cartan[k][j] * coords[j] for j in range(d.rank))
                 for k in range(d.rank))


# ---------------------------------------------------------------------------
# Weyl group words

def longest_word(d: RootDatum) -> ReducedWord:
    """A deterministic reduced word for the long element.

    Greedy descent: starting from rho, repeatedly apply s_i for the least i
    with positive pairing until reaching -rho; the recorded letters reversed
    form the word.
    """
    if "w0" in d.cache:
        return d.cache["w0"]
    mu = d.rho
    target = weight_neg(d.rho)
    letters = []
    while mu != target:
        i = next(k + 1 for k, c in enumerate(mu) if c > 0)
        letters.append(i)
        mu = reflect(d, i, mu)
    word = tuple(reversed(letters))
    if len(word) != num_positive_roots(d):
        raise StructureError("greedy descent produced a word of the wrong length")
    d.cache["w0"] = word
    return word


def all_reduced_words(d: RootDatum) -> tuple[ReducedWord, ...]:
    """Every reduced word for the long element, in lexicographic order.

    States are Weyl elements identified by their action on rho; letter i is
    a valid first letter of a word for w exactly when (w rho)[i] < 0.
    """
    if "all_words" in d.cache:
        return d.cache["all_words"]
    rho = d.rho
    memo: dict[Weight, tuple[ReducedWord, ...]] = {rho: ((),)}

    def words_from(mu: Weight) -> tuple[ReducedWord, ...]:
        cached = memo.get(mu)
        if cached is not None:
            return cached
        out = []
        for k, c in enumerate(mu):
            if c < 0:
                i = k + 1
                for rest in words_from(reflect(d, i, mu)):
                    out.append((i,) + rest)
        result = tuple(out)
        memo[mu] = result
        return result

    words = words_from(weight_neg(rho))
    m = num_positive_roots(d)
    if any(len(w) != m for w in words) or len(set(words)) != len(words):
        raise StructureError("reduced-word enumeration is inconsistent")
    d.cache["all_words"] = words
    return words


def canonical_word(d: RootDatum) -> ReducedWord:
    """The lexicographically least reduced word for the long element."""
    return all_reduced_words(d)[0]


def is_reduced_word_for_w0(d: RootDatum, word) -> bool:
    mu = d.rho
    for i in reversed(word):
        if not (1 <= i <= d.rank):
            return False
        if mu[i - 1] <= 0:
            return False
        mu = reflect(d, i, mu)
    return mu == weight_neg(d.rho)


def ensure_w0_word(d: RootDatum, word) -> ReducedWord:
    word = tuple(word)
    valid = d.cache.setdefault("valid_words", set())
    if word not in valid:
        if not is_reduced_word_for_w0(d, word):
            raise InputError(f"{word} is not a reduced word for the long element of {d.type}")
        valid.add(word)
    return word


# ---------------------------------------------------------------------------
# diagram involution and dimension formula

def theta(d: RootDatum) -> tuple[int, ...]:
    """The node involution defined by -w0.alpha_i = alpha_{theta(i)}.

    Returned as a tuple t with t[i-1] the image of node i.
    """
    if "theta" in d.cache:
        return d.cache["theta"]
    w0 = longest_word(d)
    images = []
    for i in range(1, d.rank + 1):
        v = weight_neg(weyl_act(d, w0, d.simple_roots[i - 1]))
        for j in range(1, d.rank + 1):
            if v == d.simple_roots[j - 1]:
                images.append(j)
                break
        else:
            raise StructureError(f"-w0.alpha_{i} is not a simple root")
    perm = tuple(images)
    if any(perm[perm[i] - 1] != i + 1 for i in range(d.rank)):
        raise StructureError("node involution is not an involution")
    d.cache["theta"] = perm
    return perm


def theta_reversed(d: RootDatum, word) -> ReducedWord:
    """Apply the node involution letterwise to the reversed word."""
    t = theta(d)
    return tuple(t[i - 1] for i in reversed(word))


def weyl_dim(d: RootDatum, lam: Weight) -> int:
    """Dimension of the irreducible representation of highest weight lam,
    via the product formula over positive coroots, in exact arithmetic."""
    ensure_dominant(lam)
    shifted = weight_add(lam, d.rho)
    result = Fraction(1)
    for c in positive_coroot_coords(d):
        num = sum(ci * wi for ci, wi in zip(c, shifted))
        den = sum(c)
        result *= Fraction(num, den)
    if result.denominator != 1:
        raise StructureError("dimension formula did not produce an integer")
    return int(result)


# ---------------------------------------------------------------------------
# symmetrized bilinear form (used by the character oracle)

def symmetrizer(d: RootDatum) -> tuple[int, ...]:
    """Positive integers d_i with d_i a_ij = d_j a_ji, normalized to gcd 1."""
    if "symmetrizer" in d.cache:
        return d.cache["symmetrizer"]
    vals: list[Fraction | None] = [None] * d.rank
    vals[0] = Fraction(1)
    queue = [0]
    while queue:
        i = queue.pop()
        for j in range(d.rank):
            if j != i and d.cartan[i][j] != 0 and vals[j] is None:
                vals[j] = vals[i] * Fraction(d.cartan[i][j], d.cartan[j][i])
                queue.append(j)
    if any(v is None for v in vals):
        raise StructureError("Dynkin diagram is not connected")
    denom_lcm = 1
    for v in vals:
        denom_lcm = denom_lcm * v.denominator // gcd(denom_lcm, v.denominator)
    ints = [int(v * denom_lcm) for v in vals]
    g = 0
    for x in ints:
        g = gcd(g, x)
    result = tuple(x // g for x in ints)
    d.cache["symmetrizer"] = result
    return result


def bilinear(d: RootDatum, x, y) -> Fraction:
    """W-invariant symmetric form on weight space, (alpha_j, alpha_j) = 2 d_j."""
    sym = symmetrizer(d)
    cx = root_coords(d, x)
    return sum((cj * dj * yj for cj, dj, yj in zip(cx, sym, y)), start=Fraction(0))


# ---------------------------------------------------------------------------
# coroot cascades and chamber coweights

def word_coroot_pairings(d: RootDatum, word, lam) -> tuple[int, ...]:
    """The sequence <w_{k-1}.alpha_{i_k}^vee, lam> for w_k the length-k prefix
    of the word.  These are the string data of a highest-weight vertex."""
    rank = d.rank
    out = []
    for k, i in enumerate(word):
        c = [int(t == i - 1) for t in range(rank)]
        for l in reversed(word[:k]):
            # s_l on a coweight in simple-coroot coordinates
            t = sum(d.cartan[u][l - 1] * c[u] for u in range(rank))
            c[l - 1] -= t
        out.append(sum(ci * wi for ci, wi in zip(c, lam)))
    return tuple(out)


def chamber_coweights(d: RootDatum) -> tuple[Coweight, ...]:
    """All coweights of the form w.Lambda_i^vee, in fundamental-coweight
    coordinates, sorted."""
    if "chamber" in d.cache:
        return d.cache["chamber"]
    seen = set()
    queue = [fundamental_coweight(d, i) for i in range(1, d.rank + 1)]
    seen.update(queue)
    while queue:
        g = queue.pop()
        for i in range(1, d.rank + 1):
            g2 = reflect_coweight(d, i, g)
            if g2 not in seen:
                seen.add(g2)
                queue.append(g2)
    result = tuple(sorted(seen))
    d.cache["chamber"] = result
    return result


def chamber_walk(d: RootDatum, word) -> tuple[tuple[Coweight, Coweight], ...]:
    """Per position k of the word, the pair (w_{k-1}.Lambda_{i_k}^vee,
    w_k.Lambda_{i_k}^vee)."""
    key = ("chamber_walk", tuple(word))
    if key in d.cache:
        return d.cache[key]
    out = []
    for k, i in enumerate(word):
        g = fundamental_coweight(d, i)
        before = act_coweight(d, word[:k], g)
        after = act_coweight(d, word[:k + 1], g)
        out.append((before, after))
    result = tuple(out)
    d.cache[key] = result
    return result
