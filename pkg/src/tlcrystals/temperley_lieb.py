"""Temperley-Lieb diagrams, 321-avoiding permutations and the theta map.

Boundary points are labelled ``("L", i)`` and ``("R", i)`` (1-based).  Their
circular order is L1..Ln, Rn..R1; a matching is noncrossing with respect to
that order.  The product ``a * b`` glues the right side of ``a`` to the left
side of ``b``; every closed loop contributes a factor ``xi``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

Label = tuple[str, int]
Pair = tuple[Label, Label]

DEFAULT_XI = 2


class TLError(ValueError):
    pass


def _label_key(label: Label) -> tuple[int, int]:
    return (0 if label[0] == "L" else 1, label[1])


def _label_str(label: Label) -> str:
    return f"{label[0]}{label[1]}"


def _circular_position(label: Label, n: int) -> int:
    side, i = label
    return i - 1 if side == "L" else 2 * n - i


@dataclass(frozen=True, order=True)
class NoncrossingMatching:
    n: int
    pairs: tuple[Pair, ...]

    def __init__(self, n: int, pairs: Iterable[Sequence[Label]]) -> None:
        canon = []
        for a, b in pairs:
            a, b = (a[0], int(a[1])), (b[0], int(b[1]))
            canon.append(tuple(sorted((a, b), key=_label_key)))
        canon.sort(key=lambda p: (_label_key(p[0]), _label_key(p[1])))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "pairs", tuple(canon))
        self._validate()

    def _validate(self) -> None:
        seen = [lab for p in self.pairs for lab in p]
        expected = {("L", i) for i in range(1, self.n + 1)} | {("R", i) for i in range(1, self.n + 1)}
        if len(seen) != 2 * self.n or set(seen) != expected:
            raise TLError(f"not a perfect matching on L1..L{self.n}, R1..R{self.n}: {self}")
        arcs = [sorted(_circular_position(x, self.n) for x in p) for p in self.pairs]
        for (a, b), (c, d) in itertools.combinations(arcs, 2):
            if a < c < b < d or c < a < d < b:
                raise TLError(f"matching is crossing: {self}")

    def partner(self, label: Label) -> Label:
        for a, b in self.pairs:
            if a == label:
                return b
            if b == label:
                return a
        raise KeyError(label)

    def __str__(self) -> str:
        return "[" + ", ".join(f"{_label_str(a)}-{_label_str(b)}" for a, b in self.pairs) + "]"

    __repr__ = __str__

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> NoncrossingMatching:
        """Parse ``"[L1-R1, L2-L3, R2-R3]"``; ``n`` defaults to the largest index."""
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise TLError(f"matching must be bracketed: {text!r}")
        pairs = []
        for token in filter(None, (t.strip() for t in body[1:-1].split(","))):
            m = re.fullmatch(r"([LR])(\d+)\s*[-–]\s*([LR])(\d+)", token)
            if not m:
                raise TLError(f"malformed strand {token!r}")
            pairs.append(((m.group(1), int(m.group(2))), (m.group(3), int(m.group(4)))))
        if n is None:
            n = max((lab[1] for p in pairs for lab in p), default=0)
        return cls(n, pairs)


def identity(n: int) -> NoncrossingMatching:
    return NoncrossingMatching(n, [(("L", j), ("R", j)) for j in range(1, n + 1)])


def generator(i: int, n: int) -> NoncrossingMatching:
    if not 1 <= i <= n - 1:
        raise TLError(f"generator index {i} out of range for n={n}")
    pairs = [(("L", i), ("L", i + 1)), (("R", i), ("R", i + 1))]
    pairs += [(("L", j), ("R", j)) for j in range(1, n + 1) if j not in (i, i + 1)]
    return NoncrossingMatching(n, pairs)


@lru_cache(maxsize=None)
def tl_basis(n: int) -> tuple[NoncrossingMatching, ...]:
    """All noncrossing perfect matchings of order n, sorted canonically."""
    points = [("L", i) for i in range(1, n + 1)] + [("R", i) for i in range(n, 0, -1)]

    def rec(pts: list[Label]) -> Iterable[list[Pair]]:
        if not pts:
            yield []
            return
        first = pts[0]
        for k in range(1, len(pts), 2):
            for inside in rec(pts[1:k]):
                for outside in rec(pts[k + 1 :]):
                    yield [(first, pts[k])] + inside + outside

    return tuple(sorted(NoncrossingMatching(n, ps) for ps in rec(points)))


class _UnionFind:
    def __init__(self, size: int) -> None:
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


@lru_cache(maxsize=65536)
def compose(a: NoncrossingMatching, b: NoncrossingMatching) -> tuple[NoncrossingMatching, int]:
    """Concatenate two diagrams; returns the resulting matching and loop count."""
    if a.n != b.n:
        raise TLError(f"order mismatch: {a.n} vs {b.n}")
    n = a.n
    # points: 0..n-1 outer left, n..2n-1 interface, 2n..3n-1 outer right
    def idx_a(lab: Label) -> int:
        return lab[1] - 1 if lab[0] == "L" else n + lab[1] - 1

    def idx_b(lab: Label) -> int:
        return n + lab[1] - 1 if lab[0] == "L" else 2 * n + lab[1] - 1

    uf = _UnionFind(3 * n)
    for p, q in a.pairs:
        uf.union(idx_a(p), idx_a(q))
    for p, q in b.pairs:
        uf.union(idx_b(p), idx_b(q))
    groups: dict[int, list[int]] = {}
    for x in range(3 * n):
        groups.setdefault(uf.find(x), []).append(x)
    pairs = []
    loops = 0
    for members in groups.values():
        outer = [x for x in members if x < n or x >= 2 * n]
        if not outer:
            loops += 1
            continue
        labels = [("L", x + 1) if x < n else ("R", x - 2 * n + 1) for x in outer]
        pairs.append(tuple(labels))
    return NoncrossingMatching(n, pairs), loops


@dataclass(frozen=True)
class TLElement:
    n: int
    combo: Mapping[NoncrossingMatching, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for m, c in self.combo.items():
            if m.n != self.n:
                raise TLError(f"basis element of order {m.n} in TL_{self.n}")
            if c:
                clean[m] = int(c)
        object.__setattr__(self, "combo", clean)

    @classmethod
    def basis(cls, m: NoncrossingMatching, coef: int = 1) -> TLElement:
        return cls(m.n, {m: coef})

    @classmethod
    def one(cls, n: int) -> TLElement:
        return cls.basis(identity(n))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TLElement):
            return NotImplemented
        return self.n == other.n and self.combo == other.combo

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.combo.items())))

    def __add__(self, other: TLElement) -> TLElement:
        if self.n != other.n:
            raise TLError(f"order mismatch: {self.n} vs {other.n}")
        out = dict(self.combo)
        for m, c in other.combo.items():
            out[m] = out.get(m, 0) + c
        return TLElement(self.n, out)

    def __sub__(self, other: TLElement) -> TLElement:
        return self + other.scale(-1)

    def scale(self, c: int) -> TLElement:
        return TLElement(self.n, {m: c * v for m, v in self.combo.items()})

    def coefficient(self, m: NoncrossingMatching) -> int:
        return self.combo.get(m, 0)

    def __str__(self) -> str:
        if not self.combo:
            return "0"
        return " + ".join(f"{c}*{m}" for m, c in sorted(self.combo.items()))


def tl_multiply(a: TLElement, b: TLElement, xi: int = DEFAULT_XI) -> TLElement:
    if a.n != b.n:
        raise TLError(f"order mismatch: {a.n} vs {b.n}")
    out: dict[NoncrossingMatching, int] = {}
    for ma, ca in a.combo.items():
        for mb, cb in b.combo.items():
            m, loops = compose(ma, mb)
            out[m] = out.get(m, 0) + ca * cb * xi**loops
    return TLElement(a.n, out)


# --- permutations -----------------------------------------------------------
#
# A permutation is its one-line notation (v(1), ..., v(n)).  The word
# (i1, ..., ik) stands for the diagram s_{i1} s_{i2} ... s_{ik} read left to
# right, so the strand from L_a ends at R_{v(a)} with v(a) = s_ik(...s_i1(a)).

Permutation = tuple[int, ...]


def is_permutation(v: Sequence[int]) -> bool:
    return sorted(v) == list(range(1, len(v) + 1))


def inversions(v: Sequence[int]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(v)), 2) if v[i] > v[j])


def _swap(v: Sequence[int], i: int) -> Permutation:
    w = list(v)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def reduced_word(v: Sequence[int]) -> tuple[int, ...]:
    """A reduced word for v, peeling the smallest descent each time."""
    if not is_permutation(v):
        raise TLError(f"not a permutation: {tuple(v)}")
    word = []
    v = tuple(v)
    while True:
        descent = next((i for i in range(1, len(v)) if v[i - 1] > v[i]), None)
        if descent is None:
            return tuple(word)
        word.append(descent)
        v = _swap(v, descent)


def all_reduced_words(v: Sequence[int]) -> list[tuple[int, ...]]:
    v = tuple(v)
    descents = [i for i in range(1, len(v)) if v[i - 1] > v[i]]
    if not descents:
        return [()]
    return [(i,) + rest for i in descents for rest in all_reduced_words(_swap(v, i))]


def permutation_of_word(word: Sequence[int], n: int) -> Permutation:
    out = []
    for a in range(1, n + 1):
        for i in word:
            if a == i:
                a = i + 1
            elif a == i + 1:
                a = i
        out.append(a)
    return tuple(out)


def is_321_avoiding(v: Sequence[int]) -> bool:
    return not any(
        v[i] > v[j] > v[k] for i, j, k in itertools.combinations(range(len(v)), 3)
    )


def word_element(word: Sequence[int], n: int, xi: int = DEFAULT_XI, shift: int = 0) -> TLElement:
    """Product over the word of (t_i + shift) in TL_n(xi)."""
    out = TLElement.one(n)
    for i in word:
        factor = TLElement.basis(generator(i, n))
        if shift:
            factor = factor + TLElement.one(n).scale(shift)
        out = tl_multiply(out, factor, xi)
    return out


@lru_cache(maxsize=None)
def theta(v: Permutation, xi: int = DEFAULT_XI) -> TLElement:
    """Image of the Hecke basis element T_v: the product of (t_i - 1) over a reduced word."""
    return word_element(reduced_word(v), len(v), xi, shift=-1)


@lru_cache(maxsize=None)
def matching_of_321(w: Permutation) -> NoncrossingMatching:
    """The basis diagram t_w of a 321-avoiding permutation."""
    if not is_321_avoiding(w):
        raise TLError(f"{w} is not 321-avoiding")
    elem = word_element(reduced_word(w), len(w))
    ((m, c),) = elem.combo.items()
    if c != 1:
        raise TLError(f"reduced word of {w} produced loops")
    return m


@lru_cache(maxsize=None)
def _permutation_table(n: int) -> dict[NoncrossingMatching, Permutation]:
    table = {}
    for v in itertools.permutations(range(1, n + 1)):
        if is_321_avoiding(v):
            table[matching_of_321(v)] = v
    return table


def permutation_of_matching(tau: NoncrossingMatching) -> Permutation:
    return _permutation_table(tau.n)[tau]


def f_coeff(w: Sequence[int], v: Sequence[int]) -> int:
    """Coefficient of t_w in theta(T_v) inside TL_n(2)."""
    w, v = tuple(w), tuple(v)
    if len(w) != len(v):
        raise TLError("permutations of different sizes")
    return theta(v).coefficient(matching_of_321(w))


def is_compatible(tau: NoncrossingMatching, I: Iterable[int], J: Iterable[int]) -> bool:
    """Each strand joins a black and a white endpoint (L_i black iff i in I, R_j white iff j in J)."""
    I, J = set(I), set(J)
    if len(I) != len(J):
        raise TLError(f"|I| != |J|: {sorted(I)} vs {sorted(J)}")

    def black(lab: Label) -> bool:
        return lab[1] in I if lab[0] == "L" else lab[1] not in J

    return all(black(a) != black(b) for a, b in tau.pairs)


def compatible_types(I: Iterable[int], J: Iterable[int], n: int) -> list[NoncrossingMatching]:
    I, J = set(I), set(J)
    return [tau for tau in tl_basis(n) if is_compatible(tau, I, J)]
