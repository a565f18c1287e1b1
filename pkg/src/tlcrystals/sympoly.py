"""Exact integer polynomials in a fixed number of variables.

Used for symmetric polynomials (complete homogeneous, Schur) and, with more
variables, for generic symbolic matrices.  Symmetry is checked on demand by
:meth:`SymPoly.is_symmetric`, never enforced on construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .partitions import Partition, iter_skew_fillings

Monomial = tuple[int, ...]


class PolynomialError(ValueError):
    pass


@dataclass(frozen=True)
class SymPoly:
    nvars: int
    terms: Mapping[Monomial, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for mono, coef in self.terms.items():
            mono = tuple(mono)
            if len(mono) != self.nvars:
                raise PolynomialError(f"monomial {mono} has wrong length for {self.nvars} variables")
            if coef:
                clean[mono] = int(coef)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls, nvars: int) -> SymPoly:
        return cls(nvars, {})

    @classmethod
    def const(cls, nvars: int, c: int = 1) -> SymPoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exponents: Sequence[int], coef: int = 1) -> SymPoly:
        return cls(len(exponents), {tuple(exponents): coef})

    @classmethod
    def variable(cls, nvars: int, k: int) -> SymPoly:
        """The variable ``x_k`` (1-based)."""
        exps = [0] * nvars
        exps[k - 1] = 1
        return cls(nvars, {tuple(exps): 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self == SymPoly.const(self.nvars, other)
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def _check(self, other: SymPoly) -> None:
        if self.nvars != other.nvars:
            raise PolynomialError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: SymPoly) -> SymPoly:
        self._check(other)
        out = dict(self.terms)
        for mono, coef in other.terms.items():
            out[mono] = out.get(mono, 0) + coef
        return SymPoly(self.nvars, out)

    def __neg__(self) -> SymPoly:
        return self.scale(-1)

    def __sub__(self, other: SymPoly) -> SymPoly:
        return self + (-other)

    def __mul__(self, other: SymPoly | int) -> SymPoly:
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                out[mono] = out.get(mono, 0) + c1 * c2
        return SymPoly(self.nvars, out)

    __rmul__ = __mul__

    def scale(self, c: int) -> SymPoly:
        return SymPoly(self.nvars, {m: c * v for m, v in self.terms.items()})

    def coefficient(self, mono: Sequence[int]) -> int:
        return self.terms.get(tuple(mono), 0)

    def coefficient_sum(self) -> int:
        return sum(self.terms.values())

    def degrees(self) -> set[int]:
        return {sum(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def is_symmetric(self) -> bool:
        for mono, coef in self.terms.items():
            for perm in set(itertools.permutations(mono)):
                if self.terms.get(perm, 0) != coef:
                    return False
        return True

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in graded-lexicographic order, largest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def term_strings(self) -> list[str]:
        return [_term_str(m, c) for m, c in self.sorted_terms()]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(self.term_strings()).replace("+ -", "- ")

    __repr__ = __str__


def _term_str(mono: Monomial, coef: int) -> str:
    factors = [f"x{k}" if e == 1 else f"x{k}^{e}" for k, e in enumerate(mono, 1) if e]
    if not factors:
        return str(coef)
    return "*".join([str(coef)] + factors)


def poly_add(a: SymPoly, b: SymPoly) -> SymPoly:
    return a + b


def poly_mul(a: SymPoly, b: SymPoly) -> SymPoly:
    return a * b


def poly_scale(a: SymPoly, c: int) -> SymPoly:
    return a.scale(c)


def poly_sum(polys: Iterable[SymPoly], nvars: int) -> SymPoly:
    out: dict[Monomial, int] = {}
    for p in polys:
        if p.nvars != nvars:
            raise PolynomialError(f"variable count mismatch: {p.nvars} vs {nvars}")
        for mono, coef in p.terms.items():
            out[mono] = out.get(mono, 0) + coef
    return SymPoly(nvars, out)


def compositions(k: int, m: int) -> Iterable[Monomial]:
    """All length-m nonnegative integer vectors summing to k."""
    if m == 0:
        if k == 0:
            yield ()
        return
    if m == 1:
        yield (k,)
        return
    for first in range(k, -1, -1):
        for rest in compositions(k - first, m - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def h_poly(k: int, m: int) -> SymPoly:
    """Complete homogeneous symmetric polynomial h_k in m variables."""
    if k < 0:
        return SymPoly.zero(m)
    return SymPoly(m, {c: 1 for c in compositions(k, m)})


def monomial_of_content(content: Sequence[int], m: int) -> Monomial:
    if len(content) > m:
        if any(content[m:]):
            raise PolynomialError(f"content {tuple(content)} uses more than {m} variables")
        content = content[:m]
    return tuple(content) + (0,) * (m - len(content))


@lru_cache(maxsize=None)
def _schur_cached(parts: tuple[int, ...], m: int) -> SymPoly:
    if len(parts) > m:
        return SymPoly.zero(m)
    bounds = [(0, p) for p in parts]
    out: dict[Monomial, int] = {}
    for rows in iter_skew_fillings(bounds, m):
        exps = [0] * m
        for row in rows:
            for e in row:
                exps[e - 1] += 1
        mono = tuple(exps)
        out[mono] = out.get(mono, 0) + 1
    return SymPoly(m, out)


def schur_poly(lam: Partition | Sequence[int], m: int) -> SymPoly:
    """Schur polynomial s_lam(x1..xm) as a sum over semistandard tableaux."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    return _schur_cached(lam.parts, m)


SchurExpansion = dict[Partition, int]


def schur_expand(p: SymPoly) -> SchurExpansion:
    """Coefficients c_lam with p = sum c_lam s_lam, by leading-monomial peeling."""
    if not p.is_symmetric():
        raise PolynomialError("schur_expand needs a symmetric polynomial")
    if not p.is_homogeneous():
        raise PolynomialError("schur_expand needs a homogeneous polynomial")
    out: SchurExpansion = {}
    rest = p
    while rest:
        lead, coef = max(rest.terms.items(), key=lambda t: t[0])
        if any(a < b for a, b in zip(lead, lead[1:])):
            raise PolynomialError(f"leading monomial {lead} is not a partition; remainder {rest}")
        lam = Partition(lead)
        rest = rest - schur_poly(lam, p.nvars).scale(coef)
        if lead in rest.terms:
            raise PolynomialError(f"reduction by s_{lam} did not cancel its leading term")
        out[lam] = out.get(lam, 0) + coef
    return {lam: c for lam, c in out.items() if c}


def expansion_to_json(exp: Mapping[Partition, int]) -> dict[str, int]:
    """{"3,1": 1, ...} with partitions in decreasing lexicographic order."""
    return {str(lam): exp[lam] for lam in sorted(exp, key=lambda l: l.parts, reverse=True)}


def poly_det(matrix: Sequence[Sequence[SymPoly]]) -> SymPoly:
    """Leibniz-sum determinant over exact polynomial entries."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise PolynomialError("determinant of a non-square matrix")
    if n == 0:
        raise PolynomialError("determinant of an empty matrix needs an explicit variable count")
    nvars = matrix[0][0].nvars
    total: dict[Monomial, int] = {}
    for perm in itertools.permutations(range(n)):
        factors = [matrix[i][perm[i]] for i in range(n)]
        if not all(factors):
            continue
        prod = factors[0]
        for f in factors[1:]:
            prod = prod * f
        sign = permutation_sign(perm)
        for mono, coef in prod.terms.items():
            total[mono] = total.get(mono, 0) + sign * coef
    return SymPoly(nvars, total)


def permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def parse_expansion(data: Mapping[str, int]) -> SchurExpansion:
    return {Partition.parse(k): int(v) for k, v in data.items()}


def parse_poly(text: str, nvars: int | None = None) -> SymPoly:
    """Inverse of ``str(SymPoly)``: terms like ``2*x1*x2^3`` joined by + or -."""
    src = text.replace(" ", "")
    if src in ("", "0"):
        return SymPoly.zero(nvars or 0)
    if src[0] not in "+-":
        src = "+" + src
    chunks = []
    start = 0
    for k in range(1, len(src) + 1):
        if k == len(src) or src[k] in "+-":
            chunks.append(src[start:k])
            start = k
    parsed: list[tuple[int, dict[int, int]]] = []
    top = 0
    for chunk in chunks:
        sign = -1 if chunk[0] == "-" else 1
        coef = 1
        exps: dict[int, int] = {}
        for k, factor in enumerate(chunk[1:].split("*")):
            try:
                if factor.startswith("x"):
                    var, _, power = factor[1:].partition("^")
                    idx = int(var)
                    if idx < 1:
                        raise ValueError
                    exps[idx] = exps.get(idx, 0) + (int(power) if power else 1)
                    top = max(top, idx)
                elif k == 0:
                    coef = int(factor)
                else:
                    raise ValueError
            except ValueError:
                raise PolynomialError(f"malformed polynomial term {chunk!r}") from None
        parsed.append((sign * coef, exps))
    if nvars is None:
        nvars = top
    elif top > nvars:
        raise PolynomialError(f"variable x{top} exceeds {nvars} variables")
    out: dict[Monomial, int] = {}
    for coef, exps in parsed:
        mono = tuple(exps.get(k, 0) for k in range(1, nvars + 1))
        out[mono] = out.get(mono, 0) + coef
    return SymPoly(nvars, out)
