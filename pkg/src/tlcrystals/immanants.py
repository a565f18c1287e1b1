"""Temperley-Lieb immanants of Jacobi-Trudi matrices.

Three independent evaluations are provided:

* ``definition``: expand theta(T_v) for every permutation v;
* ``wirings``: sum 2^loops * weight over wirings of the requested type;
* ``tableaux``: sum weights of shuffle tableaux of the requested type.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .crystal import is_yamanouchi
from .partitions import (
    Partition,
    SkewShape,
    has_three_equal_parts,
    iter_skew_fillings,
    shape_pair,
)
from .shuffle import ShuffleTableau, content_weight, enumerate_shuffle, tl_type
from .sympoly import SymPoly, poly_det, poly_sum
from .temperley_lieb import (
    NoncrossingMatching,
    compatible_types,
    f_coeff,
    identity,
    permutation_of_matching,
    tl_basis,
)
from .wirings import diagram_of_wiring, enumerate_wirings, jt_matrix

ROUTES = ("definition", "wirings", "tableaux")

Matrix = Sequence[Sequence[SymPoly]]


class ImmanantError(ValueError):
    pass


def default_m(mu: Sequence[int], nu: Sequence[int]) -> int:
    return max(sum(mu) - sum(nu), 1)


@dataclass(frozen=True)
class ImmanantQuery:
    mu: tuple[int, ...]
    nu: tuple[int, ...]
    m: int
    tau: NoncrossingMatching

    def __post_init__(self) -> None:
        try:
            mu, nu = shape_pair(self.mu, self.nu)
        except ValueError as exc:
            raise ImmanantError(str(exc)) from None
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "nu", nu)
        if has_three_equal_parts(mu) or has_three_equal_parts(nu):
            raise ImmanantError("immanant support undefined: mu or nu has three equal parts")
        if any(b > a for a, b in zip(mu, nu)):
            raise ImmanantError(f"nu={nu} is not contained in mu={mu}")
        if self.tau.n != len(mu):
            raise ImmanantError(f"type has order {self.tau.n}, shape has {len(mu)} rows")
        if self.m < 1:
            raise ImmanantError("m must be positive")

    @classmethod
    def make(cls, mu, nu, tau, m: int | None = None) -> ImmanantQuery:
        a, b = shape_pair(mu, nu)
        return cls(a, b, default_m(a, b) if m is None else m, tau)


def immanant_of_matrix(a: Matrix, tau: NoncrossingMatching) -> SymPoly:
    """sum_v f_{w_tau}(v) a[0][v(1)-1] ... a[n-1][v(n)-1]."""
    n = len(a)
    if tau.n != n:
        raise ImmanantError(f"type has order {tau.n}, matrix has size {n}")
    nvars = a[0][0].nvars
    w = permutation_of_matching(tau)
    terms = []
    for v in itertools.permutations(range(1, n + 1)):
        coef = f_coeff(w, v)
        if not coef:
            continue
        factors = [a[i][v[i] - 1] for i in range(n)]
        if not all(factors):
            continue
        prod = factors[0]
        for f in factors[1:]:
            prod = prod * f
        terms.append(prod.scale(coef))
    return poly_sum(terms, nvars)


def _by_wirings(mu, nu, m) -> dict[NoncrossingMatching, SymPoly]:
    out: dict[NoncrossingMatching, list[SymPoly]] = {}
    for w in enumerate_wirings(mu, nu, m):
        d = diagram_of_wiring(w)
        out.setdefault(d.matching, []).append(w.weight().scale(2**d.loops))
    return {tau: poly_sum(ps, m) for tau, ps in out.items()}


def _by_tableaux(mu, nu, m) -> dict[NoncrossingMatching, SymPoly]:
    out: dict[NoncrossingMatching, list[SymPoly]] = {}
    for t in enumerate_shuffle(mu, nu, m):
        out.setdefault(tl_type(t).matching, []).append(content_weight(t, m)[1])
    return {tau: poly_sum(ps, m) for tau, ps in out.items()}


def all_immanants(mu, nu, m: int | None = None, route: str = "tableaux") -> dict[NoncrossingMatching, SymPoly]:
    """Imm_tau of the Jacobi-Trudi matrix for every basis diagram tau (zeros included)."""
    a, b = shape_pair(mu, nu)
    m = default_m(a, b) if m is None else m
    n = len(a)
    ImmanantQuery(a, b, m, identity(n))  # validates the shape
    if route == "definition":
        matrix = jt_matrix(a, b, m)
        return {tau: immanant_of_matrix(matrix, tau) for tau in tl_basis(n)}
    if route == "wirings":
        found = _by_wirings(a, b, m)
    elif route == "tableaux":
        found = _by_tableaux(a, b, m)
    else:
        raise ImmanantError(f"unknown route {route!r}")
    return {tau: found.get(tau, SymPoly.zero(m)) for tau in tl_basis(n)}


def imm_eval(q: ImmanantQuery, route: str = "tableaux") -> SymPoly:
    if route == "definition":
        return immanant_of_matrix(jt_matrix(q.mu, q.nu, q.m), q.tau)
    return all_immanants(q.mu, q.nu, q.m, route)[q.tau]


# minors -------------------------------------------------------------------


def generic_matrix(n: int) -> list[list[SymPoly]]:
    """n x n matrix of independent variables; x_{ij} is variable (i-1)*n + j."""
    return [[SymPoly.variable(n * n, i * n + j + 1) for j in range(n)] for i in range(n)]


def minor_det(a: Matrix, I: Iterable[int], J: Iterable[int]) -> SymPoly:
    """Determinant of the submatrix on rows I and columns J (1-based); the empty minor is 1."""
    I, J = sorted(set(I)), sorted(set(J))
    if len(I) != len(J):
        raise ImmanantError(f"minor needs |I| = |J|, got {I} and {J}")
    n = len(a)
    if any(not 1 <= k <= n for k in I + J):
        raise ImmanantError(f"minor index out of range 1..{n}")
    if not I:
        return SymPoly.const(a[0][0].nvars)
    return poly_det([[a[i - 1][j - 1] for j in J] for i in I])


@dataclass(frozen=True)
class IdentityCheck:
    passed: bool
    lhs: SymPoly
    rhs: SymPoly

    @property
    def difference(self) -> SymPoly:
        return self.lhs - self.rhs


def minors_identity_for_matrix(
    a: Matrix, I: Iterable[int], J: Iterable[int], imms: dict[NoncrossingMatching, SymPoly] | None = None
) -> IdentityCheck:
    n = len(a)
    I, J = set(I), set(J)
    Ic = set(range(1, n + 1)) - I
    Jc = set(range(1, n + 1)) - J
    lhs = minor_det(a, I, J) * minor_det(a, Ic, Jc)
    types = compatible_types(I, J, n)
    if imms is None:
        imms = {tau: immanant_of_matrix(a, tau) for tau in types}
    rhs = poly_sum((imms[tau] for tau in types), a[0][0].nvars)
    return IdentityCheck(lhs == rhs, lhs, rhs)


def product_minors_identity(
    mu, nu, m: int | None, I: Iterable[int], J: Iterable[int], route: str = "definition"
) -> IdentityCheck:
    """Delta_{I,J} Delta_{I^c,J^c} against the sum of Imm_tau over compatible tau."""
    a, b = shape_pair(mu, nu)
    m = default_m(a, b) if m is None else m
    imms = all_immanants(a, b, m, route)
    return minors_identity_for_matrix(jt_matrix(a, b, m), I, J, imms)


# Littlewood-Richardson ----------------------------------------------------


@dataclass(frozen=True)
class LRResult:
    count: int
    witnesses: tuple[ShuffleTableau, ...]


def lr_coefficient(
    mu, nu, tau: NoncrossingMatching, lam: Partition | Sequence[int], m: int | None = None
) -> LRResult:
    """Yamanouchi shuffle tableaux of shape mu ⊘ nu, type tau and content lam."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    a, b = shape_pair(mu, nu)
    if m is None:
        m = max(len(lam), 1)
    if m < len(lam):
        raise ImmanantError(f"m={m} is smaller than the length of {lam}")
    ImmanantQuery(a, b, m, tau)
    if sum(lam) != sum(a) - sum(b):
        return LRResult(0, ())
    found = []
    for t in enumerate_shuffle(a, b, m):
        content, _ = content_weight(t)
        if content != lam.parts:
            continue
        if not is_yamanouchi(t):
            continue
        if tl_type(t).matching != tau:
            continue
        found.append(t)
    found.sort(key=ShuffleTableau.sort_key)
    return LRResult(len(found), tuple(found))


# classical correspondence -------------------------------------------------


@dataclass(frozen=True)
class ClassicalCheck:
    status: str  # "pass", "fail" or "inapplicable"
    skew_shape: SkewShape | None = None
    immanant: SymPoly | None = None
    skew_schur: SymPoly | None = None


def skew_schur_poly(shape: SkewShape, m: int) -> SymPoly:
    terms: dict[tuple[int, ...], int] = {}
    for rows in iter_skew_fillings(shape.row_bounds(), m):
        exps = [0] * m
        for row in rows:
            for e in row:
                exps[e - 1] += 1
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + 1
    return SymPoly(m, terms)


def classical_lr_check(mu, nu, m: int | None = None) -> ClassicalCheck:
    """Imm at the identity diagram against the skew Schur polynomial of (mu-rho)/(nu-rho)."""
    a, b = shape_pair(mu, nu)
    n = len(a)
    m = default_m(a, b) if m is None else m
    rho = range(n - 1, -1, -1)
    outer = [x - r for x, r in zip(a, rho)]
    inner = [x - r for x, r in zip(b, rho)]
    try:
        shape = SkewShape(Partition(outer), Partition(inner), n)
    except ValueError:
        return ClassicalCheck("inapplicable")
    imm = imm_eval(ImmanantQuery(a, b, m, identity(n)), "definition")
    ref = skew_schur_poly(shape, m)
    return ClassicalCheck("pass" if imm == ref else "fail", shape, imm, ref)
