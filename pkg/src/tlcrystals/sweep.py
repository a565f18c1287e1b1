"""Finite families of shapes used by the verification commands and tests."""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, TypeVar

from .partitions import has_three_equal_parts

THREADS_ENV = "TLCRYSTALS_THREADS"

T = TypeVar("T")
R = TypeVar("R")


@dataclass(frozen=True)
class SweepBounds:
    max_n: int = 4
    max_degree: int = 5
    max_m: int = 3
    max_part: int = 6


def _partitions_in_box(length: int, max_part: int, min_last: int) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing tuples of the given length with parts in [min_last, max_part]."""
    for parts in itertools.combinations_with_replacement(range(max_part, min_last - 1, -1), length):
        yield parts


def sweep_shapes(bounds: SweepBounds = SweepBounds()) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """(mu, nu): n = len(mu) <= max_n parts all positive, nu <= mu, no three equal parts,
    degree |mu| - |nu| <= max_degree, every part at most max_part."""
    out = []
    for n in range(1, bounds.max_n + 1):
        for mu in _partitions_in_box(n, bounds.max_part, 1):
            if has_three_equal_parts(mu):
                continue
            for nu in _partitions_in_box(n, bounds.max_part, 0):
                if any(b > a for a, b in zip(mu, nu)) or has_three_equal_parts(nu):
                    continue
                if sum(mu) - sum(nu) <= bounds.max_degree:
                    out.append((mu, nu))
    return out


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def parallel_map(fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
    """Order-preserving map; fans out to worker processes when the env var asks for more than one."""
    items = list(items)
    workers = worker_count()
    if workers == 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=16))


def odd_indices(n: int) -> frozenset[int]:
    return frozenset(range(1, n + 1, 2))


def equal_size_subsets(n: int) -> Iterator[tuple[frozenset[int], frozenset[int]]]:
    for k in range(n + 1):
        for I in itertools.combinations(range(1, n + 1), k):
            for J in itertools.combinations(range(1, n + 1), k):
                yield frozenset(I), frozenset(J)


def identity_subsets(n: int, all_pairs_up_to: int = 3) -> list[tuple[frozenset[int], frozenset[int]]]:
    """I = J = odd indices, plus every equal-size pair when n is small."""
    pairs = [(odd_indices(n), odd_indices(n))]
    if n <= all_pairs_up_to:
        pairs += [p for p in equal_size_subsets(n) if p != pairs[0]]
    return pairs


def check_shape(item: tuple[tuple[int, ...], tuple[int, ...], int]) -> dict:
    """Route equality, product-of-minors identities and Schur positivity for one (mu, nu, m)."""
    from .immanants import ROUTES, all_immanants, minors_identity_for_matrix
    from .sympoly import schur_expand
    from .wirings import jt_matrix

    mu, nu, m = item
    results = {route: all_immanants(mu, nu, m, route) for route in ROUTES}
    base = results["definition"]
    mismatches = sorted(
        str(tau) for tau in base if any(results[r][tau] != base[tau] for r in ROUTES)
    )
    matrix = jt_matrix(mu, nu, m)
    failures = []
    for I, J in identity_subsets(len(mu)):
        if not minors_identity_for_matrix(matrix, I, J, base).passed:
            failures.append([sorted(I), sorted(J)])
    negative = sorted(
        str(tau) for tau, p in base.items() if any(c < 0 for c in schur_expand(p).values())
    )
    return {
        "mu": list(mu),
        "nu": list(nu),
        "m": m,
        "route_mismatches": mismatches,
        "identity_failures": failures,
        "negative_schur": negative,
    }


def sweep_items(bounds: SweepBounds = SweepBounds()) -> list[tuple[tuple[int, ...], tuple[int, ...], int]]:
    return [(mu, nu, m) for mu, nu in sweep_shapes(bounds) for m in range(1, bounds.max_m + 1)]


def check_crystal(item: tuple[tuple[int, ...], tuple[int, ...], int]) -> dict:
    """Stembridge axioms plus per-component highest-weight checks for one (mu, nu, m)."""
    from .crystal import build_graph, component_character, highest_weights, verify_stembridge
    from .shuffle import content_weight, tl_type
    from .sympoly import schur_poly

    mu, nu, m = item
    g = build_graph(mu, nu, m)
    table = g.by_key()
    problems = []
    for comp in g.components:
        tops = highest_weights(g, comp)
        if len(tops) != 1:
            problems.append(f"component of {comp[0]} has {len(tops)} highest-weight vertices")
            continue
        content, _ = content_weight(tops[0])
        if any(a < b for a, b in zip(content, content[1:])):
            problems.append(f"highest weight {tops[0]} has content {content}")
            continue
        if component_character(g, comp) != schur_poly(content, m):
            problems.append(f"character of component of {tops[0]} is not s_{content}")
        types = {tl_type(table[k]).matching for k in comp}
        if len(types) != 1:
            problems.append(f"component of {tops[0]} mixes {len(types)} types")
    return {
        "mu": list(mu),
        "nu": list(nu),
        "m": m,
        "vertices": len(g.vertices),
        "violations": verify_stembridge(g),
        "component_problems": problems,
    }
