"""Partitions, skew shapes and semistandard fillings.

Partitions are stored zero-trimmed; anything that needs a fixed length pads
on demand with :meth:`Partition.padded`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __init__(self, parts: Sequence[int] = ()) -> None:
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, k: int) -> int:
        # 0-based; zero beyond the last nonzero part
        return self.parts[k] if k < len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def padded(self, n: int) -> tuple[int, ...]:
        if n < len(self.parts):
            raise ValueError(f"{self} has more than {n} nonzero parts")
        return self.parts + (0,) * (n - len(self.parts))

    def __str__(self) -> str:
        return format_partition(self.parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        return cls(parse_int_list(text))


def parse_int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "()", "0"):
        return ()
    try:
        return tuple(int(tok) for tok in text.strip("()").split(","))
    except ValueError:
        raise ValueError(f"malformed integer list: {text!r}") from None


def format_partition(parts: Sequence[int]) -> str:
    return ",".join(str(p) for p in parts) if parts else "0"


@dataclass(frozen=True)
class SkewShape:
    """``outer/inner``; ``nrows`` may exceed ``len(outer)`` to keep empty trailing rows."""

    outer: Partition
    inner: Partition
    nrows: int = 0

    def __post_init__(self) -> None:
        n = max(self.nrows, len(self.outer))
        object.__setattr__(self, "nrows", n)
        if len(self.inner) > n:
            raise ValueError(f"inner {self.inner} longer than outer {self.outer}")
        if any(i > o for i, o in zip(self.inner.padded(n), self.outer.padded(n))):
            raise ValueError(f"inner {self.inner} not contained in outer {self.outer}")

    def row_bounds(self) -> list[tuple[int, int]]:
        """(inner, outer) per row; row r occupies columns inner+1 .. outer."""
        n = self.nrows
        return list(zip(self.inner.padded(n), self.outer.padded(n)))

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def __str__(self) -> str:
        n = self.nrows
        if n == 0:
            return "0/0"
        return f"{format_partition(self.outer.padded(n))}/{format_partition(self.inner.padded(n))}"

    @classmethod
    def parse(cls, text: str) -> SkewShape:
        if "/" in text:
            outer, inner = text.split("/", 1)
        else:
            outer, inner = text, ""
        outer_parts = parse_int_list(outer)
        return cls(Partition(outer_parts), Partition.parse(inner), len(outer_parts))


@dataclass(frozen=True)
class SkewSSYT:
    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        if not is_semistandard(self.shape, self.rows):
            raise ValueError(f"not a semistandard filling of {self.shape}: {self.rows}")

    def entry(self, row: int, col: int) -> int | None:
        """Entry at 1-based (row, col) of the skew diagram, or None."""
        if not 1 <= row <= len(self.rows):
            return None
        inner, _ = self.shape.row_bounds()[row - 1]
        k = col - inner - 1
        r = self.rows[row - 1]
        return r[k] if 0 <= k < len(r) else None

    def content(self) -> tuple[int, ...]:
        top = max((e for r in self.rows for e in r), default=0)
        counts = [0] * top
        for r in self.rows:
            for e in r:
                counts[e - 1] += 1
        return tuple(counts)


def is_semistandard(shape: SkewShape, rows: Sequence[Sequence[int]]) -> bool:
    bounds = shape.row_bounds()
    if len(rows) != len(bounds):
        return False
    for (inner, outer), row in zip(bounds, rows):
        if len(row) != outer - inner or any(e < 1 for e in row):
            return False
        if any(a > b for a, b in zip(row, row[1:])):
            return False
    for r in range(1, len(rows)):
        inner_up, outer_up = bounds[r - 1]
        inner, outer = bounds[r]
        for col in range(max(inner, inner_up) + 1, min(outer, outer_up) + 1):
            if rows[r - 1][col - inner_up - 1] >= rows[r][col - inner - 1]:
                return False
    return True


def interleaves(f: Sequence[int], g: Sequence[int], mode: str = "either") -> bool:
    """Interleaving of two weakly increasing sequences.

    ``interlace``: ``g1 <= f1 <= g2 <= ... <= f_{n-1} <= g_n`` with ``len(f) == len(g) - 1``.
    ``alternate-left``: ``f1 <= g1 <= f2 <= ... <= f_n <= g_n`` with equal lengths.
    """
    if mode == "either":
        return interleaves(f, g, "interlace") or interleaves(f, g, "alternate-left")
    if mode == "interlace":
        if len(f) != len(g) - 1:
            return False
        chain = [g[0]] + [x for pair in zip(f, g[1:]) for x in pair]
    elif mode == "alternate-left":
        if len(f) != len(g):
            return False
        chain = [x for pair in zip(f, g) for x in pair]
    else:
        raise ValueError(f"unknown interleave mode {mode!r}")
    return all(a <= b for a, b in zip(chain, chain[1:]))


def skew_interleaves(b: SkewShape, r: SkewShape) -> bool:
    """Whether the blue shape ``b`` interleaves the red shape ``r``.

    Both shapes are shifted by staircases determined by the red length and
    then compared as increasing sequences.
    """
    k = r.nrows
    kb = b.nrows
    if k - kb not in (0, 1):
        return False
    rho = [k - i for i in range(k)]
    red_outer = [p + s for p, s in zip(r.outer.padded(k), rho)]
    red_inner = [p + s for p, s in zip(r.inner.padded(k), rho)]
    blue_outer = [p + s for p, s in zip(b.outer.padded(kb), rho)]
    blue_inner = [p + s for p, s in zip(b.inner.padded(kb), rho)]
    return interleaves(blue_outer[::-1], red_outer[::-1]) and interleaves(
        blue_inner[::-1], red_inner[::-1]
    )


def enumerate_skew_ssyt(shape: SkewShape, max_entry: int) -> list[SkewSSYT]:
    """All semistandard fillings with entries in ``1..max_entry``, lexicographic."""
    if max_entry < 1:
        raise ValueError("max_entry must be positive")
    return [
        SkewSSYT(shape, rows) for rows in iter_skew_fillings(shape.row_bounds(), max_entry)
    ]


def iter_skew_fillings(
    bounds: Sequence[tuple[int, int]], max_entry: int
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Raw row tuples of every semistandard filling, in lexicographic order."""
    cells = [(r, c) for r, (inner, outer) in enumerate(bounds) for c in range(inner + 1, outer + 1)]
    filled: dict[tuple[int, int], int] = {}

    def rec(k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if k == len(cells):
            yield tuple(
                tuple(filled[(r, c)] for c in range(inner + 1, outer + 1))
                for r, (inner, outer) in enumerate(bounds)
            )
            return
        r, c = cells[k]
        low = max(filled.get((r, c - 1), 1), filled.get((r - 1, c), 0) + 1)
        for v in range(low, max_entry + 1):
            filled[(r, c)] = v
            yield from rec(k + 1)
        filled.pop((r, c), None)

    yield from rec(0)


def has_three_equal_parts(parts: Sequence[int]) -> bool:
    return any(a == b == c for a, b, c in zip(parts, parts[1:], parts[2:]))


def shape_pair(
    mu: Partition | Sequence[int], nu: Partition | Sequence[int]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(mu, nu) as equal-length tuples, n = number of nonzero parts of mu."""
    mu = mu if isinstance(mu, Partition) else Partition(mu)
    nu = nu if isinstance(nu, Partition) else Partition(nu)
    n = len(mu)
    if len(nu) > n:
        raise ValueError(f"nu={nu} is longer than mu={mu}")
    return mu.padded(n), nu.padded(n)
