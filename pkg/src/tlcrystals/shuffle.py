"""Shuffle tableaux: two interleaved skew tableaux on a checkerboard.

A red tableau occupies odd rows and odd columns, a blue tableau even rows
and even columns.  Row r of a shuffle tableau is stored as its start column
and its entries; cells in a row are two columns apart.

Column positions are only meaningful up to an even horizontal translation.
Tableaux produced here are normalized so that the smallest start column is
1 or 2, which keeps every column positive.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .partitions import (
    Partition,
    SkewShape,
    SkewSSYT,
    has_three_equal_parts,
    iter_skew_fillings,
    shape_pair,
    skew_interleaves,
)
from .sympoly import SymPoly
from .wirings import DiagramResult, LatticePath, Wiring, diagram_of_wiring


class ShuffleError(ValueError):
    pass


Row = tuple[int, tuple[int, ...]]


def _ceil_half(n: int) -> int:
    return (n + 1) // 2


@dataclass(frozen=True)
class ShuffleTableau:
    rows: tuple[Row, ...]

    def __post_init__(self) -> None:
        rows = tuple((int(s), tuple(int(e) for e in es)) for s, es in self.rows)
        object.__setattr__(self, "rows", rows)
        problem = _validation_problem(rows)
        if problem:
            raise ShuffleError(f"invalid shuffle tableau {self}: {problem}")

    @classmethod
    def _trusted(cls, rows: tuple[Row, ...]) -> ShuffleTableau:
        t = object.__new__(cls)
        object.__setattr__(t, "rows", rows)
        return t

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def start(self, r: int) -> int:
        return self.rows[r - 1][0]

    def end(self, r: int) -> int:
        s, es = self.rows[r - 1]
        return s + 2 * (len(es) - 1)

    def cells(self) -> Iterator[tuple[int, int, int]]:
        """(row, col, value) for every cell, rows top to bottom."""
        for r, (s, es) in enumerate(self.rows, 1):
            for k, e in enumerate(es):
                yield r, s + 2 * k, e

    def entry(self, row: int, col: int) -> int | None:
        if not 1 <= row <= len(self.rows):
            return None
        s, es = self.rows[row - 1]
        k, odd = divmod(col - s, 2)
        if odd or not 0 <= k < len(es):
            return None
        return es[k]

    def with_entry(self, row: int, col: int, value: int) -> ShuffleTableau:
        s, es = self.rows[row - 1]
        k = (col - s) // 2
        new = es[:k] + (value,) + es[k + 1 :]
        rows = self.rows[: row - 1] + ((s, new),) + self.rows[row:]
        return ShuffleTableau(rows)

    def max_entry(self) -> int:
        return max((e for _, es in self.rows for e in es), default=0)

    def sort_key(self) -> tuple:
        return self.rows

    def __str__(self) -> str:
        return ";".join(f"c{s}:" + ",".join(str(e) for e in es) for s, es in self.rows)

    @classmethod
    def parse(cls, text: str) -> ShuffleTableau:
        rows = []
        for chunk in text.strip().split(";"):
            chunk = chunk.strip()
            if not chunk.startswith("c") or ":" not in chunk:
                raise ShuffleError(f"malformed tableau row {chunk!r}")
            start, body = chunk[1:].split(":", 1)
            try:
                entries = tuple(int(x) for x in body.split(",")) if body.strip() else ()
                rows.append((int(start), entries))
            except ValueError:
                raise ShuffleError(f"malformed tableau row {chunk!r}") from None
        return cls(tuple(rows))

    def to_json(self) -> dict:
        return {"rows": [{"start": s, "entries": list(es)} for s, es in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> ShuffleTableau:
        return cls(tuple((r["start"], tuple(r["entries"])) for r in data["rows"]))

    def to_text_json(self) -> str:
        return json.dumps(self.to_json())


def _shape_from_columns(rows: Sequence[Row]) -> tuple[list[int], list[int]]:
    """(mu, nu) from start/end columns, without any validity checks."""
    c = _ceil_half(len(rows))
    mu, nu = [], []
    for r, (s, es) in enumerate(rows, 1):
        end = s + 2 * (len(es) - 1)
        i = (r - 1) // 2
        if r % 2:
            nu.append((s - 1) // 2 + c - i)
            mu.append((end + 1) // 2 + c - i)
        else:
            nu.append((s - 2) // 2 + c - i)
            mu.append(end // 2 + c - i)
    return mu, nu


def _validation_problem(rows: tuple[Row, ...]) -> str | None:
    for r, (s, es) in enumerate(rows, 1):
        if s < 1:
            return f"row {r} starts at column {s} < 1"
        if (s - r) % 2:
            return f"row {r} starts at column {s} of the wrong parity"
        if any(e < 1 for e in es):
            return f"row {r} has a nonpositive entry"
        if any(a > b for a, b in zip(es, es[1:])):
            return f"row {r} is not weakly increasing"
    for r in range(1, len(rows) - 1):
        s_up, up = rows[r - 1]
        s_dn, dn = rows[r + 1]
        for k, e in enumerate(up):
            j = (s_up + 2 * k - s_dn) // 2
            if 0 <= j < len(dn) and dn[j] <= e:
                return f"column {s_up + 2 * k} not strictly increasing at row {r}"
    mu, nu = _shape_from_columns(rows)
    if any(a < b for a, b in zip(mu, mu[1:])) or any(a < b for a, b in zip(nu, nu[1:])):
        return f"recovered shape {mu}/{nu} is not a pair of partitions"
    if has_three_equal_parts(mu) or has_three_equal_parts(nu):
        return f"recovered shape {mu}/{nu} has three equal parts"
    return None


def is_valid_rows(rows: Sequence[Row]) -> bool:
    rows = tuple((s, tuple(es)) for s, es in rows)
    return _validation_problem(rows) is None


@dataclass(frozen=True)
class ShufflePair:
    red: SkewSSYT
    blue: SkewSSYT

    def __post_init__(self) -> None:
        if not skew_interleaves(self.blue.shape, self.red.shape):
            raise ShuffleError(
                f"blue shape {self.blue.shape} does not interleave red shape {self.red.shape}"
            )


@dataclass(frozen=True)
class ShapeParams:
    mu: tuple[int, ...]
    nu: tuple[int, ...]
    columns: tuple[tuple[int, int], ...]  # (start, end) per row
    red: SkewShape
    blue: SkewShape


def shape_params(mu: Partition | Sequence[int], nu: Partition | Sequence[int]) -> ShapeParams:
    """Row columns and the red/blue skew shapes of the shape mu ⊘ nu."""
    try:
        mu, nu = shape_pair(mu, nu)
    except ValueError as exc:
        raise ShuffleError(f"not a valid shuffle shape: {exc}") from None
    if has_three_equal_parts(mu) or has_three_equal_parts(nu):
        raise ShuffleError("not a valid shuffle shape: three equal parts")
    if any(b > a for a, b in zip(mu, nu)):
        raise ShuffleError(f"not a valid shuffle shape: {nu} not inside {mu}")
    n = len(mu)
    c = _ceil_half(n)
    cols = []
    for r in range(1, n + 1):
        i = (r - 1) // 2
        a, b = mu[r - 1], nu[r - 1]
        if r % 2:
            cols.append((2 * (b - c + i) + 1, 2 * (a - c + i) - 1))
        else:
            cols.append((2 * (b - c + i) + 2, 2 * (a - c + i)))
    lo = min((s for s, _ in cols), default=1)
    shift = -2 * ((lo - 1) // 2)
    cols = [(s + shift, e + shift) for s, e in cols]

    red_in, red_out, blue_in, blue_out = [], [], [], []
    for r, (s, e) in enumerate(cols, 1):
        if r % 2:
            red_in.append((s + 1) // 2 - 1)
            red_out.append((e + 1) // 2)
        else:
            blue_in.append(s // 2 - 1)
            blue_out.append(e // 2)
    try:
        red = SkewShape(Partition(red_out), Partition(red_in), len(red_out))
        blue = SkewShape(Partition(blue_out), Partition(blue_in), len(blue_out))
    except ValueError as exc:
        raise ShuffleError(f"not a valid shuffle shape: {exc}") from None
    if not skew_interleaves(blue, red):
        raise ShuffleError("not a valid shuffle shape: blue shape does not interleave red shape")
    return ShapeParams(mu, nu, tuple(cols), red, blue)


def shape_of(t: ShuffleTableau) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(mu, nu) recovered from the row columns; defined up to a common translation."""
    mu, nu = _shape_from_columns(t.rows)
    return tuple(mu), tuple(nu)


def shuffle(pair: ShufflePair) -> ShuffleTableau:
    red_rows = [
        (2 * inner + 1, row) for (inner, _), row in zip(pair.red.shape.row_bounds(), pair.red.rows)
    ]
    blue_rows = [
        (2 * inner + 2, row) for (inner, _), row in zip(pair.blue.shape.row_bounds(), pair.blue.rows)
    ]
    rows: list[Row] = []
    for k in range(len(red_rows)):
        rows.append(red_rows[k])
        if k < len(blue_rows):
            rows.append(blue_rows[k])
    try:
        return ShuffleTableau(tuple(rows))
    except ShuffleError as exc:
        raise ShuffleError(f"invalid pair: {exc}") from None


def unshuffle(t: ShuffleTableau) -> ShufflePair:
    red_in, red_out, red_rows = [], [], []
    blue_in, blue_out, blue_rows = [], [], []
    for r, (s, es) in enumerate(t.rows, 1):
        if r % 2:
            inner = (s - 1) // 2
            red_in.append(inner)
            red_out.append(inner + len(es))
            red_rows.append(es)
        else:
            inner = (s - 2) // 2
            blue_in.append(inner)
            blue_out.append(inner + len(es))
            blue_rows.append(es)
    red = SkewSSYT(SkewShape(Partition(red_out), Partition(red_in), len(red_out)), tuple(red_rows))
    blue = SkewSSYT(
        SkewShape(Partition(blue_out), Partition(blue_in), len(blue_out)), tuple(blue_rows)
    )
    return ShufflePair(red, blue)


def _interleave_rows(params: ShapeParams, red_rows, blue_rows) -> tuple[Row, ...]:
    rows = []
    for r, (s, _) in enumerate(params.columns, 1):
        half = (r - 1) // 2
        rows.append((s, red_rows[half] if r % 2 else blue_rows[half]))
    return tuple(rows)


def enumerate_shuffle(
    mu: Partition | Sequence[int], nu: Partition | Sequence[int], m: int
) -> list[ShuffleTableau]:
    """Every shuffle tableau of shape mu ⊘ nu with entries in 1..m, in canonical order."""
    params = shape_params(mu, nu)
    reds = list(iter_skew_fillings(params.red.row_bounds(), m))
    blues = list(iter_skew_fillings(params.blue.row_bounds(), m))
    out = []
    for red_rows in reds:
        for blue_rows in blues:
            rows = _interleave_rows(params, red_rows, blue_rows)
            if _validation_problem(rows) is None:
                out.append(ShuffleTableau._trusted(rows))
    out.sort(key=ShuffleTableau.sort_key)
    return out


def to_cover(t: ShuffleTableau, m: int | None = None) -> Wiring:
    """The wiring whose path i takes its westward steps at the heights in row i."""
    top = t.max_entry()
    if m is None:
        m = max(top, 1)
    elif m < top:
        raise ShuffleError(f"m={m} is below the largest entry {top}")
    mu, nu = shape_of(t)
    paths = tuple(LatticePath(a, b, es) for a, b, (_, es) in zip(mu, nu, t.rows))
    return Wiring(mu, nu, m, paths)


def from_cover(w: Wiring) -> ShuffleTableau:
    """Inverse of :func:`to_cover`, normalized like :func:`shape_params`."""
    params = shape_params(w.mu, w.nu)
    rows = tuple((s, p.step_heights) for (s, _), p in zip(params.columns, w.paths))
    return ShuffleTableau(rows)


def tl_type(t: ShuffleTableau) -> DiagramResult:
    return diagram_of_wiring(to_cover(t))


def content_weight(t: ShuffleTableau, m: int | None = None) -> tuple[tuple[int, ...], SymPoly]:
    top = t.max_entry()
    counts = [0] * top
    for _, _, e in t.cells():
        counts[e - 1] += 1
    nvars = top if m is None else m
    if nvars < top:
        raise ShuffleError(f"m={m} is below the largest entry {top}")
    return tuple(counts), SymPoly.monomial(counts + [0] * (nvars - top))
