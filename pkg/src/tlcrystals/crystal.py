"""Crystal operators on shuffle tableaux and a Stembridge axiom checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .partitions import Partition
from .shuffle import ShuffleTableau, content_weight, enumerate_shuffle, shape_pair
from .sympoly import SymPoly, poly_sum
from .temperley_lieb import _UnionFind


class CrystalError(RuntimeError):
    pass


Cell = tuple[int, int]


@dataclass(frozen=True)
class ReadingWord:
    color: int
    tokens: tuple[tuple[int, Cell], ...]

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.tokens)


def reading_word(t: ShuffleTableau, i: int) -> ReadingWord:
    """The i-word: cells holding i or i+1, minus (i, i+1)-overlaps, read bottom to top."""
    if i < 1:
        raise ValueError("color must be positive")
    columns: dict[int, list[tuple[int, int]]] = {}
    for r, c, v in t.cells():
        columns.setdefault(c, []).append((r, v))
    skip: set[Cell] = set()
    for c, cells in columns.items():
        for (r1, v1), (r2, v2) in zip(cells, cells[1:]):
            if v1 == i and v2 == i + 1:
                skip.add((r1, c))
                skip.add((r2, c))
    tokens = []
    for r in range(t.nrows, 0, -1):
        s, es = t.rows[r - 1]
        for k, v in enumerate(es):
            cell = (r, s + 2 * k)
            if v in (i, i + 1) and cell not in skip:
                tokens.append((v, cell))
    return ReadingWord(i, tuple(tokens))


def unmatched(word: ReadingWord) -> tuple[list[int], list[int]]:
    """Token indices of unmatched i's and unmatched (i+1)'s.

    An i closes the nearest open i+1 to its left.
    """
    i = word.color
    opens: list[int] = []
    closes: list[int] = []
    for k, (v, _) in enumerate(word.tokens):
        if v == i + 1:
            opens.append(k)
        elif opens:
            opens.pop()
        else:
            closes.append(k)
    return closes, opens


def apply_crystal_op(t: ShuffleTableau, i: int, direction: str) -> ShuffleTableau | None:
    """E_i (``raise``) or F_i (``lower``); None when the operator does not apply."""
    word = reading_word(t, i)
    low, high = unmatched(word)
    if direction == "raise":
        if not high:
            return None
        _, (r, c) = word.tokens[high[0]]
        value = i
    elif direction == "lower":
        if not low:
            return None
        _, (r, c) = word.tokens[low[-1]]
        value = i + 1
    else:
        raise ValueError(f"unknown direction {direction!r}")
    try:
        return t.with_entry(r, c, value)
    except ValueError as exc:
        raise CrystalError(f"crystal operator produced an invalid tableau: {exc}") from exc


@dataclass(frozen=True)
class StringStats:
    delta: int
    epsilon: int


def string_stats(t: ShuffleTableau, i: int) -> StringStats:
    """Walks the i-string through t in both directions."""
    up = 0
    x = apply_crystal_op(t, i, "raise")
    while x is not None:
        up += 1
        x = apply_crystal_op(x, i, "raise")
    down = 0
    x = apply_crystal_op(t, i, "lower")
    while x is not None:
        down += 1
        x = apply_crystal_op(x, i, "lower")
    return StringStats(-up, down)


def is_yamanouchi(t: ShuffleTableau) -> bool:
    return all(apply_crystal_op(t, i, "raise") is None for i in range(1, t.max_entry() + 1))


@dataclass
class CrystalGraph:
    m: int
    vertices: list[ShuffleTableau]
    edges: list[tuple[str, int, str]]  # (x, i, y) meaning F_i x = y
    components: list[list[str]] = field(default_factory=list)

    @property
    def colors(self) -> range:
        return range(1, self.m)

    def by_key(self) -> dict[str, ShuffleTableau]:
        return {str(v): v for v in self.vertices}

    def component_of(self) -> dict[str, int]:
        return {k: n for n, comp in enumerate(self.components) for k in comp}


def _components(keys: Sequence[str], edges: Iterable[tuple[str, int, str]]) -> list[list[str]]:
    index = {k: n for n, k in enumerate(keys)}
    uf = _UnionFind(len(keys))
    for x, _, y in edges:
        uf.union(index[x], index[y])
    groups: dict[int, list[str]] = {}
    for k in keys:
        groups.setdefault(uf.find(index[k]), []).append(k)
    return list(groups.values())


def build_graph(
    mu: Partition | Sequence[int], nu: Partition | Sequence[int], m: int | None = None
) -> CrystalGraph:
    """Crystal graph on all shuffle tableaux of shape mu ⊘ nu; m defaults to the degree."""
    a, b = shape_pair(mu, nu)
    if m is None:
        m = max(sum(a) - sum(b), 1)
    vertices = enumerate_shuffle(a, b, m)
    keys = [str(v) for v in vertices]
    edges = []
    for v, k in zip(vertices, keys):
        for i in range(1, m):
            y = apply_crystal_op(v, i, "lower")
            if y is not None:
                edges.append((k, i, str(y)))
    g = CrystalGraph(m, vertices, edges)
    g.components = _components(keys, edges)
    return g


def graph_from_edges(m: int, vertices: Sequence[ShuffleTableau], edges) -> CrystalGraph:
    g = CrystalGraph(m, list(vertices), list(edges))
    g.components = _components([str(v) for v in vertices], g.edges)
    return g


# Stembridge axioms -------------------------------------------------------


def cartan(i: int, j: int) -> int:
    if i == j:
        return 2
    return -1 if abs(i - j) == 1 else 0


class _Walker:
    """Partial maps E_i, F_i read off an edge list."""

    def __init__(self, keys: Sequence[str], edges: Iterable[tuple[str, int, str]]) -> None:
        self.keys = list(keys)
        self.f: dict[tuple[str, int], str] = {}
        self.e: dict[tuple[str, int], str] = {}
        self.p2: list[tuple[str, int]] = []
        for x, i, y in edges:
            if (x, i) in self.f:
                self.p2.append((x, i))
            else:
                self.f[(x, i)] = y
            if (y, i) in self.e:
                self.p2.append((y, i))
            else:
                self.e[(y, i)] = x
        self.limit = len(self.keys) + 1

    def E(self, x: str | None, i: int) -> str | None:
        return None if x is None else self.e.get((x, i))

    def F(self, x: str | None, i: int) -> str | None:
        return None if x is None else self.f.get((x, i))

    def _walk(self, table, x: str, i: int) -> int | None:
        steps = 0
        while (x, i) in table:
            x = table[(x, i)]
            steps += 1
            if steps > self.limit:
                return None
        return steps

    def delta(self, x: str, i: int) -> int:
        d = self._walk(self.e, x, i)
        return -(d if d is not None else self.limit)

    def eps(self, x: str, i: int) -> int:
        d = self._walk(self.f, x, i)
        return d if d is not None else self.limit

    def has_cycle(self, x: str, i: int) -> bool:
        return self._walk(self.f, x, i) is None


def verify_stembridge(g: CrystalGraph) -> list[dict]:
    """Every violation of P1-P6, P5', P6' as {axiom, vertex, colors}; empty means pass."""
    keys = [str(v) for v in g.vertices]
    w = _Walker(keys, g.edges)
    report: list[dict] = []

    def bad(axiom: str, x: str, *colors: int) -> None:
        report.append({"axiom": axiom, "vertex": x, "colors": list(colors)})

    for x, i in w.p2:
        bad("P2", x, i)
    colors = list(g.colors)
    for x in keys:
        for i in colors:
            if w.has_cycle(x, i):
                bad("P1", x, i)
    if any(r["axiom"] == "P1" for r in report):
        return report

    E, F, delta, eps = w.E, w.F, w.delta, w.eps
    for x in keys:
        for i in colors:
            for j in colors:
                if i == j:
                    continue
                ex = E(x, i)
                if ex is not None:
                    d_delta = delta(ex, j) - delta(x, j)
                    d_eps = eps(ex, j) - eps(x, j)
                    if d_delta + d_eps != cartan(i, j):
                        bad("P3", x, i, j)
                    if d_delta > 0 or d_eps > 0:
                        bad("P4", x, i, j)
                fx, ey = F(x, i), E(x, j)
                if ex is not None and ey is not None:
                    di = delta(ex, j) - delta(x, j)
                    dj = delta(ey, i) - delta(x, i)
                    if di == 0:
                        y = E(ey, i)
                        if y is None or y != E(ex, j):
                            bad("P5", x, i, j)
                        elif F(y, j) is None or eps(y, i) - eps(F(y, j), i) != 0:
                            bad("P5", x, i, j)
                    if di == -1 and dj == -1:
                        y1 = E(E(E(ex, j), j), i)
                        y2 = E(E(E(ey, i), i), j)
                        if y1 is None or y1 != y2:
                            bad("P6", x, i, j)
                        else:
                            fi, fj = F(y1, i), F(y1, j)
                            if fi is None or fj is None:
                                bad("P6", x, i, j)
                            elif eps(y1, j) - eps(fi, j) != -1 or eps(y1, i) - eps(fj, i) != -1:
                                bad("P6", x, i, j)
                fy = F(x, j)
                if fx is not None and fy is not None:
                    ni = eps(x, j) - eps(fx, j)
                    nj = eps(x, i) - eps(fy, i)
                    if ni == 0:
                        y = F(fy, i)
                        if y is None or y != F(fx, j):
                            bad("P5'", x, i, j)
                        elif E(y, j) is None or delta(E(y, j), i) - delta(y, i) != 0:
                            bad("P5'", x, i, j)
                    if ni == -1 and nj == -1:
                        y1 = F(F(F(fx, j), j), i)
                        y2 = F(F(F(fy, i), i), j)
                        if y1 is None or y1 != y2:
                            bad("P6'", x, i, j)
                        else:
                            ei, ej = E(y1, i), E(y1, j)
                            if ei is None or ej is None:
                                bad("P6'", x, i, j)
                            elif delta(ei, j) - delta(y1, j) != -1 or delta(ej, i) - delta(y1, i) != -1:
                                bad("P6'", x, i, j)
    return report


def component_character(g: CrystalGraph, component: Sequence[str]) -> SymPoly:
    table = g.by_key()
    return poly_sum((content_weight(table[k], g.m)[1] for k in component), g.m)


def highest_weights(g: CrystalGraph, component: Sequence[str]) -> list[ShuffleTableau]:
    table = g.by_key()
    return [table[k] for k in component if is_yamanouchi(table[k])]


def export_dot(g: CrystalGraph) -> str:
    """One DOT digraph per component, in the order of the components list."""
    lines = []
    for n, comp in enumerate(g.components):
        members = set(comp)
        lines.append(f"digraph component_{n} {{")
        for k in comp:
            lines.append(f'  "{k}";')
        for x, i, y in g.edges:
            if x in members:
                lines.append(f'  "{x}" -> "{y}" [label={i}];')
        lines.append("}")
    return "\n".join(lines) + "\n"
