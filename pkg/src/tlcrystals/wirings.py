"""Lattice networks G_{mu,nu}, their wirings, and the diagram of a wiring.

Paths run west and south.  Path i starts at (mu_i, m+1), ends at (nu_i, 1)
and takes one westward step per unit of mu_i - nu_i; the k-th step (from
column nu_i + k to nu_i + k - 1) happens at height ``step_heights[k-1]``.
Heights weakly increase with k, and a horizontal step at height h carries
the weight x_h.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from .partitions import Partition, has_three_equal_parts, shape_pair
from .sympoly import SymPoly, h_poly
from .temperley_lieb import NoncrossingMatching, _UnionFind

Vertex = tuple[int, int]
Edge = tuple[Vertex, Vertex]


class WiringError(ValueError):
    pass


@dataclass(frozen=True)
class LatticePath:
    source_col: int
    sink_col: int
    step_heights: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "step_heights", tuple(self.step_heights))
        if len(self.step_heights) != self.source_col - self.sink_col:
            raise WiringError(
                f"path {self.source_col}->{self.sink_col} needs {self.source_col - self.sink_col} steps"
            )
        h = self.step_heights
        if any(a > b for a, b in zip(h, h[1:])) or any(x < 1 for x in h):
            raise WiringError(f"step heights must be positive and weakly increasing: {h}")

    def edges(self, m: int) -> list[Edge]:
        """Edges of the embedding with the source at height m+1."""
        if any(x > m for x in self.step_heights):
            raise WiringError(f"step height above m={m}: {self.step_heights}")
        out: list[Edge] = []
        col, y = self.source_col, m + 1
        for k in range(len(self.step_heights), 0, -1):
            h = self.step_heights[k - 1]
            while y > h:
                out.append(((col, y), (col, y - 1)))
                y -= 1
            out.append(((col, y), (col - 1, y)))
            col -= 1
        while y > 1:
            out.append(((col, y), (col, y - 1)))
            y -= 1
        return out

    def vertices(self, m: int) -> list[Vertex]:
        es = self.edges(m)
        if not es:
            return [(self.source_col, m + 1)]
        return [es[0][0]] + [v for _, v in es]

    def exponents(self, m: int) -> tuple[int, ...]:
        exps = [0] * m
        for h in self.step_heights:
            exps[h - 1] += 1
        return tuple(exps)


@dataclass(frozen=True)
class Wiring:
    mu: tuple[int, ...]
    nu: tuple[int, ...]
    m: int
    paths: tuple[LatticePath, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "paths", tuple(self.paths))
        if len(self.paths) != len(self.mu) or len(self.mu) != len(self.nu):
            raise WiringError("wiring needs one path per source")
        for p, a, b in zip(self.paths, self.mu, self.nu):
            if (p.source_col, p.sink_col) != (a, b):
                raise WiringError(f"path {p} does not join {a} to {b}")
        if has_three_equal_parts(self.mu) or has_three_equal_parts(self.nu):
            raise WiringError("immanant support undefined: three equal parts")
        busiest = max(vertex_occupancy(self).values(), default=0)
        if busiest > 2:
            raise WiringError("three paths share a vertex")

    @property
    def n(self) -> int:
        return len(self.mu)

    def edge_counts(self) -> Counter[Edge]:
        return Counter(e for p in self.paths for e in p.edges(self.m))

    def key(self) -> tuple:
        """Identifies the wiring as a subgraph with multiplicities."""
        return tuple(sorted(self.edge_counts().items()))

    def weight(self) -> SymPoly:
        exps = [0] * self.m
        for p in self.paths:
            for h in p.step_heights:
                exps[h - 1] += 1
        return SymPoly.monomial(exps)

    def to_json(self) -> dict:
        return {
            "mu": list(self.mu),
            "nu": list(self.nu),
            "m": self.m,
            "paths": [list(p.step_heights) for p in self.paths],
        }

    @classmethod
    def from_json(cls, data: dict) -> Wiring:
        mu, nu = tuple(data["mu"]), tuple(data["nu"])
        paths = [LatticePath(a, b, tuple(h)) for a, b, h in zip(mu, nu, data["paths"])]
        return cls(mu, nu, int(data["m"]), tuple(paths))


def vertex_occupancy(w: Wiring) -> Counter[Vertex]:
    occ: Counter[Vertex] = Counter()
    for p in w.paths:
        occ.update(set(p.vertices(w.m)))
    return occ


@dataclass(frozen=True)
class DiagramResult:
    matching: NoncrossingMatching
    loops: int


def jt_matrix(mu: Partition | Sequence[int], nu: Partition | Sequence[int], m: int) -> list[list[SymPoly]]:
    """Generalized Jacobi-Trudi matrix (h_{mu_i - nu_j}) in m variables."""
    mu, nu = shape_pair(mu, nu)
    return [[h_poly(a - b, m) for b in nu] for a in mu]


def _check_shape(mu: tuple[int, ...], nu: tuple[int, ...]) -> None:
    if has_three_equal_parts(mu) or has_three_equal_parts(nu):
        raise WiringError("immanant support undefined: mu or nu has three equal parts")
    if any(b > a for a, b in zip(mu, nu)):
        raise WiringError(f"nu={nu} is not contained in mu={mu}")


def _height_sequences(length: int, m: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations_with_replacement(range(1, m + 1), length))


def iter_path_tuples(mu: Sequence[int], nu: Sequence[int], m: int) -> Iterator[tuple[LatticePath, ...]]:
    """Every tuple of paths with vertex occupancy at most two, lexicographic."""
    options = [
        [LatticePath(a, b, h) for h in _height_sequences(a - b, m)] for a, b in zip(mu, nu)
    ]
    occ: Counter[Vertex] = Counter()
    chosen: list[LatticePath] = []

    def rec(i: int) -> Iterator[tuple[LatticePath, ...]]:
        if i == len(options):
            yield tuple(chosen)
            return
        for p in options[i]:
            vs = set(p.vertices(m))
            if any(occ[v] >= 2 for v in vs):
                continue
            occ.update(vs)
            chosen.append(p)
            yield from rec(i + 1)
            chosen.pop()
            occ.subtract(vs)

    yield from rec(0)


def enumerate_wirings(mu: Partition | Sequence[int], nu: Partition | Sequence[int], m: int) -> list[Wiring]:
    """All wirings of G_{mu,nu} with heights in 1..m.

    Two path tuples that cover the same edges with the same multiplicities
    are one wiring; the lexicographically first tuple represents it.
    """
    mu, nu = shape_pair(mu, nu)
    _check_shape(mu, nu)
    seen = set()
    out = []
    for paths in iter_path_tuples(mu, nu, m):
        w = Wiring(mu, nu, m, paths)
        k = w.key()
        if k not in seen:
            seen.add(k)
            out.append(w)
    return out


def diagram_of_wiring(w: Wiring) -> DiagramResult:
    """Temperley-Lieb type and loop count of a wiring.

    Doubly covered edges are contracted; at each node with two incoming and
    two outgoing strands the incoming pair is joined and the outgoing pair is
    joined.  Strands are then traced between the boundary stubs.
    """
    counts = w.edge_counts()
    occ = vertex_occupancy(w)
    if any(c > 2 for c in occ.values()) or any(c > 2 for c in counts.values()):
        raise WiringError("three paths share a vertex")

    vertices = sorted(occ)
    vindex = {v: k for k, v in enumerate(vertices)}
    nodes = _UnionFind(len(vertices))
    for (u, v), c in counts.items():
        if c == 2:
            nodes.union(vindex[u], vindex[v])

    # segments: single edges, then source stubs, then sink stubs
    singles = [e for e, c in counts.items() if c == 1]
    labels: dict[int, tuple[str, int]] = {}
    ins: dict[int, list[int]] = {}
    outs: dict[int, list[int]] = {}
    for s, (u, v) in enumerate(singles):
        outs.setdefault(nodes.find(vindex[u]), []).append(s)
        ins.setdefault(nodes.find(vindex[v]), []).append(s)
    seg = len(singles)
    for i, p in enumerate(w.paths, 1):
        vs = p.vertices(w.m)
        labels[seg] = ("L", i)
        ins.setdefault(nodes.find(vindex[vs[0]]), []).append(seg)
        labels[seg + 1] = ("R", i)
        outs.setdefault(nodes.find(vindex[vs[-1]]), []).append(seg + 1)
        seg += 2

    strands = _UnionFind(seg)
    for node in set(ins) | set(outs):
        a, b = ins.get(node, []), outs.get(node, [])
        if len(a) == 1 and len(b) == 1:
            strands.union(a[0], b[0])
        elif len(a) == 2 and len(b) == 2:
            strands.union(a[0], a[1])
            strands.union(b[0], b[1])
        else:
            raise WiringError(f"node with {len(a)} incoming and {len(b)} outgoing strands")

    groups: dict[int, list[int]] = {}
    for s in range(seg):
        groups.setdefault(strands.find(s), []).append(s)
    pairs = []
    loops = 0
    for members in groups.values():
        ends = [labels[s] for s in members if s in labels]
        if not ends:
            loops += 1
        elif len(ends) == 2:
            pairs.append(tuple(ends))
        else:
            raise WiringError(f"strand with {len(ends)} boundary ends")
    return DiagramResult(NoncrossingMatching(w.n, pairs), loops)
