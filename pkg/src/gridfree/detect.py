"""Detectors for the forbidden configurations.

* find_grid: the 3x3 grid, three pairwise disjoint "row" edges and three
  pairwise disjoint "column" edges on the same nine vertices, every row
  meeting every column in exactly one vertex.
* find_prism: the nine-vertex, six-edge double-triangle pattern.
* two_core: iterated removal of vertices of degree <= 1 (order
  independent), keeping the maximal sub-hypergraph of minimum degree 2.
* find_small_two_core: bounded exhaustive search for a non-empty edge
  subset spanning at most max_vertices vertices in which every covered
  vertex has degree >= 2.

The searches are exhaustive and return deterministic, lexicographically
least witnesses; they are meant for desk-scale instances, not for
certifying large constructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .hypergraph import Hypergraph3, degrees

__all__ = [
    "GridWitness",
    "CoreWitness",
    "find_grid",
    "find_prism",
    "two_core",
    "find_small_two_core",
    "grid_fixture",
    "prism_fixture",
    "pasch_fixture",
]

# Canonical witnesses, used as fixtures throughout the test suite.
GRID_EDGES = ((0, 1, 2), (0, 3, 6), (1, 4, 7), (2, 5, 8), (3, 4, 5), (6, 7, 8))
PRISM_EDGES = ((0, 1, 2), (0, 3, 6), (1, 4, 5), (2, 5, 8), (3, 4, 7), (6, 7, 8))
PASCH_EDGES = ((0, 1, 2), (0, 3, 4), (1, 3, 5), (2, 4, 5))

# Prism pattern in search order: after the first edge every later one
# shares a label with what is already placed.
_PRISM_TEMPLATE = ((0, 1, 2), (0, 3, 6), (1, 4, 5), (2, 5, 8), (3, 4, 7), (6, 7, 8))


def grid_fixture() -> Hypergraph3:
    return Hypergraph3.from_edges(9, GRID_EDGES)


def prism_fixture() -> Hypergraph3:
    return Hypergraph3.from_edges(9, PRISM_EDGES)


def pasch_fixture() -> Hypergraph3:
    return Hypergraph3.from_edges(6, PASCH_EDGES)


@dataclass(frozen=True)
class GridWitness:
    """Edge indices of a found grid: rows and cols ascending, plus the nine
    covered vertex ids."""

    rows: tuple[int, int, int]
    cols: tuple[int, int, int]
    vertices: tuple[int, ...]

    def validate(self, h: Hypergraph3) -> None:
        """Re-verify every grid property against the host hypergraph."""
        idx = self.rows + self.cols
        if len(set(idx)) != 6:
            raise ValueError("witness must use six distinct edges")
        rows = [set(h.edges[i]) for i in self.rows]
        cols = [set(h.edges[i]) for i in self.cols]
        for group in (rows, cols):
            for s, t in combinations(group, 2):
                if s & t:
                    raise ValueError("rows and cols must each be pairwise disjoint")
        for r in rows:
            for c in cols:
                if len(r & c) != 1:
                    raise ValueError("every row must meet every col exactly once")
        cover = set().union(*rows)
        if cover != set().union(*cols) or len(cover) != 9:
            raise ValueError("rows and cols must cover the same nine vertices")
        if tuple(sorted(cover)) != self.vertices:
            raise ValueError("vertex list does not match the covered set")

    def to_json_dict(self) -> dict:
        return {
            "rows": list(self.rows),
            "cols": list(self.cols),
            "vertices": list(self.vertices),
        }


@dataclass(frozen=True)
class CoreWitness:
    """An edge subset in which every covered vertex has degree >= 2.

    degrees is aligned with the sorted vertex tuple.
    """

    edges: tuple[int, ...]
    vertices: tuple[int, ...]
    degrees: tuple[int, ...]

    def validate(self, h: Hypergraph3, max_vertices: int | None = None) -> None:
        if len(set(self.edges)) != len(self.edges) or not self.edges:
            raise ValueError("witness needs a non-empty set of distinct edges")
        deg: dict[int, int] = {}
        for i in self.edges:
            for v in h.edges[i]:
                deg[v] = deg.get(v, 0) + 1
        if tuple(sorted(deg)) != self.vertices:
            raise ValueError("vertex list does not match the covered set")
        if tuple(deg[v] for v in self.vertices) != self.degrees:
            raise ValueError("recorded degrees are wrong")
        if min(self.degrees) < 2:
            raise ValueError("a covered vertex has degree < 2")
        if max_vertices is not None and len(self.vertices) > max_vertices:
            raise ValueError("witness exceeds the vertex budget")

    def to_json_dict(self) -> dict:
        return {
            "edges": list(self.edges),
            "vertices": list(self.vertices),
            "degrees": list(self.degrees),
        }


def _masks(h: Hypergraph3) -> list[int]:
    out = []
    for a, b, c in h.edges:
        out.append((1 << a) | (1 << b) | (1 << c))
    return out


def _bits(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def find_grid(h: Hypergraph3) -> GridWitness | None:
    """Exhaustive grid search; returns the lexicographically least witness
    (by the sorted row indices, then the sorted col indices) or None."""
    m = len(h.edges)
    masks = _masks(h)
    for i in range(m - 2):
        mi = masks[i]
        for j in range(i + 1, m - 1):
            mj = masks[j]
            if mi & mj:
                continue
            mij = mi | mj
            for k in range(j + 1, m):
                mk = masks[k]
                if mij & mk:
                    continue
                union = mij | mk
                cols = _grid_cols(masks, (mi, mj, mk), union)
                if cols is not None:
                    return GridWitness(
                        rows=(i, j, k),
                        cols=cols,
                        vertices=tuple(_bits(union)),
                    )
    return None


def _grid_cols(masks, row_masks, union):
    cand = [
        e
        for e, me in enumerate(masks)
        if me | union == union
        and all((me & r).bit_count() == 1 for r in row_masks)
    ]
    for c1, c2, c3 in combinations(cand, 3):
        m1, m2, m3 = masks[c1], masks[c2], masks[c3]
        if m1 & m2 or (m1 | m2) & m3:
            continue
        return (c1, c2, c3)
    return None


def find_prism(h: Hypergraph3) -> CoreWitness | None:
    """Search for the prism pattern; smallest witness by sorted edge indices."""
    found = _match_pattern(h, _PRISM_TEMPLATE)
    if found is None:
        return None
    return _core_witness(h, found)


def _core_witness(h: Hypergraph3, edge_idx: tuple[int, ...]) -> CoreWitness:
    deg: dict[int, int] = {}
    for i in edge_idx:
        for v in h.edges[i]:
            deg[v] = deg.get(v, 0) + 1
    verts = tuple(sorted(deg))
    return CoreWitness(
        edges=tuple(sorted(edge_idx)),
        vertices=verts,
        degrees=tuple(deg[v] for v in verts),
    )


def _match_pattern(h: Hypergraph3, template) -> tuple[int, ...] | None:
    """All-embeddings backtracking matcher; returns the minimal sorted
    edge-index tuple over every injective label-to-vertex embedding."""
    m = len(h.edges)
    incident: dict[int, set[int]] = {}
    for ei, e in enumerate(h.edges):
        for v in e:
            incident.setdefault(v, set()).add(ei)
    n_labels = 1 + max(l for t in template for l in t)
    assign: list[int | None] = [None] * n_labels
    used_v: set[int] = set()
    used_e: set[int] = set()
    best: list[tuple[int, ...] | None] = [None]

    def place(slot: int) -> None:
        if slot == len(template):
            key = tuple(sorted(used_e))
            if best[0] is None or key < best[0]:
                best[0] = key
            return
        labels = template[slot]
        bound = [assign[l] for l in labels if assign[l] is not None]
        free = [l for l in labels if assign[l] is None]
        if bound:
            cand = set.intersection(*(incident.get(v, set()) for v in bound))
        else:
            cand = set(range(m))
        for ei in sorted(cand - used_e):
            rest = [v for v in h.edges[ei] if v not in bound]
            if len(rest) != len(free):
                continue
            for perm in permutations(rest):
                if any(v in used_v for v in perm):
                    continue
                for l, v in zip(free, perm):
                    assign[l] = v
                    used_v.add(v)
                used_e.add(ei)
                place(slot + 1)
                used_e.discard(ei)
                for l in free:
                    used_v.discard(assign[l])
                    assign[l] = None

    place(0)
    return best[0]


def two_core(h: Hypergraph3) -> Hypergraph3:
    """Iteratively peel vertices of degree <= 1; the surviving vertices are
    relabelled by ascending original id, so the result is a standalone
    hypergraph of minimum degree >= 2 (possibly with zero vertices).
    Peeling is confluent, so the removal order cannot matter."""
    deg = degrees(h)
    alive = [True] * len(h.edges)
    incident: list[list[int]] = [[] for _ in range(h.n)]
    for ei, e in enumerate(h.edges):
        for v in e:
            incident[v].append(ei)
    stack = [v for v in range(h.n) if deg[v] <= 1]
    while stack:
        v = stack.pop()
        for ei in incident[v]:
            if not alive[ei]:
                continue
            alive[ei] = False
            for u in h.edges[ei]:
                deg[u] -= 1
                if deg[u] == 1:
                    stack.append(u)
    kept = [v for v in range(h.n) if deg[v] >= 2]
    relabel = {v: i for i, v in enumerate(kept)}
    edges = [
        (relabel[a], relabel[b], relabel[c])
        for ei, (a, b, c) in enumerate(h.edges)
        if alive[ei]
    ]
    return Hypergraph3.from_edges(len(kept), edges)


def find_small_two_core(h: Hypergraph3, max_vertices: int = 9) -> CoreWitness | None:
    """Lexicographic depth-first search over edge subsets spanning at most
    max_vertices vertices; accepts as soon as every covered vertex has
    degree >= 2.  Returns the lexicographically least witness (by sorted
    edge indices) or None.

    max_vertices must lie in [4, 10]; the search is exponential in
    principle and intended for small instances only.
    """
    if not 4 <= max_vertices <= 10:
        raise ValueError(f"max_vertices must be in [4, 10], got {max_vertices}")
    m = len(h.edges)
    masks = _masks(h)
    # Highest edge index covering each vertex: lets the search drop any
    # branch whose degree-1 vertex can never be healed by a later edge.
    last_with: dict[int, int] = {}
    for ei, e in enumerate(h.edges):
        for v in e:
            last_with[v] = ei
    deg: dict[int, int] = {}
    chosen: list[int] = []

    def dfs(last: int, union: int, nverts: int) -> bool:
        for ei in range(last + 1, m):
            new_union = union | masks[ei]
            if new_union == union:
                nv = nverts
            else:
                nv = new_union.bit_count()
                if nv > max_vertices:
                    continue
            chosen.append(ei)
            for v in h.edges[ei]:
                deg[v] = deg.get(v, 0) + 1
            if all(d >= 2 for d in deg.values()):
                return True
            fixable = all(
                d >= 2 or last_with[v] > ei for v, d in deg.items()
            )
            if fixable and dfs(ei, new_union, nv):
                return True
            for v in h.edges[ei]:
                deg[v] -= 1
                if deg[v] == 0:
                    del deg[v]
            chosen.pop()
        return False

    if dfs(-1, 0, 0):
        return _core_witness(h, tuple(chosen))
    return None
