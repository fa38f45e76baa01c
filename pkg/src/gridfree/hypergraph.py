"""Canonical 3-uniform hypergraphs and their text serialization.

Edges are sorted triples of 0-based vertex ids, the edge list is sorted
lexicographically with no duplicates, and isolated vertices are first-class
(n is stored, not inferred).  The text format is line oriented:

    # free-form comments, only before the header
    # vertex <id> <origin> <x> <y>    (optional provenance)
    n m
    a b c        (m lines, each ascending, list sorted, trailing newline)

Linearity (every vertex pair in at most one edge) is checked in O(m) via
pair occupancy.  Densities are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ffield import FieldElement, Prime
from .geometry import AffinePoint

__all__ = [
    "FormatError",
    "Hypergraph3",
    "VertexInfo",
    "VertexMap",
    "ORIGINS",
    "is_linear",
    "density",
    "degrees",
    "min_degree",
    "encode",
    "decode",
    "decode_with_provenance",
]

ORIGINS = ("V1", "V2", "S-of-V1", "S-of-V2")


class FormatError(ValueError):
    """Malformed hypergraph text; `line` is the 1-based offending line."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Hypergraph3:
    """A canonical 3-uniform hypergraph on vertices 0..n-1."""

    n: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"vertex count must be a non-negative int, got {self.n!r}")
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        prev = None
        for e in self.edges:
            if len(e) != 3:
                raise ValueError(f"edge {e!r} is not a triple")
            a, b, c = e
            if not (a < b < c):
                raise ValueError(f"edge {e!r} is not strictly ascending")
            if a < 0 or c >= self.n:
                raise ValueError(f"edge {e!r} out of range for n={self.n}")
            if prev is not None and e <= prev:
                raise ValueError(f"edge list not sorted or has duplicates at {e!r}")
            prev = e

    @classmethod
    def from_edges(cls, n: int, edges) -> "Hypergraph3":
        """Canonicalize an iterable of vertex triples (any order, any order
        within a triple); duplicate edges are rejected."""
        canon = []
        for e in edges:
            t = tuple(sorted(e))
            if len(t) != 3 or len(set(t)) != 3:
                raise ValueError(f"edge {tuple(e)!r} must have three distinct vertices")
            canon.append(t)
        canon.sort()
        return cls(n, tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)


def is_linear(h: Hypergraph3) -> bool:
    """True when every vertex pair lies in at most one edge (O(m))."""
    seen = set()
    for a, b, c in h.edges:
        for pair in ((a, b), (a, c), (b, c)):
            if pair in seen:
                return False
            seen.add(pair)
    return True


def density(h: Hypergraph3) -> Fraction:
    """Edge density m / n^2 as an exact rational."""
    if h.n == 0:
        raise ValueError("density undefined for an empty vertex set")
    return Fraction(len(h.edges), h.n * h.n)


def degrees(h: Hypergraph3) -> list[int]:
    """Per-vertex edge counts; isolated vertices report 0."""
    deg = [0] * h.n
    for e in h.edges:
        for v in e:
            deg[v] += 1
    return deg


def min_degree(h: Hypergraph3) -> int:
    """Minimum degree over all n vertices, isolated ones included."""
    if h.n == 0:
        raise ValueError("min degree undefined for an empty vertex set")
    return min(degrees(h))


@dataclass(frozen=True)
class VertexInfo:
    """Provenance of one vertex: which point set it came from, the defining
    parameter, and the plane point itself."""

    origin: str
    x: FieldElement
    point: AffinePoint

    def __post_init__(self) -> None:
        if self.origin not in ORIGINS:
            raise ValueError(f"unknown origin {self.origin!r}")
        if self.x != self.point.x:
            raise ValueError("parameter must equal the point's x coordinate")


@dataclass(frozen=True)
class VertexMap:
    """Vertex id -> provenance, id given by position.  Points are distinct,
    so the map is a bijection onto the recorded points."""

    entries: tuple[VertexInfo, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        pts = {info.point for info in self.entries}
        if len(pts) != len(self.entries):
            raise ValueError("vertex map points must be distinct")

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> VertexInfo:
        return self.entries[i]

    @property
    def modulus(self) -> int:
        if not self.entries:
            raise ValueError("empty vertex map has no modulus")
        return self.entries[0].point.modulus.value


def encode(h: Hypergraph3, vertex_map: VertexMap | None = None) -> str:
    """Serialize to the text format; bit-stable for equal inputs.

    With a vertex map, provenance comments (`# modulus p`, then one
    `# vertex id origin x y` per vertex) precede the header.
    """
    lines = []
    if vertex_map is not None:
        if len(vertex_map) != h.n:
            raise ValueError(
                f"vertex map covers {len(vertex_map)} vertices, hypergraph has {h.n}"
            )
        lines.append(f"# modulus {vertex_map.modulus}")
        for i, info in enumerate(vertex_map.entries):
            lines.append(
                f"# vertex {i} {info.origin} {info.point.x.residue} {info.point.y.residue}"
            )
    lines.append(f"{h.n} {len(h.edges)}")
    for a, b, c in h.edges:
        lines.append(f"{a} {b} {c}")
    return "\n".join(lines) + "\n"


def _parse_int(token: str, what: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"{what} {token!r} is not an integer", lineno) from None


def decode(text: str) -> Hypergraph3:
    """Parse the text format; raises FormatError with a line number."""
    h, _ = _parse(text, want_provenance=False)
    return h


def decode_with_provenance(text: str) -> tuple[Hypergraph3, VertexMap | None]:
    """Like decode, but also reconstruct the vertex map from the comments
    when present (requires a `# modulus p` comment before the vertex lines)."""
    return _parse(text, want_provenance=True)


def _parse(text: str, want_provenance: bool) -> tuple[Hypergraph3, VertexMap | None]:
    if not text.endswith("\n"):
        raise FormatError("missing trailing newline", max(1, text.count("\n") + 1))
    raw = text.split("\n")[:-1]  # drop the empty piece after the final newline

    lineno = 0
    modulus: int | None = None
    vertex_lines: list[tuple[int, int, str, int, int]] = []
    header: tuple[int, int] | None = None
    idx = 0
    while idx < len(raw):
        lineno = idx + 1
        line = raw[idx]
        idx += 1
        if line.startswith("#"):
            if want_provenance:
                tokens = line.split()
                if len(tokens) >= 2 and tokens[1] == "modulus":
                    if len(tokens) != 3:
                        raise FormatError("malformed modulus comment", lineno)
                    modulus = _parse_int(tokens[2], "modulus", lineno)
                elif len(tokens) >= 2 and tokens[1] == "vertex":
                    if len(tokens) != 6:
                        raise FormatError("malformed vertex comment", lineno)
                    vid = _parse_int(tokens[2], "vertex id", lineno)
                    x = _parse_int(tokens[4], "x coordinate", lineno)
                    y = _parse_int(tokens[5], "y coordinate", lineno)
                    vertex_lines.append((lineno, vid, tokens[3], x, y))
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise FormatError(f"malformed header {line!r}", lineno)
        n = _parse_int(tokens[0], "vertex count", lineno)
        m = _parse_int(tokens[1], "edge count", lineno)
        if n < 0 or m < 0:
            raise FormatError("header counts must be non-negative", lineno)
        header = (n, m)
        break
    if header is None:
        raise FormatError("missing header", lineno if lineno else 1)

    n, m = header
    edges: list[tuple[int, int, int]] = []
    prev: tuple[int, int, int] | None = None
    for k in range(m):
        if idx >= len(raw):
            raise FormatError(f"expected {m} edges, found {k}", len(raw) + 1)
        lineno = idx + 1
        line = raw[idx]
        idx += 1
        if line.startswith("#"):
            raise FormatError("comments are only allowed before the header", lineno)
        tokens = line.split()
        if len(tokens) != 3:
            raise FormatError(f"edge line needs three vertex ids, got {len(tokens)}", lineno)
        a, b, c = (_parse_int(t, "vertex id", lineno) for t in tokens)
        if not (a < b < c):
            if len({a, b, c}) != 3:
                raise FormatError(f"repeated vertex in edge {line!r}", lineno)
            raise FormatError(f"edge {line!r} not in ascending order", lineno)
        if a < 0 or c >= n:
            raise FormatError(f"vertex id out of range in {line!r}", lineno)
        e = (a, b, c)
        if prev is not None and e <= prev:
            if e == prev:
                raise FormatError(f"duplicate edge {line!r}", lineno)
            raise FormatError(f"edge {line!r} out of lexicographic order", lineno)
        edges.append(e)
        prev = e
    if idx != len(raw):
        raise FormatError("unexpected content after the edge list", idx + 1)

    h = Hypergraph3(n, tuple(edges))
    if not want_provenance or not vertex_lines:
        return h, None

    if modulus is None:
        raise FormatError("vertex comments without a modulus comment", vertex_lines[0][0])
    try:
        prime = Prime(modulus)
    except ValueError:
        raise FormatError(f"modulus {modulus} is not an odd prime", 1) from None
    by_id: dict[int, VertexInfo] = {}
    for lno, vid, origin, x, y in vertex_lines:
        if vid in by_id:
            raise FormatError(f"duplicate vertex comment for id {vid}", lno)
        if not 0 <= vid < n:
            raise FormatError(f"vertex comment id {vid} out of range", lno)
        if origin not in ORIGINS:
            raise FormatError(f"unknown origin {origin!r}", lno)
        point = AffinePoint(prime(x), prime(y))
        by_id[vid] = VertexInfo(origin, point.x, point)
    if len(by_id) != n:
        raise FormatError(f"vertex comments cover {len(by_id)} of {n} vertices", 1)
    vmap = VertexMap(tuple(by_id[i] for i in range(n)))
    return h, vmap
