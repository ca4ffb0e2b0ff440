"""Bitmask graph representation, DIMACS .col I/O, and instance generators.

Vertex subsets are plain Python ints: bit i is set iff vertex i is in the
subset, so a subset doubles as an array index and S being a proper subset
of T implies S < T as integers.  All adjacency is stored as closed
neighborhoods (every vertex is adjacent to itself in its own mask), which
is the convention the enumeration and DP code relies on.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator

# Ingestion cap; constructions may raise it up to VERTEX_CAP_MAX for
# enumeration-only workloads.  The 2**n DP table has its own, lower cap.
VERTEX_CAP_DEFAULT = 32
VERTEX_CAP_MAX = 64


class GraphError(Exception):
    """Base class for graph construction failures."""


class DimacsError(GraphError):
    """Malformed DIMACS .col input."""


class CapExceeded(GraphError):
    """Instance needs more vertices (or table entries) than the configured cap."""


def vertex_mask(vertices: Iterable[int]) -> int:
    """Bitmask with the given vertex indices set."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_vertices(mask: int) -> Iterator[int]:
    """Yield vertex indices of a bitmask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple undirected graph on at most VERTEX_CAP_MAX vertices.

    closed_nbhd[v] holds v's neighbors plus v itself; open_nbhd[v] is the
    same mask with v's own bit cleared.
    """

    __slots__ = ("n", "m", "closed_nbhd", "open_nbhd")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 cap: int = VERTEX_CAP_DEFAULT):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        if cap > VERTEX_CAP_MAX:
            raise ValueError(f"cap {cap} exceeds the word-width limit {VERTEX_CAP_MAX}")
        if n > cap:
            raise CapExceeded(f"graph has {n} vertices, cap is {cap}")
        nbhd = [1 << v for v in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (nbhd[u] >> v) & 1:
                nbhd[u] |= 1 << v
                nbhd[v] |= 1 << u
                m += 1
        self.n = n
        self.m = m
        self.closed_nbhd = tuple(nbhd)
        self.open_nbhd = tuple(b ^ (1 << v) for v, b in enumerate(nbhd))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and (self.closed_nbhd[u] >> v) & 1 == 1

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, sorted."""
        for u in range(self.n):
            rest = self.open_nbhd[u] >> (u + 1)
            for w in iter_vertices(rest):
                yield u, u + 1 + w

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.closed_nbhd == other.closed_nbhd

    def __hash__(self) -> int:
        return hash((self.n, self.closed_nbhd))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Coloring:
    """Proper-coloring candidate: colors[v] in 0..num_colors-1."""

    colors: tuple[int, ...]
    num_colors: int

    def color_classes(self) -> list[int]:
        """Vertex masks per color, index = color."""
        classes = [0] * self.num_colors
        for v, c in enumerate(self.colors):
            classes[c] |= 1 << v
        return classes


def degree_in(g: Graph, v: int, s: int) -> int:
    """Degree of v in the subgraph induced by s.  Requires v in s."""
    assert (s >> v) & 1, f"vertex {v} not in subset"
    return (g.open_nbhd[v] & s).bit_count()


def induced_subgraph(g: Graph, s: int) -> Graph:
    """Subgraph induced by mask s, vertices relabeled to 0..|s|-1 in order."""
    verts = list(iter_vertices(s))
    index = {v: i for i, v in enumerate(verts)}
    edges = []
    for v in verts:
        for u in iter_vertices(g.open_nbhd[v] & s):
            if u > v:
                edges.append((index[v], index[u]))
    return Graph(len(verts), edges, cap=max(VERTEX_CAP_DEFAULT, len(verts)))


def is_proper_coloring(g: Graph, c: Coloring) -> bool:
    """True iff every edge is bichromatic and all colors 0..num_colors-1 occur."""
    if len(c.colors) != g.n:
        raise ValueError("coloring length does not match vertex count")
    used = set()
    for v, col in enumerate(c.colors):
        if not 0 <= col < c.num_colors:
            return False
        used.add(col)
    if len(used) != c.num_colors:
        return False
    for u, v in g.edges():
        if c.colors[u] == c.colors[v]:
            return False
    return True


# ---------------------------------------------------------------------------
# DIMACS .col
# ---------------------------------------------------------------------------

def from_dimacs(text: str | Iterable[str], cap: int = VERTEX_CAP_DEFAULT) -> Graph:
    """Parse a DIMACS .col stream into a Graph.

    Accepts `c` comment lines, exactly one `p edge <n> <m>` line, and
    `e <u> <v>` lines with 1-based endpoints.  Duplicate edges are merged;
    the declared edge count is not enforced (merging makes it advisory).
    Self-loops are rejected: a looped vertex admits no proper coloring, so
    failing at ingestion beats failing downstream.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise DimacsError(f"line {lineno}: duplicate p line")
            if len(fields) != 4 or fields[1] != "edge":
                raise DimacsError(f"line {lineno}: expected 'p edge <n> <m>'")
            try:
                n = int(fields[2])
                int(fields[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: non-integer p counts") from None
            if n < 0:
                raise DimacsError(f"line {lineno}: negative vertex count")
            if n > cap:
                raise CapExceeded(f"instance has {n} vertices, cap is {cap}")
        elif fields[0] == "e":
            if n is None:
                raise DimacsError(f"line {lineno}: e line before p line")
            if len(fields) != 3:
                raise DimacsError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise DimacsError(f"line {lineno}: non-integer endpoint") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsError(f"line {lineno}: endpoint out of range 1..{n}")
            if u == v:
                raise DimacsError(f"line {lineno}: self-loop 'e {u} {v}' is uncolorable")
            edges.append((u - 1, v - 1))
        else:
            raise DimacsError(f"line {lineno}: unknown record {fields[0]!r}")
    if n is None:
        raise DimacsError("missing p line")
    return Graph(n, edges, cap=max(cap, n))


def to_dimacs(g: Graph) -> str:
    """Render a Graph as DIMACS .col text (1-based, edges sorted by (u, v))."""
    out = [f"p edge {g.n} {g.m}"]
    for u, v in g.edges():
        out.append(f"e {u + 1} {v + 1}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def gen_complete(n: int, cap: int = VERTEX_CAP_DEFAULT) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)), cap=cap)


def gen_cycle(n: int, cap: int = VERTEX_CAP_DEFAULT) -> Graph:
    """Cycle C_n for n >= 3; degenerates to an edge (n=2) or edgeless (n<=1)."""
    if n <= 1:
        return Graph(n, (), cap=cap)
    if n == 2:
        return Graph(2, [(0, 1)], cap=cap)
    return Graph(n, ((v, (v + 1) % n) for v in range(n)), cap=cap)


def gen_triangles_k4s(a: int, b: int, cap: int = VERTEX_CAP_DEFAULT) -> Graph:
    """Disjoint union of a triangles and b copies of K4 (n = 3a + 4b).

    This family realizes the small-MIS counting bound exactly: with
    k = a + b there are precisely 3**a * 4**b maximal independent sets.
    """
    if a < 0 or b < 0:
        raise ValueError("block counts must be nonnegative")
    edges = []
    base = 0
    for _ in range(a):
        edges += [(base, base + 1), (base, base + 2), (base + 1, base + 2)]
        base += 3
    for _ in range(b):
        for i in range(4):
            for j in range(i + 1, 4):
                edges.append((base + i, base + j))
        base += 4
    return Graph(base, edges, cap=cap)


def gen_gnp(n: int, p: float, seed: int, cap: int = VERTEX_CAP_DEFAULT) -> Graph:
    """Erdos-Renyi G(n, p), reproducible across runs and platforms.

    Uses the Mersenne Twister (random.Random(seed)) and draws one
    random() per candidate edge in lexicographic (u, v) order, u < v;
    the edge is present iff the draw is < p.  CPython guarantees the
    random() sequence for a fixed seed, so equal (n, p, seed) yield
    bit-identical graphs.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    return Graph(n, edges, cap=cap)


def gen_petersen(cap: int = VERTEX_CAP_DEFAULT) -> Graph:
    """Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return Graph(10, edges, cap=cap)


def gen_groetzsch(cap: int = VERTEX_CAP_DEFAULT) -> Graph:
    """Groetzsch graph (Mycielskian of C5): n=11, m=20, triangle-free, chi=4."""
    edges = []
    for i in range(5):
        j = (i + 1) % 5
        edges.append((i, j))          # the C5 core
        edges.append((5 + i, j))      # shadow vertex tied to its C5 neighbors
        edges.append((5 + j, i))
        edges.append((10, 5 + i))     # apex over the shadows
    return Graph(11, edges, cap=cap)


_NAMED = {
    "petersen": gen_petersen,
    "groetzsch": gen_groetzsch,
}


def gen_named(name: str, cap: int = VERTEX_CAP_DEFAULT) -> Graph:
    try:
        builder = _NAMED[name]
    except KeyError:
        raise ValueError(f"unknown graph name {name!r}; known: {sorted(_NAMED)}") from None
    return builder(cap=cap)
