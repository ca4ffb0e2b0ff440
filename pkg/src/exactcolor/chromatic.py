"""Chromatic number and optimal coloring by subset dynamic programming.

A flat table X holds one byte per vertex subset.  Initialization stores
chi(S) for every subset with chi(S) <= 3 and an infinity sentinel (n+1)
otherwise.  Subsets are then visited in ascending integer order (every
proper subset of S precedes S); each finite entry with X[S] >= 3 relaxes
X[S | I] <= X[S] + 1 over the maximal independent sets I of the
complement with |I| <= |S| // X[S].  On completion X[V] is the chromatic
number, and a backward scan recovers an optimal coloring without back
pointers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import CapExceeded, Coloring, Graph, iter_vertices
from .mis import EnumStats, small_mis

# One byte per subset: 64 MiB at n=26.  28 (256 MiB) needs an explicit
# opt-in from the caller; past that the table does not fit desk-scale RAM.
DP_CAP_DEFAULT = 26
DP_CAP_MAX = 28


@dataclass
class DpTable:
    """Completed (or in-progress) color-count table over all 2**n subsets."""

    entries: bytearray
    n: int
    stats: EnumStats = field(default_factory=EnumStats)

    @property
    def inf(self) -> int:
        return self.n + 1


def _two_colorable(open_nbhd: tuple[int, ...], s: int) -> bool:
    """Bipartiteness of the subgraph induced by s, by parity-layered BFS.

    Each BFS level is expanded as a whole; an edge inside one level is an
    odd cycle, and cross-level edges can only join adjacent levels.
    """
    unseen = s
    while unseen:
        frontier = unseen & -unseen
        seen = frontier
        while frontier:
            reach = 0
            t = frontier
            while t:
                low = t & -t
                t ^= low
                reach |= open_nbhd[low.bit_length() - 1]
            reach &= s
            if reach & frontier:
                return False
            frontier = reach & ~seen
            seen |= frontier
        unseen &= ~seen
    return True


def _three_colorable(open_nbhd: tuple[int, ...], s: int) -> bool:
    """Exact 3-colorability of the subgraph induced by s.

    Memo-free backtracking over three color classes kept as masks.
    Vertices are tried in order of decreasing induced degree (max-degree
    branching; ties fall back to index order), and a class is only opened
    once the previous one is nonempty, discarding permutation symmetry.
    """
    # (degree, 127 - v) packed into one int so a plain reverse sort gives
    # degree desc / index asc without a key function; this runs once per
    # subset during DP initialization.
    keys = []
    t = s
    while t:
        low = t & -t
        t ^= low
        v = low.bit_length() - 1
        keys.append(((open_nbhd[v] & s).bit_count() << 7) | (127 - v))
    keys.sort(reverse=True)
    adj = []
    bit = []
    for packed in keys:
        v = 127 - (packed & 127)
        adj.append(open_nbhd[v] & s)
        bit.append(1 << v)
    last = len(keys)

    def go(idx: int, c0: int, c1: int, c2: int) -> bool:
        if idx == last:
            return True
        a = adj[idx]
        b = bit[idx]
        if a & c0 == 0 and go(idx + 1, c0 | b, c1, c2):
            return True
        if c0 and a & c1 == 0 and go(idx + 1, c0, c1 | b, c2):
            return True
        if c1 and a & c2 == 0 and go(idx + 1, c0, c1, c2 | b):
            return True
        return False

    return go(0, 0, 0, 0)


def chi_at_most_3(g: Graph, s: int) -> int | None:
    """chi of the subgraph induced by s when it is at most 3, else None.

    Sequential ladder: empty -> 0; edgeless -> 1; bipartite -> 2; exact
    3-colorability by backtracking -> 3.  Each call works from the
    adjacency masks alone, with no state shared across subsets.
    """
    if s == 0:
        return 0
    open_nb = g.open_nbhd
    t = s
    has_edge = False
    while t:
        low = t & -t
        t ^= low
        if open_nb[low.bit_length() - 1] & s:
            has_edge = True
            break
    if not has_edge:
        return 1
    if _two_colorable(open_nb, s):
        return 2
    if _three_colorable(open_nb, s):
        return 3
    return None


def chromatic_number(g: Graph, dp_cap: int = DP_CAP_DEFAULT) -> tuple[int, DpTable]:
    """Chromatic number of g plus the completed subset table.

    Raises CapExceeded before allocating anything when 2**n entries would
    blow past dp_cap (default 26; hard maximum 28).
    """
    n = g.n
    if dp_cap > DP_CAP_MAX:
        raise ValueError(f"dp_cap {dp_cap} exceeds the hard maximum {DP_CAP_MAX}")
    if n > dp_cap:
        raise CapExceeded(f"DP table needs 2**{n} entries; cap is n <= {dp_cap}")
    size = 1 << n
    inf = n + 1
    x = bytearray(size)
    for s in range(size):
        c = chi_at_most_3(g, s)
        x[s] = inf if c is None else c

    stats = EnumStats()
    full = size - 1
    for s in range(size):
        xs = x[s]
        if xs < 3 or xs > n:
            continue
        budget = s.bit_count() // xs
        bump = xs + 1

        def relax(i: int, _s: int = s, _bump: int = bump) -> None:
            t = _s | i
            if _bump < x[t]:
                x[t] = _bump

        stats.add(small_mis(g, full & ~s, budget, relax))

    table = DpTable(entries=x, n=n, stats=stats)
    return x[full], table


def extract_coloring(g: Graph, table: DpTable) -> Coloring:
    """Optimal coloring recovered from a completed table by backward search.

    Scans candidate subsets downward from 2**n - 1, accepting the first
    T properly inside the current set S with X[S \\ T] == 1 and
    X[T] == X[S] - 1; S \\ T becomes the next color class and the scan
    continues from T.  Candidates that are not subsets of S can never be
    accepted, so the scan hops between submasks of S directly.
    """
    n = g.n
    x = table.entries
    full = (1 << n) - 1
    colors = [0] * n
    classes = 0
    s = full
    t = s
    while s:
        t = (t - 1) & s
        if x[s ^ t] == 1 and x[t] == x[s] - 1:
            for v in iter_vertices(s ^ t):
                colors[v] = classes
            classes += 1
            s = t
        elif t == 0:
            raise AssertionError("no witness subset; table is not a completed run for g")
    expected = x[full] if n else 0
    assert classes == expected, f"extracted {classes} classes, table says {expected}"
    return Coloring(colors=tuple(colors), num_colors=classes)


def solve(g: Graph, dp_cap: int = DP_CAP_DEFAULT) -> tuple[int, Coloring]:
    """Chromatic number and one optimal proper coloring of g."""
    chi, table = chromatic_number(g, dp_cap=dp_cap)
    return chi, extract_coloring(g, table)
