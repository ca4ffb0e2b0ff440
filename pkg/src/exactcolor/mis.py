"""Enumeration of small maximal independent sets, with its exact counting bound.

small_mis lists every maximal independent subset I of an induced subgraph
with |I| <= k by branch-and-reduce on vertex degrees.  The recursion may
also emit some non-maximal sets (they are always independent and within
the size budget); small_mis_filtered strips those.  The number of
recursive calls, and hence of emitted sets, is O(3**(4k-n) * 4**(n-3k)),
which mis_bound evaluates exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .graph import Graph


@dataclass
class EnumStats:
    """Counters for one enumeration run."""

    recursive_calls: int = 0
    emitted_sets: int = 0

    def add(self, other: "EnumStats") -> None:
        self.recursive_calls += other.recursive_calls
        self.emitted_sets += other.emitted_sets


def mis_bound(n: int, k: int) -> Fraction:
    """Exact value of 3**(4k-n) * 4**(n-3k).

    Bounds the number of maximal independent sets of size <= k in any
    n-vertex graph.  Exponents may be negative (k < n/4), in which case
    the value is a rational below 1; big-integer rational arithmetic
    keeps that exact.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    return Fraction(3) ** (4 * k - n) * Fraction(4) ** (n - 3 * k)


def _cycle_order(open_nbhd: tuple[int, ...], s: int, start: int) -> list[int]:
    """Vertices of the cycle through start, in walk order.

    Only valid when every vertex of s has degree exactly 2 in s, so each
    component is a single cycle.  The walk leaves start toward its
    lower-indexed neighbor.
    """
    first_nb = open_nbhd[start] & s
    cur = (first_nb & -first_nb).bit_length() - 1
    order = [start, cur]
    prev = start
    while True:
        nb = open_nbhd[cur] & s & ~(1 << prev)
        nxt = nb.bit_length() - 1
        if nxt == start:
            return order
        order.append(nxt)
        prev, cur = cur, nxt


def _chain_branch(open_nbhd: tuple[int, ...], s: int, k: int) -> tuple[int, int, int] | None:
    """Pick the branch triple (u, v, w) for the all-degree-two case.

    Components are scanned in order of their lowest vertex.  The first
    cycle of length >= 4 supplies three consecutive vertices (u and w
    then nonadjacent); if every cycle is a triangle, branching is only
    worthwhile when 3k >= |s|, and the first triangle is used.  Returns
    None when no maximal set of size <= k can exist below this node.
    """
    first_triangle: list[int] | None = None
    rem = s
    while rem:
        start = (rem & -rem).bit_length() - 1
        cycle = _cycle_order(open_nbhd, s, start)
        if len(cycle) >= 4:
            return cycle[0], cycle[1], cycle[2]
        if first_triangle is None:
            first_triangle = cycle
        for v in cycle:
            rem &= ~(1 << v)
    assert first_triangle is not None
    if 3 * k >= s.bit_count():
        return first_triangle[0], first_triangle[1], first_triangle[2]
    return None


def small_mis(g: Graph, s: int, k: int, sink: Callable[[int], None]) -> EnumStats:
    """Stream every maximal independent subset of s with size <= k to sink.

    Branch-and-reduce on the induced degrees:

      * a vertex of degree >= 3 is either excluded (same budget) or
        included (its closed neighborhood drops out);
      * a degree-1 vertex forces either itself or its neighbor in;
      * a degree-0 vertex is always in;
      * otherwise s is a disjoint union of cycles and a chain of three
        degree-2 vertices is branched three ways, unless only triangles
        remain and the budget rules every maximal set out.

    Ties are broken deterministically: the degree >= 3 branch takes a
    vertex of maximum degree (lowest index on ties); the degree-1 and
    degree-0 branches take the lowest index.  Sets reaching the base case
    (s exhausted or budget exhausted) are emitted; some may be non-maximal
    but all are independent in g and no larger than k.  Duplicate
    emissions are possible; consumers must be idempotent or deduplicate.

    The search runs on an explicit stack (children pushed in reverse, so
    expansion order matches the natural recursion); recursive_calls counts
    expanded nodes.  This sits on the hot path of the chromatic DP, hence
    the flat loop and manual bit fiddling.
    """
    if k < 0:
        raise ValueError("size budget must be nonnegative")
    closed = g.closed_nbhd
    open_nb = g.open_nbhd
    calls = 0
    emitted = 0
    stack = [(s, 0, k)]
    pop = stack.pop
    push = stack.append
    while stack:
        s, i, k = pop()
        calls += 1
        if s == 0 or k == 0:
            emitted += 1
            sink(i)
            continue
        best_v = -1
        best_d = 2
        v1 = -1
        v0 = -1
        t = s
        while t:
            low = t & -t
            t ^= low
            v = low.bit_length() - 1
            d = (open_nb[v] & s).bit_count()
            if d > best_d:
                best_d = d
                best_v = v
            elif d == 1:
                if v1 < 0:
                    v1 = v
            elif d == 0:
                if v0 < 0:
                    v0 = v
        if best_v >= 0:
            v = best_v
            push((s & ~closed[v], i | (1 << v), k - 1))
            push((s ^ (1 << v), i, k))
        elif v1 >= 0:
            v = v1
            u = (open_nb[v] & s).bit_length() - 1
            push((s & ~closed[v], i | (1 << v), k - 1))
            push((s & ~closed[u], i | (1 << u), k - 1))
        elif v0 >= 0:
            v = v0
            push((s ^ (1 << v), i | (1 << v), k - 1))
        else:
            chain = _chain_branch(open_nb, s, k)
            if chain is not None:
                u, v, w = chain
                push((s & ~((1 << u) | closed[w]), i | (1 << w), k - 1))
                push((s & ~closed[v], i | (1 << v), k - 1))
                push((s & ~closed[u], i | (1 << u), k - 1))
    return EnumStats(recursive_calls=calls, emitted_sets=emitted)


def is_maximal_independent(g: Graph, s: int, i: int) -> bool:
    """True iff i is independent and no vertex of s \\ i can extend it."""
    assert i & ~s == 0, "candidate set must lie inside the ground set"
    closed = g.closed_nbhd
    t = i
    while t:
        low = t & -t
        t ^= low
        if closed[low.bit_length() - 1] & i != low:
            return False
    t = s & ~i
    while t:
        low = t & -t
        t ^= low
        if closed[low.bit_length() - 1] & i == 0:
            return False
    return True


def small_mis_filtered(g: Graph, s: int, k: int) -> set[int]:
    """Exactly the maximal independent subsets of s with size <= k."""
    out: set[int] = set()
    seen: set[int] = set()

    def sink(i: int) -> None:
        if i not in seen:
            seen.add(i)
            if is_maximal_independent(g, s, i):
                out.add(i)

    small_mis(g, s, k, sink)
    return out
