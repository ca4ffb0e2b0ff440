"""Deliberately naive reference implementations.

Everything here recomputes from the adjacency masks alone and shares no
logic with the fast paths; equivalence tests lean on that independence.
"""

from __future__ import annotations

from .graph import Graph

BRUTE_FORCE_LIMIT = 20  # 2**|s| submask scans beyond this are off the table


def brute_force_all_mis(g: Graph, s: int) -> list[int]:
    """All maximal independent subsets of mask s, by scanning every submask.

    Order of the returned masks is unspecified.
    """
    if s.bit_count() > BRUTE_FORCE_LIMIT:
        raise ValueError(f"subset has {s.bit_count()} vertices; limit is {BRUTE_FORCE_LIMIT}")
    adj = g.open_nbhd
    out = []
    sub = s
    while True:
        independent = True
        t = sub
        while t:
            low = t & -t
            t ^= low
            if adj[low.bit_length() - 1] & sub:
                independent = False
                break
        if independent:
            maximal = True
            t = s & ~sub
            while t:
                low = t & -t
                t ^= low
                if adj[low.bit_length() - 1] & sub == 0:
                    maximal = False
                    break
            if maximal:
                out.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & s
    return out


def brute_force_chromatic(g: Graph) -> int:
    """Smallest c admitting a proper c-coloring, by backtracking.

    Vertices are colored in index order; the first vertex is pinned to
    color 0 and each new color is introduced only in sequence, which kills
    the color-permutation symmetry.  Fine up to n around 12.
    """
    n = g.n
    if n == 0:
        return 0
    adj = g.open_nbhd
    colors = [-1] * n
    best = n  # n colors always suffice

    def go(v: int, used: int) -> None:
        nonlocal best
        if used >= best:
            return
        if v == n:
            best = used
            return
        forbidden = 0
        neigh = adj[v]
        while neigh:
            low = neigh & -neigh
            neigh ^= low
            cu = colors[low.bit_length() - 1]
            if cu >= 0:
                forbidden |= 1 << cu
        for c in range(used):
            if not (forbidden >> c) & 1:
                colors[v] = c
                go(v + 1, used)
        if used + 1 < best:
            colors[v] = used
            go(v + 1, used + 1)
        colors[v] = -1

    go(0, 0)
    return best


def moon_moser_check(g: Graph) -> bool:
    """True iff the graph has at most 3**(n/3) maximal independent sets.

    Compared in exact integer arithmetic by cubing both sides
    (count**3 <= 3**n), so the fractional exponent never meets a float.
    """
    count = len(brute_force_all_mis(g, g.full_mask))
    return count ** 3 <= 3 ** g.n
