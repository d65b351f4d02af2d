"""Independent oracles and exhaustive enumerators used only by the tests.

Everything here is deliberately separate from the library routes it checks:
brute-force coloring tallies, 0-1 matrix counts for monomial coefficients,
labeled-tree enumeration via sequence decoding, subset-sum existence, full
rearrangement scans, and an isomorphism-class enumerator for small connected
graphs built on an individualization-refinement canonical form.
"""

from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from epolab.graphs import Graph


# ---------------------------------------------------------------------------
# Canonical forms for arbitrary small graphs


def _refine(n: int, adj: List[int], colors: List[int]) -> List[int]:
    while True:
        classes: Dict[int, int] = {}
        for v, c in enumerate(colors):
            classes[c] = classes.get(c, 0) | (1 << v)
        keys = sorted(classes)
        sigs = [
            (colors[v], tuple((adj[v] & classes[c]).bit_count() for c in keys))
            for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _twin_cell(adj: List[int], members: List[int]) -> bool:
    """True if all members are pairwise twins (swapping any two fixes the graph)."""
    for u, v in itertools.combinations(members, 2):
        if adj[u] & ~(1 << v) != adj[v] & ~(1 << u):
            return False
    return True


def canonical_edges(n: int, edges) -> Tuple[tuple, ...]:
    """Canonical edge tuple: equal for two graphs iff they are isomorphic.

    Color refinement plus individualization on the first non-twin cell,
    taking the minimum relabelled edge set over all branches.
    """
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    best: List[Tuple[tuple, ...]] = []

    def emit(colors: List[int]) -> None:
        order = sorted(range(n), key=lambda v: (colors[v], v))
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        key = tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in edges))
        if not best or key < best[0]:
            best[:] = [key]

    def search(colors: List[int]) -> None:
        colors = _refine(n, adj, colors)
        target = None
        for c in sorted(set(colors)):
            members = [v for v in range(n) if colors[v] == c]
            if len(members) > 1 and not _twin_cell(adj, members):
                target = members
                break
        if target is None:
            emit(colors)
            return
        for v in target:
            branched = colors[:]
            branched[v] = n  # fresh color, re-ranked by the next refinement
            search(branched)

    search([0] * n)
    return best[0]


def canonical_edges_bruteforce(n: int, edges) -> Tuple[tuple, ...]:
    """Minimum relabelled edge set over all n! permutations (tiny n only)."""
    edges = list(edges)
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in edges))
        if best is None or key < best:
            best = key
    return best


def connected_graph_classes(n: int) -> List[Tuple[tuple, ...]]:
    """One canonical edge tuple per isomorphism class of connected graphs.

    Grown by attaching a new vertex to every nonempty subset of each smaller
    class (every connected graph has a non-cut vertex, so this is complete).
    """
    classes: List[Tuple[tuple, ...]] = [()]
    for size in range(2, n + 1):
        seen = set()
        for parent in classes:
            for mask in range(1, 1 << (size - 1)):
                edges = list(parent)
                m = mask
                while m:
                    low = m & -m
                    m &= m - 1
                    edges.append((low.bit_length() - 1, size - 1))
                seen.add(canonical_edges(size, edges))
        classes = sorted(seen)
    return classes


# ---------------------------------------------------------------------------
# Coloring oracle


def coloring_multiset_tally(G: Graph) -> Dict[tuple, int]:
    """Count proper colorings with colors {1..n}, grouped by usage multiset.

    Straight backtracking over vertices; the key is the sorted tuple of
    per-color usage counts with zeros dropped.
    """
    n = G.n
    adj = G.adj
    tally: Dict[tuple, int] = {}
    coloring = [0] * n

    def assign(v: int) -> None:
        if v == n:
            usage = Counter(coloring)
            key = tuple(sorted(usage.values(), reverse=True))
            tally[key] = tally.get(key, 0) + 1
            return
        forbidden = set()
        mask = adj[v]
        while mask:
            low = mask & -mask
            mask &= mask - 1
            u = low.bit_length() - 1
            if u < v:
                forbidden.add(coloring[u])
        for color in range(1, n + 1):
            if color not in forbidden:
                coloring[v] = color
                assign(v + 1)
        coloring[v] = 0

    assign(0)
    return tally


@lru_cache(maxsize=None)
def zero_one_matrix_count(rows: tuple, cols: tuple) -> int:
    """Number of 0-1 matrices with the given row and column sums.

    This is the coefficient of the monomial with exponent vector `cols` in
    the elementary product indexed by `rows`.
    """
    if not rows:
        return 1 if not any(cols) else 0
    r = rows[0]
    total = 0
    positions = [i for i, c in enumerate(cols) if c > 0]
    if r > len(positions):
        return 0
    for subset in itertools.combinations(positions, r):
        reduced = list(cols)
        for i in subset:
            reduced[i] -= 1
        total += zero_one_matrix_count(rows[1:], tuple(sorted(reduced, reverse=True)))
    return total


def distinct_orderings(mu: tuple, slots: int) -> int:
    """Number of distinct vectors of length `slots` whose sorted form is mu."""
    import math

    padded = tuple(mu) + (0,) * (slots - len(mu))
    out = math.factorial(slots)
    for mult in Counter(padded).values():
        out //= math.factorial(mult)
    return out


# ---------------------------------------------------------------------------
# Labeled trees (sequence decoding) for free-tree cross-checks


def labeled_trees(n: int) -> Iterator[List[tuple]]:
    """Every labeled tree on n vertices, via decoding all length-(n-2) codes."""
    import heapq

    if n == 1:
        yield []
        return
    if n == 2:
        yield [(0, 1)]
        return
    for code in itertools.product(range(n), repeat=n - 2):
        degree = [1] * n
        for v in code:
            degree[v] += 1
        leaves = [v for v in range(n) if degree[v] == 1]
        heapq.heapify(leaves)
        edges = []
        for v in code:
            leaf = heapq.heappop(leaves)
            edges.append((leaf, v))
            degree[v] -= 1
            if degree[v] == 1:
                heapq.heappush(leaves, v)
        u = heapq.heappop(leaves)
        w = heapq.heappop(leaves)
        edges.append((u, w))
        yield edges


# ---------------------------------------------------------------------------
# Misc brute-force oracles


def interval_sum_exists_dp(n: int, lo: int, hi: int) -> bool:
    """Subset-sum style DP: can n be written as a sum of parts in [lo, hi]?"""
    reachable = [False] * (n + 1)
    reachable[0] = True
    for s in range(lo, n + 1):
        reachable[s] = any(
            reachable[s - p] for p in range(lo, min(hi, s) + 1)
        )
    return reachable[n]


def multiset_permutations(parts: tuple) -> Iterator[tuple]:
    """Each distinct ordering exactly once (recursive, no n! blowup)."""
    counts = Counter(parts)
    values = sorted(counts)
    length = len(parts)

    def rec(prefix: tuple):
        if len(prefix) == length:
            yield prefix
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                yield from rec(prefix + (v,))
                counts[v] += 1

    yield from rec(())


def all_rearrangements_hit(parts: tuple, lo: int, hi: int) -> bool:
    """Full scan (no pruning): every ordering has a prefix sum in [lo, hi]."""
    for perm in multiset_permutations(parts):
        acc = 0
        hit = False
        for p in perm[:-1]:
            acc += p
            if lo <= acc <= hi:
                hit = True
                break
        if not hit:
            return False
    return True


def connected_partition_exists_bruteforce(G: Graph, lam) -> bool:
    """Independent search: enumerate set partitions with the given block sizes.

    Always anchors the next block at the smallest free vertex and picks its
    remaining members from larger labels only, so each set partition is seen
    once; connectivity is checked per finished block with a plain BFS.
    """
    sizes = tuple(sorted(lam, reverse=True))
    assert sum(sizes) == G.n
    adjsets = [set() for _ in range(G.n)]
    for u, v in G.edges:
        adjsets[u].add(v)
        adjsets[v].add(u)

    def block_connected(block: tuple) -> bool:
        todo = [block[0]]
        seen = {block[0]}
        members = set(block)
        while todo:
            v = todo.pop()
            for u in adjsets[v] & members:
                if u not in seen:
                    seen.add(u)
                    todo.append(u)
        return len(seen) == len(block)

    def rec(free: frozenset, remaining: tuple) -> bool:
        if not remaining:
            return True
        anchor = min(free)
        rest = sorted(v for v in free if v != anchor)
        tried = set()
        for size in remaining:
            if size in tried:
                continue
            tried.add(size)
            idx = remaining.index(size)
            leftover = remaining[:idx] + remaining[idx + 1 :]
            for combo in itertools.combinations(rest, size - 1):
                block = (anchor,) + combo
                if block_connected(block) and rec(free - set(block), leftover):
                    return True
        return False

    return rec(frozenset(range(G.n)), sizes)


def brute_force_partitions(n: int) -> List[tuple]:
    """All partitions of n by filtered combinations, for count cross-checks."""
    out = []

    def rec(remaining: int, biggest: int, acc: tuple):
        if remaining == 0:
            out.append(acc)
            return
        for part in range(min(remaining, biggest), 0, -1):
            rec(remaining - part, part, acc + (part,))

    rec(n, n, ())
    return out
