"""Undirected simple graphs, cut-vertex profiles, connected partitions,
spider/path/star constructors, and free-tree enumeration.

Vertices are labelled 0..n-1.  Graph values are immutable; adjacency is
exposed as per-vertex bitmasks, which keeps the connected-partition search
and component computations cheap at the sizes this library targets.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterator, List, Optional, Tuple

from .partitions import Partition, partitions_of


class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges):
        n = int(n)
        if n < 1:
            raise ValueError(f"need at least one vertex, got n={n}")
        norm = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "_adj", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def adj(self) -> Tuple[int, ...]:
        """Adjacency bitmasks, adj[v] has bit u set iff {u,v} is an edge."""
        if self._adj is None:
            masks = [0] * self.n
            for u, v in self.edges:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            object.__setattr__(self, "_adj", tuple(masks))
        return self._adj

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def __eq__(self, other):
        return isinstance(other, Graph) and (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self):
        return hash(("Graph", self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"

    def to_text(self) -> str:
        lines = [str(self.n)]
        lines += [f"{u} {v}" for u, v in sorted(self.edges)]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Graph":
        """Parse the plain text format: first line n, then one "u v" per line."""
        rows = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not rows:
            raise ValueError("empty graph text")
        try:
            n = int(rows[0])
            edges = []
            for ln in rows[1:]:
                u, v = ln.split()
                edges.append((int(u), int(v)))
        except ValueError:
            raise ValueError(f"malformed graph text starting {rows[0]!r}") from None
        return cls(n, edges)


class CutProfile:
    """Component sizes around a cut vertex: a >= b >= c1 >= ... >= ck >= 1."""

    __slots__ = ("a", "b", "cs")

    def __init__(self, a: int, b: int, cs):
        a, b = int(a), int(b)
        cs = tuple(int(x) for x in cs)
        if not cs:
            raise ValueError("need at least one small component (k >= 1)")
        chain = (a, b) + cs
        if any(chain[i] < chain[i + 1] for i in range(len(chain) - 1)) or cs[-1] < 1:
            raise ValueError(f"sizes must satisfy a >= b >= c1 >= ... >= ck >= 1, got {chain}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "cs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("CutProfile is immutable")

    @property
    def c(self) -> int:
        return sum(self.cs)

    @property
    def c1(self) -> int:
        return self.cs[0]

    @property
    def n(self) -> int:
        return self.a + self.b + self.c + 1

    def __eq__(self, other):
        return isinstance(other, CutProfile) and (self.a, self.b, self.cs) == (
            other.a,
            other.b,
            other.cs,
        )

    def __hash__(self):
        return hash(("CutProfile", self.a, self.b, self.cs))

    def __repr__(self):
        return f"CutProfile(a={self.a}, b={self.b}, cs={self.cs})"


class ConnectedPartition:
    """Disjoint vertex blocks covering V, each inducing a connected subgraph."""

    __slots__ = ("blocks",)

    def __init__(self, blocks):
        object.__setattr__(self, "blocks", tuple(frozenset(b) for b in blocks))

    def __setattr__(self, name, value):
        raise AttributeError("ConnectedPartition is immutable")

    def type_parts(self) -> tuple:
        return tuple(sorted((len(b) for b in self.blocks), reverse=True))

    def validate(self, G: Graph, lam=None) -> None:
        """Raise unless blocks are disjoint, cover V, and induce connected subgraphs."""
        seen = set()
        for b in self.blocks:
            if seen & b:
                raise AssertionError("blocks overlap")
            seen |= b
        if seen != set(range(G.n)):
            raise AssertionError("blocks do not cover the vertex set")
        adj = G.adj
        for b in self.blocks:
            mask = 0
            for v in b:
                mask |= 1 << v
            if _component_masks(adj, mask) != [mask]:
                raise AssertionError(f"block {sorted(b)} is not connected")
        if lam is not None and self.type_parts() != tuple(sorted(lam, reverse=True)):
            raise AssertionError("block sizes do not match the declared type")

    def __repr__(self):
        return f"ConnectedPartition({[sorted(b) for b in self.blocks]})"


def spider(legs) -> Graph:
    """Paths of the given lengths joined at a common center.

    Vertex 0 is the center.  Leg i occupies a consecutive label block; the
    first label in the block is the leaf and the last attaches to the center,
    so witnesses are reproducible byte for byte.
    """
    legs = tuple(legs)
    if not legs or any(l < 1 for l in legs):
        raise ValueError(f"legs must be positive, got {legs}")
    n = 1 + sum(legs)
    edges = []
    offset = 1
    for length in legs:
        for i in range(offset, offset + length - 1):
            edges.append((i, i + 1))
        edges.append((offset + length - 1, 0))
        offset += length
    return Graph(n, edges)


def path_graph(n: int) -> Graph:
    """Path on n vertices, labelled 0..n-1 along the path."""
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """Star on n vertices: center 0 joined to n-1 leaves."""
    return Graph(n, [(0, i) for i in range(1, n)])


def _component_masks(adj, mask: int) -> List[int]:
    """Connected components of the subgraph induced on the bitmask."""
    comps = []
    rest = mask
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            f = frontier
            while f:
                low = f & -f
                grow |= adj[low.bit_length() - 1]
                f &= f - 1
            frontier = grow & mask & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def _mask_vertices(mask: int) -> List[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask &= mask - 1
    return out


def connected_components(G: Graph) -> List[frozenset]:
    """Maximal connected vertex sets, sorted by (size desc, min label)."""
    full = (1 << G.n) - 1
    comps = [frozenset(_mask_vertices(m)) for m in _component_masks(G.adj, full)]
    return sorted(comps, key=lambda s: (-len(s), min(s)))


def is_connected(G: Graph) -> bool:
    return len(_component_masks(G.adj, (1 << G.n) - 1)) == 1


def max_degree(G: Graph) -> int:
    return max(m.bit_count() for m in G.adj)


def cut_profiles(G: Graph) -> List[Tuple[int, CutProfile]]:
    """Vertices whose deletion leaves >= 3 components, with sorted sizes.

    Vertices that split the graph into exactly 2 components are omitted;
    the obstruction machinery needs k >= 1, i.e. at least 3 components.
    """
    if not is_connected(G):
        raise ValueError("graph must be connected")
    out = []
    full = (1 << G.n) - 1
    for v in range(G.n):
        rest = full & ~(1 << v)
        if not rest:
            continue
        sizes = sorted((m.bit_count() for m in _component_masks(G.adj, rest)), reverse=True)
        if len(sizes) >= 3:
            out.append((v, CutProfile(sizes[0], sizes[1], sizes[2:])))
    return out


def _connected_size_subsets(adj, v: int, size: int, allowed: int) -> Iterator[int]:
    """Connected subsets of `allowed` containing v with exactly `size` vertices.

    Each subset is yielded exactly once (extend-or-ban enumeration).
    """
    vbit = 1 << v

    def rec(cur: int, k: int, ext: int):
        if k == size:
            yield cur
            return
        banned = 0
        while ext:
            low = ext & -ext
            ext &= ext - 1
            u = low.bit_length() - 1
            new_ext = (ext | (adj[u] & allowed & ~cur)) & ~banned & ~low
            yield from rec(cur | low, k + 1, new_ext)
            banned |= low

    if size == 1:
        yield vbit
        return
    yield from rec(vbit, 1, adj[v] & allowed)


def _sum_reachable(target: int, items) -> bool:
    """True if some sub-multiset of items (part, mult) sums to target."""
    reach = 1
    for part, mult in items:
        for _ in range(mult):
            nxt = reach | (reach << part)
            if nxt == reach:
                break
            reach = nxt
        if (reach >> target) & 1:
            return True
    return bool((reach >> target) & 1)


def has_connected_partition(G: Graph, lam) -> Optional[ConnectedPartition]:
    """Search for a connected partition of type lam; None if there is none.

    Backtracking always starts the next block at the smallest unassigned
    vertex (removing symmetric duplicates) and prunes any state in which some
    remaining component's size is not a sub-multiset sum of the remaining
    parts.  Deterministic for fixed input.
    """
    parts = tuple(sorted(lam, reverse=True))
    if sum(parts) != G.n:
        raise ValueError(f"type {parts} does not sum to n={G.n}")
    if not is_connected(G):
        raise ValueError("graph must be connected")
    adj = G.adj
    counts = Counter(parts)
    blocks: List[int] = []
    dead: set = set()

    def feasible(mask: int) -> bool:
        items = tuple(sorted(counts.items(), reverse=True))
        for comp in _component_masks(adj, mask):
            if not _sum_reachable(comp.bit_count(), items):
                return False
        return True

    def search(unassigned: int) -> bool:
        if unassigned == 0:
            return True
        state = (unassigned, tuple(sorted(counts.items())))
        if state in dead:
            return False
        v = (unassigned & -unassigned).bit_length() - 1
        for s in sorted((s for s, m in counts.items() if m > 0), reverse=True):
            counts[s] -= 1
            for block in _connected_size_subsets(adj, v, s, unassigned):
                rest = unassigned & ~block
                if feasible(rest) and search(rest):
                    counts[s] += 1
                    blocks.append(block)
                    return True
            counts[s] += 1
        dead.add(state)
        return False

    if not search((1 << G.n) - 1):
        return None
    blocks.reverse()
    witness = ConnectedPartition([frozenset(_mask_vertices(b)) for b in blocks])
    witness.validate(G, parts)
    return witness


def missing_types(G: Graph) -> List[Partition]:
    """All types with no connected partition, in partition stream order."""
    if G.n > 25:
        raise ValueError(f"missing_types guard: n={G.n} > 25")
    if not is_connected(G):
        raise ValueError("graph must be connected")
    return [lam for lam in partitions_of(G.n) if has_connected_partition(G, lam) is None]


# ---------------------------------------------------------------------------
# Free trees


def _level_sequences(n: int) -> Iterator[List[int]]:
    """Canonical level sequences of all rooted trees on n vertices.

    Successor rule: find the rightmost entry above 2, drop it by one, and
    repeat the section starting at its parent.  Starts at the path and ends
    at the star, visiting every rooted tree exactly once.
    """
    L = list(range(1, n + 1))
    while True:
        yield L[:]
        p = None
        for i in range(n - 1, -1, -1):
            if L[i] > 2:
                p = i
                break
        if p is None:
            return
        q = p - 1
        while L[q] != L[p] - 1:
            q -= 1
        for i in range(p, n):
            L[i] = L[i - (p - q)]


def _parents_from_levels(L) -> List[int]:
    parents = [-1] * len(L)
    for i in range(1, len(L)):
        j = i - 1
        while L[j] != L[i] - 1:
            j -= 1
        parents[i] = j
    return parents


def tree_centroids(n: int, adjsets) -> List[int]:
    """The one or two vertices minimizing the largest remaining component."""
    size = [1] * n
    order = []
    visited = [False] * n
    parent = [-1] * n
    stack = [0]
    visited[0] = True
    while stack:
        v = stack.pop()
        order.append(v)
        for u in adjsets[v]:
            if not visited[u]:
                visited[u] = True
                parent[u] = v
                stack.append(u)
    for v in reversed(order):
        if parent[v] >= 0:
            size[parent[v]] += size[v]
    best = n + 1
    out: List[int] = []
    for v in range(n):
        heaviest = n - size[v]
        for u in adjsets[v]:
            if parent[u] == v:
                heaviest = max(heaviest, size[u])
        if heaviest < best:
            best, out = heaviest, [v]
        elif heaviest == best:
            out.append(v)
    return out


def _rooted_encoding(root: int, adjsets) -> tuple:
    def enc(v: int, par: int) -> tuple:
        return tuple(sorted(enc(u, v) for u in adjsets[v] if u != par))

    return enc(root, -1)


def tree_canonical_key(G: Graph) -> tuple:
    """Canonical encoding of a free tree (equal iff trees are isomorphic)."""
    if len(G.edges) != G.n - 1 or not is_connected(G):
        raise ValueError("not a tree")
    adjsets = [sorted(_mask_vertices(m)) for m in G.adj]
    return min(_rooted_encoding(r, adjsets) for r in tree_centroids(G.n, adjsets))


def enumerate_free_trees(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of trees on n vertices."""
    if not 1 <= n <= 16:
        raise ValueError(f"free-tree guard: need 1 <= n <= 16, got {n}")
    if n == 1:
        yield Graph(1, [])
        return
    seen = set()
    for L in _level_sequences(n):
        parents = _parents_from_levels(L)
        g = Graph(n, [(parents[i], i) for i in range(1, n)])
        key = tree_canonical_key(g)
        if key not in seen:
            seen.add(key)
            yield g


def disjoint_union(G: Graph, H: Graph) -> Graph:
    """G and H side by side, H's labels shifted by G.n."""
    edges = list(G.edges) + [(u + G.n, v + G.n) for u, v in H.edges]
    return Graph(G.n + H.n, edges)
