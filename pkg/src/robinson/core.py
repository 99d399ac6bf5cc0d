"""Fundamental data model: dissimilarity spaces, trees, orientations.

Also hosts the ground-truth compatibility checker and the directed-path
counter that every optimization module is validated against.

Vertices are dense integer indices 0..n-1 throughout; external labels are
mapped at the I/O layer.  All comparisons on dissimilarity values are exact
(no epsilon): instance files control precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import InputError

# A vertex order is a plain tuple of vertex indices.  Operations accept any
# sequence of distinct vertices; a full order is a permutation of 0..n-1.
VertexOrder = tuple[int, ...]


@dataclass(eq=False)
class DissimilaritySpace:
    """A set of n points with a nonnegative dissimilarity d, zero on the
    diagonal.  Symmetry is NOT required."""

    n: int
    d: np.ndarray

    def __init__(self, d: Iterable[Iterable[float]] | np.ndarray, *, validate: bool = True):
        mat = np.asarray(d, dtype=float)
        if validate:
            if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
                raise InputError(f"dissimilarity matrix must be square, got shape {mat.shape}")
            if mat.shape[0] < 1:
                raise InputError("dissimilarity space needs at least one point")
            if not np.all(np.isfinite(mat)):
                raise InputError("dissimilarity values must be finite")
            if np.any(mat < 0):
                raise InputError("dissimilarity values must be nonnegative")
            if np.any(np.diagonal(mat) != 0):
                raise InputError("diagonal of a dissimilarity matrix must be zero")
        mat = mat.copy()
        mat.setflags(write=False)
        self.n = mat.shape[0]
        self.d = mat

    @cached_property
    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.d, self.d.T))

    def restrict(self, vertices: Sequence[int]) -> "DissimilaritySpace":
        """Sub-space induced by the given (distinct) vertices, relabeled 0..k-1."""
        idx = list(vertices)
        if len(set(idx)) != len(idx):
            raise InputError("restriction vertices must be distinct")
        return DissimilaritySpace(self.d[np.ix_(idx, idx)], validate=False)


@dataclass(frozen=True)
class Tree:
    """An undirected tree on n vertices (exactly n-1 edges, connected)."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        edge_list = tuple((int(u), int(v)) for u, v in edges)
        if n < 1:
            raise InputError("tree needs at least one vertex")
        if len(edge_list) != n - 1:
            raise InputError(f"tree on {n} vertices needs {n - 1} edges, got {len(edge_list)}")
        seen: set[frozenset[int]] = set()
        parent = list(range(n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for u, v in edge_list:
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            key = frozenset((u, v))
            if key in seen:
                raise InputError(f"duplicate edge ({u}, {v})")
            seen.add(key)
            ru, rv = find(u), find(v)
            if ru == rv:
                raise InputError("edges contain a cycle")
            parent[ru] = rv
        # n-1 acyclic edges on n vertices are necessarily connected
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", edge_list)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(a) for a in adj)

    def path(self, u: int, v: int) -> VertexOrder:
        """Vertex sequence of the unique u-v path (endpoints included)."""
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise InputError(f"path endpoints ({u}, {v}) out of range")
        prev = {u: u}
        queue = [u]
        for x in queue:
            if x == v:
                break
            for y in self.adjacency[x]:
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        seq = [v]
        while seq[-1] != u:
            seq.append(prev[seq[-1]])
        seq.reverse()
        return tuple(seq)

    def is_star(self, center: int) -> bool:
        return all(center in e for e in self.edges)


@dataclass(frozen=True)
class OrientedTree:
    """A tree plus one direction per edge; arc (u, v) means u -> v.

    Arcs are stored aligned with ``tree.edges`` (arcs[i] is edges[i] or its
    reverse).  The constructor accepts arcs in any order and aligns them.
    """

    tree: Tree
    arcs: tuple[tuple[int, int], ...]

    def __init__(self, tree: Tree, arcs: Iterable[tuple[int, int]]):
        arc_set = {(int(u), int(v)) for u, v in arcs}
        if len(arc_set) != len(tree.edges):
            raise InputError(f"expected {len(tree.edges)} arcs, got {len(arc_set)}")
        aligned: list[tuple[int, int]] = []
        for u, v in tree.edges:
            if (u, v) in arc_set:
                aligned.append((u, v))
            elif (v, u) in arc_set:
                aligned.append((v, u))
            else:
                raise InputError(f"edge ({u}, {v}) has no arc")
        object.__setattr__(self, "tree", tree)
        object.__setattr__(self, "arcs", tuple(aligned))

    @cached_property
    def out_adjacency(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.tree.n)]
        for u, v in self.arcs:
            out[u].append(v)
        return tuple(tuple(a) for a in out)

    @cached_property
    def in_adjacency(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.tree.n)]
        for u, v in self.arcs:
            inc[v].append(u)
        return tuple(tuple(a) for a in inc)


def _check_order(space: DissimilaritySpace, order: Sequence[int]) -> None:
    if len(order) > space.n:
        raise InputError(f"order of length {len(order)} over a space of {space.n} points")
    seen: set[int] = set()
    for v in order:
        if not (0 <= v < space.n):
            raise InputError(f"vertex {v} out of range")
        if v in seen:
            raise InputError(f"vertex {v} repeated in order")
        seen.add(v)


def _one_way_ok(d: np.ndarray, order: Sequence[int]) -> bool:
    # Equivalent to the triple definition: d(p_i,p_k) >= max(d(p_i,p_j),
    # d(p_j,p_k)) for all i<j<k holds iff every row is monotone under
    # extending the right endpoint and contracting the left one (chain the
    # adjacent inequalities).  O(k^2) with early exit.
    k = len(order)
    for i in range(k - 2):
        pi = order[i]
        qi = order[i + 1]
        row = d[pi]
        nxt = d[qi]
        for j in range(i + 2, k):
            pj = order[j]
            val = row[pj]
            if val < row[order[j - 1]] or val < nxt[pj]:
                return False
    return True


def is_one_way_order(space: DissimilaritySpace, order: Sequence[int]) -> bool:
    """True iff d(p_i,p_k) >= max{d(p_i,p_j), d(p_j,p_k)} for all i<j<k.

    ``order`` may cover a subset of the vertices (distinct entries).
    """
    _check_order(space, order)
    return _one_way_ok(space.d, order)


def is_two_way_order(space: DissimilaritySpace, order: Sequence[int]) -> bool:
    """True iff both the order and its reverse are one-way under the same d."""
    _check_order(space, order)
    return _one_way_ok(space.d, order) and _one_way_ok(space.d, list(reversed(order)))


def reachability(ot: OrientedTree) -> set[tuple[int, int]]:
    """All ordered pairs (u, v), u != v, with a directed path u -> ... -> v."""
    pairs: set[tuple[int, int]] = set()
    out = ot.out_adjacency
    for u in range(ot.tree.n):
        stack = list(out[u])
        while stack:
            v = stack.pop()
            pairs.add((u, v))
            stack.extend(out[v])
    return pairs


def count_xi(ot: OrientedTree) -> int:
    """Number of directed paths of length >= 1 (= ordered reachable pairs).

    Simple paths in a tree are unique, so this is sum over vertices of the
    out-reachable set size, computed in O(n).
    """
    n = ot.tree.n
    out = ot.out_adjacency
    size = [-1] * n  # vertices reachable from x (x excluded)
    for root in range(n):
        if size[root] >= 0:
            continue
        stack = [(root, False)]
        while stack:
            x, done = stack.pop()
            if done:
                size[x] = sum(1 + size[y] for y in out[x])
            elif size[x] < 0:
                stack.append((x, True))
                for y in out[x]:
                    if size[y] < 0:
                        stack.append((y, False))
    return sum(size)


def maximal_directed_paths(ot: OrientedTree) -> Iterable[VertexOrder]:
    """Yield every maximal directed path (as a vertex sequence).

    A directed path is maximal iff its start has in-degree 0 and its end has
    out-degree 0; in a tree any in/out arc at an endpoint extends the path.
    """
    out = ot.out_adjacency
    inc = ot.in_adjacency
    for s in range(ot.tree.n):
        if inc[s] or not out[s]:
            continue
        path = [s]
        iters = [iter(out[s])]
        while iters:
            nxt = next(iters[-1], None)
            if nxt is None:
                iters.pop()
                path.pop()
                continue
            path.append(nxt)
            if out[nxt]:
                iters.append(iter(out[nxt]))
            else:
                yield tuple(path)
                path.pop()


def check_compatible(space: DissimilaritySpace, ot: OrientedTree) -> bool:
    """True iff every maximal directed path of ``ot`` is one-way-Robinson.

    Subpaths of a one-way-Robinson path are one-way-Robinson, so checking the
    maximal paths suffices.  This is the correctness oracle, not a hot path.
    """
    if space.n != ot.tree.n:
        raise InputError(f"space has {space.n} points but tree has {ot.tree.n} vertices")
    d = space.d
    return all(_one_way_ok(d, p) for p in maximal_directed_paths(ot))
