"""Optimal orientation of an arbitrary tree when every path in it is
Robinson for d.

The optimum always has a central vertex; fixing a centroid as that vertex,
the problem reduces to splitting the centroid's neighbor subtrees into an
In side and an Out side of sizes as balanced as achievable, which is a
subset-sum table over the subtree sizes.  Everything but the final path
recount is near-linear.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import DissimilaritySpace, OrientedTree, Tree, count_xi
from .errors import InputError, PreconditionError


def verify_all_paths_robinson(space: DissimilaritySpace, t: Tree) -> bool:
    """True iff for every ordered pair (u, v) the u-to-v tree path is
    one-way-Robinson.  O(n^3): a DFS per root with O(length) checks per
    extension (monotone row/column growth is equivalent to the triple
    condition once the prefix is known good)."""
    if space.n != t.n:
        raise InputError(f"space has {space.n} points but tree has {t.n} vertices")
    d = space.d
    adj = t.adjacency
    for root in range(t.n):
        path = [root]
        iters = [iter(adj[root])]
        parents = [-1]
        while iters:
            nxt = next(iters[-1], None)
            if nxt is None:
                iters.pop()
                path.pop()
                parents.pop()
                continue
            if nxt == parents[-1]:
                continue
            k = len(path)
            tail = path[k - 1]
            for j in range(1, k):
                if d[path[j], nxt] > d[path[j - 1], nxt]:
                    return False
            for i in range(k - 1):
                if d[path[i], tail] > d[path[i], nxt]:
                    return False
            path.append(nxt)
            parents.append(tail)
            iters.append(iter(adj[nxt]))
    return True


def _sizes_rooted_at(t: Tree, root: int) -> tuple[list[int], list[int], list[int]]:
    """BFS order, parent array and subtree sizes for the tree rooted at root."""
    n = t.n
    adj = t.adjacency
    parent = [-1] * n
    order = [root]
    parent[root] = root
    for x in order:
        for y in adj[x]:
            if parent[y] < 0:
                parent[y] = x
                order.append(y)
    parent[root] = -1
    size = [1] * n
    for x in reversed(order):
        if parent[x] >= 0:
            size[parent[x]] += size[x]
    return order, parent, size


def find_centroid(t: Tree) -> int:
    """A vertex none of whose removal components exceeds n/2 vertices.

    O(n): compute subtree sizes from vertex 0, then walk toward the unique
    too-big component until none remains; the first valid vertex on that
    walk is returned (even n can have two valid centroids).
    """
    n = t.n
    if n == 1:
        return 0
    _, parent, size = _sizes_rooted_at(t, 0)
    adj = t.adjacency
    x = 0
    while True:
        heavy = -1
        for y in adj[x]:
            comp = size[y] if parent[y] == x else n - size[x]
            if 2 * comp > n:
                heavy = y
                break
        if heavy < 0:
            return x
        x = heavy


@dataclass(frozen=True)
class NeighborWeights:
    """The centroid's neighbors with their component sizes theta."""

    center: int
    neighbors: tuple[tuple[int, int], ...]  # (vertex, theta), adjacency order

    @classmethod
    def from_tree(cls, t: Tree, center: int) -> "NeighborWeights":
        _, parent, size = _sizes_rooted_at(t, center)
        pairs = tuple((y, size[y]) for y in t.adjacency[center])
        return cls(center, pairs)


@dataclass(frozen=True)
class PartitionTable:
    """Subset-sum table: m[i][j] = largest In-size <= i using the first j
    weights.  Rows 0..floor(n/2), columns 0..p."""

    m: tuple[tuple[int, ...], ...]

    @property
    def best(self) -> int:
        return self.m[-1][-1]


def optimal_partition_of_neighbors(
    weights: list[int] | tuple[int, ...], n: int
) -> tuple[PartitionTable, tuple[int, ...]]:
    """Fill the balanced-partition table over the component sizes and
    back-track one optimal index subset (ties broken toward exclusion).

    The chosen subset attains the largest achievable In-size <= floor(n/2),
    which maximizes |In|*|Out| over achievable splits.
    """
    total = sum(weights)
    for w in weights:
        if w < 1:
            raise InputError(f"component weight {w} must be >= 1")
        if w > n:
            raise InputError(f"component weight {w} exceeds n={n}")
    if total > n - 1:
        raise InputError(f"weights sum to {total}, more than n-1={n - 1}")
    cap = n // 2
    p = len(weights)
    rows: list[list[int]] = [[0] * (p + 1) for _ in range(cap + 1)]
    for j in range(1, p + 1):
        w = weights[j - 1]
        for i in range(cap + 1):
            if w > i:
                rows[i][j] = rows[i][j - 1]
            else:
                rows[i][j] = max(rows[i][j - 1], rows[i - w][j - 1] + w)
    chosen: list[int] = []
    i = cap
    for j in range(p, 0, -1):
        if rows[i][j] == rows[i][j - 1]:
            continue
        chosen.append(j - 1)
        i -= weights[j - 1]
    chosen.reverse()
    return PartitionTable(tuple(tuple(r) for r in rows)), tuple(chosen)


def orient_all_robinson(
    space: Optional[DissimilaritySpace],
    t: Tree,
    verify_premise: bool = False,
) -> tuple[OrientedTree, int]:
    """Optimal compatible orientation under the all-paths-Robinson premise.

    Every component of T minus the centroid is oriented uniformly toward or
    away from it, the In side chosen by the partition table.  The premise is
    the caller's promise unless verify_premise is set (it costs more than
    the algorithm); space may be None when no verification is requested.
    """
    if verify_premise:
        if space is None:
            raise InputError("premise verification needs the dissimilarity space")
        if not verify_all_paths_robinson(space, t):
            raise PreconditionError("some tree path is not Robinson for d")
    elif space is not None and space.n != t.n:
        raise InputError(f"space has {space.n} points but tree has {t.n} vertices")
    n = t.n
    if n == 1:
        return OrientedTree(t, []), 0
    center = find_centroid(t)
    order, parent, size = _sizes_rooted_at(t, center)
    nw = NeighborWeights(center, tuple((y, size[y]) for y in t.adjacency[center]))
    _, chosen = optimal_partition_of_neighbors([th for _, th in nw.neighbors], n)
    inward_heads = {nw.neighbors[i][0] for i in chosen}
    # component head of every vertex (the centroid neighbor above it)
    head = [-1] * n
    for x in order:
        if x == center:
            continue
        head[x] = x if parent[x] == center else head[parent[x]]
    arcs = []
    for u, v in t.edges:
        child = v if parent[v] == u else u
        par = u if child == v else v
        if head[child] in inward_heads:
            arcs.append((child, par))
        else:
            arcs.append((par, child))
    ot = OrientedTree(t, arcs)
    return ot, count_xi(ot)


def has_central_vertex(ot: OrientedTree) -> Optional[int]:
    """A vertex with a directed path to or from every other vertex, if one
    exists (lowest index wins)."""
    n = ot.tree.n
    reach_out = _reach_counts(n, ot.out_adjacency)
    reach_in = _reach_counts(n, ot.in_adjacency)
    for x in range(n):
        if reach_out[x] + reach_in[x] == n - 1:
            return x
    return None


def _reach_counts(n: int, adj) -> list[int]:
    size = [-1] * n
    for root in range(n):
        if size[root] >= 0:
            continue
        stack = [(root, False)]
        while stack:
            x, done = stack.pop()
            if done:
                size[x] = sum(1 + size[y] for y in adj[x])
            elif size[x] < 0:
                stack.append((x, True))
                stack.extend((y, False) for y in adj[x] if size[y] < 0)
    return size
