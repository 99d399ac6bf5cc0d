"""Shared generators and independent reference checks for the test suite.

Reference implementations here are deliberately literal (triple loops,
exhaustive scans) so they stay independent of the library's faster paths.
"""

from __future__ import annotations

import random
from itertools import permutations

import numpy as np

from robinson import DissimilaritySpace, Tree


def triple_one_way(d, order) -> bool:
    """Literal definition: d(p_i,p_k) >= max(d(p_i,p_j), d(p_j,p_k)) for i<j<k."""
    k = len(order)
    for a in range(k):
        for b in range(a + 1, k):
            for c in range(b + 1, k):
                pa, pb, pc = order[a], order[b], order[c]
                if d[pa][pc] < d[pa][pb] or d[pa][pc] < d[pb][pc]:
                    return False
    return True


def triple_two_way(d, order) -> bool:
    return triple_one_way(d, order) and triple_one_way(d, list(reversed(order)))


def random_space(rng: random.Random, n: int, values=None, symmetric=False) -> DissimilaritySpace:
    """Random space with entries drawn from `values` (uniform reals if None)."""
    d = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if symmetric and j < i:
                d[i, j] = d[j, i]
            else:
                d[i, j] = rng.choice(values) if values else rng.uniform(0.5, 3.0)
    return DissimilaritySpace(d)


def planted_symmetric_robinson(rng: random.Random, n: int) -> tuple[DissimilaritySpace, list[int]]:
    """Symmetric Robinson space built from points on a line, labels shuffled.

    Returns the space and the planted compatible order.
    """
    coords = sorted(rng.uniform(0, 10) for _ in range(n))
    perm = list(range(n))
    rng.shuffle(perm)  # perm[i] = label of the i-th point on the line
    d = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            d[perm[i], perm[j]] = abs(coords[i] - coords[j])
    return DissimilaritySpace(d), perm


def planted_two_way_space(rng: random.Random, n: int) -> tuple[DissimilaritySpace, list[int]]:
    """Asymmetric two-way-Robinson space: independent line metrics drive the
    forward (upper) and backward (lower) triple families."""
    fwd = sorted(rng.uniform(0, 10) for _ in range(n))
    bwd = sorted(rng.uniform(0, 10) for _ in range(n))
    perm = list(range(n))
    rng.shuffle(perm)
    d = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            if i < j:
                d[perm[i], perm[j]] = abs(fwd[i] - fwd[j])
            elif i > j:
                d[perm[i], perm[j]] = abs(bwd[i] - bwd[j])
    return DissimilaritySpace(d), perm


def random_tree(rng: random.Random, n: int) -> Tree:
    """Uniform random labeled tree via a random Pruefer sequence."""
    if n == 1:
        return Tree(1, [])
    if n == 2:
        return Tree(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return tree_from_pruefer(n, seq)


def tree_from_pruefer(n: int, seq: list[int]) -> Tree:
    import heapq

    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Tree(n, edges)


def star_tree(n: int, center: int = 0) -> Tree:
    return Tree(n, [(center, v) for v in range(n) if v != center])


def path_tree(order) -> Tree:
    n = len(order)
    return Tree(n, [(order[i], order[i + 1]) for i in range(n - 1)])


def valid_c1p_perms(matrix) -> set[tuple[int, ...]]:
    """All row permutations making every column's ones consecutive."""
    cols = [c for c in matrix.column_sets() if len(c) > 1]
    good = set()
    for perm in permutations(range(matrix.rows)):
        pos = {r: i for i, r in enumerate(perm)}
        if all(max(pos[r] for r in c) - min(pos[r] for r in c) + 1 == len(c) for c in cols):
            good.add(perm)
    return good


def planted_c1p_matrix(rng: random.Random, rows: int, cols: int):
    """0/1 matrix whose columns are intervals of a hidden row order."""
    from robinson import BinaryMatrix

    hidden = list(range(rows))
    rng.shuffle(hidden)
    data = [[0] * cols for _ in range(rows)]
    for j in range(cols):
        a = rng.randrange(rows)
        b = rng.randrange(rows)
        lo, hi = min(a, b), max(a, b)
        for p in range(lo, hi + 1):
            data[hidden[p]][j] = 1
    return BinaryMatrix(data)
