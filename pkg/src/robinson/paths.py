"""Optimal orientation of a labeled path under symmetric d.

eta[i] is the farthest position a monotone run starting at i can reach
while staying Robinson; the optimum for a segment is either one monotone
run or a split at a breakpoint that no directed path crosses, which is an
interval DP over (i, j) with eta supplying the base case.

This module is 1-based internally so the two loops mirror the run-table
and DP pseudocode line by line; the public types are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import DissimilaritySpace, OrientedTree, Tree
from .errors import InputError, PreconditionError


@dataclass(frozen=True)
class EtaTable:
    """Farthest-Robinson-run table over path positions (0-based).

    compressed: pairs (i_k, j_k); eta is constant on [i_k, i_{k+1}) with
    value j_k, the first i is 0 and the last j is n-1.
    expanded: eta for every start position 0..n-2.
    """

    compressed: tuple[tuple[int, int], ...]
    expanded: tuple[int, ...]


@dataclass(frozen=True)
class PathDPTables:
    """m[i][j]: max directed-path count over compatible orientations of
    positions i..j.  p[i][j] = 0 means a monotone run is optimal; otherwise
    it is a breakpoint k (i < k < j) with m[i][j] = m[i][k] + m[k][j].
    0-based positions."""

    m: tuple[tuple[int, ...], ...]
    p: tuple[tuple[int, ...], ...]


def _check_path_inputs(space: DissimilaritySpace, order: Sequence[int]) -> None:
    if not space.is_symmetric:
        raise PreconditionError("path orientation requires a symmetric dissimilarity")
    if sorted(order) != list(range(space.n)):
        raise InputError("order must be a permutation of all vertices")


def _eta_compressed_1b(d, x: Sequence[int], n: int) -> list[tuple[int, int]]:
    # x[1..n] is the path; emits (i_k, j_k) with eta constant on [i_k, i_{k+1})
    res: list[tuple[int, int]] = []
    i = 1
    j = 3
    while j <= n:
        k = j
        while (
            k > i
            and d[x[j], x[k]] <= d[x[j], x[k - 1]]
            and d[x[j - 1], x[k - 1]] <= d[x[j], x[k - 1]]
        ):
            k -= 1
        if k > i:
            res.append((i, j - 1))
            i = k
        j += 1
    res.append((i, n))
    return res


def eta_table(space: DissimilaritySpace, order: Sequence[int]) -> EtaTable:
    """Run-length table of the farthest Robinson run from each start.  O(n^2)."""
    _check_path_inputs(space, order)
    n = len(order)
    x = [0] + list(order)  # 1-based view
    compressed = _eta_compressed_1b(space.d, x, n)
    expanded = [0] * max(n - 1, 0)
    for idx, (i_k, j_k) in enumerate(compressed):
        nxt = compressed[idx + 1][0] if idx + 1 < len(compressed) else n
        for pos in range(i_k, nxt):
            if pos <= n - 1:
                expanded[pos - 1] = j_k
    return EtaTable(
        tuple((i - 1, j - 1) for i, j in compressed),
        tuple(e - 1 for e in expanded),
    )


def path_orientation(
    space: DissimilaritySpace,
    order: Sequence[int],
    restricted_splits: bool = False,
) -> tuple[PathDPTables, OrientedTree, int]:
    """Interval DP over path segments; returns the tables, an orientation
    attaining m[first][last], and that count.  O(n^3).

    With restricted_splits, interior candidates are limited to the positions
    appearing in the compressed eta sequence (same optimum, fewer k's).
    """
    _check_path_inputs(space, order)
    n = len(order)
    if n == 1:
        tables = PathDPTables(((0,),), ((0,),))
        return tables, OrientedTree(Tree(1, []), []), 0
    eta = eta_table(space, order)
    eta1 = [0] + [e + 1 for e in eta.expanded]  # 1-based values per 1-based start
    m = [[0] * (n + 1) for _ in range(n + 1)]
    pmat = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            if i < j and j <= eta1[i]:
                m[i][j] = (j - i + 1) * (j - i) // 2
    if restricted_splits:
        cand = sorted(
            {i + 1 for i, _ in eta.compressed[1:]} | {j + 1 for _, j in eta.compressed}
        )
    else:
        cand = list(range(1, n + 1))
    for span in range(1, n):
        for i in range(1, n - span + 1):
            j = i + span
            for k in cand:
                if k <= i:
                    continue
                if k >= j:
                    break
                if m[i][j] < m[i][k] + m[k][j]:
                    m[i][j] = m[i][k] + m[k][j]
                    pmat[i][j] = k
    tables = PathDPTables(
        tuple(tuple(m[i][j] for j in range(1, n + 1)) for i in range(1, n + 1)),
        tuple(
            tuple(pmat[i][j] - 1 if pmat[i][j] else 0 for j in range(1, n + 1))
            for i in range(1, n + 1)
        ),
    )
    ot = reconstruct_orientation(tables, space, order)
    return tables, ot, m[1][n]


def reconstruct_orientation(
    tables: PathDPTables, space: DissimilaritySpace, order: Sequence[int]
) -> OrientedTree:
    """Split recursively at the recorded breakpoints, then orient the
    resulting monotone runs alternately starting left-to-right, so every
    breakpoint is a local source or sink.  O(n)."""
    n = len(order)
    tree = Tree(n, [(order[t], order[t + 1]) for t in range(n - 1)])
    if n == 1:
        return OrientedTree(tree, [])
    p = tables.p
    breaks: list[int] = []
    stack = [(0, n - 1)]
    while stack:
        i, j = stack.pop()
        k = p[i][j]
        if k == 0:
            continue
        if not i < k < j:
            raise InputError(f"inconsistent DP tables: split {k} outside ({i}, {j})")
        breaks.append(k)
        stack.append((i, k))
        stack.append((k, j))
    bounds = [0] + sorted(breaks) + [n - 1]
    arcs: list[tuple[int, int]] = []
    for run, (lo, hi) in enumerate(zip(bounds, bounds[1:])):
        for a in range(lo, hi):
            u, v = order[a], order[a + 1]
            arcs.append((u, v) if run % 2 == 0 else (v, u))
    return OrientedTree(tree, arcs)
