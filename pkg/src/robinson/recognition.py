"""Two-way-Robinson recognition via segment membership and the C1P.

A space is two-way-Robinson iff some total order makes every segment
S(x,y) an interval, which is a consecutive-ones question on the n x (n^2-n)
segment membership matrix.  Total cost O(n^3).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .c1p import BinaryMatrix, PQTree, frontier, reduce_columns
from .core import DissimilaritySpace, VertexOrder
from .errors import InputError


@dataclass(frozen=True)
class Segment:
    """The set of points lying 'between' x and y in every compatible order."""

    x: int
    y: int
    members: frozenset[int]


@dataclass(frozen=True)
class SegmentMatrix:
    """0/1 membership of each point (row) in each ordered-pair segment
    (column).  Columns (x,y) and (y,x) are identical by construction."""

    matrix: BinaryMatrix
    pairs: tuple[tuple[int, int], ...]  # column labels, aligned with matrix columns


def _membership_tensor(space: DissimilaritySpace) -> np.ndarray:
    """Boolean tensor m[x, y, t] = (t is in S(x, y)), vectorized."""
    d = space.d
    one_sided = (d[:, :, None] >= d[:, None, :]) & (d[:, :, None] >= d.T[None, :, :])
    return one_sided & one_sided.transpose(1, 0, 2)


def segment(space: DissimilaritySpace, x: int, y: int) -> Segment:
    """S(x,y) = {t : d(x,y) >= max(d(x,t), d(t,y)) and d(y,x) >= max(d(y,t), d(t,x))}."""
    if x == y:
        raise InputError("segment anchors must be distinct")
    if not (0 <= x < space.n and 0 <= y < space.n):
        raise InputError(f"segment anchors ({x}, {y}) out of range")
    d = space.d
    dxy, dyx = d[x, y], d[y, x]
    members = frozenset(
        t
        for t in range(space.n)
        if dxy >= d[x, t] and dxy >= d[t, y] and dyx >= d[y, t] and dyx >= d[t, x]
    )
    return Segment(x, y, members)


def build_segment_matrix(space: DissimilaritySpace) -> SegmentMatrix:
    """The full n x (n^2 - n) membership matrix over ordered anchor pairs,
    columns in lexicographic (x, y) order.  O(n^3)."""
    if space.n < 2:
        raise InputError("segment matrix needs at least two points")
    member = _membership_tensor(space)
    pairs = tuple((x, y) for x in range(space.n) for y in range(space.n) if x != y)
    data = [[1 if member[x, y, t] else 0 for (x, y) in pairs] for t in range(space.n)]
    return SegmentMatrix(BinaryMatrix(data), pairs)


def recognize_two_way(space: DissimilaritySpace) -> Optional[tuple[VertexOrder, PQTree]]:
    """A compatible order plus the PQ-tree of all row orders making every
    segment an interval, or None if the space is not two-way-Robinson.

    Ordered-pair columns come in identical (x,y)/(y,x) twins; only the x < y
    half is built.  The returned order is the PQ-tree's leftmost frontier.
    """
    n = space.n
    if n == 1:
        t = reduce_columns(1, [])
        assert t is not None
        return (0,), t
    member = _membership_tensor(space)
    upper = [x * n + y for x in range(n) for y in range(x + 1, n)]
    cols = member.reshape(n * n, n)[upper]
    packed = np.packbits(cols, axis=1)
    seen: set[bytes] = set()
    columns = []
    for idx in range(len(upper)):
        key = packed[idx].tobytes()
        if key in seen:
            continue
        seen.add(key)
        columns.append(frozenset(np.flatnonzero(cols[idx]).tolist()))
    tree = reduce_columns(n, columns)
    if tree is None:
        return None
    return frontier(tree), tree
