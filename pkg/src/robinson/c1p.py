"""Consecutive-ones property testing over 0/1 matrices, with PQ-trees.

Booth-Lueker style template reduction, one column at a time.  Per-column
cost is linear in the tree size rather than amortized-linear overall; at the
desk scale this package targets (hundreds of rows) that is irrelevant, and
correctness is the contract.

A P-node's children may be permuted arbitrarily, a Q-node's children may
only be reversed.  The frontier (leaves left to right) of any arrangement
is a row order making every processed column's ones consecutive, and the
set of frontiers is exactly the set of valid row orders.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Iterator, Optional, Sequence

from .errors import InputError, SizeGuardError

LEAF = "leaf"
P = "P"
Q = "Q"

_EMPTY, _FULL, _PARTIAL = 0, 1, 2


class _Node:
    __slots__ = ("kind", "children", "row")

    def __init__(self, kind: str, children: Optional[list["_Node"]] = None, row: int = -1):
        self.kind = kind
        self.children: list[_Node] = children if children is not None else []
        self.row = row

    def __repr__(self) -> str:  # debugging aid
        if self.kind == LEAF:
            return str(self.row)
        return f"{self.kind}({', '.join(map(repr, self.children))})"


def _make_p(children: list[_Node]) -> _Node:
    if len(children) == 1:
        return children[0]
    return _Node(P, children)


def _make_q(children: list[_Node]) -> _Node:
    # a Q-node with two children is equivalent to a P-node with two children
    if len(children) == 1:
        return children[0]
    if len(children) == 2:
        return _Node(P, children)
    return _Node(Q, children)


@dataclass(frozen=True)
class BinaryMatrix:
    """A rectangular 0/1 matrix, stored by rows."""

    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]

    def __init__(self, data: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in data)
        if not rows:
            raise InputError("binary matrix needs at least one row")
        width = len(rows[0])
        for r in rows:
            if len(r) != width:
                raise InputError("binary matrix rows must have equal length")
            if any(x not in (0, 1) for x in r):
                raise InputError("binary matrix entries must be 0 or 1")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "data", rows)

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Iterable[int]]) -> "BinaryMatrix":
        """Build from per-column row-index sets."""
        sets = [set(c) for c in columns]
        return cls([[1 if r in s else 0 for s in sets] for r in range(rows)])

    def column_set(self, j: int) -> frozenset[int]:
        return frozenset(r for r in range(self.rows) if self.data[r][j])

    def column_sets(self) -> list[frozenset[int]]:
        return [self.column_set(j) for j in range(self.cols)]


@dataclass(eq=False)
class PQTree:
    """Result of a successful C1P reduction; frontier set = valid row orders."""

    _root: _Node
    num_leaves: int

    def to_nested(self):
        """Nested-tuple view, e.g. ('P', (0, ('Q', (1, 2, 3)))); for tests."""

        def conv(node: _Node):
            if node.kind == LEAF:
                return node.row
            return (node.kind, tuple(conv(c) for c in node.children))

        return conv(self._root)

    def validate(self) -> None:
        """Assert structural invariants (leaf coverage, node arities)."""
        leaves: list[int] = []
        stack = [self._root]
        while stack:
            node = stack.pop()
            if node.kind == LEAF:
                leaves.append(node.row)
            else:
                k = len(node.children)
                if node.kind == P and k < 2:
                    raise AssertionError(f"P-node with {k} children")
                if node.kind == Q and k < 3:
                    raise AssertionError(f"Q-node with {k} children")
                stack.extend(node.children)
        if sorted(leaves) != list(range(self.num_leaves)):
            raise AssertionError("leaves are not exactly the row indices")


def frontier(t: PQTree) -> tuple[int, ...]:
    """Row order read off the leaves left to right in the current arrangement."""
    out: list[int] = []
    stack = [t._root]
    while stack:
        node = stack.pop()
        if node.kind == LEAF:
            out.append(node.row)
        else:
            stack.extend(reversed(node.children))
    return tuple(out)


def enumerate_frontiers(t: PQTree, max_leaves: int = 8) -> set[tuple[int, ...]]:
    """All frontiers of the tree (testing aid; guarded against blow-up)."""
    if t.num_leaves > max_leaves:
        raise SizeGuardError(f"frontier enumeration limited to {max_leaves} leaves")

    def orders(node: _Node) -> Iterator[tuple[int, ...]]:
        if node.kind == LEAF:
            yield (node.row,)
            return
        if node.kind == P:
            arrangements: Iterable[Sequence[_Node]] = permutations(node.children)
        else:
            arrangements = (node.children, list(reversed(node.children)))
        for arr in arrangements:
            for parts in product(*(tuple(orders(c)) for c in arr)):
                yield tuple(x for part in parts for x in part)

    return set(orders(t._root))


def _counts(root: _Node, s: frozenset[int]) -> tuple[dict[int, int], dict[int, int]]:
    """Per-node pertinent-leaf counts and total-leaf counts (keyed by id)."""
    counts: dict[int, int] = {}
    totals: dict[int, int] = {}

    def walk(node: _Node) -> tuple[int, int]:
        if node.kind == LEAF:
            c, t = (1 if node.row in s else 0), 1
        else:
            c = t = 0
            for ch in node.children:
                cc, tt = walk(ch)
                c += cc
                t += tt
        counts[id(node)] = c
        totals[id(node)] = t
        return c, t

    walk(root)
    return counts, totals


def _match_q(seq: list[tuple[int, object]]) -> Optional[list[_Node]]:
    """Read the child sequence as empties, then at most one partial, then
    fulls; return the flattened empty-to-full payload, or None."""
    payload: list[_Node] = []
    i, n = 0, len(seq)
    while i < n and seq[i][0] == _EMPTY:
        payload.append(seq[i][1])  # type: ignore[arg-type]
        i += 1
    if i < n and seq[i][0] == _PARTIAL:
        payload.extend(seq[i][1])  # type: ignore[arg-type]
        i += 1
    while i < n and seq[i][0] == _FULL:
        payload.append(seq[i][1])  # type: ignore[arg-type]
        i += 1
    return payload if i == n else None


def _reduce_node(node: _Node, counts: dict[int, int], totals: dict[int, int], root: bool):
    """Apply the reduction templates.

    Non-root: returns (_EMPTY|_FULL, node) or (_PARTIAL, payload) where the
    payload is a flat list of nodes ordered empty side to full side, to be
    materialized as (part of) a Q-node by the caller; None means the column
    cannot be made consecutive.
    Root (pertinent root): returns the replacement node, or None.
    """
    if node.kind == LEAF:
        state = _FULL if counts[id(node)] else _EMPTY
        return node if root else (state, node)

    if node.kind == P:
        empties: list[_Node] = []
        fulls: list[_Node] = []
        partials: list[list[_Node]] = []
        for c in node.children:
            k = counts[id(c)]
            if k == 0:
                empties.append(c)
            elif k == totals[id(c)]:
                fulls.append(c)
            else:
                res = _reduce_node(c, counts, totals, False)
                if res is None:
                    return None
                partials.append(res[1])
        if not root:
            if not partials:
                if not empties:
                    return (_FULL, node)
                if not fulls:
                    return (_EMPTY, node)
                return (_PARTIAL, [_make_p(empties), _make_p(fulls)])
            if len(partials) == 1:
                payload = [_make_p(empties)] if empties else []
                payload.extend(partials[0])
                if fulls:
                    payload.append(_make_p(fulls))
                return (_PARTIAL, payload)
            return None
        # pertinent root
        if not partials:
            if not empties:
                return node  # entire subtree is full: already a block
            mid = [_make_p(fulls)]
        elif len(partials) == 1:
            inner = list(partials[0])
            if fulls:
                inner.append(_make_p(fulls))
            mid = [_make_q(inner)]
        elif len(partials) == 2:
            inner = list(partials[0])
            if fulls:
                inner.append(_make_p(fulls))
            inner.extend(reversed(partials[1]))
            mid = [_make_q(inner)]
        else:
            return None
        children = empties + mid
        if len(children) == 1:
            return children[0]
        node.children = children
        return node

    # Q-node
    seq: list[tuple[int, object]] = []
    for c in node.children:
        k = counts[id(c)]
        if k == 0:
            seq.append((_EMPTY, c))
        elif k == totals[id(c)]:
            seq.append((_FULL, c))
        else:
            res = _reduce_node(c, counts, totals, False)
            if res is None:
                return None
            seq.append((_PARTIAL, res[1]))
    if not root:
        payload = _match_q(seq)
        if payload is None:
            payload = _match_q(list(reversed(seq)))
        if payload is None:
            return None
        return (_PARTIAL, payload)
    # pertinent root: empties, optional partial, fulls, optional partial, empties
    states = [s for s, _ in seq]
    block = [i for i, s in enumerate(states) if s != _EMPTY]
    lo, hi = block[0], block[-1]
    if hi - lo + 1 != len(block):
        return None
    if any(states[i] != _FULL for i in range(lo + 1, hi)):
        return None
    children: list[_Node] = [item for _, item in seq[:lo]]  # type: ignore[misc]
    first_state, first_item = seq[lo]
    if first_state == _PARTIAL:
        children.extend(first_item)  # type: ignore[arg-type]
    else:
        children.append(first_item)  # type: ignore[arg-type]
    children.extend(item for _, item in seq[lo + 1 : hi])  # type: ignore[misc]
    if hi > lo:
        last_state, last_item = seq[hi]
        if last_state == _PARTIAL:
            children.extend(reversed(last_item))  # type: ignore[arg-type]
        else:
            children.append(last_item)  # type: ignore[arg-type]
    children.extend(item for _, item in seq[hi + 1 :])  # type: ignore[misc]
    node.children = children
    return node


def _reduce(root: _Node, s: frozenset[int]) -> Optional[_Node]:
    counts, totals = _counts(root, s)
    size = len(s)
    # descend to the pertinent root: deepest node containing all of s
    path: list[_Node] = []
    node = root
    while node.kind != LEAF:
        nxt = None
        for c in node.children:
            if counts[id(c)] == size:
                nxt = c
                break
        if nxt is None:
            break
        path.append(node)
        node = nxt
    replacement = _reduce_node(node, counts, totals, True)
    if replacement is None:
        return None
    if not path:
        return replacement
    if replacement is not node:
        parent = path[-1]
        parent.children[parent.children.index(node)] = replacement
    return root


def reduce_columns(rows: int, columns: Iterable[frozenset[int]]) -> Optional[PQTree]:
    """Reduce a universal tree by the given row-index sets, in order.

    Trivial columns (at most one 1 or all rows) and duplicates impose
    nothing new and are skipped.  The shared core behind test_c1p and the
    segment-matrix recognizer.
    """
    if rows == 1:
        return PQTree(_Node(LEAF, row=0), 1)
    root = _Node(P, [_Node(LEAF, row=r) for r in range(rows)])
    seen: set[frozenset[int]] = set()
    limit = sys.getrecursionlimit()
    if limit < 10 * rows + 1000:
        sys.setrecursionlimit(10 * rows + 1000)
    try:
        for s in columns:
            if len(s) <= 1 or len(s) == rows or s in seen:
                continue
            seen.add(s)
            result = _reduce(root, s)
            if result is None:
                return None
            root = result
    finally:
        if sys.getrecursionlimit() != limit:
            sys.setrecursionlimit(limit)
    return PQTree(root, rows)


def test_c1p(m: BinaryMatrix) -> Optional[PQTree]:
    """PQ-tree of all row orders making every column's ones consecutive,
    or None if no such order exists.

    Columns with at most one 1, full columns, and duplicate columns impose
    nothing new and are filtered first.
    """
    return reduce_columns(m.rows, m.column_sets())


test_c1p.__test__ = False  # keep pytest from collecting the library function
