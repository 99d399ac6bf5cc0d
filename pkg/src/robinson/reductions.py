"""Hardness-reduction instance constructors and forward-direction checks.

Three generator families:

* a 3-CNF maps to a tree plus {1,2}-valued dissimilarity whose optimal
  orientation count hits a closed-form target exactly when the formula is
  satisfiable; satisfying assignments yield checkable witness orientations;
* a graph maps to a space whose largest Robinson subset encodes a
  Hamiltonian path;
* a (space, kappa) pair maps to an oriented path whose compatible
  assignments encode Robinson subsets of size kappa.

Only the constructions and the forward (witness) direction are implemented;
deciding satisfiability or exhausting the converse direction is out of
scope by design.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .core import DissimilaritySpace, OrientedTree, Tree
from .errors import InputError

# truth values of the three literals, one row per z-pattern, in the fixed
# order: exactly-one-true (3 rows), exactly-two-true (3 rows), all-true
_LITERAL_TRUTH_PATTERNS: tuple[tuple[bool, bool, bool], ...] = (
    (True, False, False),
    (False, True, False),
    (False, False, True),
    (True, True, False),
    (True, False, True),
    (False, True, True),
    (True, True, True),
)
_PATTERN_INDEX = {p: k + 1 for k, p in enumerate(_LITERAL_TRUTH_PATTERNS)}


@dataclass(frozen=True)
class Cnf3:
    """A 3-CNF: clauses are triples of signed 1-based variable indices."""

    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __init__(self, num_vars: int, clauses: Iterable[Sequence[int]]):
        cl = tuple(tuple(int(x) for x in c) for c in clauses)
        if num_vars < 1:
            raise InputError("formula needs at least one variable")
        for c in cl:
            if len(c) != 3:
                raise InputError(f"clause {c} must have exactly 3 literals")
            for lit in c:
                if lit == 0 or not 1 <= abs(lit) <= num_vars:
                    raise InputError(f"literal {lit} out of range")
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "clauses", cl)

    def evaluate(self, assignment: Sequence[bool]) -> bool:
        if len(assignment) != self.num_vars:
            raise InputError("assignment must cover all variables")
        return all(
            any(assignment[abs(lit) - 1] == (lit > 0) for lit in c) for c in self.clauses
        )


def parse_dimacs(text: str) -> Cnf3:
    """DIMACS CNF with a `p cnf n m` header; clauses terminated by 0.
    Clauses with other than three literals are rejected."""
    num_vars = num_clauses = -1
    literals: list[int] = []
    clauses: list[list[int]] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise InputError(f"bad DIMACS header: {line!r}")
            num_vars, num_clauses = int(parts[2]), int(parts[3])
            continue
        for tok in line.split():
            v = int(tok)
            if v == 0:
                clauses.append(literals)
                literals = []
            else:
                literals.append(v)
    if num_vars < 0:
        raise InputError("missing DIMACS header")
    if literals:
        clauses.append(literals)  # tolerate a missing final 0
    if num_clauses >= 0 and len(clauses) != num_clauses:
        raise InputError(f"header promises {num_clauses} clauses, found {len(clauses)}")
    return Cnf3(num_vars, clauses)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph, no loops or multi-edges; m need not be n-1."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        es = tuple((int(u), int(v)) for u, v in edges)
        seen = set()
        for u, v in es:
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range")
            key = frozenset((u, v))
            if key in seen:
                raise InputError(f"duplicate edge ({u}, {v})")
            seen.add(key)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", es)


@dataclass(frozen=True)
class OrientationInstance:
    """Tree + dissimilarity + path-count target built from a 3-CNF.

    Vertex layout: the hub first, then one selector per variable, then per
    variable its plus-leaf and minus-leaf families, then 7 clause vertices
    per clause.  vertex_roles records the readable name of each index.
    """

    tree: Tree
    space: DissimilaritySpace
    kappa: int
    vertex_roles: dict[int, str]
    cnf: Cnf3

    @property
    def leaves_per_family(self) -> int:
        return 7 * len(self.cnf.clauses) + 2

    def x_index(self, i: int) -> int:
        return i

    def plus_index(self, i: int, k: int) -> int:
        L = self.leaves_per_family
        return 1 + self.cnf.num_vars + (i - 1) * 2 * L + (k - 1)

    def minus_index(self, i: int, k: int) -> int:
        return self.plus_index(i, k) + self.leaves_per_family

    def z_index(self, j: int, l: int) -> int:
        n, L = self.cnf.num_vars, self.leaves_per_family
        return 1 + n + 2 * n * L + (j - 1) * 7 + (l - 1)


def orientation_kappa(num_vars: int, num_clauses: int) -> int:
    """Closed-form path-count target for the 3-CNF construction."""
    n, m = num_vars, num_clauses
    L = 7 * m + 2
    return (
        7 * m + 5 * n + 14 * n * m  # the edges themselves
        + n * L * L  # plus-to-minus leaf pairs through each selector
        + n * m  # selector -> hub -> chosen clause vertex
        + n * L  # inward leaves reaching the hub
        + n * m * L  # inward leaves reaching chosen clause vertices
        + 6 * m * m  # inward clause vertices reaching chosen ones
    )


def _family_sign(lit: int, literal_true: bool) -> bool:
    """True means the minus family carries the d=1 tie for this pattern.

    The minus family is tied exactly when the pattern makes the literal's
    variable True (its plus family then reaches the hub)."""
    return literal_true == (lit > 0)


def build_orientation_instance(cnf: Cnf3) -> OrientationInstance:
    """The tree and {1,2} dissimilarity encoding the formula, with kappa."""
    n, m = cnf.num_vars, len(cnf.clauses)
    for c in cnf.clauses:
        if len({abs(lit) for lit in c}) != 3:
            raise InputError(f"clause {c} repeats a variable")
    L = 7 * m + 2
    total = 1 + n + 2 * n * L + 7 * m
    roles: dict[int, str] = {0: "y"}
    edges: list[tuple[int, int]] = [(0, i) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        roles[i] = f"x{i}"
    plus0 = lambda i: 1 + n + (i - 1) * 2 * L  # noqa: E731
    for i in range(1, n + 1):
        base = plus0(i)
        for k in range(1, L + 1):
            roles[base + k - 1] = f"x{i}+{k}"
            roles[base + L + k - 1] = f"x{i}-{k}"
            edges.append((i, base + k - 1))
        for k in range(1, L + 1):
            edges.append((i, base + L + k - 1))
    zbase = 1 + n + 2 * n * L
    for j in range(1, m + 1):
        for l in range(1, 8):
            idx = zbase + (j - 1) * 7 + (l - 1)
            roles[idx] = f"z{j}_{l}"
            edges.append((0, idx))
    tree = Tree(total, edges)

    d = np.full((total, total), 2.0)
    xs = np.arange(1, n + 1)
    d[np.ix_(xs, xs)] = 1.0
    for i in range(1, n + 1):
        plus = np.arange(plus0(i), plus0(i) + L)
        minus = plus + L
        d[np.ix_(plus, plus)] = 1.0
        d[np.ix_(minus, minus)] = 1.0
    for j, clause in enumerate(cnf.clauses, start=1):
        for l, pattern in enumerate(_LITERAL_TRUTH_PATTERNS, start=1):
            z = zbase + (j - 1) * 7 + (l - 1)
            for lit, lit_true in zip(clause, pattern):
                i = abs(lit)
                base = plus0(i) + (L if _family_sign(lit, lit_true) else 0)
                fam = np.arange(base, base + L)
                d[z, fam] = 1.0
                d[fam, z] = 1.0
    np.fill_diagonal(d, 0.0)
    return OrientationInstance(
        tree, DissimilaritySpace(d), orientation_kappa(n, m), roles, cnf
    )


def witness_orientation(
    inst: OrientationInstance, assignment: Sequence[bool]
) -> Optional[OrientedTree]:
    """The canonical compatible orientation encoding a satisfying
    assignment (selectors to the hub, leaf families by variable value, one
    outward clause vertex per clause), or None if the assignment does not
    satisfy the formula."""
    cnf = inst.cnf
    if len(assignment) != cnf.num_vars:
        raise InputError("assignment must cover all variables")
    if not cnf.evaluate(assignment):
        return None
    arcs: list[tuple[int, int]] = []
    for i in range(1, cnf.num_vars + 1):
        arcs.append((i, 0))
        for k in range(1, inst.leaves_per_family + 1):
            plus, minus = inst.plus_index(i, k), inst.minus_index(i, k)
            if assignment[i - 1]:
                arcs.append((plus, i))
                arcs.append((i, minus))
            else:
                arcs.append((minus, i))
                arcs.append((i, plus))
    for j, clause in enumerate(cnf.clauses, start=1):
        truths = tuple(assignment[abs(lit) - 1] == (lit > 0) for lit in clause)
        chosen = _PATTERN_INDEX[truths]
        for l in range(1, 8):
            z = inst.z_index(j, l)
            arcs.append((0, z) if l == chosen else (z, 0))
    return OrientedTree(inst.tree, arcs)


@dataclass(frozen=True)
class SubsetInstance:
    """Space + kappa built from a graph for the Robinson-subset question."""

    space: DissimilaritySpace
    kappa: int
    vertex_roles: dict[int, str]
    graph: SimpleGraph

    def x_index(self, i: int, k: int) -> int:
        m = len(self.graph.edges)
        return (i - 1) * (m + 1) + (k - 1)

    def y_index(self, j: int) -> int:
        m = len(self.graph.edges)
        return self.graph.n * (m + 1) + (j - 1)


def build_subset_instance(g: SimpleGraph) -> SubsetInstance:
    """n*(m+1) clones per graph vertex plus one point per edge; clone blocks
    are mutually close, each edge point is close to its endpoints' blocks,
    everything else is far.  kappa = n*(m+1) + n - 1."""
    n, m = g.n, len(g.edges)
    if m < 1:
        raise InputError("graph needs at least one edge")
    total = n * (m + 1) + m
    d = np.full((total, total), 2.0)
    roles: dict[int, str] = {}
    for i in range(1, n + 1):
        block = np.arange((i - 1) * (m + 1), i * (m + 1))
        d[np.ix_(block, block)] = 1.0
        for k in range(1, m + 2):
            roles[(i - 1) * (m + 1) + k - 1] = f"x{i}^{k}"
    for j, (u, v) in enumerate(g.edges, start=1):
        y = n * (m + 1) + (j - 1)
        roles[y] = f"y{j}"
        for w in (u, v):
            block = np.arange(w * (m + 1), (w + 1) * (m + 1))
            d[y, block] = 1.0
            d[block, y] = 1.0
    np.fill_diagonal(d, 0.0)
    return SubsetInstance(DissimilaritySpace(d), n * (m + 1) + n - 1, roles, g)


def build_assignment_instance(space: DissimilaritySpace, kappa: int) -> OrientedTree:
    """The oriented path whose compatible assignments are exactly the
    bijections placing a Robinson subset of size kappa on the monotone
    prefix: positions 1..kappa run forward, the tail alternates so every
    maximal directed path there has a single edge."""
    n = space.n
    if not 1 <= kappa <= n:
        raise InputError(f"kappa={kappa} out of range for n={n}")
    tree = Tree(n, [(t, t + 1) for t in range(n - 1)])
    arcs: list[tuple[int, int]] = []
    for t in range(1, n):  # 1-based edge between positions t and t+1
        if t <= kappa - 1:
            arcs.append((t - 1, t))
        elif (t - kappa) % 2 == 0:
            arcs.append((t, t - 1))
        else:
            arcs.append((t - 1, t))
    return OrientedTree(tree, arcs)
