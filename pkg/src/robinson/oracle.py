"""Exhaustive brute-force references certifying the polynomial algorithms.

Every routine here enumerates the full search space behind a hard size
guard; guards refuse (raise) rather than attempt long runs, so test times
stay predictable.
"""

from __future__ import annotations

from itertools import combinations, permutations
from math import comb
from typing import Optional

from .c1p import BinaryMatrix
from .core import (
    DissimilaritySpace,
    OrientedTree,
    Tree,
    VertexOrder,
    check_compatible,
    count_xi,
    is_two_way_order,
)
from .errors import InputError, SizeGuardError


def brute_optimal_orientation(
    space: DissimilaritySpace, t: Tree, max_n: int = 21
) -> tuple[int, OrientedTree]:
    """Maximum xi over all 2^(n-1) orientations passing check_compatible,
    with a witness.  Enumeration order: edges in stored order, bitmask
    counter; the first orientation attaining the maximum is returned."""
    if t.n > max_n:
        raise SizeGuardError(f"orientation enumeration guarded to n <= {max_n}")
    edges = t.edges
    best = -1
    witness: Optional[OrientedTree] = None
    for mask in range(1 << len(edges)):
        arcs = [
            (v, u) if mask >> i & 1 else (u, v) for i, (u, v) in enumerate(edges)
        ]
        ot = OrientedTree(t, arcs)
        if not check_compatible(space, ot):
            continue
        xi = count_xi(ot)
        if xi > best:
            best = xi
            witness = ot
    assert witness is not None  # the all-length-1 alternating orientation always passes
    return best, witness


def brute_two_way(space: DissimilaritySpace, max_n: int = 8) -> Optional[VertexOrder]:
    """First permutation (lexicographic) passing is_two_way_order, if any."""
    if space.n > max_n:
        raise SizeGuardError(f"permutation search guarded to n <= {max_n}")
    for perm in permutations(range(space.n)):
        if is_two_way_order(space, perm):
            return perm
    return None


def brute_c1p(m: BinaryMatrix, max_rows: int = 8) -> Optional[VertexOrder]:
    """First row permutation making every column's ones consecutive, if any."""
    if m.rows > max_rows:
        raise SizeGuardError(f"row-permutation search guarded to rows <= {max_rows}")
    cols = [c for c in m.column_sets() if len(c) > 1]
    for perm in permutations(range(m.rows)):
        pos = {r: i for i, r in enumerate(perm)}
        if all(max(pos[r] for r in c) - min(pos[r] for r in c) + 1 == len(c) for c in cols):
            return perm
    return None


def brute_robinson_subset(
    space: DissimilaritySpace, kappa: int, max_subsets: int = 10**6
) -> Optional[tuple[int, ...]]:
    """A kappa-subset of the points that is two-way-Robinson, or None.

    Subsets are tried in lexicographic order; each is checked with the
    polynomial recognizer (for symmetric d, two-way-Robinson = Robinson).
    """
    from .recognition import recognize_two_way

    n = space.n
    if not 0 <= kappa <= n:
        raise InputError(f"kappa={kappa} out of range for n={n}")
    if kappa == 0:
        return ()
    if comb(n, kappa) > max_subsets:
        raise SizeGuardError(
            f"C({n},{kappa}) = {comb(n, kappa)} subsets exceeds budget {max_subsets}"
        )
    for subset in combinations(range(n), kappa):
        if recognize_two_way(space.restrict(subset)) is not None:
            return subset
    return None
