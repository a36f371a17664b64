"""
Weylham - Root Core
Purpose: Exact-integer root systems, bases, reflections and FGRS axiom validation
Version: 1.0.0
Date: 2026-10-19

This module performs:
- Lattice coordinates relative to an ordered base (exact Gauss-Jordan over Fractions)
- Cartan integers as root-string lengths, reflections B -> B^(i), matrices G^B_i
- Sign splitting R = R^+_B u R^-_B and the dihedral counts m^B_ij
- Axiom checks (R1)-(R3) by a BFS closure over all reachable bases
- Reducibility detection, component subsystems and direct sums

Generator indices are 1-based throughout; an index outside 1..rank raises IndexError.
"""

from collections import defaultdict, deque
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Optional, Sequence, Union
import logging

import networkx as nx

from src.errors import (
    AxiomViolation,
    CapExceeded,
    DuplicateRoot,
    MixedSigns,
    NotABase,
    ParseError,
    RankMismatch,
    Unbounded,
    WeylhamError,
)
from src.state.schemas import (
    BaseTuple,
    CoordVector,
    OrderedBase,
    ReducibleSplit,
    ReflectionMatrix,
    RootSystem,
    ValidationReport,
)
from src.utils.settings import get_settings

logger = logging.getLogger(__name__)

BaseLike = Union[OrderedBase, BaseTuple, Sequence[CoordVector]]


# ============================================================================
# CONSTRUCTION
# ============================================================================

def negate(v: CoordVector) -> CoordVector:
    return tuple(-x for x in v)


def from_positive_roots(
    rank: int, positives: Iterable[Sequence[int]], name: Optional[str] = None
) -> RootSystem:
    """
    Build a RootSystem from its positive half.

    Args:
        rank: Lattice rank
        positives: Positive roots in reference coordinates, each listed once
        name: Optional tag

    Returns:
        RootSystem whose roots are the positives and their negatives

    Raises:
        ParseError: empty list or zero vector
        RankMismatch: a vector of the wrong length
        DuplicateRoot: a root listed twice
    """
    seen: list[CoordVector] = []
    for raw in positives:
        vec = tuple(int(x) for x in raw)
        if len(vec) != rank:
            raise RankMismatch(f"root {vec} has length {len(vec)}, expected {rank}", witness=vec)
        if not any(vec):
            raise ParseError("the zero vector is not a root")
        if vec in seen:
            raise DuplicateRoot(f"root {vec} listed twice", witness=vec)
        seen.append(vec)
    if not seen:
        raise ParseError("no positive roots given")
    roots = frozenset(seen) | frozenset(negate(v) for v in seen)
    return RootSystem(rank=rank, roots=roots, name=name)


def direct_sum(first: RootSystem, second: RootSystem) -> RootSystem:
    """Block-diagonal sum; indices of `second` follow those of `first`."""
    pad_a = (0,) * second.rank
    pad_b = (0,) * first.rank
    roots = {r + pad_a for r in first.roots} | {pad_b + r for r in second.roots}
    name = None
    if first.name and second.name:
        name = f"{first.name}+{second.name}"
    return RootSystem(rank=first.rank + second.rank, roots=frozenset(roots), name=name)


def component_systems(system: RootSystem, part: Sequence[int]) -> RootSystem:
    """
    R' = R n a' where a' is spanned by the reference roots in `part`.

    The result is expressed in the coordinates of `part` (kept in ascending order).
    """
    indices = sorted(part)
    for i in indices:
        _check_index(system.rank, i)
    keep = [i - 1 for i in indices]
    outside = [k for k in range(system.rank) if k not in keep]
    roots = frozenset(
        tuple(r[k] for k in keep) for r in system.roots if all(r[k] == 0 for k in outside)
    )
    return RootSystem(rank=len(indices), roots=roots, name=None)


# ============================================================================
# EXACT COORDINATES
# ============================================================================

def _as_tuple(base: BaseLike) -> BaseTuple:
    if isinstance(base, OrderedBase):
        return base.roots
    return tuple(tuple(v) for v in base)


def _check_index(rank: int, i: int) -> None:
    if not 1 <= i <= rank:
        raise IndexError(f"generator index {i} outside 1..{rank}")


@lru_cache(maxsize=1 << 16)
def _inverse(base: BaseTuple) -> tuple[tuple[int, ...], ...]:
    """
    Inverse of the matrix whose columns are the base vectors.

    Raises NotABase unless the matrix is unimodular.
    """
    n = len(base)
    if any(len(v) != n for v in base):
        raise NotABase(f"base vectors must have length {n}", witness=base)
    # augmented [M | I] with M[r][c] = base[c][r]
    rows = [
        [Fraction(base[c][r]) for c in range(n)] + [Fraction(int(r == k)) for k in range(n)]
        for r in range(n)
    ]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            raise NotABase("base vectors are linearly dependent", witness=base)
        rows[col], rows[pivot] = rows[pivot], rows[col]
        lead = rows[col][col]
        rows[col] = [x / lead for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    inverse = [row[n:] for row in rows]
    if any(x.denominator != 1 for row in inverse for x in row):
        raise NotABase("base is not a lattice basis (determinant is not +-1)", witness=base)
    return tuple(tuple(int(x) for x in row) for row in inverse)


def base_coordinates(base: BaseLike, v: Sequence[int]) -> CoordVector:
    """Integer coordinates c with v = sum_k c_k alpha^B_k."""
    inv = _inverse(_as_tuple(base))
    return tuple(sum(a * x for a, x in zip(row, v)) for row in inv)


def _check_base(system: RootSystem, base: BaseTuple) -> None:
    if len(base) != system.rank:
        raise NotABase(f"base has {len(base)} vectors, rank is {system.rank}", witness=base)
    _inverse(base)
    missing = [v for v in base if v not in system.roots]
    if missing:
        raise NotABase(f"base vectors {missing} are not roots", witness=base)


# ============================================================================
# SIGNS, CARTAN INTEGERS, REFLECTIONS
# ============================================================================

def _positive_coordinates(system: RootSystem, base: BaseTuple) -> dict[CoordVector, CoordVector]:
    """Map each B-positive root to its B-coordinates; MixedSigns on failure."""
    positives = {}
    for root in system.roots:
        coords = base_coordinates(base, root)
        if all(c >= 0 for c in coords):
            positives[root] = coords
        elif not all(c <= 0 for c in coords):
            raise MixedSigns(
                f"root {root} has coordinates {coords} of both signs", witness=root
            )
    return positives


def split_signs(
    system: RootSystem, base: BaseLike
) -> tuple[frozenset[CoordVector], frozenset[CoordVector]]:
    """
    Partition the roots into B-positive and B-negative halves.

    Args:
        system: Root system
        base: A lattice basis made of roots

    Returns:
        (positive set, negative set) in reference coordinates

    Raises:
        NotABase: base is not a lattice basis inside the root set
        MixedSigns: some root has coordinates of both signs
    """
    b = _as_tuple(base)
    _check_base(system, b)
    positives = frozenset(_positive_coordinates(system, b))
    negatives = frozenset(negate(v) for v in positives)
    if positives | negatives != system.roots or positives & negatives:
        raise MixedSigns("positive and negative halves do not partition the roots")
    return positives, negatives


def _string_length(roots: frozenset[CoordVector], alpha: CoordVector, beta: CoordVector, cap: int) -> int:
    t = 0
    current = beta
    while True:
        current = tuple(b + a for a, b in zip(alpha, current))
        if current not in roots:
            return t
        t += 1
        if t > cap:
            raise Unbounded(f"root string through {beta} along {alpha} exceeds {cap}")


def cartan_integer(system: RootSystem, base: BaseLike, i: int, j: int) -> int:
    """
    N^{R,B}_ij: -2 on the diagonal, else max{t >= 0 : alpha_j + t alpha_i in R}.

    Example:
        >>> cartan_integer(r_hat_1, r_hat_1.reference_base, 1, 2)
        1
    """
    b = _as_tuple(base)
    _check_index(system.rank, i)
    _check_index(system.rank, j)
    _check_base(system, b)
    if i == j:
        return -2
    return _string_length(system.roots, b[i - 1], b[j - 1], get_settings().string_cap)


def _reflect(roots: frozenset[CoordVector], base: BaseTuple, i: int, cap: int) -> BaseTuple:
    alpha = base[i - 1]
    out = []
    for j, beta in enumerate(base, start=1):
        if j == i:
            out.append(negate(alpha))
        else:
            n = _string_length(roots, alpha, beta, cap)
            out.append(tuple(b + n * a for a, b in zip(alpha, beta)))
    return tuple(out)


def reflect_base(system: RootSystem, base: BaseLike, i: int) -> OrderedBase:
    """
    B^(i) = (alpha_j + N_ij alpha_i)_j with -alpha_i in position i.

    Raises:
        NotABase: the input is not a base
        AxiomViolation: the reflected tuple is not a base of R
    """
    b = _as_tuple(base)
    _check_index(system.rank, i)
    split_signs(system, b)
    reflected = _reflect(system.roots, b, i, get_settings().string_cap)
    try:
        split_signs(system, reflected)
    except (NotABase, MixedSigns) as e:
        raise AxiomViolation(
            f"reflection of {b} at {i} is not a base: {e}", witness=reflected
        ) from e
    return OrderedBase(roots=reflected)


def reflection_matrix(system: RootSystem, base: BaseLike, i: int) -> ReflectionMatrix:
    """G^B_i with B^(i) = B . G^B_i; row i carries N_ij, the diagonal is +-1."""
    b = _as_tuple(base)
    reflect_base(system, b, i)
    n = system.rank
    entries = []
    for r in range(1, n + 1):
        row = []
        for c in range(1, n + 1):
            if r == i:
                row.append(-1 if c == i else cartan_integer(system, b, i, c))
            else:
                row.append(1 if r == c else 0)
        entries.append(tuple(row))
    return ReflectionMatrix(index=i, entries=tuple(entries))


def m_count(system: RootSystem, base: BaseLike, i: int, j: int) -> int:
    """Number of B-positive roots in the nonnegative span of alpha^B_i and alpha^B_j."""
    b = _as_tuple(base)
    _check_index(system.rank, i)
    _check_index(system.rank, j)
    if i == j:
        _check_base(system, b)
        return 1
    _check_base(system, b)
    positives = _positive_coordinates(system, b)
    return _count_in_span(positives.values(), i, j)


def _count_in_span(coords: Iterable[CoordVector], i: int, j: int) -> int:
    return sum(
        1
        for c in coords
        if all(x == 0 for k, x in enumerate(c, start=1) if k not in (i, j))
    )


# ============================================================================
# BFS OVER B(R)
# ============================================================================

def enumerate_bases(
    system: RootSystem, cap: Optional[int] = None
) -> tuple[list[BaseTuple], list[list[int]]]:
    """
    Breadth-first closure of the reference base under all reflections.

    Every new base is checked for the one-root sign flip of (R3) and for
    path independence: reaching the same set of roots twice with a different
    order is an AxiomViolation.

    Args:
        system: Root system to explore
        cap: Maximum number of bases (defaults to WEYLHAM_BFS_CAP)

    Returns:
        (bases in BFS order, table) where table[v][i - 1] is the id of B_v^(i)
    """
    settings = get_settings()
    cap = cap or settings.bfs_cap
    string_cap = settings.string_cap
    n = system.rank
    start = system.reference_base.roots
    _check_base(system, start)

    bases: list[BaseTuple] = [start]
    positives: list[frozenset[CoordVector]] = [frozenset(_positive_coordinates(system, start))]
    index: dict[BaseTuple, int] = {start: 0}
    by_set: dict[frozenset[CoordVector], int] = {frozenset(start): 0}
    table: list[list[int]] = [[-1] * n]

    queue = deque([0])
    while queue:
        v = queue.popleft()
        base = bases[v]
        for i in range(1, n + 1):
            reflected = _reflect(system.roots, base, i, string_cap)
            target = index.get(reflected)
            if target is None:
                clash = by_set.get(frozenset(reflected))
                if clash is not None:
                    raise AxiomViolation(
                        f"bases {bases[clash]} and {reflected} agree as sets but not as tuples",
                        witness=reflected,
                    )
                try:
                    _check_base(system, reflected)
                    pos = frozenset(_positive_coordinates(system, reflected))
                except (NotABase, MixedSigns) as e:
                    raise AxiomViolation(
                        f"reflection of {base} at {i} is not a base: {e}", witness=reflected
                    ) from e
                if len(bases) >= cap:
                    raise CapExceeded(f"more than {cap} bases")
                target = len(bases)
                bases.append(reflected)
                positives.append(pos)
                index[reflected] = target
                by_set[frozenset(reflected)] = target
                table.append([-1] * n)
                queue.append(target)
            flipped = positives[target] - positives[v]
            if flipped != {negate(base[i - 1])}:
                raise AxiomViolation(
                    f"reflection at {i} flips {sorted(flipped)} instead of one root",
                    witness=reflected,
                )
            table[v][i - 1] = target

    for v, row in enumerate(table):
        for i, w in enumerate(row):
            if table[w][i] != v:
                raise AxiomViolation(
                    f"reflection {i + 1} is not an involution at base {bases[v]}",
                    witness=bases[v],
                )
    logger.debug(f"Enumerated {len(bases)} bases of rank {n}")
    return bases, table


def _r2_witness(system: RootSystem) -> Optional[CoordVector]:
    """A root that is a proper multiple of another root, if any."""
    by_direction: dict[CoordVector, list[CoordVector]] = defaultdict(list)
    for root in system.roots:
        g = 0
        for x in root:
            g = gcd(g, x)
        primitive = tuple(x // g for x in root)
        if primitive < negate(primitive):
            primitive = negate(primitive)
        by_direction[primitive].append(root)
    for members in by_direction.values():
        if len(members) > 2:
            largest = max(members, key=lambda r: (max(abs(x) for x in r), r))
            return largest
    return None


def validate_fgrs(system: RootSystem) -> ValidationReport:
    """
    Check axioms (R1)-(R3) and collect the reachable bases.

    Violations are reported, never raised.

    Args:
        system: Candidate root system

    Returns:
        ValidationReport with passed, axioms, base_count, bases and a witness
    """
    report = ValidationReport(passed=False)

    witness = _r2_witness(system)
    report.axioms["R2"] = witness is None
    if witness is not None:
        report.errors.append(f"(R2) fails: {witness} is a multiple of another root")
        report.witness = str(witness)

    try:
        split_signs(system, system.reference_base)
        report.axioms["R1"] = True
    except WeylhamError as e:
        report.axioms["R1"] = False
        report.errors.append(f"(R1) fails: {e}")
        report.witness = report.witness or str(e.witness)

    if not (report.axioms["R1"] and report.axioms["R2"]):
        report.axioms["R3"] = False
        report.warnings.append("(R3) not checked")
        logger.info(f"FGRS validation failed: {report.errors}")
        return report

    try:
        bases, _ = enumerate_bases(system)
        report.axioms["R3"] = True
        report.bases = bases
        report.base_count = len(bases)
    except (AxiomViolation, Unbounded, CapExceeded) as e:
        report.axioms["R3"] = False
        report.errors.append(f"(R3) fails: {e}")
        report.witness = str(e.witness)

    report.passed = all(report.axioms.values())
    if report.passed and report.base_count % 2:
        report.passed = False
        report.errors.append(f"odd number of bases: {report.base_count}")
    logger.info(
        f"FGRS validation {'passed' if report.passed else 'failed'}: "
        f"rank={system.rank}, roots={len(system.roots)}, bases={report.base_count}"
    )
    return report


# ============================================================================
# REDUCIBILITY
# ============================================================================

def reducible_split(system: RootSystem) -> Optional[ReducibleSplit]:
    """
    Find a proper partition I' u I'' with m^B_ij = 2 across it for every base.

    Returns None for irreducible systems. I' is the component containing index 1.
    """
    bases, _ = enumerate_bases(system)
    n = system.rank
    linked = nx.Graph()
    linked.add_nodes_from(range(1, n + 1))
    for base in bases:
        coords = list(_positive_coordinates(system, base).values())
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if not linked.has_edge(i, j) and _count_in_span(coords, i, j) != 2:
                    linked.add_edge(i, j)
    components = sorted(sorted(c) for c in nx.connected_components(linked))
    if len(components) == 1:
        return None
    first = tuple(components[0])
    second = tuple(sorted(k for k in range(1, n + 1) if k not in first))
    return ReducibleSplit(
        first=first,
        second=second,
        first_system=component_systems(system, first),
        second_system=component_systems(system, second),
    )


__all__ = [
    "negate",
    "from_positive_roots",
    "direct_sum",
    "component_systems",
    "base_coordinates",
    "split_signs",
    "cartan_integer",
    "reflect_base",
    "reflection_matrix",
    "m_count",
    "enumerate_bases",
    "validate_fgrs",
    "reducible_split",
]
