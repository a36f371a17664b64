"""
Weylham - Root System Families
Purpose: Generate root-system data from classical types, epsilon families and super data
Version: 1.0.0
Date: 2026-10-19

This module performs:
- Classical reduced root systems A_n, B_n, C_n, D_n, F4, G2 by Weyl closure
- The epsilon-coordinate families Phi_{r,Z}, Psi_{r,Z}, Psi'_{r,Z}
- Super data (A, I_odd): b_m recursion, Cartan integers, odd reflections, orbits
- Reduced super root systems by closure over odd reflections
- The one-parameter D(2,1;x) datum with a genericity check and parameter retry
- The --family grammar used by the CLI (including `+` direct sums)
"""

from collections import deque
from fractions import Fraction
from typing import Iterable, Optional, Sequence
import logging

from tenacity import Retrying, retry_if_exception_type, stop_after_attempt

from src.core.root_core import direct_sum, validate_fgrs
from src.errors import (
    AxiomViolation,
    CapExceeded,
    InternalError,
    NonGenericParameter,
    NonIntegralCoordinate,
    NotIGood,
    SpecError,
)
from src.state.schemas import (
    BaseTuple,
    ClassicalType,
    CoordVector,
    EpsilonSpec,
    EpsilonVariant,
    ParametricDatum,
    RationalMatrix,
    RootSystem,
    SuperDatum,
)
from src.utils.settings import get_settings

logger = logging.getLogger(__name__)

RationalVector = tuple[Fraction, ...]

DEFAULT_D21_CANDIDATES = ("5/3", "7/2", "11/5", "13/7")


# ============================================================================
# EXACT LINEAR ALGEBRA
# ============================================================================

def _unit(n: int, k: int) -> RationalVector:
    return tuple(Fraction(int(i == k)) for i in range(n))


def _dot(u: Sequence[Fraction], v: Sequence[Fraction], metric: Optional[Sequence[Fraction]] = None) -> Fraction:
    if metric is None:
        return sum((a * b for a, b in zip(u, v)), Fraction(0))
    return sum((a * b * g for a, b, g in zip(u, v, metric)), Fraction(0))


def _gram(vectors: Sequence[Sequence[Fraction]], metric: Optional[Sequence[Fraction]] = None) -> RationalMatrix:
    return tuple(tuple(_dot(u, v, metric) for v in vectors) for u in vectors)


def _solve(matrix: RationalMatrix, rhs: Sequence[Fraction]) -> RationalVector:
    """Solve matrix . x = rhs for an invertible square rational matrix."""
    n = len(matrix)
    rows = [list(matrix[r]) + [Fraction(rhs[r])] for r in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            raise InternalError("singular Gram matrix")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        lead = rows[col][col]
        rows[col] = [x / lead for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return tuple(row[n] for row in rows)


def _to_simple_coordinates(
    simple: Sequence[RationalVector], vectors: Iterable[RationalVector]
) -> list[CoordVector]:
    """Express each vector as an integer combination of the simple roots."""
    gram = _gram(simple)
    out = []
    for v in vectors:
        coords = _solve(gram, [_dot(s, v) for s in simple])
        if any(c.denominator != 1 for c in coords):
            raise NonIntegralCoordinate(f"{v} has coordinates {coords}", witness=v)
        out.append(tuple(int(c) for c in coords))
    return out


def _positive_system(coords: Iterable[CoordVector], rank: int, name: str) -> RootSystem:
    positives = set(coords)
    for c in positives:
        if any(x < 0 for x in c):
            raise InternalError(f"positive root {c} has a negative coordinate", witness=c)
    roots = frozenset(positives) | frozenset(tuple(-x for x in c) for c in positives)
    return RootSystem(rank=rank, roots=roots, name=name)


# ============================================================================
# CLASSICAL TYPES
# ============================================================================

def _classical_simple_roots(kind: ClassicalType, n: int) -> list[RationalVector]:
    """Bourbaki simple roots in epsilon coordinates."""
    def diff(dim: int, a: int, b: int) -> RationalVector:
        return tuple(Fraction(int(k == a) - int(k == b)) for k in range(dim))

    if kind == ClassicalType.A:
        if n < 1:
            raise SpecError("A_n needs n >= 1")
        return [diff(n + 1, i, i + 1) for i in range(n)]
    if kind in (ClassicalType.B, ClassicalType.C):
        if n < 2:
            raise SpecError(f"{kind.value}_n needs n >= 2")
        last = _unit(n, n - 1)
        if kind == ClassicalType.C:
            last = tuple(2 * x for x in last)
        return [diff(n, i, i + 1) for i in range(n - 1)] + [last]
    if kind == ClassicalType.D:
        if n < 3:
            raise SpecError("D_n needs n >= 3")
        last = tuple(Fraction(int(k in (n - 2, n - 1))) for k in range(n))
        return [diff(n, i, i + 1) for i in range(n - 1)] + [last]
    if kind == ClassicalType.G2:
        if n != 2:
            raise SpecError("G2 has rank 2")
        return [diff(3, 0, 1), (Fraction(-2), Fraction(1), Fraction(1))]
    if kind == ClassicalType.F4:
        if n != 4:
            raise SpecError("F4 has rank 4")
        half = Fraction(1, 2)
        return [diff(4, 1, 2), diff(4, 2, 3), _unit(4, 3), (half, -half, -half, -half)]
    raise SpecError(f"unknown classical type {kind}")


def _weyl_closure(simple: Sequence[RationalVector]) -> set[RationalVector]:
    roots = set(simple)
    queue = deque(simple)
    while queue:
        v = queue.popleft()
        for s in simple:
            w = tuple(x - 2 * _dot(v, s) / _dot(s, s) * y for x, y in zip(v, s))
            if w not in roots:
                roots.add(w)
                queue.append(w)
    return roots


def build_classical(kind: ClassicalType, n: int) -> RootSystem:
    """
    The reduced crystallographic root system of the given type.

    Args:
        kind: One of A, B, C, D, F4, G2
        n: Rank (D_3 is A_3, F4 needs 4, G2 needs 2)

    Returns:
        RootSystem in simple-root coordinates
    """
    kind = ClassicalType(kind)
    simple = _classical_simple_roots(kind, n)
    coords = _to_simple_coordinates(simple, _weyl_closure(simple))
    positives = [c for c in coords if all(x >= 0 for x in c)]
    name = kind.value if kind in (ClassicalType.F4, ClassicalType.G2) else f"{kind.value}_{n}"
    return _positive_system(positives, n, name)


def classical_datum(kind: ClassicalType, n: int) -> SuperDatum:
    """Gram matrix of the classical simple roots as an even datum."""
    return SuperDatum(matrix=_gram(_classical_simple_roots(ClassicalType(kind), n)), odd=frozenset())


def super_linear_datum(m: int, n: int) -> SuperDatum:
    """A(m, n) with its distinguished base (one odd isotropic simple root)."""
    if m < 0 or n < 0:
        raise SpecError("A(m, n) needs m, n >= 0")
    dim = m + n + 2
    metric = [Fraction(1)] * (m + 1) + [Fraction(-1)] * (n + 1)
    simple = [
        tuple(Fraction(int(k == i) - int(k == i + 1)) for k in range(dim)) for i in range(dim - 1)
    ]
    return SuperDatum(matrix=_gram(simple, metric), odd=frozenset({m + 1}))


def orthosymplectic_b_datum(n: int) -> SuperDatum:
    """B(0, n): even roots delta_i - delta_{i+1} and the odd anisotropic delta_n."""
    if n < 1:
        raise SpecError("B(0, n) needs n >= 1")
    metric = [Fraction(-1)] * n
    simple = [
        tuple(Fraction(int(k == i) - int(k == i + 1)) for k in range(n)) for i in range(n - 1)
    ] + [_unit(n, n - 1)]
    return SuperDatum(matrix=_gram(simple, metric), odd=frozenset({n}))


# ============================================================================
# EPSILON FAMILIES
# ============================================================================

def _epsilon_simple_roots(spec: EpsilonSpec) -> list[RationalVector]:
    r = spec.r

    def vec(*pairs: tuple[int, int]) -> RationalVector:
        out = [Fraction(0)] * r
        for index, value in pairs:
            out[index - 1] += value
        return tuple(out)

    simple = [vec((i, 1), (i + 1, -1)) for i in range(1, r - 1)]
    minus = vec((r - 1, 1), (r, -1))
    if spec.variant == EpsilonVariant.PHI:
        simple += [minus, vec((r - 1, 1), (r, 1))]
    elif spec.variant == EpsilonVariant.PSI:
        simple += [minus, vec((r, 2))]
    else:
        simple += [vec((r, 2)), minus]
    return simple


def _epsilon_positives(spec: EpsilonSpec) -> list[RationalVector]:
    r = spec.r
    out = []
    for i in range(r):
        for j in range(i + 1, r):
            for sign in (-1, 1):
                v = [Fraction(0)] * r
                v[i] = Fraction(1)
                v[j] = Fraction(sign)
                out.append(tuple(v))
    for j in sorted(spec.doubled):
        out.append(tuple(Fraction(2 * int(k == j - 1)) for k in range(r)))
    return out


def build_epsilon_family(spec: EpsilonSpec) -> RootSystem:
    """
    Phi_{r,Z}, Psi_{r,Z} or Psi'_{r,Z} in simple-root coordinates.

    The positive set is {eps_i +- eps_j : i < j} together with 2 eps_j for
    j in Z (Phi) or j in Z u {r} (Psi, Psi').

    Example:
        >>> build_epsilon_family(EpsilonSpec(r=3, Z=frozenset(), variant="phi")).positive_roots
        six positives, the A_3 = D_3 system
    """
    simple = _epsilon_simple_roots(spec)
    coords = _to_simple_coordinates(simple, _epsilon_positives(spec))
    z = ",".join(str(k) for k in sorted(spec.Z))
    return _positive_system(coords, spec.r, f"{spec.variant.value}:{spec.r}:{z}")


def epsilon_datum(spec: EpsilonSpec) -> SuperDatum:
    """
    The bilinear form and parity behind an epsilon family.

    eps_j with 2 eps_j a root is odd with (eps_j, eps_j) = -1; the other
    eps_j are even with (eps_j, eps_j) = 1.
    """
    simple = _epsilon_simple_roots(spec)
    doubled = spec.doubled
    metric = [Fraction(-1 if j in doubled else 1) for j in range(1, spec.r + 1)]
    odd = set()
    for k, s in enumerate(simple, start=1):
        parity = sum(int(c) for j, c in enumerate(s, start=1) if j in doubled) % 2
        if parity:
            odd.add(k)
    return SuperDatum(matrix=_gram(simple, metric), odd=frozenset(odd))


# ============================================================================
# SUPER DATA: b_m RECURSION AND ODD REFLECTIONS
# ============================================================================

def b_closed_form(a_ii: Fraction, a_ij: Fraction, parity: int, m: int) -> Fraction:
    """Closed form of b_m for m = 2n and m = 2n + 1."""
    sign = -1 if parity else 1
    n, odd = divmod(m, 2)
    if odd:
        return ((n + 1) + n * sign) * (n * a_ii + a_ij)
    return n * (((n - 1) + n * sign) * a_ii + (1 + sign) * a_ij)


def _b_terms(a_ii: Fraction, a_ij: Fraction, parity: int, count: int) -> list[Fraction]:
    terms = []
    b = Fraction(0)
    for m in range(count):
        sign = -1 if (m * parity) % 2 else 1
        b = sign * (m * a_ii + a_ij) + b
        terms.append(b)
    return terms


def b_sequence(datum: SuperDatum, i: int, j: int, cap: Optional[int] = None) -> tuple[Fraction, ...]:
    """
    (b_1, ..., b_M) up to and including the first zero term.

    Args:
        datum: Super datum (A, I_odd)
        i: Direction index (1-based)
        j: Base index (1-based), different from i
        cap: Longest sequence to compute (defaults to WEYLHAM_STRING_CAP)

    Returns:
        The terms of the recursion b_{m+1} = (-1)^{m p(i)} (m a_ii + a_ij) + b_m

    Raises:
        IndexError: i or j outside 1..rank
        CapExceeded: no zero term within cap
    """
    n = datum.rank
    for k in (i, j):
        if not 1 <= k <= n:
            raise IndexError(f"index {k} outside 1..{n}")
    if i == j:
        raise ValueError("b_sequence needs i != j")
    cap = cap or get_settings().string_cap
    a_ii, a_ij, parity = datum.entry(i, i), datum.entry(i, j), datum.parity(i)

    terms = []
    b = Fraction(0)
    for m in range(cap):
        sign = -1 if (m * parity) % 2 else 1
        b = sign * (m * a_ii + a_ij) + b
        if b != b_closed_form(a_ii, a_ij, parity, m + 1):
            raise InternalError(f"b_{m + 1} = {b} disagrees with its closed form")
        terms.append(b)
        if b == 0:
            return tuple(terms)
    raise CapExceeded(f"no vanishing b_m within {cap} terms for ({i}, {j})")


def super_cartan_integer(datum: SuperDatum, i: int, j: int) -> int:
    """
    N^{(A, I_odd)}_ij, the number of nonzero leading b terms; -2 when i == j.

    Raises:
        NotIGood: the alpha_i-string through alpha_j does not end
    """
    if i == j:
        if not 1 <= i <= datum.rank:
            raise IndexError(f"index {i} outside 1..{datum.rank}")
        return -2
    try:
        return len(b_sequence(datum, i, j)) - 1
    except CapExceeded as e:
        raise NotIGood(f"datum is not {i}-good: {e}", witness=(i, j)) from e


def _reflection_columns(datum: SuperDatum, i: int) -> list[list[int]]:
    """Columns of G: e_j + N_ij e_i for j != i and -e_i for j = i."""
    n = datum.rank
    columns = []
    for j in range(1, n + 1):
        col = [int(k == j) for k in range(1, n + 1)]
        if j == i:
            col[i - 1] = -1
        else:
            col[i - 1] += super_cartan_integer(datum, i, j)
        columns.append(col)
    return columns


def _datum_in_basis(datum: SuperDatum, vectors: Sequence[Sequence[int]]) -> SuperDatum:
    """Gram matrix and parities of the given vectors (original coordinates)."""
    a = datum.matrix
    n = datum.rank
    matrix = tuple(
        tuple(
            sum(
                (u[k] * a[k][l] * v[l] for k in range(n) for l in range(n) if u[k] and v[l]),
                Fraction(0),
            )
            for v in vectors
        )
        for u in vectors
    )
    odd = frozenset(
        idx for idx, u in enumerate(vectors, start=1) if sum(u[k - 1] for k in datum.odd) % 2
    )
    return SuperDatum(matrix=matrix, odd=odd)


def odd_reflect(datum: SuperDatum, i: int) -> SuperDatum:
    """
    (A, I_odd)^(i): the form and parities of the reflected simple roots.

    Raises:
        NotIGood: some alpha_i-string does not end
    """
    reflected = _datum_in_basis(datum, _reflection_columns(datum, i))
    if datum.entry(i, i) != 0 and reflected != datum:
        raise InternalError(f"reflection at anisotropic index {i} changed the datum")
    if datum.entry(i, i) == 0 and i not in datum.odd:
        if any(datum.entry(i, j) != 0 for j in range(1, datum.rank + 1)):
            raise InternalError(f"even isotropic index {i} has a nonzero a_ij")
    return reflected


def ddotsim_orbit(datum: SuperDatum, cap: Optional[int] = None) -> frozenset[SuperDatum]:
    """
    All data reachable by odd_reflect at good indices.

    Raises:
        CapExceeded: the orbit grows beyond cap (defaults to WEYLHAM_ORBIT_CAP)
    """
    cap = cap or get_settings().orbit_cap
    seen = {datum}
    queue = deque([datum])
    while queue:
        current = queue.popleft()
        for i in range(1, current.rank + 1):
            try:
                nxt = odd_reflect(current, i)
            except NotIGood:
                continue
            if nxt not in seen:
                if len(seen) >= cap:
                    raise CapExceeded(f"orbit exceeds {cap} data")
                seen.add(nxt)
                queue.append(nxt)
    logger.debug(f"Orbit of rank-{datum.rank} datum has {len(seen)} members")
    return frozenset(seen)


def ddotsim_equivalent(first: SuperDatum, second: SuperDatum, cap: Optional[int] = None) -> bool:
    if first.rank != second.rank:
        return False
    return second in ddotsim_orbit(first, cap)


# ============================================================================
# SUPER ROOT SYSTEMS
# ============================================================================

def _super_bases(datum: SuperDatum, cap: int) -> list[BaseTuple]:
    n = datum.rank
    start: BaseTuple = tuple(tuple(int(k == j) for k in range(n)) for j in range(n))
    bases = [start]
    data = {start: datum}
    queue = deque([start])
    while queue:
        base = queue.popleft()
        local = data[base]
        for i in range(1, n + 1):
            alpha = base[i - 1]
            new = []
            for j in range(1, n + 1):
                if j == i:
                    new.append(tuple(-x for x in alpha))
                else:
                    shift = super_cartan_integer(local, i, j)
                    new.append(tuple(b + shift * a for a, b in zip(alpha, base[j - 1])))
            reflected = tuple(new)
            if reflected not in data:
                if len(bases) >= cap:
                    raise CapExceeded(f"more than {cap} bases")
                data[reflected] = _datum_in_basis(datum, reflected)
                bases.append(reflected)
                queue.append(reflected)
    return bases


def generate_super_fgrs(datum: SuperDatum, cap: Optional[int] = None, name: Optional[str] = None) -> RootSystem:
    """
    The reduced root system R(A, I_odd).

    Roots are the union of the simple roots over all bases reached by odd
    reflections, tracked in the coordinates of the starting base.

    Args:
        datum: Starting datum
        cap: Maximum number of bases (defaults to WEYLHAM_BFS_CAP)
        name: Optional tag for the result

    Raises:
        NotIGood: some reached datum has an unending string
        CapExceeded: too many bases
        AxiomViolation: the generated set fails validate_fgrs or its base count
    """
    cap = cap or get_settings().bfs_cap
    return _system_from_bases(datum, _super_bases(datum, cap), name)


def _system_from_bases(datum: SuperDatum, bases: list[BaseTuple], name: Optional[str]) -> RootSystem:
    roots: set[CoordVector] = set()
    for base in bases:
        for v in base:
            roots.add(v)
            roots.add(tuple(-x for x in v))
    system = RootSystem(rank=datum.rank, roots=frozenset(roots), name=name)
    report = validate_fgrs(system)
    if not report.passed:
        raise AxiomViolation(f"generated set is not an FGRS: {report.errors}", witness=report.witness)
    if report.base_count != len(bases):
        raise AxiomViolation(
            f"odd reflections reach {len(bases)} bases, the root set has {report.base_count}"
        )
    logger.info(f"Generated super root system: {len(system.positive_roots)} positives, {len(bases)} bases")
    return system


def d21x_datum() -> ParametricDatum:
    """The all-odd isotropic D(2,1;x) datum: a_12 = 1, a_13 = x, a_23 = -(1 + x)."""
    return ParametricDatum(
        constant=[[0, 1, 0], [1, 0, -1], [0, -1, 0]],
        direction=[[0, 0, 1], [0, 0, -1], [1, -1, 0]],
        odd=frozenset({1, 2, 3}),
        excluded=[0, -1],
    )


def generate_parametric_fgrs(family: ParametricDatum, x: Fraction) -> RootSystem:
    """
    Generate at parameter x and reject accidental vanishing.

    The b recursion is linear in A for fixed parity, so at every reached base
    the terminating term must vanish in both the constant and the direction
    components of A(x).

    Raises:
        NonGenericParameter: x is excluded or some b_M vanishes only at this x
    """
    x = Fraction(x)
    if x in family.excluded:
        raise NonGenericParameter(f"x = {x} is a degenerate parameter", witness=x)
    datum = family.at(x)
    bases = _super_bases(datum, get_settings().bfs_cap)
    system = _system_from_bases(datum, bases, f"D(2,1;{x})")
    base_part = SuperDatum(matrix=family.constant, odd=family.odd)
    slope_part = SuperDatum(matrix=family.direction, odd=family.odd)
    for base in bases:
        local = _datum_in_basis(datum, base)
        a0 = _datum_in_basis(base_part, base)
        a1 = _datum_in_basis(slope_part, base)
        for i in range(1, datum.rank + 1):
            p = local.parity(i)
            for j in range(1, datum.rank + 1):
                if i == j:
                    continue
                count = len(b_sequence(local, i, j))
                t0 = _b_terms(a0.entry(i, i), a0.entry(i, j), p, count)[-1]
                t1 = _b_terms(a1.entry(i, i), a1.entry(i, j), p, count)[-1]
                if t0 != 0 or t1 != 0:
                    raise NonGenericParameter(
                        f"b_{count} for ({i}, {j}) vanishes only at x = {x}", witness=x
                    )
    return system


def generate_generic_fgrs(
    family: ParametricDatum, candidates: Optional[Sequence[str | Fraction]] = None
) -> RootSystem:
    """
    Try parameters in order until one is generic.

    Args:
        family: Parametric datum
        candidates: Parameters to try (defaults to WEYLHAM_D21_PARAMETER, 7/2, 11/5, 13/7)

    Raises:
        NonGenericParameter: every candidate failed
    """
    if candidates is None:
        preferred = get_settings().d21_parameter
        candidates = [preferred] + [c for c in DEFAULT_D21_CANDIDATES if c != preferred]
    values = [Fraction(c) for c in candidates]
    if not values:
        raise NonGenericParameter("no candidate parameters given")
    for attempt in Retrying(
        stop=stop_after_attempt(len(values)),
        retry=retry_if_exception_type(NonGenericParameter),
        before_sleep=lambda state: logger.warning(
            f"Parameter {values[state.attempt_number - 1]} is not generic, trying the next one"
        ),
        reraise=True,
    ):
        with attempt:
            x = values[attempt.retry_state.attempt_number - 1]
            logger.info(f"Generating parametric family at x = {x}")
            return generate_parametric_fgrs(family, x)
    raise InternalError("parameter retry loop ended without a result")


# ============================================================================
# FAMILY GRAMMAR
# ============================================================================

FAMILY_GRAMMAR = [
    "a:<n>", "b:<n>", "c:<n>", "d:<n>", "f4", "g2",
    "phi:<r>:<Z-csv>", "psi:<r>:<Z-csv>", "psiprime:<r>:<Z-csv>",
    "d21x[:<x>]", "<family>+<family>",
]


def _parse_z(text: str) -> frozenset[int]:
    if not text.strip():
        return frozenset()
    try:
        return frozenset(int(t) for t in text.split(","))
    except ValueError as e:
        raise SpecError(f"bad Z list: {text!r}") from e


def _parse_single(text: str) -> RootSystem:
    parts = text.strip().lower().split(":")
    head = parts[0]
    try:
        if head in ("a", "b", "c", "d"):
            if len(parts) != 2:
                raise SpecError(f"expected {head}:<n>, got {text!r}")
            return build_classical(ClassicalType(head.upper()), int(parts[1]))
        if head in ("f4", "g2"):
            kind = ClassicalType(head.upper())
            rank = int(parts[1]) if len(parts) > 1 else (4 if head == "f4" else 2)
            return build_classical(kind, rank)
        if head in ("phi", "psi", "psiprime"):
            if len(parts) not in (2, 3):
                raise SpecError(f"expected {head}:<r>:<Z>, got {text!r}")
            z = _parse_z(parts[2]) if len(parts) == 3 else frozenset()
            return build_epsilon_family(
                EpsilonSpec(r=int(parts[1]), Z=z, variant=EpsilonVariant(head))
            )
        if head == "d21x":
            family = d21x_datum()
            if len(parts) > 1:
                return generate_parametric_fgrs(family, Fraction(parts[1]))
            return generate_generic_fgrs(family)
    except ValueError as e:
        raise SpecError(f"bad family specifier {text!r}: {e}") from e
    raise SpecError(f"unknown family {head!r}; known forms: {', '.join(FAMILY_GRAMMAR)}")


def parse_family(text: str) -> RootSystem:
    """
    Build a root system from a family specifier.

    Example:
        >>> parse_family("a:1+a:2").rank
        3
    """
    pieces = [p for p in text.split("+")]
    if not all(p.strip() for p in pieces):
        raise SpecError(f"empty summand in {text!r}")
    system = _parse_single(pieces[0])
    for piece in pieces[1:]:
        system = direct_sum(system, _parse_single(piece))
    return system.model_copy(update={"name": text.strip()})


__all__ = [
    "DEFAULT_D21_CANDIDATES",
    "FAMILY_GRAMMAR",
    "build_classical",
    "classical_datum",
    "super_linear_datum",
    "orthosymplectic_b_datum",
    "build_epsilon_family",
    "epsilon_datum",
    "b_closed_form",
    "b_sequence",
    "super_cartan_integer",
    "odd_reflect",
    "ddotsim_orbit",
    "ddotsim_equivalent",
    "generate_super_fgrs",
    "d21x_datum",
    "generate_parametric_fgrs",
    "generate_generic_fgrs",
    "parse_family",
]
