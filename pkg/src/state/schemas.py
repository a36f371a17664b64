"""
Weylham - Pydantic Schemas
Purpose: Value types for root systems, Weyl groupoid graphs, cycle words and spectra
Version: 1.0.0
Date: 2026-10-19

This module defines the immutable models shared by every computational module:
- RootSystem / OrderedBase / ReflectionMatrix: exact integer root data
- SuperDatum / ParametricDatum / EpsilonSpec: seeds for the family generators
- CayleyGraph / CartanScheme: the labeled Weyl groupoid graph and its scheme
- CycleWord / SearchConfig / VerifyReport: Hamiltonian cycle search and checking
- Spectrum: adjacency eigenvalues
- Report models (ValidationReport, CommutingReport) in the passed/errors/warnings style
"""

from enum import Enum
from fractions import Fraction
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.errors import SpecError

# Coordinates of a root relative to the reference base of its system.
CoordVector = tuple[int, ...]
BaseTuple = tuple[CoordVector, ...]
RationalMatrix = tuple[tuple[Fraction, ...], ...]


# ============================================================================
# ENUMERATIONS
# ============================================================================

class RootFormat(str, Enum):
    """Text formats accepted for root lists"""
    CH_NOTATION = "ch-notation"
    JSON = "json"


class ClassicalType(str, Enum):
    """Reduced crystallographic types built by build_classical"""
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    F4 = "F4"
    G2 = "G2"


class EpsilonVariant(str, Enum):
    """The three epsilon-coordinate families"""
    PHI = "phi"
    PSI = "psi"
    PSI_PRIME = "psiprime"


class SearchMethod(str, Enum):
    """Hamiltonian cycle search strategies"""
    AUTO = "auto"
    BACKTRACK = "backtrack"
    LIFT = "lift"
    PRODUCT = "product"


class QuotientMode(str, Enum):
    """Groupoid equivalences built by quotient_classes"""
    SMALLEST = "smallest"
    LARGEST = "largest"


class ExportFormat(str, Enum):
    """Graph export formats"""
    DOT = "dot"
    JSON = "json"


# ============================================================================
# EXACT ARITHMETIC HELPERS
# ============================================================================

def to_fraction(value: Any) -> Fraction:
    """
    Coerce an int, a Fraction or a "p/q" string to a Fraction.

    Floats are refused: every matrix entry must be exact.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"inexact matrix entry: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"not a rational: {value!r}") from e
    raise ValueError(f"unsupported matrix entry: {value!r}")


def integer_determinant(rows: BaseTuple) -> Fraction:
    """Determinant of a square integer matrix by exact elimination."""
    n = len(rows)
    m = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] / m[col][col]
            if factor:
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


# ============================================================================
# ROOT DATA
# ============================================================================

class OrderedBase(BaseModel):
    """
    An ordered lattice basis (alpha_1, ..., alpha_n) made of roots.

    The tuple order is the one produced by successive reflections from the
    reference base; two bases are equal only when their tuples are equal.
    """
    model_config = ConfigDict(frozen=True)

    roots: BaseTuple = Field(description="Ordered simple roots as coordinate vectors")

    @model_validator(mode="after")
    def check_lattice_basis(self) -> "OrderedBase":
        n = len(self.roots)
        if n == 0:
            raise ValueError("empty base")
        if any(len(v) != n for v in self.roots):
            raise ValueError("base vectors must have length equal to the rank")
        if abs(integer_determinant(self.roots)) != 1:
            raise ValueError(f"not a lattice basis: {self.roots}")
        return self

    @property
    def rank(self) -> int:
        return len(self.roots)

    def as_set(self) -> frozenset[CoordVector]:
        return frozenset(self.roots)

    def negated(self) -> "OrderedBase":
        return OrderedBase(roots=tuple(tuple(-x for x in v) for v in self.roots))


class RootSystem(BaseModel):
    """
    A finite set of roots in Z^rank, closed under negation.

    Coordinates are relative to the reference base, whose roots are the unit
    vectors. Axioms (R1)-(R3) are checked by root_core.validate_fgrs, not here.
    """
    model_config = ConfigDict(frozen=True)

    rank: int = Field(gt=0, description="Rank of the lattice")
    roots: frozenset[CoordVector] = Field(description="All roots, positives and negatives")
    name: Optional[str] = Field(None, description="Optional tag, e.g. CH12-Nr2")

    @model_validator(mode="after")
    def check_roots(self) -> "RootSystem":
        zero = (0,) * self.rank
        for root in self.roots:
            if len(root) != self.rank:
                raise ValueError(f"root {root} does not have length {self.rank}")
            if root == zero:
                raise ValueError("the zero vector is not a root")
            if tuple(-x for x in root) not in self.roots:
                raise ValueError(f"root set is not closed under negation: {root}")
        return self

    @property
    def reference_base(self) -> OrderedBase:
        return OrderedBase(
            roots=tuple(
                tuple(1 if k == i else 0 for k in range(self.rank)) for i in range(self.rank)
            )
        )

    @property
    def positive_roots(self) -> list[CoordVector]:
        """Roots with nonnegative reference coordinates, sorted."""
        return sorted(r for r in self.roots if all(x >= 0 for x in r))

    def sorted_roots(self) -> list[CoordVector]:
        return sorted(self.roots)


class ReflectionMatrix(BaseModel):
    """The matrix G^B_i with B^(i) = B G^B_i"""
    model_config = ConfigDict(frozen=True)

    index: int = Field(ge=1, description="Generator index i (1-based)")
    entries: tuple[tuple[int, ...], ...] = Field(description="Square integer matrix")

    @model_validator(mode="after")
    def check_shape(self) -> "ReflectionMatrix":
        n = len(self.entries)
        i = self.index - 1
        if i >= n or any(len(row) != n for row in self.entries):
            raise ValueError("reflection matrix has the wrong shape")
        for r in range(n):
            for c in range(n):
                value = self.entries[r][c]
                if r == c:
                    expected_ok = value == (-1 if r == i else 1)
                elif r == i:
                    expected_ok = True
                else:
                    expected_ok = value == 0
                if not expected_ok:
                    raise ValueError(f"entry ({r + 1},{c + 1}) = {value} breaks the G^B_i pattern")
        square = [
            [sum(self.entries[r][k] * self.entries[k][c] for k in range(n)) for c in range(n)]
            for r in range(n)
        ]
        if any(square[r][c] != (1 if r == c else 0) for r in range(n) for c in range(n)):
            raise ValueError("reflection matrix is not an involution")
        return self


class ValidationReport(BaseModel):
    """Result of validate_fgrs"""
    passed: bool = Field(description="True when (R1), (R2) and (R3) hold")
    axioms: dict[str, bool] = Field(default_factory=dict, description="Per-axiom outcome")
    base_count: int = Field(0, ge=0, description="Number of reachable bases")
    bases: list[BaseTuple] = Field(default_factory=list, exclude=True)
    errors: list[str] = Field(default_factory=list)
    warnings: list[str] = Field(default_factory=list)
    witness: Optional[str] = Field(None, description="First violation witness")


class ReducibleSplit(BaseModel):
    """A partition of the index set with m_ij = 2 across the cut"""
    model_config = ConfigDict(frozen=True)

    first: tuple[int, ...] = Field(description="I' as 1-based indices")
    second: tuple[int, ...] = Field(description="I'' as 1-based indices")
    first_system: RootSystem
    second_system: RootSystem


# ============================================================================
# SUPER DATA AND FAMILIES
# ============================================================================

def _coerce_matrix(value: Any) -> RationalMatrix:
    if not isinstance(value, (list, tuple)):
        raise ValueError("matrix must be an array of arrays")
    return tuple(tuple(to_fraction(x) for x in row) for row in value)


class SuperDatum(BaseModel):
    """
    A symmetric rational matrix A with an odd index set.

    The bilinear form on the lattice is (alpha_i, alpha_j) = a_ij and the
    parity of alpha_i is 1 exactly when i is odd.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    matrix: RationalMatrix = Field(description="Symmetric matrix A = [a_ij]")
    odd: frozenset[int] = Field(default_factory=frozenset, description="I_odd, 1-based")

    @field_validator("matrix", mode="before")
    @classmethod
    def coerce_matrix(cls, v: Any) -> RationalMatrix:
        return _coerce_matrix(v)

    @model_validator(mode="after")
    def check_symmetric(self) -> "SuperDatum":
        n = len(self.matrix)
        if n == 0 or any(len(row) != n for row in self.matrix):
            raise ValueError("matrix must be square and nonempty")
        for i in range(n):
            for j in range(i + 1, n):
                if self.matrix[i][j] != self.matrix[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i + 1},{j + 1})")
        if any(not 1 <= k <= n for k in self.odd):
            raise ValueError(f"odd indices {sorted(self.odd)} outside 1..{n}")
        return self

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def entry(self, i: int, j: int) -> Fraction:
        """a_ij with 1-based indices"""
        return self.matrix[i - 1][j - 1]

    def parity(self, i: int) -> int:
        return 1 if i in self.odd else 0

    def key(self) -> tuple[RationalMatrix, tuple[int, ...]]:
        return self.matrix, tuple(sorted(self.odd))


class ParametricDatum(BaseModel):
    """A(x) = constant + x * direction with a fixed parity set"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    constant: RationalMatrix
    direction: RationalMatrix
    odd: frozenset[int] = Field(default_factory=frozenset)
    excluded: tuple[Fraction, ...] = Field(
        default=(), description="Parameter values where the family degenerates"
    )

    @field_validator("constant", "direction", mode="before")
    @classmethod
    def coerce_matrix(cls, v: Any) -> RationalMatrix:
        return _coerce_matrix(v)

    @field_validator("excluded", mode="before")
    @classmethod
    def coerce_excluded(cls, v: Any) -> tuple[Fraction, ...]:
        return tuple(to_fraction(x) for x in v)

    def at(self, x: Fraction) -> SuperDatum:
        return SuperDatum(
            matrix=tuple(
                tuple(a + x * b for a, b in zip(row0, row1))
                for row0, row1 in zip(self.constant, self.direction)
            ),
            odd=self.odd,
        )


class EpsilonSpec(BaseModel):
    """Parameters of Phi_{r,Z}, Psi_{r,Z} and Psi'_{r,Z}"""
    model_config = ConfigDict(frozen=True)

    r: int = Field(description="Rank, at least 3")
    Z: frozenset[int] = Field(default_factory=frozenset, description="Subset of 1..r-1")
    variant: EpsilonVariant = EpsilonVariant.PHI

    @model_validator(mode="after")
    def check_z(self) -> "EpsilonSpec":
        if self.r < 3:
            raise SpecError(f"epsilon families need r >= 3, got {self.r}")
        bad = sorted(z for z in self.Z if not 1 <= z <= self.r - 1)
        if bad:
            raise SpecError(f"Z must be a subset of 1..{self.r - 1}, got {bad}")
        return self

    @property
    def doubled(self) -> frozenset[int]:
        """Indices j with 2 eps_j a root"""
        if self.variant == EpsilonVariant.PHI:
            return self.Z
        return self.Z | {self.r}


# ============================================================================
# GRAPHS AND SCHEMES
# ============================================================================

class CayleyGraph(BaseModel):
    """
    The labeled Cayley graph of the Weyl groupoid.

    table[v][i - 1] is the vertex reached from v by reflection i. Vertex ids
    follow BFS order from the reference base (vertex 0).
    """
    model_config = ConfigDict(frozen=True)

    rank: int = Field(gt=0)
    table: tuple[tuple[int, ...], ...] = Field(description="Reflection table")
    bases: tuple[OrderedBase, ...] = Field(
        default=(), description="Vertex bases; empty for graphs imported from JSON"
    )
    start: int = Field(0, ge=0)
    coloring: tuple[int, ...] = Field(default=(), description="Two-coloring by BFS parity")
    name: Optional[str] = None

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    @property
    def inverse_labels(self) -> tuple[int, ...]:
        """Reflections are involutions, so every label is its own inverse."""
        return self.labels

    def neighbor(self, v: int, i: int) -> int:
        return self.table[v][i - 1]

    @property
    def edges(self) -> list[tuple[int, int, int]]:
        """Undirected edges (u, v, i) with u < v, sorted"""
        found = {
            (min(u, w), max(u, w), i + 1)
            for u, row in enumerate(self.table)
            for i, w in enumerate(row)
        }
        return sorted(found)


class CartanScheme(BaseModel):
    """Objects, index action and Cartan matrices of the smallest quotient"""
    model_config = ConfigDict(frozen=True)

    rank: int
    objects: tuple[int, ...] = Field(description="Object ids 0..k-1")
    action: tuple[tuple[int, ...], ...] = Field(description="action[a][i - 1] = tau_i(a)")
    matrices: tuple[tuple[tuple[int, ...], ...], ...] = Field(description="C-hat per object")
    representatives: tuple[int, ...] = Field(description="A vertex id per object")
    m_values: tuple[tuple[tuple[int, ...], ...], ...] = Field(description="m-hat per object")


# ============================================================================
# CYCLE SEARCH
# ============================================================================

class CycleWord(BaseModel):
    """A closed walk 1^B . s_{i_1} ... s_{i_k} given by its start and labels"""
    model_config = ConfigDict(frozen=True)

    start: int = Field(0, ge=0, description="Start vertex id")
    word: tuple[int, ...] = Field(description="1-based generator labels")

    @field_validator("word")
    @classmethod
    def check_labels(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if any(label < 1 for label in v):
            raise ValueError("generator labels are 1-based")
        return v

    def __len__(self) -> int:
        return len(self.word)


class SearchConfig(BaseModel):
    """Budget and strategy for Hamiltonian cycle search"""
    method: SearchMethod = SearchMethod.AUTO
    time_budget: float = Field(60.0, gt=0, description="Seconds per find")
    deterministic: bool = True
    seed: int = Field(0, ge=0)
    threads: int = Field(1, ge=1)


class VerifyReport(BaseModel):
    """Outcome of walking a cycle word"""
    accepted: bool
    length_matches: bool
    all_distinct: bool
    returns_to_start: bool
    failed_step: Optional[int] = Field(None, description="1-based step of the first failure")
    visited: int = Field(0, ge=0)
    message: str = ""


# ============================================================================
# SPECTRA
# ============================================================================

class Spectrum(BaseModel):
    """Eigenvalues sorted descending"""
    model_config = ConfigDict(frozen=True)

    values: tuple[float, ...]
    degree: int = Field(ge=0)
    tolerance: float = 1e-9

    @field_validator("values")
    @classmethod
    def check_sorted(cls, v: tuple[float, ...]) -> tuple[float, ...]:
        if any(a < b for a, b in zip(v, v[1:])):
            raise ValueError("eigenvalues must be sorted descending")
        return v

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def lambda2(self) -> float:
        return self.values[1]


# ============================================================================
# REPORTS AND DATASETS
# ============================================================================

class CommutingReport(BaseModel):
    """Outcome of the Alt(n) commuting relations check"""
    passed: bool
    n: int
    relations: list[dict[str, Any]] = Field(default_factory=list)
    errors: list[str] = Field(default_factory=list)


class MapReport(BaseModel):
    """Printed vertex listing of a Hamiltonian walk compared with the walk itself"""
    passed: bool
    normalized: list[str] = Field(default_factory=list, description="Listing with bare integers k read as a_k")
    corrections: list[dict[str, Any]] = Field(default_factory=list)
    mismatches: list[dict[str, Any]] = Field(default_factory=list)


class EmbeddedDataset(BaseModel):
    """A dataset shipped under knowledge/ or read from WEYLHAM_DATA_DIR"""
    model_config = ConfigDict(frozen=True)

    id: str
    kind: str = Field(description="roots, cycle or alt-word")
    payload: str = Field(description="Text in one of the parser formats")
    metadata: dict[str, Any] = Field(default_factory=dict)


__all__ = [
    "CoordVector",
    "BaseTuple",
    "RationalMatrix",
    "RootFormat",
    "ClassicalType",
    "EpsilonVariant",
    "SearchMethod",
    "QuotientMode",
    "ExportFormat",
    "to_fraction",
    "integer_determinant",
    "OrderedBase",
    "RootSystem",
    "ReflectionMatrix",
    "ValidationReport",
    "ReducibleSplit",
    "SuperDatum",
    "ParametricDatum",
    "EpsilonSpec",
    "CayleyGraph",
    "CartanScheme",
    "CycleWord",
    "SearchConfig",
    "VerifyReport",
    "Spectrum",
    "CommutingReport",
    "MapReport",
    "EmbeddedDataset",
]
