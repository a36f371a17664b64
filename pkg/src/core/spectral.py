"""
Weylham - Spectra
Purpose: Adjacency spectra of labeled Cayley graphs
Version: 1.0.0
Date: 2026-10-19

This module performs:
- adjacency: the symmetric 0/1 matrix of a labeled graph
- eigenvalues: dense symmetric eigensolver with residual spot checks
- spectrum_of_graph: eigenvalues plus the regular-graph identities
- is_bipartite_ramanujan: |lambda_i| <= 2 sqrt(d - 1) for the inner eigenvalues
- characteristic_polynomial / exact_spectrum: sympy oracle for small graphs
- lambda2_table / compare_lambda2: the embedded table of second eigenvalues
"""

from functools import lru_cache
from pathlib import Path
from typing import Any, Optional, Sequence
import logging
import math

import networkx as nx
import numpy as np
import sympy
import yaml

from src.core.hamilton import LabeledGraph
from src.errors import DegenerateOrder, InternalError, NonSymmetric, RangeError
from src.state.schemas import Spectrum

logger = logging.getLogger(__name__)

RESIDUAL_TOLERANCE = 1e-8
EIGEN_TOLERANCE = 1e-9
LAMBDA2_TOLERANCE = 1e-5
REPORT_DIGITS = 7

SPECTRAL_TABLE_PATH = Path(__file__).parent.parent.parent / "knowledge" / "spectral_table.yaml"


# ============================================================================
# MATRICES
# ============================================================================

def adjacency(g: LabeledGraph) -> np.ndarray:
    """
    Adjacency matrix of a labeled graph.

    Entry (u, v) counts the labels taking u to v, so a simple graph gives
    a 0/1 matrix with row sums equal to the number of labels.

    Example:
        >>> adjacency(build_graph(build_classical(ClassicalType.A, 1))).tolist()
        [[0.0, 1.0], [1.0, 0.0]]
    """
    n = len(g.table)
    m = np.zeros((n, n), dtype=float)
    for v, row in enumerate(g.table):
        for w in row:
            m[v, w] += 1.0
    return m


def eigenvalues(m: Any) -> Spectrum:
    """
    All eigenvalues of a real symmetric matrix, sorted descending.

    Args:
        m: Square array-like

    Returns:
        Spectrum with degree set to the largest row sum

    Raises:
        NonSymmetric: m is not square or not symmetric
        InternalError: the eigensolver residual exceeds 1e-8 on an extreme pair
    """
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NonSymmetric(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise NonSymmetric("matrix is not symmetric")
    if a.shape[0] == 0:
        return Spectrum(values=(), degree=0)

    values, vectors = np.linalg.eigh(a)
    for k in (0, len(values) - 1):
        v = vectors[:, k]
        residual = np.linalg.norm(a @ v - values[k] * v)
        if residual > RESIDUAL_TOLERANCE * np.linalg.norm(v):
            raise InternalError(f"eigenpair {k} has residual {residual:.3e}")

    ordered = tuple(float(x) for x in sorted(values, reverse=True))
    degree = int(round(a.sum(axis=1).max()))
    return Spectrum(values=ordered, degree=degree)


def spectrum_of_graph(g: LabeledGraph) -> Spectrum:
    """
    Spectrum of a connected regular graph with its identities asserted.

    Checks lambda_1 = d, the trace and handshake sums, and the symmetry
    lambda_{n+1-i} = -lambda_i when the graph is bipartite.

    Raises:
        InternalError: one of the identities fails
    """
    a = adjacency(g)
    s = eigenvalues(a)
    n = s.n
    if n == 0:
        return s
    d = len(g.table[0])
    if s.degree != d:
        raise InternalError(f"row sums {s.degree} differ from the label count {d}")

    if abs(s.values[0] - d) > EIGEN_TOLERANCE:
        raise InternalError(f"largest eigenvalue {s.values[0]} is not the degree {d}")
    if abs(sum(s.values)) > 1e-6 * n:
        raise InternalError(f"eigenvalues sum to {sum(s.values)}, expected 0")
    squares = sum(x * x for x in s.values)
    if abs(squares - n * d) > 1e-6 * n:
        raise InternalError(f"sum of squares {squares} differs from 2|E| = {n * d}")

    if nx.is_bipartite(nx.from_numpy_array(a)):
        for i in range(n):
            if abs(s.values[i] + s.values[n - 1 - i]) > EIGEN_TOLERANCE:
                raise InternalError(f"bipartite symmetry fails at index {i + 1}")

    logger.debug(f"Spectrum of {n} vertices: lambda_2 = {s.values[1] if n > 1 else None}")
    return s


def is_bipartite_ramanujan(s: Spectrum) -> bool:
    """
    True iff every eigenvalue except the first and last has |lambda| <= 2 sqrt(d - 1).

    Raises:
        DegenerateOrder: fewer than three eigenvalues
    """
    if s.n < 3:
        raise DegenerateOrder(f"need at least 3 eigenvalues, got {s.n}")
    bound = 2.0 * math.sqrt(max(s.degree - 1, 0))
    inner = max(abs(x) for x in s.values[1:-1])
    return inner <= bound + EIGEN_TOLERANCE


# ============================================================================
# EXACT ORACLE
# ============================================================================

def characteristic_polynomial(m: Any) -> sympy.Poly:
    """det(x I - m) over the integers."""
    matrix = sympy.Matrix(np.asarray(m, dtype=int).tolist())
    if matrix.rows != matrix.cols:
        raise NonSymmetric(f"expected a square matrix, got {matrix.rows}x{matrix.cols}")
    x = sympy.Symbol("x")
    return matrix.charpoly(x)


def exact_spectrum(m: Any) -> tuple[float, ...]:
    """
    Eigenvalues from the factored characteristic polynomial, sorted descending.

    Meant for small graphs; each irreducible factor is solved to 30 digits.
    """
    poly = characteristic_polynomial(m)
    _, factors = sympy.factor_list(poly.as_expr(), poly.gen)
    roots: list[float] = []
    for factor, multiplicity in factors:
        for root in sympy.Poly(factor, poly.gen).nroots(n=30):
            roots.extend([float(sympy.re(root))] * multiplicity)
    return tuple(sorted(roots, reverse=True))


# ============================================================================
# EMBEDDED TABLE
# ============================================================================

@lru_cache(maxsize=1)
def lambda2_table(path: Optional[Path] = None) -> dict[int, float]:
    """Second-largest eigenvalues of the rank-3 graphs Nr. 1-55, keyed by number."""
    path = path or SPECTRAL_TABLE_PATH
    with open(path, "r", encoding="utf-8") as f:
        data = yaml.safe_load(f)
    table = {int(k): float(v) for k, v in data["lambda2"].items()}
    logger.debug(f"Loaded {len(table)} lambda_2 values from {path.name}")
    return table


def compare_lambda2(nr: int, value: float, tol: float = LAMBDA2_TOLERANCE) -> bool:
    """
    Compare a computed lambda_2 with the table entry for Nr. `nr`.

    Raises:
        RangeError: nr has no table entry
    """
    table = lambda2_table()
    if nr not in table:
        raise RangeError(f"no lambda_2 entry for Nr. {nr} (have 1..{max(table)})")
    matches = abs(table[nr] - value) <= tol
    if not matches:
        logger.warning(f"Nr. {nr}: lambda_2 = {value:.7f}, table has {table[nr]:.7f}")
    return matches


def spectrum_report(s: Spectrum, top: Optional[int] = None) -> dict[str, Any]:
    """The CLI's JSON view: n, d, the top eigenvalues and the Ramanujan flag."""
    values: Sequence[float] = s.values if top is None else s.values[:top]
    return {
        "n": s.n,
        "d": s.degree,
        "lambda": [round(x, REPORT_DIGITS) + 0.0 for x in values],
        "ramanujan": is_bipartite_ramanujan(s) if s.n >= 3 else None,
    }


__all__ = [
    "adjacency",
    "eigenvalues",
    "spectrum_of_graph",
    "is_bipartite_ramanujan",
    "characteristic_polynomial",
    "exact_spectrum",
    "lambda2_table",
    "compare_lambda2",
    "spectrum_report",
]
