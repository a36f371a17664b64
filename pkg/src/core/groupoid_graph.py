"""
Weylham - Weyl Groupoid Cayley Graphs
Purpose: Build, check, quotient and export the labeled Cayley graph of B(R)
Version: 1.0.0
Date: 2026-10-19

This module performs:
- build_graph: BFS over reflections with vertex ids in BFS order
- Structural checks: regular, simple, connected, bipartite, even order, balanced classes
- graph_distance with the |R^-_{B_u} n R^+_{B_v}| cross-check
- quotient_classes (smallest and largest groupoid equivalence)
- extract_cartan_scheme with the generalized Cartan matrix checks
- DOT / JSON export and JSON import
"""

from collections import deque
from typing import Any, Optional
import json
import logging

import networkx as nx

from src.core.root_core import (
    base_coordinates,
    cartan_integer,
    enumerate_bases,
    m_count,
    split_signs,
)
from src.errors import (
    BipartiteViolation,
    IncompatiblePartition,
    InputError,
    InternalError,
    ParseError,
)
from src.state.schemas import (
    CartanScheme,
    CayleyGraph,
    ExportFormat,
    OrderedBase,
    QuotientMode,
    RootSystem,
)

logger = logging.getLogger(__name__)


# ============================================================================
# CONSTRUCTION AND CHECKS
# ============================================================================

def _bfs_distances(table: tuple[tuple[int, ...], ...], source: int) -> list[int]:
    dist = [-1] * len(table)
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in table[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def to_networkx(g: CayleyGraph) -> nx.Graph:
    """Undirected networkx view; edge attribute `label` holds the generator index."""
    graph = nx.Graph()
    graph.add_nodes_from(range(g.order))
    for u, v, i in g.edges:
        graph.add_edge(u, v, label=i)
    return graph


def color_classes(g: CayleyGraph) -> tuple[list[int], list[int]]:
    """(Y_1, Y_2): vertices of color 0 and color 1."""
    first = [v for v, c in enumerate(g.coloring) if c == 0]
    second = [v for v, c in enumerate(g.coloring) if c == 1]
    return first, second


def check_graph(g: CayleyGraph) -> None:
    """
    Assert the structural invariants of a Weyl groupoid Cayley graph.

    Raises:
        InternalError: not regular, not simple, not involutive or not connected
        BipartiteViolation: an edge inside a color class or unbalanced classes
    """
    n = g.order
    for v, row in enumerate(g.table):
        if len(row) != g.rank:
            raise InternalError(f"vertex {v} has {len(row)} labels, rank is {g.rank}")
        if v in row:
            raise InternalError(f"self-loop at vertex {v}")
        if len(set(row)) != len(row):
            raise InternalError(f"parallel edges at vertex {v}")
        for i, w in enumerate(row):
            if g.table[w][i] != v:
                raise InternalError(f"label {i + 1} is not an involution at vertex {v}")

    graph = to_networkx(g)
    if n and not nx.is_connected(graph):
        raise InternalError("graph is not connected")
    if n % 2:
        raise BipartiteViolation(f"odd number of vertices: {n}")
    if len(g.coloring) != n:
        raise BipartiteViolation("coloring does not cover every vertex")
    for u, v, i in g.edges:
        if g.coloring[u] == g.coloring[v]:
            raise BipartiteViolation(f"edge {u}-{v} (label {i}) inside a color class", witness=(u, v))
    first, second = color_classes(g)
    if len(first) != len(second):
        raise BipartiteViolation(f"color classes have sizes {len(first)} and {len(second)}")
    for i in range(g.rank):
        if {g.table[v][i] for v in first} != set(second):
            raise BipartiteViolation(f"label {i + 1} does not map Y_1 onto Y_2")


def build_graph(system: RootSystem) -> CayleyGraph:
    """
    The Cayley graph of the Weyl groupoid of `system`.

    Args:
        system: A root system satisfying (R1)-(R3)

    Returns:
        CayleyGraph with vertex 0 the reference base, ids in BFS order

    Example:
        >>> build_graph(r_hat_1).order
        24
    """
    bases, table = enumerate_bases(system)
    frozen = tuple(tuple(row) for row in table)
    coloring = tuple(d % 2 for d in _bfs_distances(frozen, 0))
    g = CayleyGraph(
        rank=system.rank,
        table=frozen,
        bases=tuple(OrderedBase(roots=b) for b in bases),
        start=0,
        coloring=coloring,
        name=system.name,
    )
    check_graph(g)
    logger.info(f"Built Cayley graph: {g.order} vertices, {len(g.edges)} edges, rank {g.rank}")
    return g


# ============================================================================
# DISTANCES
# ============================================================================

def set_distance(system: RootSystem, first: OrderedBase, second: OrderedBase) -> int:
    """|R^-_{B_u} n R^+_{B_v}|"""
    _, negatives = split_signs(system, first)
    positives, _ = split_signs(system, second)
    return len(negatives & positives)


def graph_distance(
    g: CayleyGraph, u: int, v: int, system: Optional[RootSystem] = None
) -> int:
    """
    Shortest-path distance between two vertices.

    When `system` is given the result is checked against the set formula.
    """
    for w in (u, v):
        if not 0 <= w < g.order:
            raise IndexError(f"vertex {w} outside 0..{g.order - 1}")
    d = _bfs_distances(g.table, u)[v]
    if system is not None and g.bases:
        expected = set_distance(system, g.bases[u], g.bases[v])
        if expected != d:
            raise InternalError(
                f"distance {d} between {u} and {v} disagrees with the root count {expected}"
            )
    return d


def distance_matrix(g: CayleyGraph) -> list[list[int]]:
    return [_bfs_distances(g.table, u) for u in range(g.order)]


# ============================================================================
# QUOTIENTS AND CARTAN SCHEMES
# ============================================================================

def _require_bases(g: CayleyGraph) -> None:
    if not g.bases:
        raise InputError("graph carries no bases; build it from a root system")


def _root_set_key(system: RootSystem, base: OrderedBase) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(base_coordinates(base, r) for r in system.roots))


def quotient_classes(
    system: RootSystem, g: CayleyGraph, mode: QuotientMode = QuotientMode.SMALLEST
) -> list[list[int]]:
    """
    Partition the vertices by a groupoid equivalence.

    Smallest mode identifies bases in which R has the same coordinate
    expression; largest mode keeps every base on its own.

    Returns:
        Classes as sorted vertex lists, ordered by their smallest vertex

    Raises:
        IncompatiblePartition: B ~ B' but B^(i) and B'^(i) fall in different classes
    """
    mode = QuotientMode(mode)
    if mode == QuotientMode.LARGEST:
        return [[v] for v in range(g.order)]
    _require_bases(g)

    by_key: dict[Any, list[int]] = {}
    for v, base in enumerate(g.bases):
        by_key.setdefault(_root_set_key(system, base), []).append(v)
    classes = sorted(by_key.values(), key=lambda c: c[0])

    class_of = [0] * g.order
    for k, members in enumerate(classes):
        for v in members:
            class_of[v] = k
    for members in classes:
        for i in range(g.rank):
            targets = {class_of[g.table[v][i]] for v in members}
            if len(targets) != 1:
                raise IncompatiblePartition(
                    f"class of vertex {members[0]} splits under reflection {i + 1}",
                    witness=members,
                )
    logger.info(f"Quotient ({mode.value}): {len(classes)} classes of {g.order} bases")
    return classes


def extract_cartan_scheme(system: RootSystem, g: CayleyGraph) -> CartanScheme:
    """
    Objects, index action and Cartan matrices of the smallest quotient.

    Checks c_ii = 2, zero symmetry, invariance c^{tau_i a}_ij = c^a_ij and
    the dihedral identity (tau_i tau_j)^m a = a with m = m_count.

    Raises:
        IncompatiblePartition: any of the checks fails
    """
    classes = quotient_classes(system, g, QuotientMode.SMALLEST)
    n = g.rank
    class_of = {v: k for k, members in enumerate(classes) for v in members}
    representatives = tuple(members[0] for members in classes)

    def matrix_at(v: int) -> tuple[tuple[int, ...], ...]:
        base = g.bases[v]
        return tuple(
            tuple(2 if i == j else -cartan_integer(system, base, i, j) for j in range(1, n + 1))
            for i in range(1, n + 1)
        )

    action = tuple(
        tuple(class_of[g.table[rep][i]] for i in range(n)) for rep in representatives
    )
    matrices = []
    m_values = []
    for members in classes:
        c = matrix_at(members[0])
        for v in members[1:]:
            if matrix_at(v) != c:
                raise IncompatiblePartition(f"vertex {v} has a different Cartan matrix than its class")
        matrices.append(c)
        base = g.bases[members[0]]
        m_values.append(
            tuple(tuple(m_count(system, base, i, j) for j in range(1, n + 1)) for i in range(1, n + 1))
        )

    for a, c in enumerate(matrices):
        for i in range(n):
            for j in range(n):
                if (c[i][j] == 0) != (c[j][i] == 0):
                    raise IncompatiblePartition(f"object {a}: zero symmetry fails at ({i + 1},{j + 1})")
                if matrices[action[a][i]][i][j] != c[i][j]:
                    raise IncompatiblePartition(
                        f"object {a}: c_{i + 1}{j + 1} changes along reflection {i + 1}"
                    )
                if i == j:
                    continue
                obj = a
                for _ in range(m_values[a][i][j]):
                    obj = action[action[obj][i]][j]
                if obj != a:
                    raise IncompatiblePartition(
                        f"object {a}: (tau_{i + 1} tau_{j + 1})^m does not return"
                    )

    return CartanScheme(
        rank=n,
        objects=tuple(range(len(classes))),
        action=action,
        matrices=tuple(matrices),
        representatives=representatives,
        m_values=tuple(m_values),
    )


# ============================================================================
# EXPORT / IMPORT
# ============================================================================

def export_graph(g: CayleyGraph, fmt: ExportFormat = ExportFormat.JSON) -> str:
    """
    Serialize a graph as DOT or JSON.

    Both formats list edges sorted by (u, v, i), so output is byte-stable.
    """
    fmt = ExportFormat(fmt)
    edges = g.edges
    if fmt == ExportFormat.DOT:
        lines = ["graph G {"]
        lines += [f"  v{u} -- v{v} [label={i}];" for u, v, i in edges]
        lines.append("}")
        return "\n".join(lines) + "\n"
    payload = {
        "n": g.order,
        "rank": g.rank,
        "edges": [list(e) for e in edges],
        "coloring": list(g.coloring),
    }
    return json.dumps(payload, separators=(", ", ": ")) + "\n"


def import_graph(text: str) -> CayleyGraph:
    """
    Rebuild a CayleyGraph from its JSON export (without bases).

    Raises:
        ParseError: malformed JSON or an incomplete edge list
    """
    try:
        data = json.loads(text)
        n = int(data["n"])
        rank = int(data["rank"])
        edges = [tuple(int(x) for x in e) for e in data["edges"]]
        coloring = tuple(int(c) for c in data["coloring"])
    except (ValueError, KeyError, TypeError) as e:
        raise ParseError(f"not a graph export: {e}") from e

    table = [[-1] * rank for _ in range(n)]
    for edge in edges:
        if len(edge) != 3:
            raise ParseError(f"edge {edge} is not a (u, v, label) triple")
        u, v, i = edge
        if not (0 <= u < n and 0 <= v < n and 1 <= i <= rank):
            raise ParseError(f"edge {edge} out of range")
        for a, b in ((u, v), (v, u)):
            if table[a][i - 1] not in (-1, b):
                raise ParseError(f"vertex {a} has two edges labeled {i}")
            table[a][i - 1] = b
    if any(x < 0 for row in table for x in row):
        raise ParseError("edge list does not give every vertex one edge per label")

    g = CayleyGraph(
        rank=rank, table=tuple(tuple(r) for r in table), bases=(), start=0, coloring=coloring
    )
    check_graph(g)
    return g


__all__ = [
    "to_networkx",
    "color_classes",
    "check_graph",
    "build_graph",
    "set_distance",
    "graph_distance",
    "distance_matrix",
    "quotient_classes",
    "extract_cartan_scheme",
    "export_graph",
    "import_graph",
]
