"""
Weylham - Permutation Cayley Graphs
Purpose: Cayley graphs of permutation groups, chiefly Alt(n), on the shared cycle engine
Version: 1.0.0
Date: 2026-10-19

This module performs:
- Permutation arithmetic with right-to-left composition, (p * q)(k) = p(q(k))
- alt_generators: x1 = (123), x2 = (132), xi = (12)(i, i+1)
- build_perm_graph: BFS closure under right multiplication
- verify_perm_cycle: walk a word of generator names from the identity
- commuting_relations_check / theorem_one_generators: relation checks by composition
- reconcile_hamiltonian_map: compare a printed vertex listing with the walk
"""

from functools import total_ordering
from math import lcm
from typing import Any, Iterable, Mapping, Optional, Sequence
import logging
import re

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr

from src.core.hamilton import verify_cycle
from src.errors import (
    CapExceeded,
    IdentityGenerator,
    InternalError,
    NotInverseClosed,
    ParseError,
    RangeError,
    UnknownGenerator,
)
from src.state.schemas import CommutingReport, CycleWord, MapReport, VerifyReport
from src.utils.settings import get_settings

logger = logging.getLogger(__name__)

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


# ============================================================================
# PERMUTATIONS
# ============================================================================

@total_ordering
class Permutation:
    """A bijection of {1, ..., n} stored as its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ParseError(f"{images} is not a permutation of 1..{len(images)}")
        self.images: tuple[int, ...] = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, text: str, n: int) -> "Permutation":
        """
        Parse cycle notation such as "(1 2)(3 4)", "(123)" or "()".

        Digits written without separators are read one point each.

        Raises:
            ParseError: malformed text or a point outside 1..n
        """
        stripped = text.replace(" ", "")
        if _CYCLE_RE.sub("", stripped):
            raise ParseError(f"malformed cycle notation: {text!r}")
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for body in _CYCLE_RE.findall(text):
            tokens = body.replace(",", " ").split()
            if len(tokens) == 1 and len(tokens[0]) > 1:
                tokens = list(tokens[0])
            try:
                points = [int(t) for t in tokens]
            except ValueError as e:
                raise ParseError(f"bad point in cycle ({body})") from e
            for p in points:
                if not 1 <= p <= n or p in seen:
                    raise ParseError(f"point {p} repeated or outside 1..{n} in {text!r}")
                seen.add(p)
            for a, b in zip(points, points[1:] + points[:1]):
                images[a - 1] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise RangeError(f"degrees differ: {self.degree} and {other.degree}")
        return Permutation(self.images[k - 1] for k in other.images)

    def inverse(self) -> "Permutation":
        out = [0] * self.degree
        for k, image in enumerate(self.images, start=1):
            out[image - 1] = k
        return Permutation(out)

    def is_identity(self) -> bool:
        return all(image == k for k, image in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen: set[int] = set()
        out = []
        for k in range(1, self.degree + 1):
            if k in seen or self(k) == k:
                continue
            cyc = [k]
            seen.add(k)
            while self(cyc[-1]) != k:
                cyc.append(self(cyc[-1]))
                seen.add(cyc[-1])
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __str__(self) -> str:
        if self.is_identity():
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in self.cycles())

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r}, n={self.degree})"


def alt_generators(n: int) -> dict[str, Permutation]:
    """
    The generators of Alt(n) walked by the cycle words.

    Args:
        n: Degree, at least 3

    Returns:
        {"x1": (123), "x2": (132), "x3": (12)(34), ..., "x{n-1}": (12)(n-1 n)}

    Raises:
        RangeError: n < 3

    Example:
        >>> [str(p) for p in alt_generators(4).values()]
        ['(1 2 3)', '(1 3 2)', '(1 2)(3 4)']
    """
    if n < 3:
        raise RangeError(f"Alt(n) generators need n >= 3, got {n}")
    gens = {
        "x1": Permutation.from_cycles("(1 2 3)", n),
        "x2": Permutation.from_cycles("(1 3 2)", n),
    }
    for i in range(3, n):
        gens[f"x{i}"] = Permutation.from_cycles(f"(1 2)({i} {i + 1})", n)
    return gens


# ============================================================================
# CAYLEY GRAPHS
# ============================================================================

class PermGroupGraph(BaseModel):
    """Cayley graph of the group generated by `permutations`; vertices in BFS order."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    elements: tuple[Permutation, ...]
    generators: tuple[str, ...] = Field(description="Generator names; label i is generators[i - 1]")
    permutations: tuple[Permutation, ...]
    table: tuple[tuple[int, ...], ...] = Field(description="table[v][i - 1] = index of elements[v] * x_i")
    inverse_labels: tuple[int, ...] = Field(description="Label of x_i^-1, 1-based")
    start: int = 0

    _index: dict[Permutation, int] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context: Any) -> None:
        self._index = {p: v for v, p in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def degree(self) -> int:
        return len(self.generators)

    def index_of(self, p: Permutation) -> int:
        if p not in self._index:
            raise RangeError(f"{p} is not in the group")
        return self._index[p]

    def label_of(self, name: str) -> int:
        try:
            return self.generators.index(name) + 1
        except ValueError as e:
            raise UnknownGenerator(f"unknown generator {name!r}; have {list(self.generators)}") from e

    @property
    def edges(self) -> list[tuple[int, int, int]]:
        """Undirected edges (u, v, label) with u < v; a pair {x, x^-1} uses its smaller label."""
        out = set()
        for u, row in enumerate(self.table):
            for c, v in enumerate(row, start=1):
                label = min(c, self.inverse_labels[c - 1])
                out.add((min(u, v), max(u, v), label))
        return sorted(out)


def build_perm_graph(gens: Mapping[str, Permutation], cap: Optional[int] = None) -> PermGroupGraph:
    """
    BFS closure of the identity under right multiplication by the generators.

    Args:
        gens: Named generators, closed under inverses as a set
        cap: Largest group order to enumerate (default: settings.bfs_cap)

    Raises:
        IdentityGenerator: a generator is the identity
        NotInverseClosed: some generator's inverse is missing
        CapExceeded: the group is larger than cap
    """
    if not gens:
        raise RangeError("at least one generator is required")
    names = tuple(gens)
    perms = tuple(gens[name] for name in names)
    n = perms[0].degree
    if any(p.degree != n for p in perms):
        raise RangeError("generators act on different degrees")
    for name, p in zip(names, perms):
        if p.is_identity():
            raise IdentityGenerator(f"generator {name} is the identity")

    inverse_labels = []
    for name, p in zip(names, perms):
        inv = p.inverse()
        if inv not in perms:
            raise NotInverseClosed(f"the inverse {inv} of {name} is not a generator", witness=name)
        inverse_labels.append(perms.index(inv) + 1)

    cap = cap or get_settings().bfs_cap
    identity = Permutation.identity(n)
    elements = [identity]
    index = {identity: 0}
    rows: list[tuple[int, ...]] = []
    k = 0
    while k < len(elements):
        y = elements[k]
        row = []
        for x in perms:
            z = y * x
            if z not in index:
                if len(elements) >= cap:
                    raise CapExceeded(f"group order exceeds {cap}")
                index[z] = len(elements)
                elements.append(z)
            row.append(index[z])
        rows.append(tuple(row))
        k += 1

    logger.info(f"Built Cayley graph on {len(elements)} elements with generators {list(names)}")
    return PermGroupGraph(
        elements=tuple(elements),
        generators=names,
        permutations=perms,
        table=tuple(rows),
        inverse_labels=tuple(inverse_labels),
    )


def verify_perm_cycle(g: PermGroupGraph, names: Sequence[str]) -> VerifyReport:
    """Walk 1 . x_{i_1} ... x_{i_r} and report as hamilton.verify_cycle does."""
    word = tuple(g.label_of(name) for name in names)
    report = verify_cycle(g, CycleWord(start=g.start, word=word))
    logger.debug(f"Verified word of length {len(word)} on {g.order} elements: {report.message}")
    return report


# ============================================================================
# RELATION CHECKS
# ============================================================================

def _relation(name: str, left: Permutation, right: Permutation) -> dict[str, Any]:
    return {"relation": name, "left": str(left), "right": str(right), "holds": left == right}


def _report(n: int, relations: list[dict[str, Any]]) -> CommutingReport:
    errors = [f"{r['relation']} fails: {r['left']} != {r['right']}" for r in relations if not r["holds"]]
    return CommutingReport(passed=not errors, n=n, relations=relations, errors=errors)


def commuting_relations_check(gens: Mapping[str, Permutation]) -> CommutingReport:
    """
    Check how x_{n-1} commutes past the other Alt(n) generators.

    Verifies x1 x_{n-1} = x_{n-1} x2, x2 x_{n-1} = x_{n-1} x1 and
    xi x_{n-1} = x_{n-1} xi for 3 <= i <= n-3.

    Raises:
        RangeError: degree below 5
        UnknownGenerator: a generator x1..x_{n-1} is missing
    """
    if not gens:
        raise RangeError("no generators given")
    n = next(iter(gens.values())).degree
    if n < 5:
        raise RangeError(f"the commuting relations need n >= 5, got {n}")

    def x(i: int) -> Permutation:
        if f"x{i}" not in gens:
            raise UnknownGenerator(f"generator x{i} missing")
        return gens[f"x{i}"]

    last = x(n - 1)
    relations = [
        _relation(f"x1 x{n - 1} = x{n - 1} x2", x(1) * last, last * x(2)),
        _relation(f"x2 x{n - 1} = x{n - 1} x1", x(2) * last, last * x(1)),
    ]
    for i in range(3, n - 2):
        relations.append(_relation(f"x{i} x{n - 1} = x{n - 1} x{i}", x(i) * last, last * x(i)))
    return _report(n, relations)


def involution_relations_check(a: Permutation, b: Permutation, c: Permutation) -> CommutingReport:
    """a^2 = b^2 = c^2 = abab = e for a generating triple of involutions."""
    e = Permutation.identity(a.degree)
    relations = [
        _relation("a^2 = e", a * a, e),
        _relation("b^2 = e", b * b, e),
        _relation("c^2 = e", c * c, e),
        _relation("abab = e", a * b * a * b, e),
    ]
    return _report(a.degree, relations)


def theorem_one_generators() -> dict[str, Permutation]:
    """a = (12), b = (34), c = (13)(24), checked against the involution relations."""
    gens = {
        "a": Permutation.from_cycles("(1 2)", 4),
        "b": Permutation.from_cycles("(3 4)", 4),
        "c": Permutation.from_cycles("(1 3)(2 4)", 4),
    }
    report = involution_relations_check(gens["a"], gens["b"], gens["c"])
    if not report.passed:
        raise InternalError("; ".join(report.errors))
    return gens


# ============================================================================
# PRINTED LISTINGS
# ============================================================================

def _normalize_label(entry: Any, position: int, corrections: list[dict[str, Any]]) -> str:
    text = str(entry).strip()
    if text.isdigit():
        fixed = f"a{text}"
        corrections.append({"position": position, "printed": text, "read_as": fixed})
        logger.warning(f"Listing entry {position} is the bare integer {text}; reading it as {fixed}")
        return fixed
    return text


def reconcile_hamiltonian_map(
    g: PermGroupGraph,
    word: Sequence[str],
    printed: Sequence[Any],
    labels: Mapping[str, Permutation],
) -> MapReport:
    """
    Compare a printed listing f(1), ..., f(r) with the walk 1 . x_{i_1} ... x_{i_t}.

    f(t + 1) is the element reached after t letters. Bare integers k in the
    listing are read as a_k before comparing.

    Raises:
        ParseError: a listing entry names no known label
    """
    corrections: list[dict[str, Any]] = []
    normalized = [_normalize_label(entry, k, corrections) for k, entry in enumerate(printed, start=1)]

    v = g.start
    walk = [g.elements[v]]
    for name in word[:-1]:
        v = g.table[v][g.label_of(name) - 1]
        walk.append(g.elements[v])

    mismatches = []
    for k, (name, element) in enumerate(zip(normalized, walk), start=1):
        if name not in labels:
            raise ParseError(f"listing entry {k} names unknown label {name!r}")
        if labels[name] != element:
            mismatches.append({"position": k, "listed": name, "walk": str(element)})
    if len(normalized) != len(walk):
        mismatches.append({"position": None, "listed": len(normalized), "walk": len(walk)})

    for m in mismatches:
        logger.warning(f"Listing disagrees with the walk: {m}")
    return MapReport(
        passed=not mismatches,
        normalized=normalized,
        corrections=corrections,
        mismatches=mismatches,
    )


__all__ = [
    "Permutation",
    "alt_generators",
    "PermGroupGraph",
    "build_perm_graph",
    "verify_perm_cycle",
    "commuting_relations_check",
    "involution_relations_check",
    "theorem_one_generators",
    "reconcile_hamiltonian_map",
]
