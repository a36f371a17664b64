"""
Weylham - Hamiltonian Cycles
Purpose: Verify and search Hamiltonian cycles on labeled Cayley graphs
Version: 1.0.0
Date: 2026-10-19

This module performs:
- verify_cycle: walk a cycle word and report length, distinctness and closure
- rank2_cycle: the alternating word for rank <= 2
- product_cycle: the strip construction for reducible systems
- lift_search: split off one label family, solve each component, splice along squares
- backtrack_search: pruned depth-first search (degree, forced-move and connectivity cuts)
- find: the auto dispatcher with re-verification

Any graph with a `table` (table[v][i - 1] = neighbour by label i), a `start`
vertex and `inverse_labels` can be searched; Weyl groupoid graphs and
permutation-group graphs both qualify.
"""

from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass, field
from typing import Any, Optional, Protocol, Sequence
import logging
import multiprocessing
import random
import time

from src.errors import (
    BudgetExceeded,
    ComponentMismatch,
    InternalError,
    NoCycleFound,
    NotReducible,
    RankError,
)
from src.state.schemas import (
    CayleyGraph,
    CycleWord,
    RootSystem,
    SearchConfig,
    SearchMethod,
    VerifyReport,
)

logger = logging.getLogger(__name__)

BUDGET_CHECK_INTERVAL = 1024

# Set in each backtracking worker process by _init_worker
_WORKER_STOP: Optional[Any] = None


class LabeledGraph(Protocol):
    """Anything walkable by generator labels."""

    @property
    def table(self) -> tuple[tuple[int, ...], ...]: ...

    @property
    def start(self) -> int: ...

    @property
    def inverse_labels(self) -> tuple[int, ...]: ...


# ============================================================================
# VERIFICATION
# ============================================================================

def verify_cycle(g: LabeledGraph, c: CycleWord) -> VerifyReport:
    """
    Walk `c` from its start vertex and check it is a Hamiltonian cycle.

    Args:
        g: Labeled graph
        c: Cycle word with 1-based labels

    Returns:
        VerifyReport; failed_step is the 1-based step of the first failure

    Example:
        >>> verify_cycle(graph, CycleWord(word=(1, 1))).failed_step
        2
    """
    n = len(g.table)
    rank = len(g.table[0]) if n else 0
    word = c.word
    length_matches = len(word) == n

    if not 0 <= c.start < n:
        return VerifyReport(
            accepted=False, length_matches=length_matches, all_distinct=False,
            returns_to_start=False, failed_step=0, visited=0,
            message=f"start vertex {c.start} is not in the graph",
        )

    v = c.start
    visited = {v}
    for step, label in enumerate(word, start=1):
        if not 1 <= label <= rank:
            return VerifyReport(
                accepted=False, length_matches=length_matches, all_distinct=False,
                returns_to_start=False, failed_step=step, visited=len(visited),
                message=f"label {label} at step {step} is outside 1..{rank}",
            )
        v = g.table[v][label - 1]
        if step < len(word):
            if v in visited:
                return VerifyReport(
                    accepted=False, length_matches=length_matches, all_distinct=False,
                    returns_to_start=False, failed_step=step, visited=len(visited),
                    message=f"vertex {v} revisited at step {step}",
                )
            visited.add(v)

    returns = bool(word) and v == c.start
    accepted = length_matches and returns
    failed_step = None
    message = "Hamiltonian cycle"
    if not returns:
        failed_step = len(word)
        message = f"walk ends at vertex {v}, not at the start {c.start}"
    elif not length_matches:
        failed_step = len(word)
        message = f"closed walk of length {len(word)} on {n} vertices"
    return VerifyReport(
        accepted=accepted,
        length_matches=length_matches,
        all_distinct=True,
        returns_to_start=returns,
        failed_step=failed_step,
        visited=len(visited),
        message=message,
    )


def reverse_cycle(g: LabeledGraph, c: CycleWord) -> CycleWord:
    """The same closed walk traversed backwards from the same start."""
    inverse = g.inverse_labels
    return CycleWord(start=c.start, word=tuple(inverse[i - 1] for i in reversed(c.word)))


def _require_accepted(g: LabeledGraph, c: CycleWord, where: str) -> CycleWord:
    report = verify_cycle(g, c)
    if not report.accepted:
        raise InternalError(f"{where} produced a word that fails verification: {report.message}")
    return c


# ============================================================================
# CLOSED FORMS
# ============================================================================

def rank2_cycle(g: CayleyGraph) -> CycleWord:
    """(1, 1) for rank 1 and the alternating word 1, 2, 1, 2, ... for rank 2."""
    if g.rank == 1:
        return _require_accepted(g, CycleWord(start=g.start, word=(1, 1)), "rank2_cycle")
    if g.rank != 2:
        raise RankError(f"rank2_cycle needs rank 1 or 2, got {g.rank}")
    word = tuple(1 if t % 2 == 0 else 2 for t in range(g.order))
    return _require_accepted(g, CycleWord(start=g.start, word=word), "rank2_cycle")


def product_cycle(
    first: CycleWord,
    second: CycleWord,
    first_labels: Sequence[int],
    second_labels: Sequence[int],
) -> CycleWord:
    """
    Hamiltonian cycle of a reducible system from cycles of its two components.

    With k = |first|, l = |second| and r = l / 2, the word h of length k*l is
    h(t + 2xk) = i_t and h(t + (2x - 1)k) = i_{k-t} for t in [1, k - 1], and
    h(ku) = j_u; i and j are the component words relabeled into the full index set.

    Raises:
        NotReducible: the two label sets overlap
        ComponentMismatch: a word uses a label outside its map, or l is odd
    """
    if set(first_labels) & set(second_labels):
        raise NotReducible(f"label sets {list(first_labels)} and {list(second_labels)} overlap")
    try:
        i_word = [first_labels[x - 1] for x in first.word]
        j_word = [second_labels[x - 1] for x in second.word]
    except IndexError as e:
        raise ComponentMismatch("component word uses a label outside its relabeling") from e
    k, l = len(i_word), len(j_word)
    if k == 0 or l == 0 or l % 2:
        raise ComponentMismatch(f"component cycle lengths {k} and {l} do not allow a product")

    h = []
    for t in range(1, k * l + 1):
        q, s = divmod(t, k)
        if s == 0:
            h.append(j_word[q - 1])
        elif q % 2 == 0:
            h.append(i_word[s - 1])
        else:
            h.append(i_word[k - s - 1])
    return CycleWord(start=0, word=tuple(h))


# ============================================================================
# SUBGRAPH VIEWS
# ============================================================================

@dataclass
class _View:
    """The subgraph on `vertices` using only the label columns in `labels`."""

    table: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    labels: tuple[int, ...]
    vertices: list[int]
    local: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.local = {v: k for k, v in enumerate(self.vertices)}

    @property
    def size(self) -> int:
        return len(self.vertices)

    def neighbours(self, v: int) -> list[int]:
        out = []
        for c in self.labels:
            w = self.table[v][c]
            if w in self.local and w not in out and w != v:
                out.append(w)
        return out

    def families(self) -> list[tuple[int, ...]]:
        """Label families {c, c^-1} present in the view, sorted by descending label."""
        seen: list[tuple[int, ...]] = []
        for c in self.labels:
            fam = tuple(sorted({c, self.inverse[c]}))
            if fam not in seen and all(x in self.labels for x in fam):
                seen.append(fam)
        return sorted(seen, key=lambda f: -max(f))

    def components_without(self, family: Sequence[int]) -> list[list[int]]:
        keep = tuple(c for c in self.labels if c not in family)
        seen: set[int] = set()
        out = []
        for root in self.vertices:
            if root in seen:
                continue
            comp = [root]
            seen.add(root)
            k = 0
            while k < len(comp):
                v = comp[k]
                k += 1
                for c in keep:
                    w = self.table[v][c]
                    if w in self.local and w not in seen:
                        seen.add(w)
                        comp.append(w)
            out.append(comp)
        return out

    def restrict(self, vertices: list[int], family: Sequence[int]) -> "_View":
        return _View(
            table=self.table,
            inverse=self.inverse,
            labels=tuple(c for c in self.labels if c not in family),
            vertices=vertices,
        )

    def to_word(self, cycle: Sequence[int]) -> tuple[int, ...]:
        word = []
        for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
            label = next((c for c in self.labels if self.table[a][c] == b), None)
            if label is None:
                raise InternalError(f"vertices {a} and {b} are not adjacent")
            word.append(label + 1)
        return tuple(word)


def _full_view(g: LabeledGraph) -> _View:
    n = len(g.table)
    rank = len(g.table[0]) if n else 0
    vertices = [g.start] + [v for v in range(n) if v != g.start]
    return _View(
        table=g.table,
        inverse=tuple(x - 1 for x in g.inverse_labels),
        labels=tuple(range(rank)),
        vertices=vertices,
    )


def _check_budget(deadline: float) -> None:
    if time.monotonic() > deadline:
        raise BudgetExceeded("time budget exhausted")


# ============================================================================
# 2-REGULAR WALKS AND LIFTING
# ============================================================================

def _walk(view: _View) -> Optional[list[int]]:
    if view.size <= 2:
        return list(view.vertices)
    start = view.vertices[0]
    if any(len(view.neighbours(v)) != 2 for v in view.vertices):
        return None
    cycle = [start]
    prev, v = start, view.neighbours(start)[0]
    while v != start:
        cycle.append(v)
        a, b = view.neighbours(v)
        prev, v = v, (b if a == prev else a)
    return cycle if len(cycle) == view.size else None


def cycle_walk(g: LabeledGraph) -> CycleWord:
    """The Hamiltonian cycle of a connected 2-regular labeled graph."""
    view = _full_view(g)
    cycle = _walk(view)
    if cycle is None:
        raise RankError("cycle_walk needs a connected 2-regular graph")
    return CycleWord(start=g.start, word=view.to_word(cycle))


def _adjacent(view: _View, a: int, b: int) -> bool:
    return any(view.table[a][c] == b for c in range(len(view.table[a])))


def _has_commuting_square(view: _View, family: Sequence[int]) -> bool:
    """Some other label has all its edges carried by the family onto edges."""
    for j in view.labels:
        if j in family:
            continue
        if all(
            any(
                _adjacent(view, view.table[v][c], view.table[view.table[v][j]][d])
                for c in family
                for d in family
            )
            for v in view.vertices
        ):
            return True
    return False


def _path_between(cycle: list[int], a: int, b: int) -> Optional[list[int]]:
    """Hamiltonian path of the cycle from a to b when a and b are consecutive."""
    n = len(cycle)
    p = cycle.index(a)
    if cycle[(p - 1) % n] == b:
        return [cycle[(p + k) % n] for k in range(n)]
    if cycle[(p + 1) % n] == b:
        return [cycle[(p - k) % n] for k in range(n)]
    return None


def _splice(view: _View, family: Sequence[int], cycles: list[list[int]]) -> Optional[list[int]]:
    main = cycles[0]
    owner = {v: k for k, cyc in enumerate(cycles) for v in cyc}
    pending = set(range(1, len(cycles)))
    while pending:
        spliced = False
        for p in range(len(main)):
            u, w = main[p], main[(p + 1) % len(main)]
            for c in family:
                u2 = view.table[u][c]
                k = owner.get(u2)
                if k not in pending:
                    continue
                for d in family:
                    w2 = view.table[w][d]
                    if owner.get(w2) != k or u2 == w2:
                        continue
                    path = _path_between(cycles[k], u2, w2)
                    if path is None:
                        continue
                    main = main[: p + 1] + path + main[p + 1:]
                    for v in path:
                        owner[v] = 0
                    pending.discard(k)
                    spliced = True
                    break
                if spliced:
                    break
            if spliced:
                break
        if not spliced:
            return None
    return main


def _lift(view: _View, family: Sequence[int], cfg: SearchConfig, deadline: float) -> Optional[list[int]]:
    components = view.components_without(family)
    if len(components) < 2:
        return None
    start = view.vertices[0]
    components.sort(key=lambda comp: (start not in comp, min(comp)))
    cycles = []
    for comp in components:
        comp.sort(key=lambda v: (v != start, v))
        cyc = _solve(view.restrict(comp, family), cfg, deadline)
        if cyc is None:
            return None
        cycles.append(cyc)
    logger.debug(f"Splicing {len(cycles)} components of sizes {[len(c) for c in cycles]}")
    return _splice(view, family, cycles)


def _solve(view: _View, cfg: SearchConfig, deadline: float) -> Optional[list[int]]:
    """Cycle on a view: walk if 2-regular, else lift along commuting squares, else backtrack."""
    _check_budget(deadline)
    cycle = _walk(view)
    if cycle is not None:
        return cycle
    for family in view.families():
        if len(view.components_without(family)) > 1 and _has_commuting_square(view, family):
            cycle = _lift(view, family, cfg, deadline)
            if cycle is not None:
                return cycle
    return _backtrack(view, cfg, deadline)


def lift_search(
    g: LabeledGraph, split_index: int, cfg: Optional[SearchConfig] = None
) -> Optional[CycleWord]:
    """
    Remove the edges of one label family, solve each component and splice.

    Returns None when the removal keeps the graph connected or splicing stalls.

    Raises:
        BudgetExceeded: cfg.time_budget ran out
    """
    cfg = cfg or SearchConfig()
    deadline = time.monotonic() + cfg.time_budget
    view = _full_view(g)
    c = split_index - 1
    family = tuple(sorted({c, view.inverse[c]}))
    cycle = _lift(view, family, cfg, deadline)
    if cycle is None:
        logger.info(f"Lifting along label {split_index} found no cycle")
        return None
    return _require_accepted(g, CycleWord(start=g.start, word=view.to_word(cycle)), "lift_search")


# ============================================================================
# BACKTRACKING
# ============================================================================

def _adjacency(view: _View, cfg: SearchConfig) -> list[list[int]]:
    adj = [[view.local[w] for w in view.neighbours(v)] for v in view.vertices]
    if not cfg.deterministic:
        rng = random.Random(cfg.seed)
        for row in adj:
            rng.shuffle(row)
    return adj


def _backtrack_local(
    adj: list[list[int]], prefix: list[int], deadline: float, stop: Optional[Any] = None
) -> Optional[list[int]]:
    """
    Extend the simple path `prefix` (starting at local vertex 0) to a Hamiltonian cycle.

    Returns None early once `stop` (an Event shared with sibling workers) is set.
    """
    n = len(adj)
    if n == 1:
        return [0]
    if n == 2:
        return [0, 1] if 1 in adj[0] else None
    visited = [False] * n
    for v in prefix:
        visited[v] = True
    path = list(prefix)
    remaining = n - len(path)

    def available(u: int, tail: int) -> int:
        return sum(1 for x in adj[u] if not visited[x] or x == tail or x == 0)

    def candidates(tail: int) -> list[int]:
        free = [u for u in adj[tail] if not visited[u]]
        forced = [u for u in free if available(u, tail) <= 2]
        if len(forced) > 1:
            return []
        return forced if forced else free

    def feasible(prev: int, tail: int) -> bool:
        if prev != 0:
            for u in adj[prev]:
                if not visited[u] and available(u, tail) < 2:
                    return False
        if remaining == 0:
            return True
        if not any(not visited[x] for x in adj[0]):
            return False
        seen = {tail}
        stack = [tail]
        reached = 0
        while stack:
            v = stack.pop()
            for x in adj[v]:
                if not visited[x] and x not in seen:
                    seen.add(x)
                    reached += 1
                    stack.append(x)
        return reached == remaining

    stack = [list(reversed(candidates(path[-1])))]
    ticks = 0
    while stack:
        ticks += 1
        if ticks % BUDGET_CHECK_INTERVAL == 0:
            if stop is not None and stop.is_set():
                return None
            _check_budget(deadline)
        options = stack[-1]
        if not options:
            stack.pop()
            if len(path) > len(prefix):
                v = path.pop()
                visited[v] = False
                remaining += 1
            continue
        w = options.pop()
        prev = path[-1]
        visited[w] = True
        path.append(w)
        remaining -= 1
        if remaining == 0:
            if 0 in adj[w]:
                return path
        elif feasible(prev, w):
            stack.append(list(reversed(candidates(w))))
            continue
        path.pop()
        visited[w] = False
        remaining += 1
    return None


def _backtrack(view: _View, cfg: SearchConfig, deadline: float) -> Optional[list[int]]:
    adj = _adjacency(view, cfg)
    if cfg.threads > 1 and not cfg.deterministic and view.size > 2:
        local = _parallel_backtrack(adj, cfg.threads, deadline)
    else:
        local = _backtrack_local(adj, [0], deadline)
    if local is None:
        return None
    return [view.vertices[k] for k in local]


def _init_worker(stop: Any) -> None:
    global _WORKER_STOP
    _WORKER_STOP = stop


def _backtrack_worker(adj: list[list[int]], prefix: list[int], deadline: float) -> Optional[list[int]]:
    return _backtrack_local(adj, prefix, deadline, _WORKER_STOP)


def _parallel_backtrack(
    adj: list[list[int]], threads: int, deadline: float, stop: Optional[Any] = None
) -> Optional[list[int]]:
    """
    Explore the first-branch subtrees on worker processes; first success wins.

    The workers share `stop`; it is set on every exit so running subtrees
    return instead of searching until the deadline.
    """
    ctx = multiprocessing.get_context()
    stop = stop if stop is not None else ctx.Event()
    pool = ProcessPoolExecutor(
        max_workers=threads, mp_context=ctx, initializer=_init_worker, initargs=(stop,)
    )
    try:
        pending = {pool.submit(_backtrack_worker, adj, [0, first], deadline) for first in adj[0]}
        while pending:
            timeout = max(deadline - time.monotonic(), 0.0)
            done, pending = wait(pending, timeout=timeout, return_when=FIRST_COMPLETED)
            if not done:
                raise BudgetExceeded("time budget exhausted")
            for future in done:
                result = future.result()
                if result is not None:
                    return result
        return None
    finally:
        stop.set()
        pool.shutdown(wait=True, cancel_futures=True)


def backtrack_search(g: LabeledGraph, cfg: Optional[SearchConfig] = None) -> Optional[CycleWord]:
    """
    Pruned depth-first search for a Hamiltonian cycle from the start vertex.

    Neighbours are tried in ascending label order when cfg.deterministic,
    otherwise in an order shuffled by cfg.seed.

    Returns:
        A verified CycleWord, or None when the search space is exhausted

    Raises:
        BudgetExceeded: cfg.time_budget ran out first
    """
    cfg = cfg or SearchConfig()
    deadline = time.monotonic() + cfg.time_budget
    view = _full_view(g)
    cycle = _backtrack(view, cfg, deadline)
    if cycle is None:
        return None
    return _require_accepted(g, CycleWord(start=g.start, word=view.to_word(cycle)), "backtrack_search")


# ============================================================================
# DISPATCH
# ============================================================================

def find_on_graph(g: LabeledGraph, cfg: Optional[SearchConfig] = None) -> CycleWord:
    """
    Search any labeled graph: walk, lifting on commuting families, then backtracking.

    Raises:
        BudgetExceeded: time budget ran out
        NoCycleFound: the search space holds no Hamiltonian cycle
    """
    cfg = cfg or SearchConfig()
    deadline = time.monotonic() + cfg.time_budget
    view = _full_view(g)
    method = SearchMethod(cfg.method)
    if method == SearchMethod.BACKTRACK:
        cycle = _backtrack(view, cfg, deadline)
    elif method == SearchMethod.LIFT:
        cycle = None
        for family in view.families():
            cycle = _lift(view, family, cfg, deadline)
            if cycle is not None:
                break
        if cycle is None:
            logger.error(f"No label family splices into a Hamiltonian cycle ({view.size} vertices)")
            raise NoCycleFound("lifting found no splicing label family")
    elif method == SearchMethod.PRODUCT:
        raise NotReducible("the product method needs a root system")
    else:
        cycle = _solve(view, cfg, deadline)
    if cycle is None:
        logger.error(f"Search space exhausted without a Hamiltonian cycle ({method.value}, {view.size} vertices)")
        raise NoCycleFound(f"no Hamiltonian cycle found by method {method.value}")
    return _require_accepted(g, CycleWord(start=g.start, word=view.to_word(cycle)), "find")


def _remaining(cfg: SearchConfig, deadline: float, method: SearchMethod) -> SearchConfig:
    """cfg with the time left before `deadline` as its budget."""
    left = deadline - time.monotonic()
    if left <= 0:
        raise BudgetExceeded("time budget exhausted")
    return cfg.model_copy(update={"method": method, "time_budget": left})


def _product_find(
    system: RootSystem, g: CayleyGraph, cfg: SearchConfig, deadline: float
) -> Optional[CycleWord]:
    from src.core.groupoid_graph import build_graph
    from src.core.root_core import reducible_split

    split = reducible_split(system)
    if split is None:
        return None
    first_graph = build_graph(split.first_system)
    first = find(split.first_system, first_graph, _remaining(cfg, deadline, SearchMethod.AUTO))
    second_graph = build_graph(split.second_system)
    second = find(split.second_system, second_graph, _remaining(cfg, deadline, SearchMethod.AUTO))
    logger.info(f"Reducible system: components {split.first} and {split.second}")
    return product_cycle(first, second, split.first, split.second)


def find(system: RootSystem, g: CayleyGraph, cfg: Optional[SearchConfig] = None) -> CycleWord:
    """
    Find a Hamiltonian cycle of the Weyl groupoid graph of `system`.

    Auto order: rank <= 2 closed form, product for reducible systems,
    lifting on a commuting label family, then backtracking.
    Component searches of a product share the one time budget.

    Raises:
        BudgetExceeded: cfg.time_budget ran out
        NoCycleFound: backtracking exhausted the search space
        NotReducible: method=product on an irreducible system
    """
    cfg = cfg or SearchConfig()
    method = SearchMethod(cfg.method)
    started = time.monotonic()
    deadline = started + cfg.time_budget

    if method == SearchMethod.PRODUCT:
        cycle = _product_find(system, g, cfg, deadline)
        if cycle is None:
            raise NotReducible(f"{system.name or 'system'} is irreducible")
    elif method == SearchMethod.AUTO and g.rank <= 2:
        cycle = rank2_cycle(g)
    elif method == SearchMethod.AUTO:
        cycle = _product_find(system, g, cfg, deadline) if g.rank > 2 else None
        if cycle is None:
            cycle = find_on_graph(g, _remaining(cfg, deadline, method))
    else:
        cycle = find_on_graph(g, cfg)

    _require_accepted(g, cycle, "find")
    logger.info(
        f"Found Hamiltonian cycle of length {len(cycle)} "
        f"({method.value}, {time.monotonic() - started:.2f}s)"
    )
    return cycle


__all__ = [
    "LabeledGraph",
    "verify_cycle",
    "reverse_cycle",
    "rank2_cycle",
    "product_cycle",
    "cycle_walk",
    "lift_search",
    "backtrack_search",
    "find_on_graph",
    "find",
]
