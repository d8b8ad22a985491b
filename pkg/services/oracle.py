"""
Exact maximum independent sets of the forbidden-pair conflict graph

Vertices are the points of {0..d}^n in lexicographic order and adjacency is
kept as one integer bitset per vertex. The search is a clique search on the
complement graph with a greedy colouring bound (a colour class of the
complement is a clique of the conflict graph, so it holds at most one
vertex of any independent set).
"""
from itertools import product
from typing import Dict, List, Optional, Tuple
import logging

from config import get_settings
from schemas.grid import PointSet
from schemas.oracle import ConflictGraphSummary, MISResult
from services.errors import BudgetExceededError, OutOfRangeError
from services.grid import forbidden_pair

logger = logging.getLogger(__name__)


class ConflictGraph:
    """Forbidden-pair graph on {0..d}^n with bitset adjacency"""

    def __init__(self, n: int, d: int, k: int, vertices: List[Tuple[int, ...]], adjacency: List[int]):
        self.n = n
        self.d = d
        self.k = k
        self.vertices = vertices
        self.adjacency = adjacency
        self.index: Dict[Tuple[int, ...], int] = {v: i for i, v in enumerate(vertices)}
        full = (1 << len(vertices)) - 1
        # Vertices compatible with v in an independent set, v excluded
        self.compatible = [full & ~adjacency[i] & ~(1 << i) for i in range(len(vertices))]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return sum(bin(row).count("1") for row in self.adjacency) // 2

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def points_of(self, mask_or_indices) -> PointSet:
        if isinstance(mask_or_indices, int):
            indices = _bits(mask_or_indices)
        else:
            indices = list(mask_or_indices)
        return PointSet(n=self.n, d=self.d, k=self.k, points=[self.vertices[i] for i in indices])

    def summary(self) -> ConflictGraphSummary:
        return ConflictGraphSummary(n=self.n, d=self.d, k=self.k, vertices=len(self), edges=self.edge_count)

    def __repr__(self) -> str:
        return f"ConflictGraph(n={self.n}, d={self.d}, k={self.k}, vertices={len(self)})"


def _bits(mask: int) -> List[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def build_conflict_graph(n: int, d: int, k: int, max_vertices: Optional[int] = None) -> ConflictGraph:
    """
    Build the conflict graph of the k-Sperner constraint

    Raises:
        BudgetExceededError: if (d+1)^n exceeds the vertex budget
    """
    if n < 0 or d < 1 or k < 0:
        raise OutOfRangeError(f"invalid parameters n={n}, d={d}, k={k}")
    limit = max_vertices if max_vertices is not None else get_settings().vertex_budget
    size = (d + 1) ** n
    if size > limit:
        raise BudgetExceededError("oracle vertex", limit, size, hint=f"(d+1)^n for n={n}, d={d}")

    vertices = list(product(range(d + 1), repeat=n))
    levels = [sum(v) for v in vertices]
    adjacency = [0] * size
    reach = d * k
    for i in range(size):
        for j in range(i + 1, size):
            if abs(levels[i] - levels[j]) > reach:
                continue
            if forbidden_pair(vertices[i], vertices[j], k):
                adjacency[i] |= 1 << j
                adjacency[j] |= 1 << i
    graph = ConflictGraph(n, d, k, vertices, adjacency)
    logger.info(f"Built conflict graph n={n}, d={d}, k={k}: {size} vertices, {graph.edge_count} edges")
    return graph


def _colour_bound(graph: ConflictGraph, candidates: int) -> Tuple[List[int], List[int]]:
    """
    Greedy colouring of the candidates in the complement graph

    Returns vertices in colour order with the running colour count, so the
    last vertex carries the largest bound.
    """
    order, bounds = [], []
    uncoloured = candidates
    colour = 0
    while uncoloured:
        colour += 1
        available = uncoloured
        while available:
            low = available & -available
            v = low.bit_length() - 1
            uncoloured &= ~low
            # Same colour only for vertices in conflict with v
            available &= graph.adjacency[v]
            order.append(v)
            bounds.append(colour)
    return order, bounds


def _greedy_independent(graph: ConflictGraph, candidates: int) -> List[int]:
    chosen = []
    remaining = candidates
    by_degree = sorted(_bits(candidates), key=lambda v: bin(graph.adjacency[v] & candidates).count("1"))
    for v in by_degree:
        if remaining >> v & 1:
            chosen.append(v)
            remaining &= graph.compatible[v]
    return chosen


def orbit_representatives(graph: ConflictGraph) -> List[int]:
    """One vertex per orbit of coordinate permutations and the flip x -> d - x"""
    seen = {}
    for i, v in enumerate(graph.vertices):
        flipped = tuple(sorted(graph.d - x for x in v))
        key = min(tuple(sorted(v)), flipped)
        seen.setdefault(key, i)
    return sorted(seen.values())


class _Search:
    def __init__(self, graph: ConflictGraph, node_limit: int, best: List[int]):
        self.graph = graph
        self.node_limit = node_limit
        self.best = list(best)
        self.nodes = 0
        self.exhausted = False

    def expand(self, current: List[int], candidates: int) -> None:
        self.nodes += 1
        if self.nodes > self.node_limit:
            self.exhausted = True
            return
        order, bounds = _colour_bound(self.graph, candidates)
        for v, bound in zip(reversed(order), reversed(bounds)):
            if self.exhausted or len(current) + bound <= len(self.best):
                return
            current.append(v)
            narrowed = candidates & self.graph.compatible[v]
            if narrowed:
                self.expand(current, narrowed)
            elif len(current) > len(self.best):
                self.best = list(current)
            current.pop()
            candidates &= ~(1 << v)


def max_independent_set(
    graph: ConflictGraph,
    use_symmetry: bool = False,
    node_limit: Optional[int] = None,
) -> MISResult:
    """
    Exact maximum independent set by branch and bound

    Args:
        graph: Conflict graph
        use_symmetry: Branch only on orbit representatives at the root
        node_limit: Search-node budget; when exceeded the best set found so
            far is returned with certified=False

    Returns:
        MISResult: size and one witness
    """
    limit = node_limit if node_limit is not None else get_settings().MIS_NODE_LIMIT
    full = (1 << len(graph)) - 1
    search = _Search(graph, limit, _greedy_independent(graph, full))

    if use_symmetry:
        for root in orbit_representatives(graph):
            if search.exhausted:
                break
            narrowed = graph.compatible[root]
            if narrowed:
                search.expand([root], narrowed)
            elif not search.best:
                search.best = [root]
    else:
        search.expand([], full)

    certified = not search.exhausted
    if not certified:
        logger.warning(f"MIS search for {graph!r} stopped after {limit} nodes; size {len(search.best)} is a lower bound")
    return MISResult(
        size=len(search.best),
        witness=graph.points_of(search.best),
        certified=certified,
        nodes=search.nodes,
        symmetry_reduced=use_symmetry,
    )


def enumerate_maximum_sets(
    graph: ConflictGraph,
    cap: Optional[int] = None,
    size: Optional[int] = None,
) -> MISResult:
    """
    All maximum independent sets, up to cap

    Raises:
        BudgetExceededError: if the graph is too large to enumerate
    """
    settings = get_settings()
    cap = cap if cap is not None else settings.ENUMERATION_CAP
    if len(graph) > settings.ENUMERATION_MAX_VERTICES:
        raise BudgetExceededError("enumeration vertex", settings.ENUMERATION_MAX_VERTICES, len(graph))

    base = max_independent_set(graph) if size is None else None
    target = size if size is not None else base.size
    found: List[List[int]] = []
    truncated = False

    def walk(current: List[int], candidates: int) -> None:
        nonlocal truncated
        if truncated:
            return
        if len(current) == target:
            if len(found) >= cap:
                truncated = True
                return
            found.append(list(current))
            return
        _, bounds = _colour_bound(graph, candidates)
        if len(current) + (bounds[-1] if bounds else 0) < target:
            return
        remaining = candidates
        while remaining:
            low = remaining & -remaining
            v = low.bit_length() - 1
            remaining ^= low
            # Only later vertices, so each set is produced once in increasing order
            current.append(v)
            walk(current, graph.compatible[v] & remaining)
            current.pop()

    walk([], (1 << len(graph)) - 1)
    if truncated:
        logger.warning(f"Enumeration of maximum sets of {graph!r} truncated at {cap}")
    solutions = [graph.points_of(s) for s in found]
    witness = solutions[0] if solutions else graph.points_of([])
    return MISResult(
        size=target,
        witness=witness,
        certified=base.certified if base is not None else True,
        nodes=base.nodes if base is not None else 0,
        all_solutions=solutions,
        truncated=truncated,
    )
