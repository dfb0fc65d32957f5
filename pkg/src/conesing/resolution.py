"""Star-shaped resolution graphs and exact log discrepancies.

The graph of a cone surface singularity has one central curve (the vertex
blow-up divisor) with Hirzebruch-Jung chains attached.  Log discrepancies
solve the adjunction system
    sum_j (a_j - 1) (E_j . E_i) = -2 - E_i^2     for every i,
valid because every exceptional curve here is rational.  The minimum over
the graph is the minimal log discrepancy of the germ; two independent
oracles (blow-up simulation, toric lattice enumeration) confirm this.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .divisors import SeifertData
from .errors import NotContractible
from .rationals import (
    RationalMatrix,
    hj_expand,
    is_negative_definite,
    lcm_of_denominators,
    solve_linear,
)


@dataclass(frozen=True)
class GraphNode:
    self_intersection: int
    is_central: bool = False

    def __post_init__(self):
        if self.self_intersection > -1:
            raise ValueError(
                f"self-intersection must be <= -1, got {self.self_intersection}"
            )


class DualGraph:
    """Star-shaped dual graph: one central node, chains hanging off it."""

    __slots__ = ("nodes", "edges")

    def __init__(self, nodes, edges):
        self.nodes: tuple[GraphNode, ...] = tuple(nodes)
        normalized = set()
        for i, j in edges:
            if i == j:
                raise ValueError("self-loop")
            if not (0 <= i < len(self.nodes) and 0 <= j < len(self.nodes)):
                raise ValueError(f"edge ({i}, {j}) out of range")
            normalized.add((min(i, j), max(i, j)))
        self.edges: frozenset[tuple[int, int]] = frozenset(normalized)
        self._validate()

    def _validate(self):
        n = len(self.nodes)
        centrals = [i for i, node in enumerate(self.nodes) if node.is_central]
        if len(centrals) != 1:
            raise ValueError(f"need exactly one central node, got {len(centrals)}")
        if len(self.edges) != n - 1:
            raise ValueError("graph must be a tree")
        # connectivity, and degree <= 2 away from the center
        adjacency = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            for neighbor in adjacency[stack.pop()]:
                if neighbor not in seen:
                    seen.add(neighbor)
                    stack.append(neighbor)
        if len(seen) != n:
            raise ValueError("graph must be connected")
        for i in range(n):
            if not self.nodes[i].is_central and len(adjacency[i]) > 2:
                raise ValueError(f"non-central node {i} has degree {len(adjacency[i])}")

    def adjacency(self) -> list[set[int]]:
        adjacency: list[set[int]] = [set() for _ in self.nodes]
        for i, j in self.edges:
            adjacency[i].add(j)
            adjacency[j].add(i)
        return adjacency

    @property
    def central_index(self) -> int:
        return next(i for i, node in enumerate(self.nodes) if node.is_central)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DualGraph)
            and self.nodes == other.nodes
            and self.edges == other.edges
        )

    def __repr__(self) -> str:
        ints = [node.self_intersection for node in self.nodes]
        return f"DualGraph({ints}, central={self.central_index}, edges={sorted(self.edges)})"


@dataclass(frozen=True)
class DiscrepancyReport:
    """Exact log discrepancies of a graph, their minimum, and the induced
    klt flag and canonical (Gorenstein) index."""

    log_discrepancies: tuple[Fraction, ...]
    mld: Fraction
    is_klt: bool
    canonical_index: int


def build_graph(seifert: SeifertData) -> DualGraph:
    """Star-shaped graph of Seifert data: central node -b, one
    Hirzebruch-Jung chain per branch attached at its first node."""
    nodes = [GraphNode(-seifert.b, is_central=True)]
    edges = []
    for alpha, beta in seifert.branches:
        previous = 0
        for c in hj_expand(alpha, beta):
            nodes.append(GraphNode(-c))
            edges.append((previous, len(nodes) - 1))
            previous = len(nodes) - 1
    return DualGraph(nodes, edges)


def intersection_matrix(graph: DualGraph) -> RationalMatrix:
    n = len(graph.nodes)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i, node in enumerate(graph.nodes):
        rows[i][i] = Fraction(node.self_intersection)
    for i, j in graph.edges:
        rows[i][j] = Fraction(1)
        rows[j][i] = Fraction(1)
    return RationalMatrix.from_rows(rows)


def discrepancies(graph: DualGraph) -> DiscrepancyReport:
    """Solve the adjunction system exactly and report mld, klt status and
    the lcm of the discrepancy denominators (the canonical index, by the
    numerical Q-Cartier criterion valid for these rational singularities)."""
    matrix = intersection_matrix(graph)
    if not is_negative_definite(matrix):
        raise NotContractible("intersection matrix is not negative definite")
    rhs = [Fraction(-2 - node.self_intersection) for node in graph.nodes]
    shifted = solve_linear(matrix, rhs)
    log_discrepancies = tuple(1 + x for x in shifted)
    mld = min(log_discrepancies)
    return DiscrepancyReport(
        log_discrepancies=log_discrepancies,
        mld=mld,
        is_klt=all(a > 0 for a in log_discrepancies),
        canonical_index=lcm_of_denominators(log_discrepancies),
    )


def central_log_discrepancy(graph: DualGraph) -> Fraction:
    return discrepancies(graph).log_discrepancies[graph.central_index]


def mld_blowup_oracle(graph: DualGraph, rounds: int) -> Fraction:
    """Independent confirmation that the graph minimum is the true mld.

    Simulates every sequence of at most ``rounds`` blow-ups using only the
    combination rules: an edge blow-up creates a divisor with log
    discrepancy a_i + a_j, a free blow-up on a node creates a_i + 1.
    Returns the minimum value seen.  Only meaningful for klt graphs (for
    non-klt ones the infimum need not be attained), so those are rejected.
    """
    if rounds < 1:
        raise ValueError("rounds must be >= 1")
    base = discrepancies(graph)
    if not base.is_klt:
        raise ValueError("blow-up oracle requires a klt graph")
    best = min(base.log_discrepancies)

    def explore(values, edges, depth, best):
        if depth == 0:
            return best
        n = len(values)
        for i, j in edges:
            created = values[i] + values[j]
            rest = edges - {(i, j)} | {(i, n), (j, n)}
            best = explore(values + (created,), rest, depth - 1, min(best, created))
        for i in range(n):
            created = values[i] + 1
            best = explore(
                values + (created,), edges | {(i, n)}, depth - 1, min(best, created)
            )
        return best

    return explore(base.log_discrepancies, graph.edges, rounds, best)


def _full_chain(seifert: SeifertData) -> list[int]:
    """Linear self-intersection chain of a <= 2-branch star: first branch
    reversed, center, second branch."""
    branches = [hj_expand(alpha, beta) for alpha, beta in seifert.branches]
    chain = list(reversed(branches[0])) if branches else []
    chain.append(seifert.b)
    if len(branches) == 2:
        chain.extend(branches[1])
    return chain


def toric_mld_oracle(seifert: SeifertData) -> Fraction:
    """Independent mld for the toric (<= 2 branch) case.

    Rebuilds the 2-dimensional lattice cone whose resolution fan realizes
    the chain (rays satisfy u_{k+1} = c_k u_k - u_{k-1}), then minimizes the
    toric log discrepancy -- the linear functional taking value 1 on both
    primitive generators -- over primitive lattice points interior to the
    cone.  The minimum is attained inside the fundamental parallelogram, so
    the enumeration there is exhaustive.
    """
    if len(seifert.branches) > 2:
        raise ValueError("toric oracle needs at most 2 branches")
    chain = _full_chain(seifert)
    rays = [(1, 0), (0, 1)]
    for c in chain:
        u_prev, u = rays[-2], rays[-1]
        rays.append((c * u[0] - u_prev[0], c * u[1] - u_prev[1]))
    first, last = rays[0], rays[-1]

    def det(u, v) -> int:
        return u[0] * v[1] - u[1] * v[0]

    d = det(first, last)
    if d <= 0:
        raise NotContractible("chain does not span a strictly convex cone")
    for ray in rays[1:-1]:
        if not (det(first, ray) > 0 and det(ray, last) > 0):
            raise NotContractible("resolution rays leave the cone")

    # functional with value 1 on both generators
    weight = solve_linear(
        RationalMatrix.from_rows([list(first), list(last)]), [1, 1]
    )

    best: Fraction | None = None
    xs = [first[0], last[0], first[0] + last[0], 0]
    ys = [first[1], last[1], first[1] + last[1], 0]
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            if (x, y) == (0, 0) or gcd(abs(x), abs(y)) != 1:
                continue
            # barycentric coordinates relative to the two generators
            s = Fraction(det((x, y), last), d)
            t = Fraction(det(first, (x, y)), d)
            if not (0 < s <= 1 and 0 < t <= 1):
                continue
            value = x * weight[0] + y * weight[1]
            if best is None or value < best:
                best = value
    assert best is not None  # the sum of the generators always qualifies
    return best
