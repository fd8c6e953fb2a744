"""Kneser graphs of set systems, exact chromatic numbers and the Sarkaria index."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError, ResourceLimitError
from .simplicial import Face, SimplicialComplex, minimal_non_faces

DEFAULT_COLORING_BUDGET = 64


@dataclass(frozen=True)
class KneserGraph:
    """Disjointness graph on a set system.

    ``neighbors[u]`` is a bitmask over vertex indices.
    """

    vertices: tuple[Face, ...]
    neighbors: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nb in enumerate(self.neighbors)
                for v in range(u + 1, self.order) if nb >> v & 1]

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.neighbors[u] >> v & 1)


@dataclass(frozen=True)
class Coloring:
    """Proper coloring; ``assignment[v]`` is a color in ``1..num_colors``."""

    assignment: tuple[int, ...]
    num_colors: int

    def is_proper(self, graph: KneserGraph) -> bool:
        return all(self.assignment[u] != self.assignment[v] for u, v in graph.edges)


def kneser_graph(sets: Iterable[Face]) -> KneserGraph:
    verts = tuple(sets)
    nbrs = []
    for i, a in enumerate(verts):
        mask = 0
        for j, b in enumerate(verts):
            if a & b == 0 and j != i:
                mask |= 1 << j
        nbrs.append(mask)
    return KneserGraph(verts, tuple(nbrs))


# -- exact coloring ----------------------------------------------------------

def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _components(vertices: list[int], adj: Sequence[int]) -> list[list[int]]:
    """Connected components of the subgraph induced on ``vertices``."""
    pool = 0
    for v in vertices:
        pool |= 1 << v
    comps = []
    while pool:
        start = pool & -pool
        comp = start
        frontier = start
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = adj[v] & pool & ~comp
            comp |= new
            frontier |= new
        pool &= ~comp
        comps.append(_bits(comp))
    return comps


def _greedy_clique(vertices: list[int], adj: Sequence[int]) -> int:
    best = 0
    for start in vertices:
        cand = adj[start]
        size = 1
        for v in sorted(vertices, key=lambda x: (-bin(adj[x]).count("1"), x)):
            if cand >> v & 1:
                size += 1
                cand &= adj[v]
        best = max(best, size)
    return best


def _dsatur_order_color(vertices: list[int], adj: Sequence[int], limit: int,
                        colors: dict[int, int]) -> bool:
    """Backtracking DSATUR: try to extend ``colors`` to a proper ``limit``-coloring."""
    uncolored = [v for v in vertices if v not in colors]
    if not uncolored:
        return True

    def saturation(v: int) -> int:
        return len({colors[u] for u in _bits(adj[v]) if u in colors})

    # highest saturation, then highest degree, then lowest index
    v = min(uncolored, key=lambda x: (-saturation(x), -bin(adj[x]).count("1"), x))
    used = {colors[u] for u in _bits(adj[v]) if u in colors}
    top = max(colors.values(), default=0)
    for c in range(1, min(limit, top + 1) + 1):
        if c in used:
            continue
        colors[v] = c
        if _dsatur_order_color(vertices, adj, limit, colors):
            return True
        del colors[v]
    return False


def _color_connected(vertices: list[int], adj: Sequence[int],
                     budget: int | None) -> dict[int, int]:
    """Optimal coloring of a graph that is connected with connected complement."""
    if len(vertices) == 1:
        return {vertices[0]: 1}
    if budget is not None and len(vertices) > budget:
        raise ResourceLimitError(
            f"exact coloring of a {len(vertices)}-vertex block exceeds the budget of {budget}")
    lower = _greedy_clique(vertices, adj)
    upper: dict[int, int] = {}
    _greedy_dsatur(vertices, adj, upper)
    best = upper
    for c in range(lower, max(upper.values())):
        colors: dict[int, int] = {}
        if _dsatur_order_color(vertices, adj, c, colors):
            best = colors
            break
    return best


def _greedy_dsatur(vertices: list[int], adj: Sequence[int], colors: dict[int, int]) -> None:
    for _ in vertices:
        uncolored = [v for v in vertices if v not in colors]
        v = min(uncolored, key=lambda x: (
            -len({colors[u] for u in _bits(adj[x]) if u in colors}),
            -bin(adj[x]).count("1"), x))
        used = {colors[u] for u in _bits(adj[v]) if u in colors}
        c = 1
        while c in used:
            c += 1
        colors[v] = c


def _color(vertices: list[int], adj: Sequence[int], co_adj: Sequence[int],
           budget: int | None) -> dict[int, int]:
    # chi of a disjoint union is the max over components; chi of a graph
    # join (components of the complement) is the sum
    comps = _components(vertices, adj)
    if len(comps) > 1:
        out: dict[int, int] = {}
        for comp in comps:
            out.update(_color(comp, adj, co_adj, budget))
        return out
    co_comps = _components(vertices, co_adj)
    if len(co_comps) > 1:
        out = {}
        offset = 0
        for comp in co_comps:
            part = _color(comp, adj, co_adj, budget)
            out.update({v: c + offset for v, c in part.items()})
            offset += max(part.values())
        return out
    return _color_connected(vertices, adj, budget)


def _normalize(assignment: list[int]) -> tuple[int, ...]:
    """Relabel colors in order of first appearance by vertex index."""
    relabel: dict[int, int] = {}
    for c in assignment:
        relabel.setdefault(c, len(relabel) + 1)
    return tuple(relabel[c] for c in assignment)


def chromatic_number_exact(graph: KneserGraph,
                           budget: int | None = DEFAULT_COLORING_BUDGET) -> tuple[int, Coloring]:
    """Exact chromatic number with a witness coloring.

    The graph is split into connected components and then into components of
    the complement (graph joins); each remaining block is solved by DSATUR
    backtracking with iterative deepening from a greedy clique bound.
    ``budget`` caps the vertex count of a block handed to the search.  The
    witness is deterministic and its colors are numbered by first appearance
    in vertex order.  The empty graph has chromatic number 0.
    """
    n = graph.order
    if n == 0:
        return 0, Coloring((), 0)
    full = (1 << n) - 1
    adj = graph.neighbors
    co_adj = tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(adj))
    colors = _color(list(range(n)), adj, co_adj, budget)
    assignment = _normalize([colors[v] for v in range(n)])
    chi = max(assignment)
    return chi, Coloring(assignment, chi)


def lovasz_kneser_chi(n: int, ell: int) -> int:
    """Chromatic number of the Kneser graph of ``ell``-subsets of an ``n``-set."""
    if not (isinstance(n, int) and isinstance(ell, int)) or not 1 <= ell <= n:
        raise InputError(f"need 1 <= ell <= n, got n={n}, ell={ell}")
    if 2 * ell <= n + 1:
        return n - 2 * ell + 2
    return 1


def sarkaria_index(K: SimplicialComplex, budget: int | None = DEFAULT_COLORING_BUDGET,
                   **nonface_options) -> int:
    """``m - χ(KG(nf(K))) - 1`` with ``m`` the ground-set size."""
    return sarkaria_details(K, budget, **nonface_options)[0]


def sarkaria_details(K: SimplicialComplex, budget: int | None = DEFAULT_COLORING_BUDGET,
                     **nonface_options) -> tuple[int, tuple[Face, ...], int]:
    """Sarkaria index together with the minimal non-faces and the chromatic number."""
    nf = minimal_non_faces(K, **nonface_options)
    chi, _ = chromatic_number_exact(kneser_graph(nf), budget)
    return K.size - chi - 1, nf, chi


def sind_polygon_coskeleton(m: int, k: int) -> int:
    if not isinstance(m, int) or m < 3 or k not in (0, 1, 2):
        raise InputError(f"need m >= 3 and k in 0..2, got m={m}, k={k}")
    if k == 0:
        return m - 3 if m % 2 == 0 else m - 2
    return m - 3 + k


def sind_simplex_coskeleton(n: int, k: int) -> int:
    if not isinstance(n, int) or n < 2 or not isinstance(k, int) or not 0 <= k <= n - 1:
        raise InputError(f"need n >= 2 and 0 <= k <= n-1, got n={n}, k={k}")
    if 2 * k <= n - 3:
        return 2 * k + 1
    if k <= n - 2:
        return n - 2
    return n - 1
