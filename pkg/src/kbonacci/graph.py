"""Grid graphs of bargraph polyominoes: cell corners are vertices, cell
sides are edges.  All vertices have degree 2, 3 or 4.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polyomino import Polyomino, cell_sides, cells

Vertex = tuple[int, int]
Edge = tuple[Vertex, Vertex]

_UNDECIDED, _IN, _OUT = 0, 1, 2


@dataclass(frozen=True)
class GridGraph:
    vertices: frozenset[Vertex]
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if u not in self.vertices or v not in self.vertices:
                raise ValueError("edge endpoint outside the vertex set")

    def adjacency(self) -> dict[Vertex, list[Vertex]]:
        adj: dict[Vertex, list[Vertex]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for nbrs in adj.values():
            nbrs.sort()
        return adj


def build_graph(p: Polyomino) -> GridGraph:
    """Vertices = corners of every cell, edges = sides of every cell."""
    verts: set[Vertex] = set()
    edges: set[Edge] = set()
    for cell in cells(p):
        x, y = cell
        verts.update([(x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)])
        edges.update(cell_sides(cell))
    return GridGraph(frozenset(verts), frozenset(edges))


def vertex_count_closed(p: Polyomino) -> int:
    """Fast path: 2(n+1) + (number of 1's) + (number of maximal 1-runs)."""
    w = [h - 1 for h in p.heights]
    ones = sum(w)
    runs = 0
    prev = 0
    for b in w:
        if b and not prev:
            runs += 1
        prev = b
    return 2 * (len(w) + 1) + ones + runs


def degree_profile(g: GridGraph) -> tuple[int, int, int]:
    """Counts of vertices of degree 2, 3 and 4."""
    counts = [0] * 5
    for v, nbrs in g.adjacency().items():
        d = len(nbrs)
        if d < 2 or d > 4:
            raise ValueError(f"vertex {v} has degree {d}, outside {{2,3,4}}")
        counts[d] += 1
    return counts[2], counts[3], counts[4]


def mirrored(g: GridGraph) -> GridGraph:
    """The graph reflected by x -> n - x (the reverse word's graph)."""
    n = max(x for x, _ in g.vertices)

    def flip(v: Vertex) -> Vertex:
        return (n - v[0], v[1])

    verts = frozenset(flip(v) for v in g.vertices)
    edges = frozenset(tuple(sorted((flip(u), flip(v)))) for u, v in g.edges)
    return GridGraph(verts, edges)


def grid_hamiltonian_rule(m: int, n: int) -> bool:
    """Whether the grid graph on an m x n vertex array has a Hamiltonian
    cycle: true iff m*n is even, or m = n = 1."""
    return (m * n) % 2 == 0 or (m == 1 and n == 1)


def is_hamiltonian(g: GridGraph) -> bool:
    """Decide Hamiltonicity by backtracking with forced-edge propagation.

    Both edges at a degree-2 vertex are forced into the cycle; a vertex
    that reaches two chosen edges excludes its remaining ones; closing a
    cycle before all vertices are covered is a dead end.  Branching
    follows the fixed edge order (sorted endpoint pairs), chosen-first,
    so the search is deterministic.
    """
    n = len(g.vertices)
    if n < 3:
        raise ValueError("Hamiltonicity needs at least 3 vertices")
    edges: list[Edge] = sorted(g.edges)
    incident: dict[Vertex, list[int]] = {v: [] for v in g.vertices}
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)

    def solve(state: list[int], in_cnt: dict[Vertex, int], und_cnt: dict[Vertex, int],
              chain_end: dict[Vertex, Vertex], in_total: int,
              pending: list[tuple[int, int]]) -> bool:
        while pending:
            e, val = pending.pop()
            if state[e] != _UNDECIDED:
                if state[e] != val:
                    return False
                continue
            state[e] = val
            u, v = edges[e]
            und_cnt[u] -= 1
            und_cnt[v] -= 1
            if val == _IN:
                in_cnt[u] += 1
                in_cnt[v] += 1
                if in_cnt[u] > 2 or in_cnt[v] > 2:
                    return False
                eu = chain_end.get(u, u)
                ev = chain_end.get(v, v)
                if eu == v:  # u, v are the two ends of one forced path
                    if in_total + 1 != n:
                        return False  # premature subcycle
                else:
                    chain_end[eu] = ev
                    chain_end[ev] = eu
                in_total += 1
            for w in (u, v):
                have = in_cnt[w]
                if have + und_cnt[w] < 2:
                    return False
                if have == 2:
                    pending.extend((f, _OUT) for f in incident[w] if state[f] == _UNDECIDED)
                elif have + und_cnt[w] == 2:
                    pending.extend((f, _IN) for f in incident[w] if state[f] == _UNDECIDED)

        try:
            branch = state.index(_UNDECIDED)
        except ValueError:
            return in_total == n and all(c == 2 for c in in_cnt.values())
        for val in (_IN, _OUT):
            if solve(list(state), dict(in_cnt), dict(und_cnt), dict(chain_end),
                     in_total, [(branch, val)]):
                return True
        return False

    state = [_UNDECIDED] * len(edges)
    in_cnt = {v: 0 for v in g.vertices}
    und_cnt = {v: len(incident[v]) for v in g.vertices}
    seeds = [(e, _IN) for v in g.vertices if len(incident[v]) == 2 for e in incident[v]]
    return solve(state, in_cnt, und_cnt, {}, 0, seeds)


def to_dot(g: GridGraph, name: str = "G") -> str:
    """DOT rendering for external graph viewers."""
    lines = [f"graph {name} {{"]
    for x, y in sorted(g.vertices):
        lines.append(f'  "{x},{y}" [pos="{x},{y}!"];')
    for (ux, uy), (vx, vy) in sorted(g.edges):
        lines.append(f'  "{ux},{uy}" -- "{vx},{vy}";')
    lines.append("}")
    return "\n".join(lines)


def to_json_dict(word_text: str, g: GridGraph, hamiltonian: bool | None) -> dict:
    d2, d3, d4 = degree_profile(g)
    return {
        "word": word_text,
        "vertices": len(g.vertices),
        "edges": len(g.edges),
        "deg": [d2, d3, d4],
        "hamiltonian": hamiltonian,
    }
