"""Immutable simple undirected graphs on dense integer ids.

Every graph carries ``labels``: for each local vertex id, the id it had in the
graph it was originally built as.  Deleting vertices or taking an induced
subgraph renumbers the survivors densely and composes the labels, so results
computed on a derived graph can always be reported in original ids.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import EmptyGraph, IdOutOfRange, OddCycle, SelfLoop

LEFT = 0
RIGHT = 1


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    labels: tuple[int, ...]

    @cached_property
    def edge_count(self) -> int:
        return sum(len(nb) for nb in self.adj) // 2

    @cached_property
    def adj_sets(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(nb) for nb in self.adj)

    @cached_property
    def _local_of(self) -> dict[int, int]:
        return {lab: v for v, lab in enumerate(self.labels)}

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj_sets[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def vertices(self) -> range:
        return range(self.n)

    def local(self, label: int) -> int:
        """Local id of the vertex whose original id is ``label``."""
        try:
            return self._local_of[label]
        except KeyError:
            raise IdOutOfRange(f"original id {label} not present") from None

    def original(self, vertices: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(self.labels[v] for v in vertices))

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def same_structure(self, other: "Graph") -> bool:
        """Equal vertex count and adjacency, ignoring labels."""
        return self.n == other.n and self.adj == other.adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def build_graph(n: int, edges: Iterable[tuple[int, int]], labels: Iterable[int] | None = None) -> Graph:
    """Normalize an edge list into a simple graph; duplicate edges collapse."""
    if n < 0:
        raise IdOutOfRange(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise IdOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    labels = tuple(range(n)) if labels is None else tuple(labels)
    if len(labels) != n:
        raise IdOutOfRange("label count does not match vertex count")
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs), labels)


def _check_ids(g: Graph, vs: Iterable[int]) -> set[int]:
    s = set(vs)
    for v in s:
        if not 0 <= v < g.n:
            raise IdOutOfRange(f"vertex {v} not in graph with n={g.n}")
    return s


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    keep = sorted(_check_ids(g, keep))
    index = {v: i for i, v in enumerate(keep)}
    adj = tuple(tuple(index[u] for u in g.adj[v] if u in index) for v in keep)
    return Graph(len(keep), adj, tuple(g.labels[v] for v in keep))


def delete_vertices(g: Graph, remove: Iterable[int]) -> Graph:
    remove = _check_ids(g, remove)
    if not remove:
        return g
    return induced_subgraph(g, (v for v in range(g.n) if v not in remove))


def delete_original(g: Graph, remove: Iterable[int]) -> Graph:
    """Delete vertices given by original id."""
    return delete_vertices(g, (g.local(x) for x in remove))


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise EmptyGraph("minimum degree of the empty graph")
    return min(len(nb) for nb in g.adj)


def components(g: Graph, within: Iterable[int] | None = None) -> list[tuple[int, ...]]:
    """Connected components as sorted tuples, ordered by smallest member.

    ``within`` restricts the search to the subgraph induced by those vertices.
    """
    allowed = None if within is None else set(within)
    seen = set()
    out = []
    for s in range(g.n) if allowed is None else sorted(allowed):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y not in seen and (allowed is None or y in allowed):
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        out.append(tuple(sorted(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


@dataclass(frozen=True)
class Bipartition:
    side: tuple[int, ...]

    @property
    def left(self) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.side) if s == LEFT)

    @property
    def right(self) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.side) if s == RIGHT)


def two_color(g: Graph) -> Bipartition:
    """Canonical 2-coloring: the lowest id of every component goes Left.

    Raises ``OddCycle`` carrying one odd cycle when the graph is not bipartite.
    """
    side = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = LEFT
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if side[y] == -1:
                    side[y] = 1 - side[x]
                    parent[y] = x
                    queue.append(y)
                elif side[y] == side[x]:
                    raise OddCycle(_odd_cycle(parent, x, y))
    return Bipartition(tuple(side))


def _odd_cycle(parent: list[int], x: int, y: int) -> list[int]:
    # x and y are joined by an edge and sit at the same BFS depth parity
    px = [x]
    while parent[px[-1]] != -1:
        px.append(parent[px[-1]])
    py = [y]
    while parent[py[-1]] != -1:
        py.append(parent[py[-1]])
    on_x = {v: i for i, v in enumerate(px)}
    j = 0
    while py[j] not in on_x:
        j += 1
    lca = py[j]
    return px[: on_x[lca] + 1] + list(reversed(py[:j]))


def is_bipartite(g: Graph) -> bool:
    try:
        two_color(g)
    except OddCycle:
        return False
    return True


# small named graphs used throughout tests and demos

def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
