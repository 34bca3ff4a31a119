"""Vertex connectivity, minimum separators, fragments and ends.

Local connectivity between two non-adjacent vertices is a unit-capacity max
flow on the vertex-split digraph (each vertex x becomes ``x_in -> x_out`` with
capacity one).  Global connectivity follows the Even / Esfahanian-Hakimi
scheme: fix a minimum-degree vertex v and take the minimum over v against each
non-neighbour and over every non-adjacent pair of neighbours of v.

All minimum separators are enumerated from the same flows: for every pair
whose local connectivity equals kappa, start from the minimum cut closest to
s and branch by pushing single separator vertices onto the source side.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import CompleteGraph, EmptyGraph, HypothesisNotMet, NotASeparator, TooLargeForEnumeration
from .graph import Graph, components, is_bipartite, min_degree

ENUMERATION_LIMIT = 20
_INF = 1 << 30
# guards against pathological separator counts; far above anything desk-scale
_MAX_CUTS = 200_000


@dataclass(frozen=True)
class Separator:
    vertices: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Fragment:
    vertices: tuple[int, ...]
    separator: Separator
    complementary: tuple[int, ...]
    is_component: bool = True


@dataclass(frozen=True)
class EndReport:
    end: Fragment
    witnesses: tuple[Separator, ...]


@dataclass
class Lemma1Report:
    holds: bool
    violation: tuple | None = None  # (end vertices, separator vertices, common vertex)
    ends_checked: int = 0
    separators_checked: int = 0


# ---------------------------------------------------------------- flow network


class _Network:
    """Vertex-split digraph of ``g``; arcs ``2i`` and ``2i+1`` are mutual reverses."""

    __slots__ = ("size", "head", "to", "cap")

    def __init__(self, g: Graph):
        self.size = 2 * g.n
        self.head = [[] for _ in range(self.size)]
        self.to = []
        self.cap = []
        for x in range(g.n):
            self._arc(2 * x, 2 * x + 1, 1)
        for x, y in g.edges():
            self._arc(2 * x + 1, 2 * y, _INF)
            self._arc(2 * y + 1, 2 * x, _INF)

    def _arc(self, a, b, c):
        self.head[a].append(len(self.to))
        self.to.append(b)
        self.cap.append(c)
        self.head[b].append(len(self.to))
        self.to.append(a)
        self.cap.append(0)


@lru_cache(maxsize=4096)
def _network(g: Graph) -> _Network:
    return _Network(g)


def _max_flow(g: Graph, s, t: int, limit: int) -> tuple[int, list[int]]:
    """Vertex-disjoint paths from ``s`` (a vertex or a set of vertices) to ``t``,
    stopping once ``limit`` are found.

    Returns the flow value and the residual capacities.
    """
    net = _network(g)
    cap = list(net.cap)
    head, to = net.head, net.to
    sources = [2 * s + 1] if isinstance(s, int) else [a for x in s for a in (2 * x, 2 * x + 1)]
    sink = 2 * t
    flow = 0
    while flow < limit:
        pred = [-1] * net.size
        for a in sources:
            pred[a] = -2
        queue = deque(sources)
        found = False
        while queue and not found:
            a = queue.popleft()
            for e in head[a]:
                b = to[e]
                if cap[e] > 0 and pred[b] == -1:
                    pred[b] = e
                    if b == sink:
                        found = True
                        break
                    queue.append(b)
        if not found:
            break
        b = sink
        while pred[b] != -2:
            e = pred[b]
            cap[e] -= 1
            cap[e ^ 1] += 1
            b = to[e ^ 1]
        flow += 1
    return flow, cap


def local_connectivity(g: Graph, s: int, t: int, limit: int | None = None) -> int:
    """Maximum number of internally disjoint s-t paths (s, t non-adjacent)."""
    if s == t or g.has_edge(s, t):
        raise ValueError("local connectivity needs two distinct non-adjacent vertices")
    return _max_flow(g, s, t, g.n if limit is None else limit)[0]


def _witness_pairs(g: Graph):
    v = min(range(g.n), key=lambda x: (g.degree(x), x))
    nb = g.adj_sets[v]
    for w in range(g.n):
        if w != v and w not in nb:
            yield (v, w) if v < w else (w, v)
    for x, y in combinations(g.adj[v], 2):
        if not g.has_edge(x, y):
            yield x, y


def kappa(g: Graph, limit: int | None = None) -> int:
    """Vertex connectivity; ``n - 1`` for complete graphs, 0 when disconnected.

    With ``limit`` the answer is ``min(kappa, limit)``, which is cheaper.
    """
    if g.n == 0:
        raise EmptyGraph("connectivity of the empty graph")
    if g.is_complete():
        best = g.n - 1
        return best if limit is None else min(best, limit)
    best = min_degree(g)
    if limit is not None:
        best = min(best, limit)
    for s, t in _witness_pairs(g):
        if best == 0:
            break
        best = min(best, _max_flow(g, s, t, best)[0])
    return best


def kappa_at_least(g: Graph, k: int) -> bool:
    if g.n == 0:
        return k <= 0
    return kappa(g, limit=k) >= k


# ----------------------------------------------------------------- separators


def _closest_cut(g: Graph, source: frozenset, t: int, k: int):
    """Minimum cut nearest to ``source`` when the source-to-t connectivity is k.

    Returns (separator, vertices fully on the source side) or None when more
    than k disjoint paths exist.
    """
    value, cap = _max_flow(g, source, t, k + 1)
    if value != k:
        return None
    net = _network(g)
    seen = {a for x in source for a in (2 * x, 2 * x + 1)}
    stack = list(seen)
    while stack:
        a = stack.pop()
        for e in net.head[a]:
            if cap[e] > 0:
                b = net.to[e]
                if b not in seen:
                    seen.add(b)
                    stack.append(b)
    sep = tuple(x for x in range(g.n) if 2 * x in seen and 2 * x + 1 not in seen)
    side = frozenset(x for x in range(g.n) if 2 * x + 1 in seen)
    return sep, side


def _min_cuts_between(g: Graph, s: int, t: int, k: int):
    """Every minimum s-t vertex separator, when the local connectivity is k.

    Starts from the cut closest to s and repeatedly forces one separator
    vertex onto the source side; every minimum cut is reached because the
    closest cut for a source set lies between that set and any other
    minimum cut containing it.
    """
    t_nb = g.adj_sets[t]
    found = set()
    first = _closest_cut(g, frozenset([s]), t, k)
    if first is None:
        return found
    seen_sides = {first[1]}
    todo = [first]
    while todo:
        sep, side = todo.pop()
        found.add(sep)
        if len(found) > _MAX_CUTS:
            raise TooLargeForEnumeration("too many minimum cuts to enumerate")
        for v in sep:
            if v in t_nb:
                continue
            nxt = _closest_cut(g, side | {v}, t, k)
            if nxt is not None and nxt[1] not in seen_sides:
                seen_sides.add(nxt[1])
                todo.append(nxt)
    return found


def separates(g: Graph, vertices) -> bool:
    vs = set(vertices)
    rest = [v for v in range(g.n) if v not in vs]
    return len(components(g, within=rest)) >= 2


def min_separators(g: Graph, limit: int | None = ENUMERATION_LIMIT) -> list[Separator]:
    """Every separating set of size kappa(g), sorted by vertex tuple."""
    if g.is_complete():
        raise CompleteGraph("complete graphs have no separating set")
    if limit is not None and g.n > limit:
        raise TooLargeForEnumeration(f"n={g.n} exceeds enumeration limit {limit}")
    k = kappa(g)
    if k == 0:
        return [Separator(())]
    found = set()
    for s, t in _witness_pairs(g):
        found |= _min_cuts_between(g, s, t, k)
    seps = []
    for cut in sorted(found):
        if len(cut) != k or not separates(g, cut):
            raise AssertionError(f"flow enumeration produced a non-separator {cut}")
        seps.append(Separator(cut))
    return seps


# ------------------------------------------------------------ fragments, ends


def fragments(g: Graph, sep: Separator) -> list[Fragment]:
    """Unions of components of g - S that leave a nonempty complement."""
    s = set(sep.vertices)
    comps = components(g, within=[v for v in range(g.n) if v not in s])
    if len(comps) < 2:
        raise NotASeparator(f"{sep.vertices} does not separate the graph")
    out = []
    everything = set().union(*map(set, comps))
    for r in range(1, len(comps)):
        for chosen in combinations(comps, r):
            members = tuple(sorted(v for c in chosen for v in c))
            comp = tuple(sorted(everything - set(members)))
            out.append(Fragment(members, sep, comp, is_component=(r == 1)))
    out.sort(key=lambda f: (len(f.vertices), f.vertices))
    return out


def neighborhood(g: Graph, vertices) -> tuple[int, ...]:
    vs = set(vertices)
    return tuple(sorted({u for v in vs for u in g.adj[v]} - vs))


def ends(g: Graph, limit: int | None = ENUMERATION_LIMIT, separators: list[Separator] | None = None) -> list[EndReport]:
    """Inclusion-minimal fragments over all minimum separators.

    Every end is a single component of g - S for some minimum S, so only
    components are collected.  Order: smallest first, then by vertex tuple.
    """
    seps = min_separators(g, limit) if separators is None else separators
    owners: dict[tuple[int, ...], list[Separator]] = {}
    for sep in seps:
        s = set(sep.vertices)
        for comp in components(g, within=[v for v in range(g.n) if v not in s]):
            owners.setdefault(comp, []).append(sep)
    cands = sorted(owners, key=lambda c: (len(c), c))
    minimal = []
    for c in cands:
        cs = set(c)
        if not any(set(m) < cs for m in minimal):
            minimal.append(c)
    reports = []
    for c in minimal:
        sep = owners[c][0]
        cs = set(c) | set(sep.vertices)
        comp = tuple(v for v in range(g.n) if v not in cs)
        reports.append(EndReport(Fragment(c, sep, comp), tuple(owners[c])))
    return reports


def lemma1_holds(g: Graph, k: int, limit: int | None = ENUMERATION_LIMIT) -> Lemma1Report:
    """Check that no end meets any minimum separator.

    Hypotheses: bipartite, kappa(g) == k, min degree >= k + 1.
    """
    if not is_bipartite(g):
        raise HypothesisNotMet("bipartite")
    if g.n == 0:
        raise HypothesisNotMet("kappa", "empty graph")
    kap = kappa(g)
    if kap != k:
        raise HypothesisNotMet("kappa", f"kappa={kap} != k={k}")
    delta = min_degree(g)
    if delta < k + 1:
        raise HypothesisNotMet("min_degree", f"delta={delta} < k+1={k + 1}")
    seps = min_separators(g, limit)
    reports = ends(g, limit, separators=seps)
    for rep in reports:
        members = set(rep.end.vertices)
        for sep in seps:
            common = members.intersection(sep.vertices)
            if common:
                return Lemma1Report(False, (rep.end.vertices, sep.vertices, min(common)), len(reports), len(seps))
    return Lemma1Report(True, None, len(reports), len(seps))
