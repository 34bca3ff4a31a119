"""Constructive search for a connectivity-keeping spider.

The run deletes a path ``v1 v2 ...`` from the host one vertex at a time.
Every deletion keeps the remainder k-connected. When kappa(G) == k, each
vertex is taken from an end of the current graph, nested inside the previous
end and adjacent to the previous vertex. When kappa(G) > k, a shortest path
that brings kappa down to exactly k comes first, and the nested-end phase
starts from there. The loop stops the first time the remainder has minimum
degree k. The last deletion is then swapped for a root vertex u that has
many neighbours on the path, which gives a W subgraph (path plus root).
The spider is then embedded in W, or in the first prefix of the path whose
induced subgraph has a vertex of degree at least w.

Every candidate is run through ``check_certificate`` before it is returned.
If the constructive route fails, the loop keeps extending the path and
searching small induced subgraphs. The exhaustive oracle is the last resort
and is disabled in strict mode.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from itertools import islice

from .connectivity import ends, kappa, kappa_at_least, min_separators
from .errors import HypothesisNotMet, NoCertificate, ProcedureStuck
from .graph import Graph, delete_original, induced_subgraph, is_bipartite, min_degree
from .oracle import oracle_extract
from .spider import Embedding, Spider, WGraph, embed_spider, embed_spider_in_w, w_graph

log = logging.getLogger(__name__)

# trace gap codes: places where the constructive argument needed help
GAP_STUCK = "procedure_stuck"
GAP_DELTA_G0 = "delta_g0_below_k_plus_1"
GAP_ROOT_RULE = "root_rule_failed"
GAP_SHORT_PATH = "short_path"
GAP_EMBEDDING = "embedding_failure"
GAP_PATH_SEARCH = "path_search_not_shortest"


@dataclass
class ExtractConfig:
    enumeration_limit: int | None = 48
    path_search_budget: int = 40  # search states visited per deepening level
    embed_tries: int = 200
    extension_steps: int = 24
    root_search_limit: int = 40
    strict_paper: bool = False


@dataclass
class Step:
    vertex: int
    kappa: int
    delta: int
    guided: bool


@dataclass
class Trace:
    """Deletion history in original ids; checkable without the extractor."""

    deleted_path: list[int] = field(default_factory=list)
    end_sequence: list[tuple[int, ...]] = field(default_factory=list)
    end_separators: list[tuple[int, ...]] = field(default_factory=list)
    pre_deletion_path: tuple[int, ...] = ()
    root_vertex: int | None = None
    root_rule: str = ""
    stop_index: int | None = None
    steps: list[Step] = field(default_factory=list)
    case: str = ""
    route: str = ""
    gaps: list[str] = field(default_factory=list)

    def note(self, gap: str) -> None:
        if gap not in self.gaps:
            self.gaps.append(gap)

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "route": self.route,
            "deleted_path": list(self.deleted_path),
            "steps": [[s.vertex, s.kappa, s.delta, int(s.guided)] for s in self.steps],
            "pre_deletion_path": list(self.pre_deletion_path),
            "end_sequence": [list(e) for e in self.end_sequence],
            "end_separators": [list(s) for s in self.end_separators],
            "stop_index": self.stop_index,
            "root_vertex": self.root_vertex,
            "root_rule": self.root_rule,
            "gaps": list(self.gaps),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Trace":
        return cls(
            deleted_path=list(d["deleted_path"]),
            end_sequence=[tuple(e) for e in d["end_sequence"]],
            end_separators=[tuple(s) for s in d["end_separators"]],
            pre_deletion_path=tuple(d["pre_deletion_path"]),
            root_vertex=d["root_vertex"],
            root_rule=d["root_rule"],
            stop_index=d["stop_index"],
            steps=[Step(v, kp, dl, bool(gd)) for v, kp, dl, gd in d["steps"]],
            case=d["case"],
            route=d["route"],
            gaps=list(d["gaps"]),
        )


@dataclass
class WSubgraph:
    """A W graph placed in the host: ``path[i]`` carries v_i, ``root`` carries u."""

    wgraph: WGraph
    path: tuple[int, ...]
    root: int

    def host_id(self, wid: int) -> int:
        return self.root if wid == self.wgraph.t else self.path[wid]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.path + (self.root,)))


@dataclass
class Certificate:
    embedding: Embedding  # original host ids
    k: int
    spider: Spider
    trace: Trace
    via_oracle: bool = False

    @property
    def image(self) -> tuple[int, ...]:
        return self.embedding.image


def check_hypotheses(g: Graph, k: int, w: int) -> None:
    if k < 1:
        raise HypothesisNotMet("k", f"k={k} must be positive")
    if g.n == 0:
        raise HypothesisNotMet("kappa", "empty graph")
    if not is_bipartite(g):
        raise HypothesisNotMet("bipartite")
    if not kappa_at_least(g, k):
        raise HypothesisNotMet("kappa", f"kappa < {k}")
    delta = min_degree(g)
    if delta < k + w:
        raise HypothesisNotMet("min_degree", f"delta={delta} < k+w={k + w}")


class _Run:
    """State of one deletion loop over a fixed host."""

    def __init__(self, g: Graph, k: int, w: int, config: ExtractConfig):
        self.g, self.k, self.w, self.cfg = g, k, w, config
        self.trace = Trace()
        self._kappa_cache: dict[frozenset, int] = {}
        self.last_end: tuple[int, ...] | None = None
        self.nested = True  # false once an unguided step breaks the end chain

    # -- helpers on remainders, all in original ids
    def remainder(self, removed) -> Graph:
        return delete_original(self.g, removed)

    def kappa_of(self, removed) -> int:
        key = frozenset(removed)
        if key not in self._kappa_cache:
            h = self.remainder(key)
            self._kappa_cache[key] = kappa(h) if h.n else 0
        return self._kappa_cache[key]

    def keeps(self, removed) -> bool:
        key = frozenset(removed)
        if key in self._kappa_cache:
            return self._kappa_cache[key] >= self.k
        h = self.remainder(key)
        return h.n > 0 and kappa_at_least(h, self.k)

    def ends_of(self, removed) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """(end, separator) pairs of G - removed, original ids, canonical order."""
        h = self.remainder(removed)
        if h.n == 0 or h.is_complete():
            return []
        out = []
        for rep in ends(h, self.cfg.enumeration_limit):
            out.append((h.original(rep.end.vertices), h.original(rep.end.separator.vertices)))
        return out

    def push(self, v: int, guided: bool, end=None, sep=None) -> None:
        tr = self.trace
        tr.deleted_path.append(v)
        h = self.remainder(tr.deleted_path)
        tr.steps.append(Step(v, self.kappa_of(tr.deleted_path), min_degree(h) if h.n else 0, guided))
        if guided:
            tr.end_sequence.append(end)
            tr.end_separators.append(sep)
            self.last_end = end
        else:
            self.nested = False

    # -- kappa > k: shortest path down to kappa == k
    def _separator_vertices(self, removed) -> set[int]:
        h = self.remainder(removed)
        if h.n == 0 or h.is_complete():
            return set()
        return {h.labels[v] for sep in min_separators(h, self.cfg.enumeration_limit) for v in sep.vertices}

    def _path_search(self, limit: int, budget: int) -> tuple[list[int] | None, bool]:
        """Depth-first search for a path of at most ``limit`` vertices whose
        removal leaves kappa exactly k, never dropping below k on the way.

        Vertices lying in a minimum separator of the current remainder (the
        ones whose deletion lowers kappa) are tried first.  Returns (path or
        None, whether the budget of visited states ran out).
        """
        g, k = self.g, self.k
        path: list[int] = []
        left = [budget]

        def dfs():
            if left[0] <= 0:
                return False
            left[0] -= 1
            kap = self.kappa_of(path)
            if path and kap == k:
                return True
            if kap < k or len(path) >= limit or kap - (limit - len(path)) > k:
                return False
            if path:
                cands = [g.labels[y] for y in g.adj[g.local(path[-1])] if g.labels[y] not in path]
            else:
                cands = list(g.labels)
            hot = self._separator_vertices(path)
            cands.sort(key=lambda c: (c not in hot, c))
            for c in cands:
                path.append(c)
                if dfs():
                    return True
                path.pop()
                if left[0] <= 0:
                    return False
            return False

        found = dfs()
        return (list(path) if found else None), left[0] <= 0

    def shortest_reducing_path(self) -> list[int]:
        kap0 = self.kappa_of(())
        greedy, _ = self._path_search(self.g.n, 20 * self.cfg.path_search_budget)
        if greedy is None:
            self.trace.note(GAP_STUCK)
            raise ProcedureStuck("no path brings connectivity down to k", self.trace)
        for s in range(kap0 - self.k, len(greedy)):
            found, exhausted = self._path_search(s, self.cfg.path_search_budget)
            if found is not None:
                return found
            if exhausted:
                self.trace.note(GAP_PATH_SEARCH)
        return greedy

    # -- nested end steps
    def guided_step(self) -> bool:
        """Delete the next vertex from a nested end; False if none qualifies."""
        tr = self.trace
        prev = tr.deleted_path[-1] if tr.deleted_path else None
        prev_nb = None if prev is None else {self.g.labels[y] for y in self.g.adj[self.g.local(prev)]}
        for end, sep in self.ends_of(tr.deleted_path):
            if self.last_end is not None and not set(end) < set(self.last_end):
                continue
            cands = [v for v in end if prev_nb is None or v in prev_nb]
            for v in cands:
                if self.keeps(tr.deleted_path + [v]):
                    self.push(v, True, end, sep)
                    return True
        return False

    def unguided_step(self) -> bool:
        tr = self.trace
        if not tr.deleted_path:
            return False
        prev = tr.deleted_path[-1]
        for y in self.g.adj[self.g.local(prev)]:
            v = self.g.labels[y]
            if v not in tr.deleted_path and self.keeps(tr.deleted_path + [v]):
                self.push(v, False)
                return True
        return False

    def delta_hit(self) -> bool:
        return self.trace.steps[-1].delta <= self.k

    def run_to_stop(self) -> None:
        """Deletion loop up to the first remainder with minimum degree k."""
        tr = self.trace
        kap0 = self.kappa_of(())
        if kap0 > self.k:
            tr.case = "kappa_gt_k"
            pre = self.shortest_reducing_path()
            for v in pre:
                self.push(v, False)
            self.nested = True
            tr.pre_deletion_path = tuple(pre)
            if self.delta_hit():
                tr.note(GAP_DELTA_G0)
                tr.stop_index = len(tr.deleted_path)
                return
        else:
            tr.case = "kappa_eq_k"
        while True:
            if not self.guided_step():
                tr.note(GAP_STUCK)
                raise ProcedureStuck("no neighbour of the last vertex lies in a nested end", tr)
            if self.delta_hit():
                tr.stop_index = len(tr.deleted_path)
                return

    def extend(self) -> bool:
        if self.nested and self.guided_step():
            return True
        return self.unguided_step()

    # -- root selection
    def root_candidates(self, j: int):
        tr = self.trace
        g, k = self.g, self.k
        pj = tr.deleted_path[:j]
        last = pj[-1]
        h = self.remainder(pj)
        seen = set()
        by_end = []
        end_chain = self.last_end
        for end, _ in self.ends_of(pj):
            if end_chain is not None and not set(end) <= set(end_chain) - {last}:
                continue
            for u in end:
                if h.degree(h.local(u)) == k and u not in seen:
                    by_end.append(u)
                    seen.add(u)
        for u in by_end:
            yield u, "end_degree"
        yield last, "last_deleted"
        seen.add(last)
        on_path = set(pj)
        rest = []
        for x in range(h.n):
            u = h.labels[x]
            if u in seen:
                continue
            hits = sum(1 for y in g.adj[g.local(u)] if g.labels[y] in on_path)
            rest.append((-hits, u))
        rest.sort()
        for _, u in rest[: self.cfg.root_search_limit]:
            yield u, "search"

    def select_root(self, j: int) -> WSubgraph | None:
        tr = self.trace
        g = self.g
        pt = tr.deleted_path[: j - 1]
        index = {v: i for i, v in enumerate(pt)}
        for u, rule in self.root_candidates(j):
            attach = [index[g.labels[y]] for y in g.adj[g.local(u)] if g.labels[y] in index]
            if len(attach) < self.w - 1:
                continue
            if rule != "last_deleted" and not self.keeps(pt + [u]):
                continue
            wg = w_graph(len(pt), attach, self.w)
            tr.root_vertex = u
            tr.root_rule = rule
            if rule != "end_degree":
                tr.note(GAP_ROOT_RULE)
            return WSubgraph(wg, tuple(pt), u)
        return None

    def trivial_w(self) -> WSubgraph:
        """w == 1: any single vertex lying in no minimum separator."""
        tr = self.trace
        kap0 = self.kappa_of(())
        if kap0 > self.k:
            tr.case = "kappa_gt_k"
            v = self.g.labels[0]
            self.push(v, False)
        else:
            tr.case = "kappa_eq_k"
            if not self.guided_step():
                tr.note(GAP_STUCK)
                raise ProcedureStuck("no end vertex keeps connectivity", tr)
        tr.stop_index = 1
        tr.root_vertex = tr.deleted_path[0]
        tr.root_rule = "end_degree"
        return WSubgraph(w_graph(0, (), 1), (), tr.deleted_path[0])


def _extract_w(g: Graph, k: int, w: int, config: ExtractConfig) -> tuple[WSubgraph, _Run]:
    run = _Run(g, k, w, config)
    if w <= 1:
        return run.trivial_w(), run
    run.run_to_stop()
    ws = run.select_root(run.trace.stop_index)
    if ws is None:
        run.trace.note(GAP_STUCK)
        raise ProcedureStuck("no root vertex with enough path neighbours", run.trace)
    return ws, run


def extract_w(g: Graph, k: int, w: int, config: ExtractConfig | None = None) -> tuple[WSubgraph, Trace]:
    """Find a W subgraph whose removal leaves a k-connected graph.

    Raises HypothesisNotMet, or ProcedureStuck (carrying the partial trace)
    when the end-deletion loop cannot continue.
    """
    config = config or ExtractConfig()
    check_hypotheses(g, k, w)
    ws, run = _extract_w(g, k, w, config)
    return ws, run.trace


# ----------------------------------------------------------------- verifier


@dataclass
class CheckResult:
    ok: bool
    reason: str = "OK"

    def __bool__(self) -> bool:
        return self.ok


def _legs_of_tree(m: int, edges: list[tuple[int, int]]):
    """Isomorphism key of a tree given by its edges: ('path', m) or ('spider', legs)."""
    nb: dict[int, list[int]] = {}
    for a, b in edges:
        nb.setdefault(a, []).append(b)
        nb.setdefault(b, []).append(a)
    if m == 1:
        return ("path", 1)
    hubs = [v for v, ns in nb.items() if len(ns) >= 3]
    if not hubs:
        return ("path", m)
    if len(hubs) > 1:
        return ("other", len(hubs))
    root = hubs[0]
    legs = []
    for first in nb[root]:
        length, prev, cur = 1, root, first
        while len(nb[cur]) == 2:
            prev, cur = cur, next(x for x in nb[cur] if x != prev)
            length += 1
        legs.append(length)
    return ("spider", tuple(sorted(legs, reverse=True)))


def check_certificate(g: Graph, k: int, spider: Spider, cert: Certificate) -> CheckResult:
    """Trusted check of a certificate using only the graph and connectivity code.

    The trace is ignored; the embedded image alone must be an injective,
    edge-preserving copy of the spider whose removal keeps kappa >= k.
    """
    if cert.k != k:
        return CheckResult(False, "WrongK")
    if tuple(sorted(cert.spider.legs, reverse=True)) != tuple(sorted(spider.legs, reverse=True)):
        return CheckResult(False, "SpiderMismatch")
    vm = cert.embedding.vertex_map
    m = 1 + sum(spider.legs)
    if len(vm) != m:
        return CheckResult(False, "WrongOrder")
    present = set(g.labels)
    if any(v not in present for v in vm):
        return CheckResult(False, "UnknownVertex")
    if len(set(vm)) != len(vm):
        return CheckResult(False, "NotInjective")
    edges = []
    nxt = 1
    for length in sorted(spider.legs, reverse=True):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    for a, b in edges:
        if not g.has_edge(g.local(vm[a]), g.local(vm[b])):
            return CheckResult(False, "NotEdgePreserving")
    image_edges = [(vm[a], vm[b]) for a, b in edges]
    want = ("path", m) if len(spider.legs) <= 2 else ("spider", tuple(sorted(spider.legs, reverse=True)))
    if _legs_of_tree(m, image_edges) != want:
        return CheckResult(False, "NotIsomorphic")
    rest = delete_original(g, vm)
    if rest.n == 0 or kappa(rest, limit=k) < k:
        return CheckResult(False, "ConnectivityDrop")
    return CheckResult(True)


# ------------------------------------------------------------ spider search


def _remainder_degree_ok(g: Graph, image, k: int) -> bool:
    img = set(image)
    for v in range(g.n):
        lab = g.labels[v]
        if lab in img:
            continue
        if sum(1 for y in g.adj[v] if g.labels[y] not in img) < k:
            return False
    return True


class _Attempt:
    """Shared bookkeeping for candidate certificates of one extraction."""

    def __init__(self, g, k, spider, trace, config):
        self.g, self.k, self.spider, self.trace, self.cfg = g, k, spider, trace, config

    def accept(self, emb: Embedding, route: str) -> Certificate | None:
        if not _remainder_degree_ok(self.g, emb.vertex_map, self.k):
            return None
        self.trace.route = route
        cert = Certificate(emb, self.k, self.spider, self.trace)
        if check_certificate(self.g, self.k, self.spider, cert):
            return cert
        return None

    def search_in(self, vertices, route: str, roots=None) -> Certificate | None:
        """Try embeddings of the spider inside G[vertices] (original ids)."""
        sub = induced_subgraph(self.g, [self.g.local(v) for v in vertices])
        if sub.n < self.spider.m:
            return None
        root_ids = None if roots is None else [sub.local(r) for r in roots if r in set(sub.labels)]
        for emb in islice(embed_spider(sub, self.spider, root_ids), self.cfg.embed_tries):
            cert = self.accept(emb.relabel(sub.labels), route)
            if cert is not None:
                return cert
        return None


def _theorem_route(att: _Attempt, ws: WSubgraph, w: int) -> Certificate | None:
    g, spider = att.g, att.spider
    members = ws.vertices
    sub = induced_subgraph(g, [g.local(v) for v in members])
    deg_in_w = {sub.labels[x]: sub.degree(x) for x in range(sub.n)}
    if all(deg_in_w[v] <= w for v in ws.path):
        emb = embed_spider_in_w(ws.wgraph, spider)
        if emb is not None:
            cert = att.accept(Embedding(tuple(ws.host_id(x) for x in emb.vertex_map)), "w_embedding")
            if cert is not None:
                return cert
        if spider.m > ws.wgraph.t + 1:
            att.trace.note(GAP_SHORT_PATH)
        else:
            att.trace.note(GAP_EMBEDDING)
        return None
    # some path vertex has induced degree above w: use the first prefix whose
    # induced subgraph reaches maximum degree w
    path = ws.path
    for i in range(1, len(path) + 1):
        sub = induced_subgraph(g, [g.local(v) for v in path[:i]])
        top = max((sub.degree(x) for x in range(sub.n)), default=0)
        if top >= w:
            roots = sorted(range(sub.n), key=lambda x: (-sub.degree(x), sub.labels[x]))
            cert = att.search_in(path[:i], "dense_prefix", roots=[sub.labels[x] for x in roots])
            if cert is not None:
                return cert
            break
    att.trace.note(GAP_SHORT_PATH if spider.m > len(path) else GAP_EMBEDDING)
    return None


def _extension_route(att: _Attempt, run: _Run) -> Certificate | None:
    g = att.g
    tr = run.trace
    for _ in range(att.cfg.extension_steps + 1):
        pj = list(tr.deleted_path)
        if len(pj) >= att.spider.m:
            cert = att.search_in(pj, "extension")
            if cert is not None:
                return cert
        if len(pj) + 1 >= att.spider.m and pj:
            on = set(pj)
            best = None
            for x in range(g.n):
                u = g.labels[x]
                if u in on:
                    continue
                hits = sum(1 for y in g.adj[x] if g.labels[y] in on)
                if best is None or hits > best[0]:
                    best = (hits, u)
            if best is not None and best[0] > 0:
                cert = att.search_in(pj + [best[1]], "extension", roots=[best[1]] + pj)
                if cert is not None:
                    return cert
        if not run.extend():
            return None
    return None


def extract_spider(g: Graph, k: int, spider: Spider, config: ExtractConfig | None = None) -> Certificate:
    """Find a copy of ``spider`` whose removal keeps ``g`` k-connected.

    Raises HypothesisNotMet when the host is not bipartite, kappa < k or the
    minimum degree is below k + w, and NoCertificate when nothing is found
    (in strict mode: when the constructive route and its extensions fail).
    """
    config = config or ExtractConfig()
    check_hypotheses(g, k, spider.w)
    if g.n <= spider.m + k:
        raise HypothesisNotMet("order", f"n={g.n} <= m+k={spider.m + k}")
    w = spider.w
    run = _Run(g, k, w, config)
    att = _Attempt(g, k, spider, run.trace, config)
    try:
        ws = run.trivial_w() if w <= 1 else None
        if ws is None:
            run.run_to_stop()
            ws = run.select_root(run.trace.stop_index)
            if ws is None:
                run.trace.note(GAP_STUCK)
    except ProcedureStuck:
        ws = None
    if ws is not None:
        cert = _theorem_route(att, ws, w)
        if cert is not None:
            return cert
    cert = _extension_route(att, run)
    if cert is not None:
        return cert
    if config.strict_paper:
        raise NoCertificate(f"constructive route failed ({', '.join(run.trace.gaps) or 'no gap recorded'})")
    emb = oracle_extract(g, k, spider)
    if emb is None:
        log.error("no certificate for k=%s spider=%s on %r: counterexample candidate", k, spider, g)
        raise NoCertificate("oracle found no embedding either: counterexample to the theorem")
    tr = run.trace
    tr.route = "oracle"
    cert = Certificate(emb.relabel(g.labels), k, spider, tr, via_oracle=True)
    if not check_certificate(g, k, spider, cert):
        raise NoCertificate("oracle witness failed the certificate check")
    return cert


# ----------------------------------------------------------- serialization


def certificate_to_text(cert: Certificate) -> str:
    doc = {
        "k": cert.k,
        "spider": str(cert.spider),
        "image": list(cert.image),
        "root": cert.embedding.root,
        "vertex_map": list(cert.embedding.vertex_map),
        "trace": cert.trace.to_dict(),
        "via_oracle": cert.via_oracle,
    }
    return json.dumps(doc, indent=2) + "\n"


def certificate_from_text(text: str) -> Certificate:
    from .spider import parse_spider

    doc = json.loads(text)
    return Certificate(
        Embedding(tuple(doc["vertex_map"])),
        doc["k"],
        parse_spider(doc["spider"]),
        Trace.from_dict(doc["trace"]),
        bool(doc["via_oracle"]),
    )
