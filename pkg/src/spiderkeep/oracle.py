"""Brute-force ground truth for small hosts.

The enumerator here deliberately shares no search code with the extractor:
it precomputes every simple path hanging off a root and then combines
vertex-disjoint ones, rather than growing legs vertex by vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator

from .connectivity import kappa, kappa_at_least
from .graph import Graph, delete_vertices, is_bipartite, min_degree
from .spider import Embedding, Spider


class Status(str, Enum):
    HOLDS_WITH_WITNESS = "HoldsWithWitness"
    HYPOTHESIS_NOT_MET = "HypothesisNotMet"
    COUNTEREXAMPLE_FOUND = "CounterexampleFound"


@dataclass
class Verdict:
    status: Status
    witness: Embedding | None = None
    stats: dict = field(default_factory=lambda: {"tried": 0, "valid": 0})
    reason: str = ""
    instance: tuple | None = None  # (graph, k, spider) when a counterexample is found


def _paths_from(g: Graph, start: int, length: int, banned: frozenset) -> list[tuple[int, ...]]:
    """All simple paths of ``length`` edges leaving ``start``, start excluded."""
    out = []

    def rec(tail, seen):
        if len(tail) == length:
            out.append(tuple(tail))
            return
        last = tail[-1] if tail else start
        for y in g.adj[last]:
            if y not in seen and y not in banned:
                tail.append(y)
                seen.add(y)
                rec(tail, seen)
                seen.discard(y)
                tail.pop()

    rec([], {start})
    return out


def _path_embeddings(g: Graph, spider: Spider) -> Iterator[Embedding]:
    m = spider.m
    if m == 1:
        for v in range(g.n):
            yield Embedding((v,))
        return
    l1 = spider.legs[0]
    for a in range(g.n):
        for rest in _paths_from(g, a, m - 1, frozenset()):
            seq = (a,) + rest
            if seq[0] > seq[-1]:
                continue
            yield Embedding((seq[l1],) + tuple(reversed(seq[:l1])) + seq[l1 + 1 :])


def _star_embeddings(g: Graph, spider: Spider) -> Iterator[Embedding]:
    legs = spider.legs
    for r in range(g.n):
        if g.degree(r) < len(legs):
            continue
        by_len = {l: _paths_from(g, r, l, frozenset()) for l in set(legs)}

        def combine(i, used, chosen):
            if i == len(legs):
                yield Embedding((r,) + tuple(v for p in chosen for v in p))
                return
            for p in by_len[legs[i]]:
                if i > 0 and legs[i] == legs[i - 1] and p[0] <= chosen[-1][0]:
                    continue
                if used.isdisjoint(p):
                    chosen.append(p)
                    yield from combine(i + 1, used | set(p), chosen)
                    chosen.pop()

        yield from combine(0, {r}, [])


def enumerate_embeddings(g: Graph, spider: Spider) -> Iterator[Embedding]:
    """Every image of ``spider`` in ``g``, once per spider automorphism class.

    Paths are listed once per direction-free vertex sequence; for spiders with
    three or more legs, equal-length legs appear in increasing order of their
    first vertex.
    """
    if spider.m > g.n:
        return iter(())
    if spider.is_path:
        return _path_embeddings(g, spider)
    return _star_embeddings(g, spider)


def keeps_connectivity(g: Graph, image, k: int) -> bool:
    rest = delete_vertices(g, image)
    return kappa_at_least(rest, k)


def oracle_extract(g: Graph, k: int, spider: Spider, stats: dict | None = None) -> Embedding | None:
    """First enumerated embedding whose removal leaves a k-connected graph."""
    for emb in enumerate_embeddings(g, spider):
        if stats is not None:
            stats["tried"] += 1
        if keeps_connectivity(g, emb.vertex_map, k):
            if stats is not None:
                stats["valid"] += 1
            return emb
    return None


def check_hypotheses(g: Graph, k: int, spider: Spider) -> str:
    """Empty string when the theorem's hypotheses hold, else the failed one."""
    if g.n == 0:
        return "empty graph"
    if not is_bipartite(g):
        return "bipartite"
    if kappa(g, limit=k) < k:
        return "kappa"
    if min_degree(g) < k + spider.w:
        return "min_degree"
    return ""


def verify_instance(g: Graph, k: int, spider: Spider) -> Verdict:
    failed = check_hypotheses(g, k, spider)
    if failed:
        return Verdict(Status.HYPOTHESIS_NOT_MET, reason=failed)
    stats = {"tried": 0, "valid": 0}
    emb = oracle_extract(g, k, spider, stats)
    if emb is None:
        return Verdict(Status.COUNTEREXAMPLE_FOUND, stats=stats, reason="no embedding keeps connectivity",
                       instance=(g, k, spider))
    return Verdict(Status.HOLDS_WITH_WITNESS, emb, stats)
