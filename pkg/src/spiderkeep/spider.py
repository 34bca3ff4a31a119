"""Spiders, the W family (a path plus a root joined to same-parity positions),
and backtracking embedding of spiders into host graphs.

Spider vertices are numbered canonically: 0 is the root, then the vertices of
each leg from the root outwards, legs taken in non-increasing length order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import MixedParity, TooFewAttachments, ZeroLengthLeg
from .graph import Graph, build_graph


@dataclass(frozen=True)
class Spider:
    legs: tuple[int, ...]

    @property
    def m(self) -> int:
        return 1 + sum(self.legs)

    @property
    def x_size(self) -> int:
        return 1 + sum(l // 2 for l in self.legs)

    @property
    def y_size(self) -> int:
        return sum((l + 1) // 2 for l in self.legs)

    @property
    def sides(self) -> tuple[int, int]:
        return self.x_size, self.y_size

    @property
    def w(self) -> int:
        return max(self.x_size, self.y_size)

    @property
    def is_path(self) -> bool:
        return len(self.legs) <= 2

    def canonical(self) -> tuple:
        """Isomorphism class: paths are determined by their order alone."""
        return ("path", self.m) if self.is_path else ("spider", self.legs)

    def leg_vertices(self, i: int) -> range:
        start = 1 + sum(self.legs[:i])
        return range(start, start + self.legs[i])

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in range(len(self.legs)):
            prev = 0
            for v in self.leg_vertices(i):
                out.append((prev, v))
                prev = v
        return out

    def to_graph(self) -> Graph:
        return build_graph(self.m, self.edges())

    def __str__(self) -> str:
        return ",".join(map(str, self.legs))


def spider_from_legs(legs: Iterable[int]) -> Spider:
    legs = tuple(legs)
    for l in legs:
        if l < 1:
            raise ZeroLengthLeg(f"leg length {l} is not positive")
    return Spider(tuple(sorted(legs, reverse=True)))


def parse_spider(text: str) -> Spider:
    """Parse the comma-separated leg format, e.g. ``"2,2,1"``; empty string is K1."""
    text = text.strip()
    if not text:
        return Spider(())
    return spider_from_legs(int(part) for part in text.split(","))


def all_spiders(max_order: int) -> list[Spider]:
    """One spider per leg multiset, for every order 1..max_order."""

    def partitions(total, cap):
        if total == 0:
            yield ()
            return
        for first in range(min(total, cap), 0, -1):
            for rest in partitions(total - first, first):
                yield (first,) + rest

    return [Spider(p) for m in range(1, max_order + 1) for p in partitions(m - 1, m - 1)]


@dataclass(frozen=True)
class WGraph:
    """Path ``v_0 .. v_{t-1}`` plus root ``u`` (id ``t``) adjacent to ``attach``."""

    t: int
    attach: tuple[int, ...]
    w: int

    @property
    def root_label(self) -> int:
        return self.t

    def to_graph(self) -> Graph:
        edges = [(i, i + 1) for i in range(self.t - 1)]
        edges += [(p, self.t) for p in self.attach]
        return build_graph(self.t + 1, edges)


def w_graph(t: int, attach: Iterable[int], w: int) -> WGraph:
    attach = tuple(sorted(set(attach)))
    for p in attach:
        if not 0 <= p < t:
            raise ValueError(f"attach position {p} outside path of {t} vertices")
    if len({p % 2 for p in attach}) > 1:
        raise MixedParity(f"attach positions {attach} mix parities (odd cycle through the root)")
    if len(attach) < max(w - 1, 0):
        raise TooFewAttachments(f"{len(attach)} attachments, need at least {w - 1}")
    return WGraph(t, attach, w)


@dataclass(frozen=True)
class Embedding:
    """``vertex_map[i]`` is the host vertex carrying spider vertex ``i``."""

    vertex_map: tuple[int, ...]

    @property
    def root(self) -> int:
        return self.vertex_map[0]

    @property
    def image(self) -> tuple[int, ...]:
        return tuple(sorted(self.vertex_map))

    def relabel(self, labels) -> "Embedding":
        return Embedding(tuple(labels[v] for v in self.vertex_map))


def embed_spider(host: Graph, spider: Spider, roots: Iterable[int] | None = None) -> Iterator[Embedding]:
    """Backtracking search for injective, edge-preserving spider images.

    Roots are tried in the given order (default: ascending id); legs longest
    first, neighbours ascending.  Equal-length legs are forced to start at
    increasing host vertices so leg permutations are not repeated.
    """
    legs = spider.legs
    roots = range(host.n) if roots is None else list(roots)
    vmap = [0] * spider.m
    used = set()

    def grow(leg, pos, prev, length, first):
        if pos == length:
            yield from place(leg + 1)
            return
        slot = 1 + sum(legs[:leg]) + pos
        for y in host.adj[prev]:
            if y in used:
                continue
            if pos == 0 and first is not None and y <= first:
                continue
            used.add(y)
            vmap[slot] = y
            yield from grow(leg, pos + 1, y, length, first)
            used.discard(y)

    def place(leg):
        if leg == len(legs):
            yield Embedding(tuple(vmap))
            return
        first = None
        if leg > 0 and legs[leg] == legs[leg - 1]:
            first = vmap[1 + sum(legs[: leg - 1])]
        yield from grow(leg, 0, vmap[0], legs[leg], first)

    for r in roots:
        if host.degree(r) < len(legs):
            continue
        used.add(r)
        vmap[0] = r
        yield from place(0)
        used.discard(r)


def embed_spider_in_w(wg: WGraph, spider: Spider) -> Embedding | None:
    """Embed ``spider`` into W with its root on ``u``; legs run along the path.

    Each leg occupies a path segment starting at an attach position and
    running right or left.  Paths (at most two legs) may also be rooted at any
    vertex of W if the rooted placement fails.  Returns None when no placement
    exists.
    """
    if spider.m > wg.t + 1:
        return None
    u = wg.root_label
    vmap = [u] * spider.m
    used = {u}

    def assign(leg):
        if leg == len(spider.legs):
            return True
        length = spider.legs[leg]
        slots = spider.leg_vertices(leg)
        for p in wg.attach:
            for step in (1, -1):
                seg = [p + step * j for j in range(length)]
                if seg[-1] < 0 or seg[-1] >= wg.t or any(x in used for x in seg):
                    continue
                used.update(seg)
                for s, x in zip(slots, seg):
                    vmap[s] = x
                if assign(leg + 1):
                    return True
                used.difference_update(seg)
                if length == 1:
                    break
        return False

    if assign(0):
        return Embedding(tuple(vmap))
    if spider.is_path:
        order = [u] + list(range(wg.t))
        return next(embed_spider(wg.to_graph(), spider, roots=order), None)
    return None


def is_embedding(host: Graph, spider: Spider, emb: Embedding) -> bool:
    vm = emb.vertex_map
    if len(vm) != spider.m or len(set(vm)) != len(vm):
        return False
    if any(not 0 <= x < host.n for x in vm):
        return False
    return all(host.has_edge(vm[a], vm[b]) for a, b in spider.edges())
