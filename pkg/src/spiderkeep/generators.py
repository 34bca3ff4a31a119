"""Instance families: deterministic constructions and seeded rejection samplers."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .connectivity import kappa
from .errors import BadParameters, GenerationBudgetExceeded
from .graph import Graph, build_graph, complete_bipartite, min_degree
from .spider import Spider

FAMILIES = ("complete_bipartite", "dumbbell", "random_bipartite", "glued_bipartite", "from_file")
DEFAULT_ATTEMPTS = 2000


@dataclass(frozen=True)
class InstanceSpec:
    family: str
    params: dict = field(default_factory=dict, hash=False)
    seed: int = 0
    k: int = 1
    spider: Spider = Spider(())

    def label(self) -> str:
        args = ",".join(f"{key}={self.params[key]}" for key in sorted(self.params))
        return f"{self.family}({args})"


def dumbbell(k: int, a: int) -> Graph:
    """Two disjoint K_{a,a} blocks plus k hubs joined to the Right side of both.

    Ids: block one Left 0..a-1, Right a..2a-1; block two Left 2a..3a-1,
    Right 3a..4a-1; hubs 4a..4a+k-1.
    """
    if k < 0 or a < 1:
        raise BadParameters(f"dumbbell needs k >= 0 and a >= 1, got k={k}, a={a}")
    edges = []
    for base in (0, 2 * a):
        edges += [(base + i, base + a + j) for i in range(a) for j in range(a)]
    for h in range(4 * a, 4 * a + k):
        edges += [(h, a + j) for j in range(a)]
        edges += [(h, 3 * a + j) for j in range(a)]
    return build_graph(4 * a + k, edges)


def random_bipartite_graph(nx: int, ny: int, p: float, rng: random.Random) -> Graph:
    edges = [(i, nx + j) for i in range(nx) for j in range(ny) if rng.random() < p]
    return build_graph(nx + ny, edges)


def sample_random_bipartite(nx, ny, p, k_min, delta_min, seed, attempts=DEFAULT_ATTEMPTS) -> Graph:
    """Rejection-sample G(nx, ny, p) until kappa >= k_min and delta >= delta_min."""
    if nx < 1 or ny < 1 or not 0.0 <= p <= 1.0:
        raise BadParameters(f"random_bipartite({nx}, {ny}, {p})")
    rng = random.Random(seed)
    for _ in range(attempts):
        g = random_bipartite_graph(nx, ny, p, rng)
        if min_degree(g) >= delta_min and kappa(g, limit=k_min) >= k_min:
            return g
    raise GenerationBudgetExceeded(f"no random_bipartite({nx},{ny},{p}) sample met kappa>={k_min}, delta>={delta_min}")


def sample_glued_bipartite(k, a, p, delta_min, seed, attempts=DEFAULT_ATTEMPTS, b=None) -> Graph:
    """Two random a-by-b bipartite blocks glued through k hub vertices.

    Block one has Left 0..a-1 and Right a..a+b-1, block two follows it, and
    the hubs come last.  Each hub attaches to random Right-side vertices of
    both blocks.  Samples are kept only when kappa == k exactly and the
    minimum degree is at least ``delta_min``, so the hubs usually form a
    minimum separator.  ``b`` defaults to ``a``.
    """
    b = a if b is None else b
    if k < 1 or a < 1 or b < 1 or not 0.0 <= p <= 1.0:
        raise BadParameters(f"glued_bipartite({k}, {a}, {p}, b={b})")
    rng = random.Random(seed)
    block = a + b
    n = 2 * block + k
    for _ in range(attempts):
        edges = []
        for base in (0, block):
            edges += [(base + i, base + a + j) for i in range(a) for j in range(b) if rng.random() < p]
        for h in range(2 * block, n):
            for base in (a, block + a):
                picks = [base + j for j in range(b) if rng.random() < p]
                if not picks:
                    picks = [base + rng.randrange(b)]
                edges += [(h, x) for x in picks]
        g = build_graph(n, edges)
        if min_degree(g) >= delta_min and kappa(g) == k:
            return g
    raise GenerationBudgetExceeded(f"no glued_bipartite({k},{a},{p},b={b}) sample met kappa={k}, delta>={delta_min}")


def gen_instance(spec: InstanceSpec, attempts: int = DEFAULT_ATTEMPTS) -> tuple[Graph, int, Spider]:
    """Build the host graph for ``spec``; deterministic in (family, params, seed).

    Random families fold the theorem's hypotheses (kappa >= k, delta >= k+w)
    into their rejection test; deterministic families are returned as built.
    """
    p = spec.params
    fam = spec.family
    need_delta = spec.k + spec.spider.w
    if fam == "complete_bipartite":
        if p.get("a", 0) < 1 or p.get("b", 0) < 1:
            raise BadParameters(f"complete_bipartite needs a, b >= 1: {p}")
        g = complete_bipartite(p["a"], p["b"])
    elif fam == "dumbbell":
        g = dumbbell(p["k"], p["a"])
    elif fam == "random_bipartite":
        g = sample_random_bipartite(
            p["nx"], p["ny"], p["p"],
            max(p.get("k_min", 0), spec.k), max(p.get("delta_min", 0), need_delta),
            spec.seed, attempts,
        )
    elif fam == "glued_bipartite":
        g = sample_glued_bipartite(
            p["k"], p["a"], p["p"], max(p.get("delta_min", 0), p["k"] + 1), spec.seed, attempts, p.get("b"),
        )
    elif fam == "from_file":
        from .fileio import read_graph

        g = read_graph(p["path"])
    else:
        raise BadParameters(f"unknown family {fam!r}; expected one of {FAMILIES}")
    return g, spec.k, spec.spider
