"""
Extracting a connectivity-keeping spider
========================================

Take a random 2-connected bipartite graph with large minimum degree, pull
out a spider whose removal leaves it 2-connected, and check the
certificate independently.
"""

from spiderkeep import (
    ExtractConfig,
    check_certificate,
    extract_spider,
    kappa,
    sample_random_bipartite,
    spider_from_legs,
)
from spiderkeep.graph import delete_original

k = 2
spider = spider_from_legs([2, 2, 1])
g = sample_random_bipartite(8, 8, 0.8, k_min=k, delta_min=k + spider.w, seed=4)
print("host: n =", g.n, "kappa =", kappa(g), "spider", spider, "w =", spider.w)

cert = extract_spider(g, k, spider, ExtractConfig(strict_paper=True))
trace = cert.trace
print("deleted path:", trace.deleted_path)
print("nested ends:", trace.end_sequence)
print("root", trace.root_vertex, "chosen by", trace.root_rule, "| route", trace.route)
print("gaps bridged:", trace.gaps or "none")

print("spider image:", cert.image)
print("verifier:", check_certificate(g, k, spider, cert).reason)
print("kappa after removal:", kappa(delete_original(g, cert.image)))
