"""
Spiders and the W graph
=======================

A spider is a tree with at most one vertex of degree three or more.  Here
we list the small ones, then embed a few into a W graph: a path plus a root
joined to same-parity positions on it.
"""

from spiderkeep import all_spiders, embed_spider_in_w, spider_from_legs, w_graph

for sp in all_spiders(5):
    print(f"legs {str(sp) or '-':8} order {sp.m}  sides {sp.sides}  w={sp.w}")

wg = w_graph(7, [0, 2, 4, 6], 4)
print("\nW graph: path 0..6, root", wg.root_label, "attached at", wg.attach)
for legs in ([1, 1, 1], [2, 2, 1], [3, 2], [2, 2, 2]):
    sp = spider_from_legs(legs)
    emb = embed_spider_in_w(wg, sp)
    print(f"spider {sp}:", "no embedding" if emb is None else f"root {emb.root}, map {emb.vertex_map}")
