import json

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from spiderkeep.errors import HypothesisNotMet, NoCertificate
from spiderkeep.extractor import (
    Certificate,
    ExtractConfig,
    Trace,
    certificate_from_text,
    certificate_to_text,
    check_certificate,
    extract_spider,
    extract_w,
)
from spiderkeep.generators import InstanceSpec, gen_instance
from spiderkeep.graph import complete_bipartite, cycle, delete_original, path
from spiderkeep.oracle import oracle_extract
from spiderkeep.spider import Embedding, all_spiders, is_embedding, spider_from_legs

from oracles import brute_kappa


def remainder_kappa(g, removed):
    return brute_kappa(delete_original(g, removed))


@pytest.mark.parametrize("a, k, w", [(3, 1, 2), (4, 1, 3), (4, 2, 2)])
def test_extract_w_complete_bipartite(a, k, w):
    g = complete_bipartite(a, a)
    ws, trace = extract_w(g, k, w)
    assert len(ws.wgraph.attach) >= w - 1
    for pos in ws.wgraph.attach:
        assert g.has_edge(ws.root, ws.path[pos])
    for i in range(len(ws.path) - 1):
        assert g.has_edge(ws.path[i], ws.path[i + 1])
    assert remainder_kappa(g, ws.vertices) >= k
    assert trace.stop_index is not None


def test_extract_w_trivial_on_cycle():
    ws, trace = extract_w(cycle(6), 1, 1)
    assert ws.path == () and ws.root == 0
    rest = delete_original(cycle(6), [ws.root])
    assert rest.same_structure(path(5))
    assert brute_kappa(rest) == 1


def test_extract_w_checks_hypotheses():
    with pytest.raises(HypothesisNotMet):
        extract_w(cycle(6), 2, 1)
    with pytest.raises(HypothesisNotMet):
        extract_w(cycle(5), 1, 1)


def test_extract_single_edge_from_k33():
    g = complete_bipartite(3, 3)
    cert = extract_spider(g, 2, spider_from_legs([1]))
    assert check_certificate(g, 2, spider_from_legs([1]), cert)
    assert brute_kappa(delete_original(g, cert.image)) == 2
    assert not cert.via_oracle


def test_extract_star_from_k44():
    g = complete_bipartite(4, 4)
    sp = spider_from_legs([1, 1, 1])
    cert = extract_spider(g, 1, sp)
    assert check_certificate(g, 1, sp, cert)
    rest = delete_original(g, cert.image)
    assert rest.same_structure(complete_bipartite(1, 3))


def test_extract_rejects_low_degree():
    with pytest.raises(HypothesisNotMet) as exc:
        extract_spider(cycle(6), 2, spider_from_legs([1]))
    assert exc.value.which == "min_degree"


def test_extract_rejects_small_order():
    with pytest.raises(HypothesisNotMet):
        extract_spider(complete_bipartite(2, 2), 1, spider_from_legs([2]))


def _cert(vm, k, legs):
    return Certificate(Embedding(tuple(vm)), k, spider_from_legs(legs), Trace())


def test_check_certificate_reasons():
    g = complete_bipartite(2, 3)  # left 0,1; right 2,3,4
    assert check_certificate(g, 2, spider_from_legs([2]), _cert((2, 0, 3), 2, [2])).reason == "ConnectivityDrop"
    assert check_certificate(g, 1, spider_from_legs([2]), _cert((2, 0, 2), 1, [2])).reason == "NotInjective"
    assert check_certificate(g, 1, spider_from_legs([2]), _cert((2, 3, 0), 1, [2])).reason == "NotEdgePreserving"
    assert check_certificate(g, 1, spider_from_legs([2]), _cert((2, 0), 1, [2])).reason == "WrongOrder"
    assert check_certificate(g, 1, spider_from_legs([2]), _cert((2, 0, 9), 1, [2])).reason == "UnknownVertex"
    assert check_certificate(g, 2, spider_from_legs([2]), _cert((2, 0, 3), 1, [2])).reason == "WrongK"
    assert check_certificate(g, 1, spider_from_legs([1, 1]), _cert((2, 0, 3), 1, [2])).reason == "SpiderMismatch"
    ok = check_certificate(g, 1, spider_from_legs([1]), _cert((0, 2), 1, [1]))
    assert ok and ok.reason == "OK"


def test_check_certificate_ignores_trace():
    g = complete_bipartite(3, 3)
    cert = extract_spider(g, 2, spider_from_legs([1]))
    cert.trace = Trace(deleted_path=[99, 98], root_vertex=-1)
    assert check_certificate(g, 2, spider_from_legs([1]), cert)


def test_certificate_text_round_trip():
    g = complete_bipartite(4, 4)
    sp = spider_from_legs([1, 1, 1])
    cert = extract_spider(g, 1, sp)
    text = certificate_to_text(cert)
    assert list(json.loads(text)) == ["k", "spider", "image", "root", "vertex_map", "trace", "via_oracle"]
    back = certificate_from_text(text)
    assert back == cert
    assert certificate_to_text(back) == text
    assert check_certificate(g, 1, sp, back)


@st.composite
def instances(draw, max_side=6):
    nx = draw(st.integers(3, max_side))
    ny = draw(st.integers(3, max_side))
    k = draw(st.integers(1, 2))
    sp = draw(st.sampled_from([s for s in all_spiders(6) if k + s.w <= min(nx, ny)]))
    seed = draw(st.integers(0, 10_000))
    spec = InstanceSpec("random_bipartite", {"nx": nx, "ny": ny, "p": 0.85}, seed, k, sp)
    g, k, sp = gen_instance(spec, attempts=400)
    return g, k, sp


def _replay(g, k, trace):
    for i in range(1, len(trace.deleted_path) + 1):
        assert remainder_kappa(g, trace.deleted_path[:i]) >= k
    for a, b in zip(trace.end_sequence, trace.end_sequence[1:]):
        assert set(b) < set(a)
    for step, v in zip(trace.steps, trace.deleted_path):
        assert step.vertex == v


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
@given(instances())
def test_extraction_is_sound_and_replayable(inst):
    g, k, sp = inst
    if g.n <= sp.m + k:
        return
    cert = extract_spider(g, k, sp)
    assert is_embedding(g, sp, Embedding(tuple(g.local(v) for v in cert.embedding.vertex_map)))
    assert brute_kappa(delete_original(g, cert.image)) >= k
    _replay(g, k, cert.trace)
    assert oracle_extract(g, k, sp) is not None


@settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
@given(instances())
def test_root_evidence(inst):
    g, k, sp = inst
    w = max(sp.w, 2)
    if g.n - 1 < k + w or min(g.degree(v) for v in range(g.n)) < k + w:
        return
    try:
        ws, trace = extract_w(g, k, w)
    except Exception:
        return
    if trace.root_rule == "end_degree":
        prefix = set(trace.deleted_path[: trace.stop_index])
        hits = sum(1 for y in g.adj[g.local(ws.root)] if g.labels[y] in prefix)
        assert hits >= w


def test_strict_mode_on_complete_bipartite():
    for a in range(3, 6):
        g = complete_bipartite(a, a + 1)
        for sp in all_spiders(7):
            for k in range(1, a):
                if a < k + sp.w or g.n <= sp.m + k:
                    continue
                cert = extract_spider(g, k, sp, ExtractConfig(strict_paper=True))
                assert check_certificate(g, k, sp, cert)
                assert not cert.via_oracle


def test_oracle_fallback_is_tagged(monkeypatch):
    import spiderkeep.extractor as ex

    monkeypatch.setattr(ex, "_theorem_route", lambda *a: None)
    monkeypatch.setattr(ex, "_extension_route", lambda *a: None)
    g = complete_bipartite(4, 4)
    sp = spider_from_legs([1, 1, 1])
    cert = extract_spider(g, 1, sp)
    assert cert.via_oracle and cert.trace.route == "oracle"
    assert check_certificate(g, 1, sp, cert)
    with pytest.raises(NoCertificate):
        extract_spider(g, 1, sp, ExtractConfig(strict_paper=True))
