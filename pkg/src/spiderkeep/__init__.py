"""Connectivity-keeping spiders in k-connected bipartite graphs.

Given a k-connected bipartite graph with minimum degree at least k + w and a
spider (a tree with at most one branching vertex) whose larger colour class
has w vertices, find a copy of the spider whose removal leaves the graph
k-connected, together with a certificate that can be checked independently.
"""

from .connectivity import (
    EndReport,
    Fragment,
    Lemma1Report,
    Separator,
    ends,
    fragments,
    kappa,
    kappa_at_least,
    lemma1_holds,
    local_connectivity,
    min_separators,
)
from .campaign import CampaignSummary, run_campaign
from .errors import HypothesisNotMet, NoCertificate, ProcedureStuck
from .extractor import (
    Certificate,
    ExtractConfig,
    Trace,
    certificate_from_text,
    certificate_to_text,
    check_certificate,
    extract_spider,
    extract_w,
)
from .generators import InstanceSpec, dumbbell, gen_instance, sample_glued_bipartite, sample_random_bipartite
from .graph import (
    Bipartition,
    Graph,
    build_graph,
    components,
    delete_vertices,
    induced_subgraph,
    min_degree,
    two_color,
)
from .oracle import Status, Verdict, enumerate_embeddings, oracle_extract, verify_instance
from .spider import (
    Embedding,
    Spider,
    WGraph,
    all_spiders,
    embed_spider,
    embed_spider_in_w,
    parse_spider,
    spider_from_legs,
    w_graph,
)

__version__ = "0.1.0"
