"""
A small fuzz campaign
=====================

Run every instance of a config through extraction, certificate checking
and the exhaustive oracle, then print the summary twice to show that it is
reproducible.
"""

from spiderkeep import run_campaign

config = {
    "families": [
        {"family": "complete_bipartite", "a": 5, "b": 5},
        {"family": "random_bipartite", "nx": 8, "ny": 8, "p": 0.8},
        {"family": "glued_bipartite", "k": 2, "a": 3, "p": 0.9},
    ],
    "seeds": [1, 2, 3],
    "k": [1, 2],
    "spiders": ["1", "2,1", "1,1,1", "3,2,1"],
}

first = run_campaign(config)
print(first.to_text())
print(f"wall time {first.wall_time:.1f}s")

# strict mode drops the oracle fallback; failures would be listed as fallback lines
strict = run_campaign(config, strict=True)
print("strict mode identical counts:", strict.to_text() == first.to_text())
