"""Feedback-guided differential fuzzing for graph algorithm implementations.

Two independently coded implementations of the same graph problem run on
randomly mutated graphs; crashes, hangs and output disagreements are bugs.
Lightweight per-problem output signals (or probe coverage) decide which
generated graphs join the corpus.
"""

from .graph import Graph, EndpointPair, GraphProfile, parse, serialize, validate
from .engine import CampaignConfig, CampaignReport, BugRecord, fuzz, replay

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "EndpointPair",
    "GraphProfile",
    "parse",
    "serialize",
    "validate",
    "CampaignConfig",
    "CampaignReport",
    "BugRecord",
    "fuzz",
    "replay",
    "__version__",
]
