"""Exact k-alliance invariants of small graphs, bounds on them and theorem checks."""

from .bounds import BOUNDS, ClosedFormPremiseError, Status, closed_form_Kn, evaluate_all, evaluate_bound
from .graph import Graph, GraphError, VertexSet, generate, parse_gen, read_graph
from .logic import AllianceSpec, Kind, is_alliance, is_cover, is_free, is_maximal_free, is_minimal_cover
from .solver import InvariantResult, SizeCapError, compute, max_free, min_alliance, min_cover
from .spectral import laplacian_spectrum
from .verifier import THEOREMS, corpus_run, default_corpus, verify

__version__ = "0.1.0"

__all__ = [
    "AllianceSpec",
    "BOUNDS",
    "ClosedFormPremiseError",
    "Graph",
    "GraphError",
    "InvariantResult",
    "Kind",
    "SizeCapError",
    "Status",
    "THEOREMS",
    "VertexSet",
    "closed_form_Kn",
    "compute",
    "corpus_run",
    "default_corpus",
    "evaluate_all",
    "evaluate_bound",
    "generate",
    "is_alliance",
    "is_cover",
    "is_free",
    "is_maximal_free",
    "is_minimal_cover",
    "laplacian_spectrum",
    "max_free",
    "min_alliance",
    "min_cover",
    "parse_gen",
    "read_graph",
    "verify",
]
