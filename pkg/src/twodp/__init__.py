"""Two disjoint paths: a crossing or a certified web completion."""

from .graph import Graph, GraphError, SearchOutcome, find_c_path, is_x_connected, x_search
from .kernels import BACKEND
from .solver import (
    Crossed,
    Crossing,
    Crossless,
    SolveStats,
    check_crossing,
    decide,
    normalize_tuple,
    solve,
    verify_outcome,
)
from .web import Verdict, Web, WebCertificate, gen_web, verify_certificate, web_compose, web_to_graph

__all__ = [
    "BACKEND",
    "Crossed",
    "Crossing",
    "Crossless",
    "Graph",
    "GraphError",
    "SearchOutcome",
    "SolveStats",
    "Verdict",
    "Web",
    "WebCertificate",
    "check_crossing",
    "decide",
    "find_c_path",
    "gen_web",
    "is_x_connected",
    "normalize_tuple",
    "solve",
    "verify_certificate",
    "verify_outcome",
    "web_compose",
    "web_to_graph",
    "x_search",
]
