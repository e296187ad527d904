"""Line-oriented text formats for instances and outcomes.

Instance::

    graph <n> <m>
    e <u> <v>            (m lines)
    frame <x1> ... <xk>

Outcome, crossed::

    CROSSED
    path <v...>
    path <v...>
    indices <i> <r> <j> <s>

Outcome, crossless (O(n) lines: one per rib or clique vertex plus one per
added rib edge)::

    CROSSLESS
    frame <x1> ... <xk>
    added <u> <v>
    rib <v>: <cyclic neighbour order>
    clique <v> -> <a> <b> <c>

``#`` starts a comment; blank lines are ignored. An optional trailing
``stats`` line is ignored by the outcome parser.
"""

from __future__ import annotations

import re
from collections.abc import Sequence
from typing import NamedTuple

from .graph import Graph, norm_edge
from .solver import Crossed, Crossing, Crossless, Outcome, SolveStats
from .web import WebCertificate

# error codes
SYNTAX = "SYNTAX"
MISSING_HEADER = "MISSING_HEADER"
EDGE_COUNT = "EDGE_COUNT"
MISSING_FRAME = "MISSING_FRAME"
DUPLICATE_EDGE = "DUPLICATE_EDGE"
VERTEX_OUT_OF_RANGE = "VERTEX_OUT_OF_RANGE"
SELF_LOOP = "SELF_LOOP"
DUPLICATE_TUPLE_VERTEX = "DUPLICATE_TUPLE_VERTEX"
FRAME_TOO_SHORT = "FRAME_TOO_SHORT"
BAD_OUTCOME = "BAD_OUTCOME"


class ParseError(ValueError):
    def __init__(self, code: str, line: int, col: int, message: str) -> None:
        super().__init__(f"{line}:{col}: {code}: {message}")
        self.code = code
        self.line = line
        self.col = col


class Token(NamedTuple):
    text: str
    line: int
    col: int


_TOKEN = re.compile(r"[^\s#]+")


def _records(text: str) -> list[list[Token]]:
    out = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks = [Token(m.group(), ln, m.start() + 1) for m in _TOKEN.finditer(body)]
        if toks:
            out.append(toks)
    return out


def _int(tok: Token) -> int:
    try:
        value = int(tok.text)
    except ValueError:
        raise ParseError(SYNTAX, tok.line, tok.col, f"expected an integer, got {tok.text!r}") from None
    if value < 0 or not tok.text.isdigit():
        raise ParseError(SYNTAX, tok.line, tok.col, f"expected a non-negative integer, got {tok.text!r}")
    return value


def _vertex(tok: Token, n: int) -> int:
    v = _int(tok)
    if v >= n:
        raise ParseError(VERTEX_OUT_OF_RANGE, tok.line, tok.col, f"vertex {v} out of range for n={n}")
    return v


def _arity(rec: list[Token], count: int) -> None:
    if len(rec) != count:
        tok = rec[min(len(rec), count) - 1] if len(rec) < count else rec[count]
        raise ParseError(SYNTAX, tok.line, tok.col, f"{rec[0].text!r} takes {count - 1} fields")


def parse_instance(text: str) -> tuple[Graph, tuple[int, ...]]:
    recs = _records(text)
    if not recs or recs[0][0].text != "graph":
        line, col = (recs[0][0].line, recs[0][0].col) if recs else (1, 1)
        raise ParseError(MISSING_HEADER, line, col, "expected 'graph <n> <m>'")
    head = recs[0]
    _arity(head, 3)
    n, m = _int(head[1]), _int(head[2])
    edges: set[tuple[int, int]] = set()
    frame: tuple[int, ...] | None = None
    for rec in recs[1:]:
        kind = rec[0]
        if frame is not None:
            raise ParseError(SYNTAX, kind.line, kind.col, "nothing may follow the frame record")
        if kind.text == "e":
            _arity(rec, 3)
            u, v = _vertex(rec[1], n), _vertex(rec[2], n)
            if u == v:
                raise ParseError(SELF_LOOP, rec[2].line, rec[2].col, f"self-loop at {u}")
            e = norm_edge(u, v)
            if e in edges:
                raise ParseError(DUPLICATE_EDGE, kind.line, kind.col, f"edge {u}-{v} repeated")
            edges.add(e)
        elif kind.text == "frame":
            xs = []
            for tok in rec[1:]:
                x = _vertex(tok, n)
                if x in xs:
                    raise ParseError(DUPLICATE_TUPLE_VERTEX, tok.line, tok.col, f"frame repeats {x}")
                xs.append(x)
            if len(xs) < 3:
                raise ParseError(FRAME_TOO_SHORT, kind.line, kind.col, "frame needs at least 3 vertices")
            if len(edges) != m:
                raise ParseError(EDGE_COUNT, kind.line, kind.col, f"header promised {m} edges, found {len(edges)}")
            frame = tuple(xs)
        else:
            raise ParseError(SYNTAX, kind.line, kind.col, f"unknown record {kind.text!r}")
    if frame is None:
        last = recs[-1][0]
        raise ParseError(MISSING_FRAME, last.line, last.col, "no frame record")
    return Graph.from_edges(n, edges), frame


def render_instance(g: Graph, t: Sequence[int]) -> str:
    lines = [f"graph {g.n} {g.m}"]
    lines += [f"e {u} {v}" for u, v in g.edges()]
    lines.append("frame " + " ".join(map(str, t)))
    return "\n".join(lines) + "\n"


def render_stats(stats: SolveStats) -> str:
    return (
        f"stats recursive_calls={stats.recursive_calls} edges_added={stats.edges_added} "
        f"searches={stats.searches} repairs={stats.repairs}"
    )


def render_outcome(outcome: Outcome) -> str:
    if isinstance(outcome, Crossed):
        c = outcome.crossing
        lines = [
            "CROSSED",
            "path " + " ".join(map(str, c.path_a)),
            "path " + " ".join(map(str, c.path_b)),
            "indices " + " ".join(map(str, c.frame_indices)),
        ]
        return "\n".join(lines) + "\n"
    cert = outcome.cert
    lines = ["CROSSLESS", "frame " + " ".join(map(str, cert.frame))]
    lines += [f"added {u} {v}" for u, v in sorted(cert.added_edges)]
    lines += [f"rib {v}: " + " ".join(map(str, cert.rotation[v])) for v in sorted(cert.rotation)]
    lines += [
        f"clique {v} -> " + " ".join(map(str, cert.clique_assignment[v]))
        for v in sorted(cert.clique_assignment)
    ]
    return "\n".join(lines) + "\n"


def _ints(toks: Sequence[Token]) -> list[int]:
    return [_int(t) for t in toks]


def parse_outcome(text: str) -> Outcome:
    recs = [r for r in _records(text) if r[0].text != "stats"]
    if not recs:
        raise ParseError(BAD_OUTCOME, 1, 1, "empty outcome")
    head = recs[0][0]
    if head.text == "CROSSED":
        kinds = [r[0].text for r in recs[1:]]
        if kinds != ["path", "path", "indices"]:
            raise ParseError(BAD_OUTCOME, head.line, head.col, "expected two path records and an indices record")
        a, b = _ints(recs[1][1:]), _ints(recs[2][1:])
        _arity(recs[3], 5)
        idx = _ints(recs[3][1:])
        return Crossed(Crossing(tuple(a), tuple(b), tuple(idx)))  # type: ignore[arg-type]
    if head.text != "CROSSLESS":
        raise ParseError(BAD_OUTCOME, head.line, head.col, f"unknown outcome {head.text!r}")
    frame: list[int] | None = None
    added = set()
    rotation: dict[int, tuple[int, ...]] = {}
    cliques: dict[int, tuple[int, int, int]] = {}
    for rec in recs[1:]:
        kind = rec[0]
        if kind.text == "frame" and frame is None:
            frame = _ints(rec[1:])
        elif kind.text == "added":
            _arity(rec, 3)
            added.add(norm_edge(_int(rec[1]), _int(rec[2])))
        elif kind.text == "rib":
            if len(rec) < 2 or not rec[1].text.endswith(":"):
                raise ParseError(SYNTAX, kind.line, kind.col, "expected 'rib <v>: <neighbours>'")
            v = _int(Token(rec[1].text[:-1], rec[1].line, rec[1].col))
            if v in rotation:
                raise ParseError(BAD_OUTCOME, kind.line, kind.col, f"rib vertex {v} listed twice")
            rotation[v] = tuple(_ints(rec[2:]))
        elif kind.text == "clique":
            if len(rec) != 6 or rec[2].text != "->":
                raise ParseError(SYNTAX, kind.line, kind.col, "expected 'clique <v> -> <a> <b> <c>'")
            v = _int(rec[1])
            if v in cliques:
                raise ParseError(BAD_OUTCOME, kind.line, kind.col, f"clique vertex {v} listed twice")
            cliques[v] = tuple(_ints(rec[3:]))  # type: ignore[assignment]
        else:
            raise ParseError(SYNTAX, kind.line, kind.col, f"unexpected record {kind.text!r}")
    if frame is None:
        raise ParseError(MISSING_FRAME, head.line, head.col, "certificate has no frame record")
    return Crossless(WebCertificate(tuple(frame), rotation, cliques, frozenset(added)))
