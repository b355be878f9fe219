"""Line-oriented text formats for instances, points and weighted graphs.

Instance file::

    c optional comment
    p bmatch <n> <m> <cap|uncap|perfect|tsp>
    v <id> <b>              (n lines; omitted in tsp mode, where b = 2)
    e <eid> <id1> <id2> <u> (m lines; u omitted in uncap and tsp mode)

Point file: ``x <eid> <value>`` lines, value as ``p/q``, integer or decimal;
edges without a line are 0.

Weighted graph file: optional ``p graph <n> <m>``, optional ``v <id>``
lines, and ``e <eid> <id1> <id2> <weight>`` lines (weight may be ``inf``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Graph, ext_weight, format_weight
from .separation import Instance

FILE_MODES = {"cap": "capacitated", "uncap": "uncapacitated", "perfect": "perfect", "tsp": "capacitated"}


class ParseError(ValueError):
    def __init__(self, lineno: int | None, msg: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {msg}" if lineno else msg)


@dataclass(frozen=True)
class InstanceFile:
    instance: Instance
    eids: tuple  # eids[k] is the file id of edge index k
    file_mode: str

    def edge_index(self) -> dict:
        return {eid: k for k, eid in enumerate(self.eids)}


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        tok = raw.split()
        if tok and tok[0] != "c" and not tok[0].startswith("#"):
            yield lineno, tok


def _nonneg_int(tok: str, lineno: int, what: str) -> int:
    try:
        val = int(tok)
    except ValueError:
        raise ParseError(lineno, f"{what} {tok!r} is not an integer") from None
    if val < 0:
        raise ParseError(lineno, f"{what} {tok!r} is negative")
    return val


def _rational(tok: str, lineno: int) -> Fraction:
    try:
        val = Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(lineno, f"{tok!r} is not a rational number") from None
    if val < 0:
        raise ParseError(lineno, f"{tok!r} is negative")
    return val


def parse_instance(text: str) -> InstanceFile:
    header = None
    bs: dict[int, int] = {}
    edges, eids, us = [], [], []
    for lineno, tok in _lines(text):
        kind = tok[0]
        if kind == "p":
            if header is not None:
                raise ParseError(lineno, "second header line")
            if len(tok) != 5 or tok[1] != "bmatch" or tok[4] not in FILE_MODES:
                raise ParseError(lineno, "header must be 'p bmatch <n> <m> <cap|uncap|perfect|tsp>'")
            header = (_nonneg_int(tok[2], lineno, "n"), _nonneg_int(tok[3], lineno, "m"), tok[4])
            continue
        if header is None:
            raise ParseError(lineno, "missing 'p bmatch' header")
        mode = header[2]
        if kind == "v":
            if mode == "tsp":
                if len(tok) not in (2, 3) or (len(tok) == 3 and tok[2] != "2"):
                    raise ParseError(lineno, "tsp mode vertex lines are 'v <id>' (b = 2)")
                b = 2
            elif len(tok) != 3:
                raise ParseError(lineno, "expected 'v <id> <b>'")
            else:
                b = _nonneg_int(tok[2], lineno, "b")
                if b == 0:
                    raise ParseError(lineno, "b must be positive")
            vid = _nonneg_int(tok[1], lineno, "vertex id")
            if vid in bs:
                raise ParseError(lineno, f"vertex {vid} declared twice")
            bs[vid] = b
        elif kind == "e":
            want = 4 if mode in ("uncap", "tsp") else 5
            if len(tok) != want:
                shape = "e <eid> <id1> <id2>" + ("" if want == 4 else " <u>")
                raise ParseError(lineno, f"expected '{shape}' in {mode} mode")
            eid = _nonneg_int(tok[1], lineno, "edge id")
            if eid in eids:
                raise ParseError(lineno, f"edge {eid} declared twice")
            a = _nonneg_int(tok[2], lineno, "vertex id")
            b = _nonneg_int(tok[3], lineno, "vertex id")
            if a == b:
                raise ParseError(lineno, "self-loop")
            if mode == "tsp":
                for v in (a, b):
                    bs.setdefault(v, 2)
            elif a not in bs or b not in bs:
                raise ParseError(lineno, "edge endpoint is not a declared vertex")
            edges.append((a, b))
            eids.append(eid)
            if want == 5:
                u = _nonneg_int(tok[4], lineno, "u")
                if u == 0:
                    raise ParseError(lineno, "u must be positive")
                us.append(u)
            elif mode == "tsp":
                us.append(1)
        else:
            raise ParseError(lineno, f"unknown line type {kind!r}")
    if header is None:
        raise ParseError(None, "missing 'p bmatch' header")
    n, m, mode = header
    if len(bs) != n:
        raise ParseError(None, f"header says {n} vertices, found {len(bs)}")
    if len(edges) != m:
        raise ParseError(None, f"header says {m} edges, found {len(edges)}")
    vertices = sorted(bs) if mode == "tsp" else list(bs)
    G = Graph(vertices, edges)
    inst = Instance(G, bs, None if mode == "uncap" else tuple(us), FILE_MODES[mode])
    return InstanceFile(inst, tuple(eids), mode)


def format_instance(f: InstanceFile) -> str:
    inst = f.instance
    G = inst.graph
    out = [f"p bmatch {G.n} {G.m} {f.file_mode}"]
    if f.file_mode != "tsp":
        out += [f"v {v} {inst.b[v]}" for v in G.vertices]
    else:
        out += [f"v {v}" for v in G.vertices]
    for k, (a, b) in enumerate(G.edges):
        tail = f" {inst.u[k]}" if f.file_mode in ("cap", "perfect") else ""
        out.append(f"e {f.eids[k]} {a} {b}{tail}")
    return "\n".join(out) + "\n"


def parse_point(text: str, f: InstanceFile) -> tuple[Fraction, ...]:
    index = f.edge_index()
    x = [Fraction(0)] * len(f.eids)
    seen = set()
    for lineno, tok in _lines(text):
        if tok[0] != "x" or len(tok) != 3:
            raise ParseError(lineno, "expected 'x <eid> <value>'")
        eid = _nonneg_int(tok[1], lineno, "edge id")
        if eid not in index:
            raise ParseError(lineno, f"unknown edge {eid}")
        if eid in seen:
            raise ParseError(lineno, f"edge {eid} given twice")
        seen.add(eid)
        x[index[eid]] = _rational(tok[2], lineno)
    return tuple(x)


def format_point(x, f: InstanceFile) -> str:
    return "".join(f"x {eid} {Fraction(v)}\n" for eid, v in zip(f.eids, x) if v != 0)


@dataclass(frozen=True)
class WeightedGraph:
    graph: Graph
    c: tuple
    eids: tuple


def parse_graph(text: str) -> WeightedGraph:
    header = None
    vertices: dict[str, None] = {}
    edges, eids, c = [], [], []
    for lineno, tok in _lines(text):
        kind = tok[0]
        if kind == "p":
            if len(tok) != 4 or tok[1] != "graph":
                raise ParseError(lineno, "header must be 'p graph <n> <m>'")
            header = (_nonneg_int(tok[2], lineno, "n"), _nonneg_int(tok[3], lineno, "m"))
        elif kind == "v":
            if len(tok) != 2:
                raise ParseError(lineno, "expected 'v <id>'")
            vertices.setdefault(tok[1])
        elif kind == "e":
            if len(tok) != 5:
                raise ParseError(lineno, "expected 'e <eid> <id1> <id2> <weight>'")
            if tok[2] == tok[3]:
                raise ParseError(lineno, "self-loop")
            if tok[1] in eids:
                raise ParseError(lineno, f"edge {tok[1]} declared twice")
            try:
                w = ext_weight(tok[4])
            except (ValueError, ZeroDivisionError, TypeError):
                raise ParseError(lineno, f"bad weight {tok[4]!r}") from None
            vertices.setdefault(tok[2])
            vertices.setdefault(tok[3])
            edges.append((tok[2], tok[3]))
            eids.append(tok[1])
            c.append(w)
        else:
            raise ParseError(lineno, f"unknown line type {kind!r}")
    if header is not None and header != (len(vertices), len(edges)):
        raise ParseError(None, f"header says {header[0]} vertices and {header[1]} edges, "
                               f"found {len(vertices)} and {len(edges)}")
    return WeightedGraph(Graph(vertices, edges), tuple(c), tuple(eids))


def format_graph(wg: WeightedGraph) -> str:
    G = wg.graph
    out = [f"p graph {G.n} {G.m}"] + [f"v {v}" for v in G.vertices]
    out += [f"e {eid} {a} {b} {format_weight(w)}" for eid, (a, b), w in zip(wg.eids, G.edges, wg.c)]
    return "\n".join(out) + "\n"
