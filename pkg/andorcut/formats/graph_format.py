"""Documento de intercambio de grafos AND/OR (``.aog``).

Formato de líneas, UTF-8 y LF::

    aog 1
    target c1
    node a atomic 2
    node c1 atomic inf
    node g1 and
    edge a g1

``#`` inicia una línea de comentario; las líneas en blanco se ignoran.
"""
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union
import logging
import re

from andorcut.exceptions import GraphSyntaxError
from andorcut.graph import AndOrGraph, Cost, Node, NodeKind, is_valid_node_id

logger = logging.getLogger(__name__)

FORMAT_VERSION = "1"

_TOKEN = re.compile(r"\S+")

Token = Tuple[str, int]


def emit_graph(graph: AndOrGraph) -> str:
    lines = [f"aog {FORMAT_VERSION}", f"target {graph.target}"]
    for node in graph.nodes:
        if node.is_atomic:
            lines.append(f"node {node.id} atomic {node.cost}")
        else:
            lines.append(f"node {node.id} {node.kind.value}")
    lines.extend(f"edge {u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


class _Parser:
    def __init__(self):
        self.version_seen = False
        self.target: Optional[Token] = None
        self.target_line = 0
        self.nodes: List[Node] = []
        self.node_lines: Dict[str, int] = {}
        self.edges: List[Tuple[Tuple[str, str], int, Token, Token]] = []

    @staticmethod
    def expect_arity(tokens: List[Token], count: int, lineno: int, record: str) -> None:
        if len(tokens) > count:
            text, column = tokens[count]
            raise GraphSyntaxError(f"unexpected token {text!r} in {record} record", lineno, column)
        if len(tokens) < count:
            end = tokens[-1][1] + len(tokens[-1][0])
            raise GraphSyntaxError(f"incomplete {record} record", lineno, end)

    def feed(self, tokens: List[Token], lineno: int) -> None:
        keyword, column = tokens[0]
        if not self.version_seen:
            if keyword != "aog":
                raise GraphSyntaxError(f"expected 'aog {FORMAT_VERSION}' header, got {keyword!r}", lineno, column)
            self.expect_arity(tokens, 2, lineno, "header")
            if tokens[1][0] != FORMAT_VERSION:
                raise GraphSyntaxError(f"unsupported format version {tokens[1][0]!r}", lineno, tokens[1][1])
            self.version_seen = True
            return

        if keyword == "target":
            self.expect_arity(tokens, 2, lineno, "target")
            if self.target is not None:
                raise GraphSyntaxError("target declared twice", lineno, column)
            self.target, self.target_line = tokens[1], lineno
        elif keyword == "node":
            self.feed_node(tokens, lineno)
        elif keyword == "edge":
            self.expect_arity(tokens, 3, lineno, "edge")
            self.edges.append(((tokens[1][0], tokens[2][0]), lineno, tokens[1], tokens[2]))
        elif keyword == "aog":
            raise GraphSyntaxError("header declared twice", lineno, column)
        else:
            raise GraphSyntaxError(f"unknown record {keyword!r}", lineno, column)

    def feed_node(self, tokens: List[Token], lineno: int) -> None:
        if len(tokens) < 3:
            self.expect_arity(tokens, 3, lineno, "node")
        (node_id, id_column), (kind_text, kind_column) = tokens[1], tokens[2]
        try:
            kind = NodeKind(kind_text)
        except ValueError:
            raise GraphSyntaxError(f"unknown node kind {kind_text!r}", lineno, kind_column) from None
        if not is_valid_node_id(node_id):
            raise GraphSyntaxError(f"invalid node id {node_id!r}", lineno, id_column)
        if node_id in self.node_lines:
            raise GraphSyntaxError(
                f"node {node_id} already declared on line {self.node_lines[node_id]}", lineno, id_column
            )

        if kind is NodeKind.ATOMIC:
            self.expect_arity(tokens, 4, lineno, "atomic node")
            cost_text, cost_column = tokens[3]
            try:
                node = Node(node_id, kind, Cost.parse(cost_text))
            except ValueError as e:
                raise GraphSyntaxError(str(e), lineno, cost_column) from None
        else:
            self.expect_arity(tokens, 3, lineno, f"{kind.value} node")
            node = Node.gate(node_id, kind)
        self.node_lines[node_id] = lineno
        self.nodes.append(node)

    def finish(self, last_line: int) -> AndOrGraph:
        if not self.version_seen:
            raise GraphSyntaxError(f"empty document, expected 'aog {FORMAT_VERSION}' header", last_line, 1)
        if self.target is None:
            raise GraphSyntaxError("missing target record", last_line, 1)
        target, target_column = self.target
        if target not in self.node_lines:
            raise GraphSyntaxError(f"target {target} is not a declared node", self.target_line, target_column)

        seen = set()
        edges = []
        for pair, lineno, source, dest in self.edges:
            for name, column in (source, dest):
                if name not in self.node_lines:
                    raise GraphSyntaxError(f"edge names undeclared node {name!r}", lineno, column)
            if pair in seen:
                raise GraphSyntaxError(f"edge {pair[0]} -> {pair[1]} declared twice", lineno, source[1])
            seen.add(pair)
            edges.append(pair)

        graph = AndOrGraph(self.nodes, edges, target)
        graph.ensure_valid()
        return graph


def parse_graph(document: str) -> AndOrGraph:
    """Lee un documento ``.aog``; los errores de sintaxis traen línea y columna."""
    parser = _Parser()
    lineno = 0
    for lineno, line in enumerate(document.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]
        parser.feed(tokens, lineno)
    graph = parser.finish(lineno + 1)
    logger.debug(f"Documento de grafo leído: {graph!r}")
    return graph


def read_graph(path: Union[str, Path]) -> AndOrGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(graph: AndOrGraph, path: Union[str, Path]) -> Path:
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="\n") as fh:
        fh.write(emit_graph(graph))
    return path
