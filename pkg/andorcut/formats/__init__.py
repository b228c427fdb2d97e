from andorcut.formats.graph_format import emit_graph, parse_graph, read_graph, write_graph
from andorcut.formats.wcnf import WcnfClauseCountWarning, emit_wcnf, parse_wcnf, read_wcnf, write_wcnf

__all__ = [
    "WcnfClauseCountWarning",
    "emit_graph",
    "emit_wcnf",
    "parse_graph",
    "parse_wcnf",
    "read_graph",
    "read_wcnf",
    "write_graph",
    "write_wcnf",
]
