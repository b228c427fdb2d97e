"""Fórmulas proposicionales con subfórmulas compartidas.

Las fórmulas son DAGs: la identidad del objeto importa (``eq=False``), de modo
que un nodo del grafo que alimenta a varias compuertas produce una única
subfórmula compartida. Todos los recorridos son iterativos.
"""
from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, NamedTuple, Optional, Set, Tuple
import logging

from andorcut.exceptions import MissingVariableError, UnknownNodeError
from andorcut.graph import AndOrGraph, NodeKind

logger = logging.getLogger(__name__)


class Formula:
    """Nodo del AST."""

    __slots__ = ()

    @property
    def children(self) -> Tuple["Formula", ...]:
        return ()

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True, eq=False, repr=False)
class Var(Formula):
    name: str

    def __repr__(self) -> str:
        return f"Var({self.name!r})"


@dataclass(frozen=True, eq=False, repr=False)
class Not(Formula):
    arg: Formula

    @property
    def children(self) -> Tuple[Formula, ...]:
        return (self.arg,)

    def __repr__(self) -> str:
        return f"Not({self.arg!r})"


class _Gate(Formula):
    __slots__ = ()
    symbol = ""

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        if not self.args:
            raise ValueError(f"{type(self).__name__} needs at least one argument")

    @property
    def children(self) -> Tuple[Formula, ...]:
        return self.args

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.args)!r})"


@dataclass(frozen=True, eq=False, repr=False)
class And(_Gate):
    args: Tuple[Formula, ...]
    symbol = "∧"


@dataclass(frozen=True, eq=False, repr=False)
class Or(_Gate):
    args: Tuple[Formula, ...]
    symbol = "∨"


def iter_postorder(root: Formula) -> Iterator[Formula]:
    """Cada subfórmula distinta una sola vez, hijos antes que padres."""
    seen: Set[int] = set()
    stack: List[Tuple[Formula, bool]] = [(root, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            yield node
            continue
        if id(node) in seen:
            continue
        seen.add(id(node))
        stack.append((node, True))
        for child in reversed(node.children):
            if id(child) not in seen:
                stack.append((child, False))


def variables(f: Formula) -> Set[str]:
    return {node.name for node in iter_postorder(f) if isinstance(node, Var)}


class FormulaSize(NamedTuple):
    gates: int
    arity: int
    leaves: int
    variables: int


def formula_size(f: Formula) -> FormulaSize:
    """Compuertas AND/OR distintas y su aridad sumada; los ``Not`` no cuentan."""
    gates = arity = leaves = 0
    names = set()
    for node in iter_postorder(f):
        if isinstance(node, Var):
            leaves += 1
            names.add(node.name)
        elif isinstance(node, _Gate):
            gates += 1
            arity += len(node.args)
    return FormulaSize(gates, arity, leaves, len(names))


def build_formula_map(graph: AndOrGraph, target: str) -> Dict[str, Formula]:
    """form(n) para cada nodo ``n`` alcanzable hacia atrás desde ``target``."""
    graph.ensure_valid()
    if target not in graph:
        raise UnknownNodeError(target)
    reachable = graph.reachable(target)

    forms: Dict[str, Formula] = {}
    for node_id in graph.topological_order:
        if node_id not in reachable:
            continue
        node = graph.node(node_id)
        inputs = tuple(forms[p] for p in graph.predecessors(node_id))
        if node.kind is NodeKind.ATOMIC:
            forms[node_id] = And((Var(node_id),) + inputs) if inputs else Var(node_id)
        elif node.kind is NodeKind.AND:
            forms[node_id] = And(inputs)
        else:
            forms[node_id] = Or(inputs)
    return forms


def build_formula(graph: AndOrGraph, target: str) -> Formula:
    """Recorre el grafo hacia atrás y construye form(target)."""
    return build_formula_map(graph, target)[target]


def negate(f: Formula) -> Formula:
    return Not(f)


def evaluate_formula(f: Formula, assignment: Mapping[str, bool]) -> bool:
    values: Dict[int, bool] = {}
    for node in iter_postorder(f):
        if isinstance(node, Var):
            try:
                values[id(node)] = bool(assignment[node.name])
            except KeyError:
                raise MissingVariableError(node.name) from None
        elif isinstance(node, Not):
            values[id(node)] = not values[id(node.arg)]
        elif isinstance(node, And):
            values[id(node)] = all(values[id(c)] for c in node.args)
        else:
            values[id(node)] = any(values[id(c)] for c in node.args)
    return values[id(f)]


def to_nnf(f: Formula, positive: bool = True) -> Formula:
    """Forma normal negativa preservando la compartición.

    Memoizada por (subfórmula, polaridad); ``Not`` queda solo sobre variables y
    cada variable negada es un único objeto ``Not(Var)``.
    """
    memo: Dict[Tuple[int, bool], Formula] = {}
    stack: List[Tuple[Formula, bool, bool]] = [(f, positive, False)]
    while stack:
        node, pol, ready = stack.pop()
        key = (id(node), pol)
        if key in memo:
            continue
        if isinstance(node, Var):
            memo[key] = node if pol else Not(node)
        elif isinstance(node, Not):
            child_key = (id(node.arg), not pol)
            if ready:
                memo[key] = memo[child_key]
            else:
                stack.append((node, pol, True))
                if child_key not in memo:
                    stack.append((node.arg, not pol, False))
        else:
            if ready:
                args = tuple(memo[(id(c), pol)] for c in node.args)
                same_kind = isinstance(node, And) == pol
                memo[key] = And(args) if same_kind else Or(args)
            else:
                stack.append((node, pol, True))
                for child in reversed(node.args):
                    if (id(child), pol) not in memo:
                        stack.append((child, pol, False))
    return memo[(id(f), positive)]


def render(f: Formula) -> str:
    """Notación infija; las compuertas anidadas van entre paréntesis."""
    text: Dict[int, str] = {}

    def wrapped(child: Formula) -> str:
        return f"({text[id(child)]})" if isinstance(child, _Gate) else text[id(child)]

    for node in iter_postorder(f):
        if isinstance(node, Var):
            text[id(node)] = node.name
        elif isinstance(node, Not):
            text[id(node)] = "¬" + wrapped(node.arg)
        else:
            text[id(node)] = f" {node.symbol} ".join(wrapped(c) for c in node.args)
    return text[id(f)]


def literal_of(f: Formula) -> Optional[Tuple[str, bool]]:
    """(nombre, polaridad) si ``f`` es una variable o su negación directa."""
    if isinstance(f, Var):
        return f.name, True
    if isinstance(f, Not) and isinstance(f.arg, Var):
        return f.arg.name, False
    return None
