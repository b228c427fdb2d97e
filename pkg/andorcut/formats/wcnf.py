"""Archivos WCNF en el dialecto clásico (``p wcnf <nvars> <nclauses> <top>``).

La correspondencia variable -> nodo viaja en comentarios
``c var <i> = node <id>`` / ``c var <i> = aux`` para poder decodificar la
salida de solvers externos. Sin esos comentarios la instancia queda numérica.
"""
from pathlib import Path
from typing import Dict, List, Optional, Set, Union
import logging
import re
import warnings

from andorcut.config import DEFAULT_TOP
from andorcut.exceptions import WcnfFormatError
from andorcut.instance import SoftClause, WcnfInstance

logger = logging.getLogger(__name__)

MAGIC_COMMENT = "c andorcut wcnf v1"

_MAPPING = re.compile(r"^c\s+var\s+(\d+)\s*=\s*(?:node\s+(\S+)|(aux))\s*$")


class WcnfClauseCountWarning(UserWarning):
    """El encabezado declara una cantidad de cláusulas distinta a la leída."""


def _clause_line(weight: int, clause) -> str:
    return " ".join([str(weight), *(str(lit) for lit in clause), "0"])


def emit_wcnf(instance: WcnfInstance) -> str:
    lines = [MAGIC_COMMENT]
    names = instance.names
    for var in range(1, instance.nvars + 1):
        if var in names:
            lines.append(f"c var {var} = node {names[var]}")
        elif var in instance.aux:
            lines.append(f"c var {var} = aux")
    lines.append(f"p wcnf {instance.nvars} {instance.num_clauses} {instance.top}")
    lines.extend(_clause_line(instance.top, clause) for clause in instance.hard)
    lines.extend(_clause_line(sc.weight, sc.clause) for sc in instance.soft)
    return "\n".join(lines) + "\n"


def _parse_int(token: str, what: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise WcnfFormatError(f"{what} must be an integer, got {token!r}", line) from None


def parse_wcnf(document: str) -> WcnfInstance:
    header: Optional[tuple] = None
    varmap: Dict[str, int] = {}
    aux: Set[int] = set()
    hard: List[List[int]] = []
    soft: List[SoftClause] = []

    for lineno, raw in enumerate(document.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line == "c" or line.startswith("c ") or line.startswith("c\t"):
            match = _MAPPING.match(line)
            if match:
                var = int(match.group(1))
                if match.group(3):
                    aux.add(var)
                else:
                    varmap[match.group(2)] = var
            continue

        tokens = line.split()
        if tokens[0] == "p":
            if header is not None:
                raise WcnfFormatError("duplicate header", lineno)
            if len(tokens) not in (4, 5) or tokens[1] != "wcnf":
                raise WcnfFormatError(f"malformed header {line!r}", lineno)
            nvars = _parse_int(tokens[2], "variable count", lineno)
            nclauses = _parse_int(tokens[3], "clause count", lineno)
            top = _parse_int(tokens[4], "top weight", lineno) if len(tokens) == 5 else None
            if nvars < 0 or nclauses < 0 or (top is not None and top < 1):
                raise WcnfFormatError(f"malformed header {line!r}", lineno)
            header = (nvars, nclauses, top, lineno)
            continue
        if header is None:
            raise WcnfFormatError("clause before the 'p wcnf' header", lineno)

        nvars, _, top, _ = header
        weight = _parse_int(tokens[0], "weight", lineno)
        if weight < 1:
            raise WcnfFormatError(f"weight must be positive, got {weight}", lineno)
        if top is not None and weight > top:
            raise WcnfFormatError(f"weight {weight} exceeds top {top}", lineno)
        if tokens[-1] != "0" or len(tokens) < 2:
            raise WcnfFormatError("clause must end with 0", lineno)
        clause = [_parse_int(tok, "literal", lineno) for tok in tokens[1:-1]]
        if 0 in clause:
            raise WcnfFormatError("literal 0 inside clause body", lineno)
        for lit in clause:
            if abs(lit) > nvars:
                raise WcnfFormatError(f"literal {lit} exceeds declared variable count {nvars}", lineno)
        if top is not None and weight == top:
            hard.append(clause)
        else:
            soft.append(SoftClause(weight, tuple(clause)))

    if header is None:
        raise WcnfFormatError("missing 'p wcnf' header")
    nvars, nclauses, top, header_line = header
    if top is None:
        top = max(DEFAULT_TOP, sum(sc.weight for sc in soft) + 1)

    found = len(hard) + len(soft)
    if found != nclauses:
        message = f"header declares {nclauses} clauses but the body has {found}"
        logger.warning(f"⚠️ {message}")
        warnings.warn(message, WcnfClauseCountWarning, stacklevel=2)

    for name, var in varmap.items():
        if not 1 <= var <= nvars:
            raise WcnfFormatError(f"mapping for node {name} names variable {var} outside 1..{nvars}", header_line)
    try:
        return WcnfInstance(nvars, top, hard, soft, varmap, frozenset(aux))
    except ValueError as e:
        raise WcnfFormatError(str(e)) from e


def read_wcnf(path: Union[str, Path]) -> WcnfInstance:
    return parse_wcnf(Path(path).read_text(encoding="utf-8"))


def write_wcnf(instance: WcnfInstance, path: Union[str, Path]) -> Path:
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="\n") as fh:
        fh.write(emit_wcnf(instance))
    return path
