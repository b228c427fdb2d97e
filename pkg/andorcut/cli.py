"""Línea de comandos de andorcut.

Códigos de salida: 0 óptimo (o verificación positiva), 1 la solución no
interrumpe el objetivo, 2 error de entrada, 3 infactible, 4 presupuesto agotado.
"""
from pathlib import Path
from typing import Annotated, List, Optional
import json
import logging

import typer
from tabulate import tabulate

from andorcut.bench import plan_cases, run_bench, write_report
from andorcut.config import get_settings
from andorcut.encoder import encode
from andorcut.exceptions import AndorcutError, GraphValidationError
from andorcut.formats.graph_format import read_graph, write_graph
from andorcut.formats.wcnf import read_wcnf, write_wcnf
from andorcut.generator import GeneratorConfig, generate
from andorcut.graph import NodeKind
from andorcut.instance import CriticalSet
from andorcut.oracle import verify
from andorcut.report import TABLE_HEADERS, CaseReport, CaseStatus, solve_case, solve_wcnf_case
from andorcut.solver import SolverBudget

logger = logging.getLogger(__name__)

EXIT_NOT_DISRUPTED = 1
EXIT_INPUT_ERROR = 2

app = typer.Typer(
    help="Corte mínimo de ataque en grafos AND/OR vía Weighted Partial MaxSAT.",
    add_completion=False,
    no_args_is_help=True,
)


def print_terminal_separator():
    """Imprime un separador visual en la terminal"""
    print("\n" + "=" * 80)


def _fail(message: str, code: int = EXIT_INPUT_ERROR):
    logger.error(message)
    print(f"❌ {message}")
    raise typer.Exit(code)


def _load_graph(path: Path):
    try:
        return read_graph(path)
    except GraphValidationError as e:
        lines = "\n".join(f"   - {v}" for v in e.violations)
        _fail(f"Invalid graph {path}:\n{lines}")
    except (AndorcutError, OSError, UnicodeDecodeError) as e:
        _fail(f"Cannot read graph {path}: {e}")


def _budget(timeout: Optional[float]) -> SolverBudget:
    try:
        return SolverBudget(wall_clock=timeout)
    except ValueError as e:
        _fail(f"Invalid timeout {timeout}: {e}")


def print_case_report(report: CaseReport):
    print_terminal_separator()
    print("🎯 RESULTADO DEL CASO")
    print_terminal_separator()
    print(f"📋 Case ID: {report.id}")
    print(f"📊 Status: {report.status.value}")
    if report.g_nodes is not None:
        print(f"🌐 Graph: {report.g_nodes} nodes (atomic={report.g_at}, and={report.g_and}, or={report.g_or})")
    print(f"🧮 tsVars={report.ts_vars} tsClauses={report.ts_clauses}")
    print(f"⏱️  Time: {report.time:.1f} ms (encode {report.encode_ms:.1f} ms, solve {report.solve_ms:.1f} ms)")
    if report.cost is not None:
        label = "Cost" if report.status is CaseStatus.OPTIMAL else "Best cost so far"
        print(f"💰 {label}: {report.cost}")
        print("🔓 Critical nodes:")
        for node_id, cost in report.solution:
            print(f"   • {node_id}: {cost}")
    if report.oracle_cost is not None:
        print(f"🔍 Oracle cost: {report.oracle_cost} (agrees: {report.oracle_agrees})")
    print_terminal_separator()


@app.callback()
def main(
    log_level: Annotated[Optional[str], typer.Option("--log-level", help="DEBUG, INFO, WARNING o ERROR.")] = None,
):
    level = (log_level or get_settings().log_level).upper()
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=[
            logging.StreamHandler(),  # stderr, la salida estándar queda para los resultados
        ],
    )


@app.command("generate")
def cmd_generate(
    size: Annotated[int, typer.Option("--size", help="Cantidad de nodos deseada.")],
    out: Annotated[Path, typer.Option("--out", help="Archivo .aog de salida.")],
    config: Annotated[str, typer.Option("--config", help="Composición atómicos,AND,OR en porcentaje.")] = "80,10,10",
    seed: Annotated[Optional[int], typer.Option("--seed", help="Semilla (por defecto ANDORCUT_SEED).")] = None,
):
    """Genera un grafo AND/OR pseudoaleatorio."""
    seed = get_settings().seed if seed is None else seed
    try:
        generator_config = GeneratorConfig.from_cli(config, size_target=size, seed=seed)
    except ValueError as e:
        _fail(f"Invalid generator configuration: {e}")

    graph = generate(generator_config)
    write_graph(graph, out)
    counts = graph.kind_counts()

    print_terminal_separator()
    print("🌱 GRAFO GENERADO")
    print_terminal_separator()
    print(f"📄 File: {out}")
    print(f"🎲 Seed: {seed}")
    print(f"🌐 Nodes: {len(graph)}")
    print(f"   ⚛️  atomic: {counts[NodeKind.ATOMIC]}")
    print(f"   🔗 and: {counts[NodeKind.AND]}")
    print(f"   🔀 or: {counts[NodeKind.OR]}")
    print(f"➡️  Edges: {len(graph.edges)}")


@app.command("encode")
def cmd_encode(
    graph_path: Annotated[Path, typer.Option("--graph", help="Archivo .aog de entrada.")],
    out: Annotated[Path, typer.Option("--out", help="Archivo .wcnf de salida.")],
):
    """Codifica el grafo como instancia WCNF."""
    graph = _load_graph(graph_path)
    instance = encode(graph, preferred_top=get_settings().top)
    write_wcnf(instance, out)

    print_terminal_separator()
    print("🧮 INSTANCIA WCNF")
    print_terminal_separator()
    print(f"📄 File: {out}")
    print(f"tsVars: {instance.nvars}")
    print(f"tsClauses: {instance.num_clauses}")
    print(f"   hard: {len(instance.hard)}  soft: {len(instance.soft)}  top: {instance.top}")


@app.command("solve")
def cmd_solve(
    wcnf_path: Annotated[Optional[Path], typer.Option("--wcnf", help="Instancia .wcnf.")] = None,
    graph_path: Annotated[Optional[Path], typer.Option("--graph", help="Grafo .aog.")] = None,
    timeout: Annotated[Optional[float], typer.Option("--timeout", help="Límite en segundos.")] = None,
    report_path: Annotated[Optional[Path], typer.Option("--report", help="Reporte JSON de salida.")] = None,
):
    """Resuelve el corte mínimo y reporta el conjunto crítico."""
    if (wcnf_path is None) == (graph_path is None):
        _fail("Use exactly one of --wcnf or --graph")
    budget = _budget(timeout)

    if graph_path is not None:
        graph = _load_graph(graph_path)
        report = solve_case(graph, graph_path.stem, budget, oracle_limit=0, preferred_top=get_settings().top)
    else:
        try:
            instance = read_wcnf(wcnf_path)
        except (AndorcutError, OSError, UnicodeDecodeError) as e:
            _fail(f"Cannot read instance {wcnf_path}: {e}")
        report = solve_wcnf_case(instance, wcnf_path.stem, budget)

    print_case_report(report)
    if report_path is not None:
        report_path.write_text(json.dumps(report.to_record(), indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
        logger.info(f"📝 Reporte escrito en {report_path}")
    raise typer.Exit(report.exit_code)


@app.command("verify")
def cmd_verify(
    graph_path: Annotated[Path, typer.Option("--graph", help="Grafo .aog.")],
    solution: Annotated[str, typer.Option("--solution", help='Nodos comprometidos, "id,id,...".')],
    cost: Annotated[Optional[int], typer.Option("--cost", help="Costo declarado a contrastar.")] = None,
):
    """Verifica que un conjunto de nodos interrumpa el objetivo."""
    graph = _load_graph(graph_path)
    nodes = [n.strip() for n in solution.split(",") if n.strip()]
    try:
        claimed = CriticalSet.from_nodes(graph, nodes)
        if cost is not None:
            claimed = CriticalSet(claimed.nodes, cost, costs=claimed.costs)
        report = verify(graph, None, claimed)
    except AndorcutError as e:
        _fail(f"Cannot verify solution: {e}")

    print_terminal_separator()
    print("🔍 VERIFICACIÓN")
    print_terminal_separator()
    print(f"🎯 Target: {graph.target}")
    print(f"🔓 Nodes: {', '.join(sorted(claimed.nodes)) or '(none)'}")
    print(f"💰 Cost: {claimed.total_cost}")
    print(f"disrupts: {report.disrupts}")
    print(f"claimed_cost_matches: {report.claimed_cost_matches}")
    print(f"irredundant: {report.irredundant}")
    for violation in report.violations:
        print(f"   ⚠️  {violation}")
    raise typer.Exit(0 if report.disrupts else EXIT_NOT_DISRUPTED)


def _parse_sizes(values: List[str]) -> List[int]:
    sizes = []
    for value in values:
        for part in value.split(","):
            if part.strip():
                sizes.append(int(part))
    if any(s < 1 for s in sizes):
        raise ValueError("sizes must be positive")
    return sizes


@app.command("bench")
def cmd_bench(
    sizes: Annotated[List[str], typer.Option("--sizes", help="Tamaños, repetibles o separados por comas.")],
    configs: Annotated[List[str], typer.Option("--configs", help="Composiciones A,B,C (repetible).")],
    count: Annotated[int, typer.Option("--count", min=0, help="Casos por tamaño y composición.")] = 1,
    seed: Annotated[Optional[int], typer.Option("--seed", help="Semilla base (por defecto ANDORCUT_SEED).")] = None,
    budget: Annotated[Optional[float], typer.Option("--budget", help="Límite por caso en segundos.")] = None,
    out_dir: Annotated[Optional[Path], typer.Option("--out-dir", help="Directorio para .aog, .wcnf y report.jsonl.")] = None,
    report_path: Annotated[Optional[Path], typer.Option("--report", help="Reporte JSONL de salida.")] = None,
    workers: Annotated[Optional[int], typer.Option("--workers", min=1, help="Procesos en paralelo.")] = None,
    progress: Annotated[bool, typer.Option("--progress/--no-progress", help="Barra de progreso.")] = True,
):
    """Genera, codifica y resuelve una suite de casos."""
    settings = get_settings()
    seed = settings.seed if seed is None else seed
    try:
        size_list = _parse_sizes(sizes)
        compositions = [GeneratorConfig.parse_composition(c) for c in configs]
        for composition in compositions:
            GeneratorConfig(size_target=1, composition=composition)
        specs = plan_cases(
            size_list, compositions, count, seed,
            budget=SolverBudget(wall_clock=budget),
            oracle_limit=settings.bench_oracle_limit,
            out_dir=out_dir,
        )
    except ValueError as e:
        _fail(f"Invalid bench configuration: {e}")

    reports = run_bench(specs, workers or settings.workers, progress=progress)

    print_terminal_separator()
    print(f"📊 BENCHMARK: {len(reports)} casos")
    print_terminal_separator()
    print(tabulate([r.table_row() for r in reports], headers=TABLE_HEADERS, tablefmt="psql"))

    if report_path is None and out_dir is not None:
        report_path = out_dir / "report.jsonl"
    if report_path is not None:
        write_report(reports, report_path)
        print(f"📄 Report: {report_path}")

    statuses = {status: sum(1 for r in reports if r.status is status) for status in CaseStatus}
    print("   " + "  ".join(f"{s.value}={n}" for s, n in statuses.items()))


def run():
    app()
