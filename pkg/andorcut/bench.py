"""Suites de benchmark: generar, codificar y resolver casos en lote.

Cada caso usa la semilla ``seed + id``, así que el resultado de un caso no
depende de cuántos workers lo procesen ni del orden en que terminen.
"""
from concurrent.futures import ProcessPoolExecutor, as_completed
from pathlib import Path
from typing import Iterator, List, Optional, Sequence, Tuple
import json
import logging

from pydantic import BaseModel, ConfigDict
from tqdm import tqdm

from andorcut.encoder import encode
from andorcut.formats.graph_format import write_graph
from andorcut.formats.wcnf import write_wcnf
from andorcut.generator import GeneratorConfig, generate
from andorcut.report import CaseReport, CaseStatus, solve_case
from andorcut.solver import SolverBudget

logger = logging.getLogger(__name__)


class CaseSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    case_id: int
    generator: GeneratorConfig
    budget: SolverBudget = SolverBudget()
    oracle_limit: int = 18
    out_dir: Optional[Path] = None

    @property
    def stem(self) -> str:
        return f"case-{self.case_id}-n{self.generator.size_target}"


def plan_cases(
    sizes: Sequence[int],
    compositions: Sequence[Tuple[int, int, int]],
    count: int,
    seed: int,
    budget: Optional[SolverBudget] = None,
    oracle_limit: int = 18,
    out_dir: Optional[Path] = None,
) -> List[CaseSpec]:
    specs = []
    case_id = 0
    for size in sizes:
        for composition in compositions:
            for _ in range(count):
                config = GeneratorConfig(size_target=size, composition=composition, seed=seed + case_id)
                specs.append(
                    CaseSpec(
                        case_id=case_id,
                        generator=config,
                        budget=budget or SolverBudget(),
                        oracle_limit=oracle_limit,
                        out_dir=out_dir,
                    )
                )
                case_id += 1
    return specs


def run_case(spec: CaseSpec) -> CaseReport:
    """Ejecuta un caso completo; las fallas quedan en el reporte con estado ``error``."""
    try:
        graph = generate(spec.generator)
        if spec.out_dir is not None:
            write_graph(graph, spec.out_dir / f"{spec.stem}.aog")
            write_wcnf(encode(graph), spec.out_dir / f"{spec.stem}.wcnf")
        return solve_case(graph, str(spec.case_id), spec.budget, spec.oracle_limit)
    except Exception as e:
        logger.error(f"❌ Error en el caso {spec.case_id}: {e}")
        return CaseReport(id=str(spec.case_id), status=CaseStatus.ERROR, error=str(e))


def _execute(specs: List[CaseSpec], workers: int) -> Iterator[CaseReport]:
    if workers <= 1:
        for spec in specs:
            yield run_case(spec)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(run_case, spec) for spec in specs]
        for future in as_completed(futures):
            yield future.result()


def run_bench(specs: List[CaseSpec], workers: int = 1, progress: bool = True) -> List[CaseReport]:
    for spec in specs:
        if spec.out_dir is not None:
            spec.out_dir.mkdir(parents=True, exist_ok=True)

    reports = []
    bar = tqdm(total=len(specs), desc="bench", unit="case", disable=not progress)
    for report in _execute(specs, workers):
        reports.append(report)
        bar.update(1)
        bar.set_postfix(last=report.status.value)
    bar.close()

    reports.sort(key=lambda r: int(r.id))
    failures = sum(1 for r in reports if r.status is CaseStatus.ERROR)
    if failures:
        logger.warning(f"⚠️ Fallaron {failures} de {len(reports)} casos")
    return reports


def write_report(reports: Sequence[CaseReport], path: Path) -> Path:
    with path.open("w", encoding="utf-8", newline="\n") as fh:
        for report in reports:
            fh.write(json.dumps(report.to_record(), ensure_ascii=False) + "\n")
    return path
