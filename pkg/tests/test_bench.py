import json

from andorcut.bench import plan_cases, run_bench, run_case, write_report
from andorcut.report import CaseStatus


def test_plan_cases_assigns_seeds_and_ids():
    specs = plan_cases([30, 60], [(80, 10, 10), (60, 20, 20)], count=2, seed=10)
    assert [s.case_id for s in specs] == list(range(8))
    assert [s.generator.seed for s in specs] == list(range(10, 18))
    assert specs[5].stem == "case-5-n60"


def test_run_case_reports_optimal_cost():
    (spec,) = plan_cases([12], [(80, 10, 10)], count=1, seed=3)
    report = run_case(spec)
    assert report.status is CaseStatus.OPTIMAL
    assert report.cost == sum(cost for _, cost in report.solution)
    assert report.oracle_agrees is True
    assert report.verification.ok


def test_workers_match_sequential_run(tmp_path):
    specs = plan_cases([25, 35], [(80, 10, 10), (60, 20, 20)], count=2, seed=5)
    sequential = run_bench(specs, workers=1, progress=False)
    parallel = run_bench(specs, workers=2, progress=False)
    assert [r.id for r in parallel] == [str(i) for i in range(len(specs))]
    for a, b in zip(sequential, parallel):
        assert (a.status, a.cost, a.solution) == (b.status, b.cost, b.solution)

    path = write_report(parallel, tmp_path / "bench.jsonl")
    rows = [json.loads(line) for line in path.read_text(encoding="utf-8").splitlines()]
    assert len(rows) == len(specs)
    assert all(row["status"] == "optimal" for row in rows)
