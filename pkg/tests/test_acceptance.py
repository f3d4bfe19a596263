"""Exit criteria for the toolkit.

Each test records one PASS/FAIL line, printed in pytest's terminal summary
(see ``conftest.py``).  Tolerances are exact: every criterion is a count of
violations that must be zero, or an exact integer equality.
"""

import json
import subprocess
import sys
import time

import pytest

from intervalcolor import graphfile
from intervalcolor.enumerator import (
    EnumerationBounds,
    is_isomorphic,
    verify_corollary3,
    verify_corollary4,
    verify_oracle,
    verify_theorem1,
    verify_theorem2,
)
from intervalcolor.multigraph import complete, cycle, is_eulerian, line_graph, star_augment, subdivide
from intervalcolor.solver import (
    Reason,
    chromatic_index,
    find_interval_coloring,
    is_interval_colorable,
)

RESULTS: list[tuple[str, bool, str]] = []

MULTI = EnumerationBounds(4, 7, 2)
SIMPLE = EnumerationBounds(5, 8, 1, {"connected", "simple"})


def record(criterion: str, ok: bool, detail: str) -> None:
    RESULTS.append((criterion, ok, detail))
    assert ok, f"{criterion}: {detail}"


def clean(report) -> bool:
    return report.ok and not report.counterexamples and report.inconclusive == 0


def tally_line(report, name) -> str:
    t = report.tallies.get(name)
    return "none" if t is None else f"{t.passed}/{t.checked}"


@pytest.fixture(scope="module")
def theorem2_reports():
    start = time.perf_counter()
    reports = [verify_theorem2(MULTI), verify_theorem2(SIMPLE)]
    return reports, time.perf_counter() - start


@pytest.fixture(scope="module")
def theorem1_reports():
    return [verify_theorem1(MULTI), verify_theorem1(SIMPLE)]


@pytest.fixture(scope="module")
def oracle_report():
    return verify_oracle(EnumerationBounds(7, 6, 2))


def test_c1_k5_exhausts_every_t(data_dir):
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "intervalcolor", "solve", str(data_dir / "k5.graph"),
         "--format", "json"],
        capture_output=True, text=True,
    )
    elapsed = time.perf_counter() - start
    doc = json.loads(proc.stdout)
    K5 = complete(5)
    per_t = [find_interval_coloring(K5, t) is None for t in range(4, 11)]
    ok = (
        proc.returncode == 1
        and doc["verdict"] == "not_colorable_exhausted"
        and all(per_t)
        and is_interval_colorable(K5).reason is Reason.EXHAUSTED_SEARCH
        and elapsed < 60
    )
    record("C1 K5 not interval colorable", ok,
           f"exit={proc.returncode} verdict={doc['verdict']} t=4..10 empty={all(per_t)} "
           f"{elapsed:.2f}s")


def test_c2_theorem2_exhaustive(theorem2_reports):
    reports, elapsed = theorem2_reports
    ok = all(clean(r) and r.tallies["theorem2"].checked > 0 for r in reports) and elapsed < 600
    record("C2 Theorem 2 exhaustive", ok,
           "; ".join(f"theorem2 {tally_line(r, 'theorem2')}" for r in reports)
           + f"; {elapsed:.2f}s")


def test_c3_oracle_equivalence(oracle_report):
    t = oracle_report.tallies["oracle_agreement"]
    ok = clean(oracle_report) and t.checked == oracle_report.graphs_examined > 0
    record("C3 oracle equivalence m<=6 mult<=2", ok,
           f"{t.passed}/{t.checked} agree, {len(oracle_report.counterexamples)} disagreements")


def test_c4_theorem1(theorem1_reports):
    ok = all(clean(r) for r in theorem1_reports) and all(
        r.tallies["theorem1_necessary"].checked > 0 and r.tallies["theorem1_regular_iff"].checked > 0
        for r in theorem1_reports
    )
    record("C4 Theorem 1 necessary + regular iff", ok, "; ".join(
        f"necessary {tally_line(r, 'theorem1_necessary')} "
        f"iff {tally_line(r, 'theorem1_regular_iff')}"
        for r in theorem1_reports
    ))


def test_c5_parity_internals(theorem2_reports, theorem1_reports, oracle_report):
    reports = [*theorem2_reports[0], *theorem1_reports, oracle_report]
    checked = sum(r.tallies["parity_internals"].checked for r in reports if "parity_internals" in r.tallies)
    passed = sum(r.tallies["parity_internals"].passed for r in reports if "parity_internals" in r.tallies)
    failures = [c for r in reports for c in r.counterexamples if c.check == "parity_internals"]
    ok = checked > 0 and passed == checked and not failures
    record("C5 parity internals on Eulerian witnesses", ok, f"{passed}/{checked} witnesses")


def test_c6_jaeger_instances():
    details = []
    ok = True
    for name, G, r in (("K4", complete(4), 3), ("C4", cycle(4), 2)):
        L = line_graph(G)
        chi = chromatic_index(L)
        verdict = is_interval_colorable(L)
        good = (
            chi == 2 * r - 2 and is_eulerian(L) and L.edge_count % 2 == 0 and verdict.colorable
        )
        ok &= good
        details.append(f"chi'(L({name}))={chi} m={L.edge_count} colorable={verdict.colorable}")
    record("C6 Jaeger instances", ok, "; ".join(details))


def test_c7_corollary3():
    reports = [verify_corollary3(MULTI), verify_corollary3(SIMPLE)]
    named = all(
        not is_interval_colorable(subdivide(cycle(k), e), use_precheck=False).colorable
        for k in (4, 6) for e in range(k)
    )
    ok = all(clean(r) and r.tallies["corollary3"].checked > 0 for r in reports) and named
    record("C7 Corollary 3 subdivisions", ok,
           "; ".join(f"corollary3 {tally_line(r, 'corollary3')}" for r in reports)
           + f"; C4->C5, C6->C7 non-colorable={named}")


def test_c8_corollary4():
    K2 = complete(2)
    star = star_augment(K2)
    instance = (
        is_isomorphic(star, cycle(3))
        and is_interval_colorable(K2).colorable
        and not is_interval_colorable(star, use_precheck=False).colorable
    )
    report = verify_corollary4(EnumerationBounds(4, 5, 2))
    ok = instance and clean(report) and report.tallies["corollary4"].checked > 0
    record("C8 Corollary 4 star augmentation", ok,
           f"K2*=C3 non-colorable={instance}; corollary4 {tally_line(report, 'corollary4')}")


def test_c9_round_trip_and_determinism(data_dir):
    files = sorted(data_dir.glob("*.graph"))
    round_trips = sum(
        graphfile.dumps(*graphfile.loads(p.read_text())) == p.read_text() for p in files
    )
    commands = [
        ["solve", str(data_dir / "k4.graph"), "--format", "json"],
        ["chi", str(data_dir / "k5.graph"), "--format", "json"],
        ["verify", "--max-n", "4", "--max-m", "5", "--check", "all", "--format", "json", "--quiet"],
    ]
    identical = True
    for argv in commands:
        outs = {
            subprocess.run([sys.executable, "-m", "intervalcolor", *argv],
                           capture_output=True, text=True).stdout
            for _ in range(2)
        }
        identical &= len(outs) == 1
    ok = round_trips == len(files) > 0 and identical
    record("C9 round-trip + deterministic JSON", ok,
           f"{round_trips}/{len(files)} golden files; byte-identical={identical}")
