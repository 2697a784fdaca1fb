"""Acceptance criteria at their stated bounds and tolerances.

Each test prints one line, ``criterion N ... PASS`` or ``FAIL``, straight to the
terminal.  Run just these with ``pytest tests/test_acceptance.py -m acceptance``.
"""

import time

import pytest

from surfcalc import rewrite
from surfcalc.rectify import bar as B
from surfcalc.simplicial import barratt_eccles as BE
from surfcalc.simplicial.sset import circle_model, sphere0
from surfcalc.suites import SuiteConfig, run_suite

pytestmark = pytest.mark.acceptance


@pytest.fixture
def report(capsys):
    def emit(number: int, title: str, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\ncriterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}")
        assert ok, detail

    return emit


def suite_detail(rep) -> str:
    return f"{rep.cases} cases, {rep.failure_count} failures, {rep.wall_time:.1f}s"


def test_criterion_01_confluence(report):
    start = time.perf_counter()
    res = rewrite.check_confluence(9)
    elapsed = time.perf_counter() - start
    ok = res.ok and not res.counterexamples and elapsed < 60
    report(1, "unique normal forms, all terms with <= 9 nodes", ok,
           f"{res.term_count} terms, {len(res.counterexamples)} counterexamples, {elapsed:.1f}s (limit 60s)")


def test_criterion_02_termination_measure(report):
    rep = run_suite("termination", SuiteConfig(count=100_000))
    ok = rep.ok and rep.stats["steps"] >= 100_000
    report(2, "every rewrite step decreases (size, right weight)", ok,
           f"{rep.stats['steps']} steps, {rep.failure_count} violations")


def test_criterion_03_operad_laws(report):
    rep = run_suite("operad", SuiteConfig(max_arity=4, count=1000))
    ok = rep.ok and rep.wall_time < 60
    report(3, "associativity, units, equivariance (total arity <= 4, genus <= 2, +1000 random)", ok,
           f"{suite_detail(rep)} (limit 60s), exhaustive part {rep.stats['exhaustive cases']}")


def test_criterion_04_category_and_pants_loop(report):
    rep = run_suite("category", SuiteConfig(count=500))
    report(4, "category, monoidal and symmetry laws of S, pants loop on 500 random F", rep.ok, suite_detail(rep))


def test_criterion_05_operad_is_s_k_1(report):
    rep = run_suite("s-k-1", SuiteConfig(count=500))
    report(5, "S(k,1) = M(k): round trips and composition = gamma on 500 cases", rep.ok, suite_detail(rep))


def test_criterion_06_operator_canonical_forms(report):
    rep = run_suite("operators", SuiteConfig(max_degree=6, count=5))
    ok = rep.ok and rep.wall_time < 120
    report(6, "canonical forms act like their words and are unique (p <= 6, length <= 5)", ok,
           f"{suite_detail(rep)} (limit 120s)")


def test_criterion_07_degeneracy_degree_and_vertices(report):
    rep = run_suite("vertices", SuiteConfig(max_degree=4, count=4))
    report(7, "d(g) and vertices against the relation closure, d(g)+1 vertices", rep.ok,
           f"{suite_detail(rep)}, {rep.stats['words']} words in {rep.stats['classes']} classes")


def test_criterion_08_dtilde_composition(report):
    rep = run_suite("dtilde", SuiteConfig(max_degree=4))
    report(8, "exact rational associativity on generator triples (p <= 4), vertex restriction", rep.ok,
           f"{suite_detail(rep)}, {rep.stats['generator cases']} pure generator triples")


def test_criterion_09_level_coherence(report):
    rep = run_suite("levels", SuiteConfig(count=500, max_degree=3, max_arity=3))
    report(9, "H_{k,l} o F_{l,0} = F_{k,0} and the same for G (d <= 3, arity <= 3)", rep.ok, suite_detail(rep))


def test_criterion_10_bar_construction(report):
    rep = run_suite("bar", SuiteConfig(max_degree=2))
    categories = len(B.bar_cases())
    ok = rep.ok and categories >= 3
    report(10, "d o i = id and May's homotopy on finite test categories", ok,
           f"{categories} categories, {suite_detail(rep)}, {rep.stats['homotopy identities']} homotopy identities")


def test_criterion_11_barratt_eccles_monad(report):
    start = time.perf_counter()
    laws = BE.LawReport()
    BE.monad_law_audit(sphere0(), max_arity=2, max_degree=1, report=laws)
    BE.monad_law_audit(circle_model(), max_arity=2, max_degree=1, report=laws)
    BE.assembly_audit(count=100, seed=0, report=laws)
    elapsed = time.perf_counter() - start
    assoc = laws.checked["associativity"]
    ok = laws.ok and laws.checked["assembly formula"] >= 100 and laws.checked["assembly naturality"] >= 100
    report(11, "unit laws, exhaustive associativity (arity <= 2, degree <= 1), assembly map", ok,
           f"{sum(laws.checked.values())} instances ({assoc} associativity), {len(laws.failures)} failures, "
           f"{elapsed:.1f}s")


def test_criterion_12_phi_bisimplicial(report):
    rep = run_suite("phi", SuiteConfig(max_degree=3))
    report(12, "phi~ bisimplicial and almost-simplicial identities of f_p (p <= 3)", rep.ok,
           f"{suite_detail(rep)}, {rep.stats['almost-simplicial identities']} almost-simplicial identities")
