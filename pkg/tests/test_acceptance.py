"""Acceptance criteria, each at its stated scale and time limit.

Every criterion prints one ACCEPT/REJECT line (visible with -s or in the
captured log) and then asserts.
"""

import time

import pytest

from tyv.harness import SuiteConfig, run_roots, run_suite

ROOT_TYPES = ("A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2")
EMBED_TYPES = ("A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2")


def _report(capsys, number, ok, summary):
    with capsys.disabled():
        print(f"\n[criterion {number}] {'ACCEPT' if ok else 'REJECT'}: {summary}")


def _failed(report):
    return [it.id for it in report.items if not it.passed]


def _ids(report):
    return {it.id for it in report.items}


def test_criterion_1_root_data(capsys):
    t0 = time.perf_counter()
    bad = {}
    for t in ROOT_TYPES:
        r = run_roots(t)
        need = {"jacobi", "eta"}
        missing = need - _ids(r)
        if _failed(r) or missing:
            bad[t] = _failed(r) + sorted(missing)
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 30
    _report(capsys, 1, ok, f"Jacobi and eta equalities for {len(ROOT_TYPES)} types, {elapsed:.1f} s (limit 30 s), failures {bad}")
    assert ok


@pytest.mark.parametrize("t", ROOT_TYPES)
def test_criterion_2_classical(capsys, t):
    t0 = time.perf_counter()
    r = run_suite(SuiteConfig("classical", t, zdeg=6))
    elapsed = time.perf_counter() - t0
    ids = _ids(r)
    complete = {"extra-verified", "todo1-todo3", "tchhf", "tchbf", "tcbbf"} <= ids
    ok = r.exit_code == 0 and complete and elapsed < 60
    _report(capsys, 2, ok, f"{t} classical zdeg 6: {len(r.items)} items, failed {_failed(r)}, {elapsed:.1f} s (limit 60 s)")
    assert ok


@pytest.mark.parametrize("t", EMBED_TYPES)
def test_criterion_3_embedding(capsys, t):
    t0 = time.perf_counter()
    emb = run_suite(SuiteConfig("embedding", t))
    cas = run_suite(SuiteConfig("casimir", t))
    elapsed = time.perf_counter() - t0
    need = {"HBrel", "bbi=j", "bbinej", "helper1", "helper2", "hh-cancel", "hi1-J"}
    need_cas = {"lem:omega", "Omega", "coprohi1"}
    complete = need <= _ids(emb) and need_cas <= _ids(cas)
    failed = _failed(emb) + _failed(cas)
    ok = not failed and complete and elapsed < 120
    _report(capsys, 3, ok, f"{t} embedding+casimir: {len(emb.items) + len(cas.items)} items, failed {failed}, {elapsed:.1f} s (limit 120 s)")
    assert ok


def test_criterion_4_rank_one(capsys):
    t0 = time.perf_counter()
    r = run_suite(SuiteConfig("rank1", order=8, maxidx=10))
    elapsed = time.perf_counter() - t0
    need = {"ty0", "ty1", "ty2", "add-rel", "xi+xi-", "bi0biu", "h-est", "b-est", "co-est", "h-est-strong", "cap"}
    complete = need <= _ids(r)
    ty = r.item("ty0").detail
    cap = r.item("cap").detail
    ok = r.exit_code == 0 and complete and elapsed < 300 and cap["rank"] == cap["monomials"]
    _report(capsys, 4, ok, f"rank-one Drinfeld suite: {len(r.items)} items, failed {_failed(r)}, "
                           f"ty0 instances {ty.get('instances')}, cap rank {cap['rank']}/{cap['monomials']}, {elapsed:.1f} s (limit 300 s)")
    assert ok


def test_criterion_5_rtt(capsys):
    t0 = time.perf_counter()
    r = run_suite(SuiteConfig("rtt", order=6))
    elapsed = time.perf_counter() - t0
    need = {"rtt-closed-form", "quaternary", "symmetry", "qdet", "qdet-central", "sdet", "sdet-central",
            "s=qdet", "sdet-even", "copro-R1", "copro-R2", "bridge-drinfeld-relations", "bridge-f-e",
            "bridge-prop-a2", "bridge-generators"}
    complete = need <= _ids(r)
    ok = r.exit_code == 0 and complete and elapsed < 300
    _report(capsys, 5, ok, f"RTT suite order 6: {len(r.items)} items, failed {_failed(r)}, {elapsed:.1f} s (limit 300 s)")
    assert ok


def test_criterion_6_negative_controls(capsys):
    serre = run_suite(SuiteConfig("classical", "C2", zdeg=6, mutate={"tcfSerre2f": -5}))
    hbrel = run_suite(SuiteConfig("embedding", "A2", mutate={"hi1-embedding": 0}))
    serre_failed, hb_failed = _failed(serre), _failed(hbrel)
    ok = "tcfSerre2f" in serre_failed and "HBrel" in hb_failed and serre.exit_code == 1 and hbrel.exit_code == 1
    _report(capsys, 6, ok, f"Serre control flips {serre_failed}; square-sum control flips {hb_failed}")
    assert ok


def test_criterion_7_cross_engine(capsys):
    r = run_suite(SuiteConfig("rtt", order=6))
    cross = [it for it in r.items if it.id.startswith("cross-")]
    disagree = [it.id for it in cross if (it.detail.get("drinfeld"), it.detail.get("rtt")) != ("pass", "pass")]
    ok = bool(cross) and not disagree and all(it.passed for it in cross)
    _report(capsys, 7, ok, f"{len(cross)} shared rank-one identities, pass/pass in both engines; disagreements {disagree}")
    assert ok
