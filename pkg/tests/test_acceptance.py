"""Acceptance criteria, one test per criterion (criterion 3 is split by t).

Every test records a one-line verdict; the lines are printed in the pytest
terminal summary and when this file is run directly.
"""
import json
import os
import subprocess
import sys
import time

import pytest

from formagraph import catalog as C
from formagraph import formations as FM
from formagraph import graphs as GR
from formagraph import lab
from formagraph import structure as S
from formagraph.core import is_isomorphic, is_subgroup_bits, quotient

VERDICTS: list[str] = []
CATALOG_PRIMES = sorted({p for n in C.default_catalog() for p in S.prime_divisors(C.lookup(n).order)})


def record(criterion, ok, detail, t0):
    line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'} ({time.perf_counter() - t0:.1f}s) {detail}"
    VERDICTS.append(line)
    print(line)
    assert ok, line


def describe(result):
    s = result.summary
    return f"{result.suite}: {s['total']} cases, {s['asserted_fail']} asserted failures"


def first_failures(result, k=3):
    return [(c.group, c.formation, c.check) for c in result.failures()[:k]]


def test_criterion_01_radicals():
    t0 = time.perf_counter()
    r = lab.run_suite("radicals", max_order=200)
    record(1, r.ok and r.summary["pass"] == r.summary["total"], describe(r), t0)


def test_criterion_02_t100():
    t0 = time.perf_counter()
    T = C.builtin("T100")
    a, b = T.named["a"], T.named["b"]
    ab = int(T.table[a, b])
    iso = GR.isolated_bits(GR.build_nonf_graph(T, FM.TGROUPS))
    fails = lab.closure_failure(T, iso) is not None
    ok = bool(iso >> a & 1) and bool(iso >> b & 1) and not iso >> ab & 1 and fails \
        and not is_subgroup_bits(T, iso)
    record(2, ok, f"|I_T| = {iso.bit_count()}, a, b isolated, ab not isolated: {ok}", t0)


def test_criterion_03_semiregular():
    t0 = time.perf_counter()
    forms = ["supersoluble", "nilpotent-derived", "fitting:1", "fitting:2", "fitting:3"] + [
        f"pcore-fitting:{p}:{t}" for p in (2, 3, 5) for t in (1, 2)]
    r = lab.run_suite("semiregular", formations=forms, max_order=200)
    record("3 (t >= 1)", r.ok, describe(r), t0)


def test_criterion_03_semiregular_pgroups():
    # pcore-fitting:p:0 is the class of p-groups: off p-groups no vertex is
    # isolated, and the empty set is not a subgroup
    t0 = time.perf_counter()
    forms = [f"pcore-fitting:{p}:0" for p in (2, 3, 5)]
    r = lab.run_suite("semiregular", formations=forms, max_order=200)
    record("3 (t = 0)", r.ok, f"{describe(r)}; first: {first_failures(r)}", t0)


def test_criterion_04_g200():
    t0 = time.perf_counter()
    G = C.builtin("G200")
    U = FM.SUPERSOLUBLE
    soc = S.socle(G)
    iso = GR.isolated_bits(GR.build_nonf_graph(G, U))
    phi = FM.phi_F(G, U)
    crit = FM.criticality(G, U)
    Q, _ = quotient(G, soc)
    q8 = is_isomorphic(Q, C.builtin("Q8"))
    ok = phi.size == 1 and iso & soc.bits == soc.bits and soc.size >= 25 \
        and crit.is_strongly_critical and q8
    record(4, ok, f"|phi_U| = {phi.size}, |soc| = {soc.size}, |I_U| = {iso.bit_count()}, "
                  f"strongly critical = {crit.is_strongly_critical}, G/soc = Q8: {q8}", t0)


def test_criterion_05_regularity():
    t0 = time.perf_counter()
    forms = ["abelian", "nilpotent", "soluble"] + [f"pcore-fitting:{p}:1" for p in CATALOG_PRIMES]
    r = lab.run_suite("regularity", formations=forms, max_order=200)
    asserted = all(c.asserted for c in r.cases if c.verdict != lab.SKIPPED)
    record(5, r.ok and asserted, f"{describe(r)}; primes {CATALOG_PRIMES}", t0)


def test_criterion_06_connectivity():
    t0 = time.perf_counter()
    r = lab.run_suite("connectivity", max_order=200)
    record(6, r.ok, describe(r), t0)


def test_criterion_07_planarity():
    t0 = time.perf_counter()
    r = lab.run_suite("planarity", max_order=200)
    G = C.builtin("D6")
    g = GR.prune(GR.build_nonf_graph(G, FM.NILPOTENT))
    z = {x for x in range(12) if all(G.table[x, y] == G.table[y, x] for y in range(12))}
    invols = [x for x in range(12) if G.elem_order[x] == 2 and x not in z]
    threes = [x for x in range(12) if G.elem_order[x] % 3 == 0]
    k64 = len(invols) == 6 and len(threes) == 4 and GR.contains_complete_bipartite(g, invols,
                                                                                      threes)
    nonplanar = not GR.is_planar(g).planar
    record(7, r.ok and k64 and nonplanar,
           f"{describe(r)}; D6 contains K6,4: {k64}, nonplanar: {nonplanar}", t0)


def test_criterion_08_frf():
    t0 = time.perf_counter()
    r = lab.run_suite("frf", max_order=200)
    parts = {c.check for c in r.cases}
    record(8, r.ok and len(parts) >= 2, f"{describe(r)}; checks {sorted(parts)}", t0)


def test_criterion_09_graph_properties():
    t0 = time.perf_counter()
    r = lab.run_suite("graph-properties", max_order=200)
    l10 = lab.run_suite("lemma10")
    groups = sorted({c.group for c in l10.cases})
    ok = r.ok and l10.ok and groups == sorted(lab.LEMMA10_GROUPS)
    record(9, ok, f"{describe(r)}; {describe(l10)} on {groups}", t0)


def _verify_all(workers, path):
    env = dict(os.environ, FORMAGRAPH_WORKERS=str(workers))
    cmd = [sys.executable, "-m", "formagraph", "verify", "--suite", "all", "--no-timing",
           "--workers", str(workers), "--out", str(path)]
    subprocess.run(cmd, env=env, check=False, capture_output=True)
    return path.read_bytes()


def test_criterion_10_determinism(tmp_path):
    t0 = time.perf_counter()
    first = _verify_all(1, tmp_path / "a.json")
    second = _verify_all(1, tmp_path / "b.json")
    parallel = _verify_all(4, tmp_path / "c.json")
    suites = [d["suite"] for d in json.loads(first)]
    ok = first == second == parallel and suites == list(lab.DEFAULT_SUITES)
    record(10, ok, f"{len(first)} bytes; serial runs equal: {first == second}, "
                   f"4 workers equal: {first == parallel}", t0)


if __name__ == "__main__":
    code = pytest.main([__file__, "-q"])
    print("\n".join(VERDICTS))
    sys.exit(code)
