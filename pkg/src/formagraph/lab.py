"""Verification suites over the group catalog.

Each suite walks a selection of catalog groups and emits one or more case
records per group.  A case carries a verdict (``pass``, ``fail`` or
``skipped``), an ``asserted`` flag (report-only comparisons are recorded but
never make a run fail) and witness data for anything that went wrong.

Work is split per group, so runs with several worker processes give exactly
the same records, in the same order, as serial runs.
"""
from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from . import bits as B
from . import catalog as C
from . import formations as FM
from . import graphs as GR
from . import structure as S
from .core import (
    FiniteGroup,
    center,
    closure_bits,
    conjugacy_classes,
    conjugate_bits,
    is_isomorphic,
    is_subgroup_bits,
    mul,
    quotient,
    subgroup,
    subgroup_as_group,
)
from .errors import LatticeCapExceeded, OrderCapExceeded, UnsupportedFormation

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"
WITNESS_LIMIT = 12

# formations whose regularity is known (radical identities, S_pN)
REGULAR = ("abelian", "nilpotent", "soluble", "pcore-fitting:2:1", "pcore-fitting:3:1",
           "pcore-fitting:5:1")
SEMIREGULAR = ("supersoluble", "nilpotent-derived", "fitting:1", "fitting:2", "fitting:3") + tuple(
    f"pcore-fitting:{p}:{t}" for p in (2, 3, 5) for t in (0, 1, 2))
CONNECTED = ("abelian", "nilpotent", "soluble", "supersoluble", "nilpotent-derived", "fitting:2",
             "pcore-fitting:2:1")
PLANARITY = ("nilpotent", "supersoluble", "nilpotent-derived")
SATURATED = ("nilpotent", "soluble", "supersoluble", "nilpotent-derived", "fitting:2",
             "pcore-fitting:2:1", "pcore-fitting:3:1")
CRITICAL = ("abelian", "nilpotent", "soluble", "supersoluble", "pcore-fitting:2:1")
SEMI_STRUCTURE = ("supersoluble", "nilpotent-derived", "fitting:2")
LEMMA10_GROUPS = ("S3", "S4", "G200")


@dataclass(frozen=True)
class Case:
    group: str
    formation: str
    verdict: str
    witness: object = None
    asserted: bool = True
    check: str = ""
    note: str = ""

    def to_json(self) -> dict:
        out = {"group": self.group, "formation": self.formation, "check": self.check,
               "verdict": self.verdict, "asserted": self.asserted, "witness": self.witness}
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class SuiteResult:
    suite: str
    cases: list[Case] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def summary(self) -> dict:
        count = {PASS: 0, FAIL: 0, SKIPPED: 0}
        asserted_fail = 0
        for c in self.cases:
            count[c.verdict] += 1
            if c.verdict == FAIL and c.asserted:
                asserted_fail += 1
        return {"total": len(self.cases), "pass": count[PASS], "fail": count[FAIL],
                "skipped": count[SKIPPED], "asserted_fail": asserted_fail}

    @property
    def ok(self) -> bool:
        return self.summary["asserted_fail"] == 0

    def failures(self, asserted_only: bool = True) -> list[Case]:
        return [c for c in self.cases if c.verdict == FAIL and (c.asserted or not asserted_only)]

    def to_json(self, timing: bool = True) -> dict:
        out = {"suite": self.suite, "cases": [c.to_json() for c in self.cases],
               "summary": self.summary}
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def dumps(self, timing: bool = True) -> str:
        return json.dumps(self.to_json(timing), indent=2, sort_keys=True)


# ------------------------------------------------------------------ helpers


def _labels(G: FiniteGroup, bits: int, limit: Optional[int] = WITNESS_LIMIT) -> list[str]:
    out = [G.labels[i] for i in B.iter_bits(bits)]
    return out if limit is None or len(out) <= limit else out[:limit] + ["..."]


def _case(G, F, verdict, witness=None, asserted=True, check="", note="") -> Case:
    return Case(G.name, str(F), verdict, witness, asserted, check, note)


def _verdict(ok: bool) -> str:
    return PASS if ok else FAIL


def isolated(G: FiniteGroup, F: FM.FormationSpec) -> int:
    """I_F(G) as a bitset."""
    return GR.isolated_bits(GR.build_nonf_graph(G, F))


def closure_failure(G: FiniteGroup, bits: int):
    """None if ``bits`` is a subgroup, else a witness of why it is not."""
    if not bits & 1:
        return {"reason": "identity not isolated", "size": bits.bit_count()}
    if is_subgroup_bits(G, bits):
        return None
    members = list(B.iter_bits(bits))
    for a in members:
        for b in members:
            c = mul(G, a, b)
            if not bits >> c & 1:
                return {"reason": "not closed", "a": G.labels[a], "b": G.labels[b],
                        "product": G.labels[c]}
    return None


def _formations(names: Iterable) -> list[FM.FormationSpec]:
    return [f if isinstance(f, FM.FormationSpec) else FM.parse_formation(f) for f in names]


# ------------------------------------------------------------------ checks
# Each check maps (G, formations) to a list of cases for that group.


def check_radicals(G: FiniteGroup, _=None) -> list[Case]:
    want = ((FM.ABELIAN, center(G).bits, "center"),
            (FM.NILPOTENT, S.hypercenter(G).bits, "hypercenter"),
            (FM.SOLUBLE, S.soluble_radical(G).bits, "soluble radical"))
    out = []
    for F, expect, what in want:
        got = isolated(G, F)
        witness = None if got == expect else {
            "isolated": _labels(G, got), "expected": what, "expected_members": _labels(G, expect)}
        out.append(_case(G, F, _verdict(got == expect), witness, check=f"isolated == {what}"))
    return out


def check_semiregular(G: FiniteGroup, formations) -> list[Case]:
    out = []
    for F in formations:
        bad = closure_failure(G, isolated(G, F))
        # T-groups are not covered by any claim: record only
        out.append(_case(G, F, _verdict(bad is None), bad, asserted=F.hereditary,
                         check="isolated set is a subgroup"))
    return out


def known_regular(F: FM.FormationSpec) -> bool:
    return F.kind in ("abelian", "nilpotent", "soluble") or (F.kind == "pcore-fitting"
                                                             and F.t == 1)


def check_regularity(G: FiniteGroup, formations) -> list[Case]:
    out = []
    for F in formations:
        phi = FM.phi_F(G, F).bits
        iso = isolated(G, F)
        equal = phi == iso
        witness = None if equal else {"phi": _labels(G, phi), "phi_size": phi.bit_count(),
                                      "isolated_size": iso.bit_count(),
                                      "isolated": _labels(G, iso)}
        if known_regular(F):
            out.append(_case(G, F, _verdict(equal), witness, check="phi_F == isolated"))
        elif F.kind == "supersoluble" and G.name == "G200":
            soc = S.socle(G).bits
            ok = phi == 1 and iso & soc == soc and soc.bit_count() >= 25
            out.append(_case(G, F, _verdict(ok), witness, check="phi_F trivial, socle isolated",
                             note="expected unequal"))
        else:
            out.append(_case(G, F, _verdict(equal), witness, asserted=False,
                             check="phi_F == isolated"))
    return out


def check_connectivity(G: FiniteGroup, formations) -> list[Case]:
    out = []
    for F in formations:
        if FM.is_member(G, F):
            out.append(_case(G, F, PASS, check="pruned graph connected", note="vacuous: G in F"))
            continue
        dec = GR.components(GR.prune(GR.build_nonf_graph(G, F)))
        witness = None if dec.count <= 1 else {"components": dec.count, "sizes": list(dec.sizes)}
        out.append(_case(G, F, _verdict(dec.count <= 1), witness, check="pruned graph connected"))
    return out


def _is_s3(G: FiniteGroup) -> bool:
    return G.order == 6 and is_isomorphic(G, C.builtin("S3"))


def check_planarity(G: FiniteGroup, formations) -> list[Case]:
    out = []
    for F in formations:
        graph = GR.prune(GR.build_nonf_graph(G, F))
        verdict = GR.is_planar(graph)
        member = FM.is_member(G, F)
        expect = member or _is_s3(G)
        ok = verdict.planar == expect
        witness = {"planar": verdict.planar, "certificate": verdict.certificate,
                   "in_F": member, "vertices": graph.vertex_count,
                   "edges": graph.edge_count}
        out.append(_case(G, F, _verdict(ok), witness, check="planar iff G in F or G = S3"))
    return out


def check_icyc(G: FiniteGroup, formations) -> list[Case]:
    out = []
    for F in formations:
        iso = isolated(G, F)
        if not is_subgroup_bits(G, iso):
            out.append(_case(G, F, PASS, check="G = I<g> implies G in F",
                             note="vacuous: isolated set not a subgroup"))
            continue
        g = next((x for x in range(G.order) if closure_bits(G, iso | 1 << x) == G.all_bits), None)
        if g is None:
            out.append(_case(G, F, PASS, check="G = I<g> implies G in F",
                             note="vacuous: no g with G = I<g>"))
            continue
        ok = FM.is_member(G, F)
        out.append(_case(G, F, _verdict(ok), None if ok else {"g": G.labels[g]},
                         check="G = I<g> implies G in F"))
    return out


def _quotient_is_cyclic(Q: FiniteGroup) -> bool:
    return int(Q.elem_order.max()) == Q.order


def check_critical(G: FiniteGroup, formations, strongly: bool = True) -> list[Case]:
    out = []
    for F in formations:
        v = FM.criticality(G, F)
        hit = v.is_strongly_critical if strongly else v.is_critical
        if not hit:
            if F.kind == "supersoluble" and G.name == "G200":
                out.append(_case(G, F, FAIL, {"witness": v.witness and v.witness[0]},
                                 check="G200 listed as strongly critical"))
            continue
        if not S.is_soluble(G):
            out.append(_case(G, F, PASS, {"soluble": False}, asserted=False,
                             check="critical group listed"))
            continue
        soc = S.socle(G)
        Q, _ = quotient(G, soc, check=False)
        cyclic = _quotient_is_cyclic(Q)
        info = {"socle_size": soc.size, "quotient_order": Q.order, "quotient_cyclic": cyclic}
        if F.kind == "abelian":
            # A is not saturated, so the cyclic criterion is not claimed; the
            # identity phi_A = Z is checked instead
            phi = FM.phi_F(G, F).bits
            ok = phi == center(G).bits
            info["flag"] = "abelian is not saturated; checked phi_A == Z"
            out.append(_case(G, F, _verdict(ok), info, check="phi_A == center"))
        elif F.kind == "supersoluble" and G.name == "G200":
            info["quotient_is_Q8"] = is_isomorphic(Q, C.builtin("Q8"))
            ok = not cyclic and info["quotient_is_Q8"]
            out.append(_case(G, F, _verdict(ok), info, check="G/soc non-cyclic, isomorphic to Q8"))
        elif known_regular(F):
            out.append(_case(G, F, _verdict(cyclic), info, check="G/soc cyclic"))
        else:
            out.append(_case(G, F, PASS, info, asserted=False, check="G/soc reported"))
    return out


def _image(proj, bits: int, m: int) -> int:
    mask = bytearray(m)
    for c in proj[B.to_indices(bits, len(proj))].tolist():
        mask[c] = 1
    return B.from_bytemask(mask)


def check_frf(G: FiniteGroup, formations) -> list[Case]:
    out = []
    for F in formations:
        phi = FM.phi_F(G, F).bits
        bad_a = None
        if not FM.is_member(G, F):
            subs, _ = FM.f_subgroups(G, F)
            for H in subs:
                j = closure_bits(G, H | phi)
                if not FM.is_member_bits(G, j, F):
                    bad_a = {"H": _labels(G, H), "join_size": j.bit_count()}
                    break
        out.append(_case(G, F, _verdict(bad_a is None), bad_a, check="H in F implies H phi_F in F"))
        bad_b = None
        for N in S.normal_subgroup_bits(G):
            if N == 1 or N & ~phi:
                continue
            Q, proj = quotient(G, subgroup(G, N), check=False)
            image = _image(proj, phi, Q.order)
            if image != FM.phi_F(Q, F).bits:
                bad_b = {"N": _labels(G, N), "image_size": image.bit_count(),
                         "phi_quotient_size": FM.phi_F(Q, F).size}
                break
        out.append(_case(G, F, _verdict(bad_b is None), bad_b,
                         check="phi_F(G)/N == phi_F(G/N)"))
    return out


def check_lemma_n(G: FiniteGroup, formations) -> list[Case]:
    out = []
    for F in formations:
        if FM.is_member(G, F):
            continue
        normals = [N for N in S.normal_subgroup_bits(G) if N != 1]
        if not all(FM.is_member(quotient(G, subgroup(G, N), check=False)[0], F) for N in normals):
            continue
        if S.soluble_radical(G).is_trivial():
            out.append(_case(G, F, PASS, {"soluble_radical": "trivial"}, check="lemma N"))
            continue
        pms = S.primitive_monolithic_soluble(G)
        ok = pms is not None and S.socle(G).bits == FM.residual(G, F).bits
        witness = {"primitive_monolithic": pms is not None, "socle": S.socle(G).size,
                   "residual": FM.residual(G, F).size}
        out.append(_case(G, F, _verdict(ok), witness, check="lemma N"))
    return out


def _coset_bits(proj, m: int) -> list[int]:
    cos = [0] * m
    for x, c in enumerate(proj.tolist()):
        cos[c] |= 1 << x
    return cos


def check_graph_properties(G: FiniteGroup, formations) -> list[Case]:
    out = []
    gen = GR.build_generating_graph(G)
    classes = conjugacy_classes(G)
    quotients = []
    for N in S.normal_subgroup_bits(G):
        if N not in (1, G.all_bits):
            Q, proj = quotient(G, subgroup(G, N), check=False)
            quotients.append((N, Q, proj, _coset_bits(proj, Q.order)))
    for F in formations:
        graph = GR.build_nonf_graph(G, F)
        rows = graph.adjacency
        iso = GR.isolated_bits(graph)
        if not FM.is_member(G, F):
            bad = next(((u, B.lowest(r & ~rows[u])) for u, r in enumerate(gen.adjacency)
                        if r & ~rows[u]), None)
            out.append(_case(G, F, _verdict(bad is None),
                             bad and [G.labels[bad[0]], G.labels[bad[1]]],
                             check="generating graph is a subgraph"))
        split = next((c for c in classes if any(iso >> x & 1 for x in c)
                      and not all(iso >> x & 1 for x in c)), None)
        out.append(_case(G, F, _verdict(split is None),
                         split and [G.labels[x] for x in split[:WITNESS_LIMIT]],
                         check="isolated set is a union of classes"))
        mono = lift = None
        for N, Q, proj, cos in quotients:
            if F.hereditary and FM.is_member(Q, F):
                # edgeless quotient graph: every coset isolated, nothing to lift
                continue
            qgraph = GR.build_nonf_graph(Q, F)
            if mono is None:
                qiso = GR.isolated_bits(qgraph)
                g = next((x for x in B.iter_bits(iso) if not qiso >> int(proj[x]) & 1), None)
                if g is not None:
                    mono = {"N": _labels(G, N), "g": G.labels[g]}
            if lift is None:
                # preimage of each quotient vertex's neighbourhood
                want = []
                for row in qgraph.adjacency:
                    w = 0
                    for c in B.iter_bits(row):
                        w |= cos[c]
                    want.append(w)
                for g, c in enumerate(proj.tolist()):
                    missing = want[c] & ~rows[g]
                    if missing:
                        lift = {"N": _labels(G, N), "g": G.labels[g],
                                "h": G.labels[B.lowest(missing)]}
                        break
            if mono is not None and lift is not None:
                break
        out.append(_case(G, F, _verdict(mono is None), mono, check="isolated passes to quotients"))
        out.append(_case(G, F, _verdict(lift is None), lift, check="quotient edges lift"))
    return out


def _core(G: FiniteGroup, H: int) -> int:
    core = H
    for g in range(G.order):
        core &= conjugate_bits(G, H, g)
        if core == 1:
            break
    return core


def check_lemma10(G: FiniteGroup, _=None) -> list[Case]:
    pms = S.primitive_monolithic_soluble(G)
    if pms is None:
        return []
    N = pms[0].bits
    VG = S.generating_pair_elements(G)
    out = []
    for M in S.maximal_subgroups(G):
        H = M.bits
        if _core(G, H) != 1:
            continue
        K, idx = subgroup_as_group(G, H)
        VH = {int(idx[k]) for k in S.generating_pair_elements(K)}
        bad = None
        for h in B.iter_bits(H & ~1):
            for n in B.iter_bits(N):
                if ((mul(G, h, n) in VG) != (h in VH)):
                    bad = {"H": _labels(G, H), "h": G.labels[h], "n": G.labels[n]}
                    break
            if bad:
                break
        out.append(Case(G.name, "", _verdict(bad is None), bad,
                        check=f"hn in V(G) iff h in V(H), |H| = {M.size}"))
    return out


def semi_structure(G: FiniteGroup, F: FM.FormationSpec, p: Optional[int] = None) -> list[Case]:
    """Both sides of the structure statements for a primitive monolithic soluble G.

    Items: (2) N<s> in F for all s in S; (3) ns isolated iff N<s,t> in F for
    all t in S; (4a) NK in F iff K in the local class; (4b) I_F(G) = N I(S)
    for the local class.  All are report-only.
    """
    def rep(verdict, witness, check, note=""):
        return _case(G, F, verdict, witness, asserted=False, check=check, note=note)

    pms = S.primitive_monolithic_soluble(G)
    if pms is None:
        return [rep(SKIPPED, {"error": "not primitive monolithic soluble"}, "semi structure")]
    N, Sc = pms[0].bits, pms[1].bits
    p = p or S.prime_divisors(pms[0].size)[0]
    out = []
    join = lambda *xs: closure_bits(G, N | sum(1 << x for x in xs))
    svals = list(B.iter_bits(Sc))
    bad = next((s for s in svals if not FM.is_member_bits(G, join(s), F)), None)
    out.append(rep(_verdict(bad is None), None if bad is None else G.labels[bad], "(2) N<s> in F"))

    iso = isolated(G, F)
    bad = None
    for s in svals:
        rhs = all(FM.is_member_bits(G, join(s, t), F) for t in svals)
        for n in B.iter_bits(N):
            if bool(iso >> mul(G, n, s) & 1) != rhs:
                bad = {"n": G.labels[n], "s": G.labels[s], "rhs": rhs}
                break
        if bad:
            break
    out.append(rep(_verdict(bad is None), bad, "(3) ns isolated iff N<s,t> in F"))

    try:
        FM.fbar_member(subgroup_as_group(G, Sc)[0], p, F)
    except UnsupportedFormation as exc:
        out.append(rep(SKIPPED, {"error": str(exc)}, "(4) local class"))
        return out
    bad = None
    for K in S.all_subgroups(G).subgroups:
        if K.bits & ~Sc:
            continue
        lhs = FM.is_member_bits(G, closure_bits(G, N | K.bits), F)
        if lhs != FM.fbar_member((G, K.bits), p, F):
            bad = {"K": _labels(G, K.bits), "NK_in_F": lhs}
            break
    out.append(rep(_verdict(bad is None), bad, "(4a) NK in F iff K in local class"))
    ibar = 0
    for s in svals:
        if all(FM.fbar_member((G, closure_bits(G, (1 << s) | (1 << t) | 1)), p, F) for t in svals):
            ibar |= 1 << s
    rhs = 0
    for n in B.iter_bits(N):
        for s in B.iter_bits(ibar):
            rhs |= 1 << mul(G, n, s)
    out.append(rep(_verdict(rhs == iso), None if rhs == iso else {
        "isolated_size": iso.bit_count(), "product_size": rhs.bit_count()},
        "(4b) I_F(G) == N I(S)", note=f"p = {p}"))
    return out


def check_semi_structure(G: FiniteGroup, formations) -> list[Case]:
    if S.primitive_monolithic_soluble(G) is None:
        return []
    out = []
    for F in formations:
        out.extend(semi_structure(G, F))
    return out


# ------------------------------------------------------------------ runner


@dataclass(frozen=True)
class SuiteDef:
    check: Callable
    formations: tuple[str, ...]
    groups: Optional[tuple[str, ...]] = None


SUITES: dict[str, SuiteDef] = {
    "radicals": SuiteDef(check_radicals, ("abelian", "nilpotent", "soluble")),
    "semiregular": SuiteDef(check_semiregular, SEMIREGULAR + ("tgroups",)),
    "regularity": SuiteDef(check_regularity, REGULAR + ("supersoluble",)),
    "connectivity": SuiteDef(check_connectivity, CONNECTED),
    "planarity": SuiteDef(check_planarity, PLANARITY),
    "icyc": SuiteDef(check_icyc, CONNECTED),
    "critical": SuiteDef(check_critical, CRITICAL),
    "frf": SuiteDef(check_frf, SATURATED),
    "lemma-n": SuiteDef(check_lemma_n, SATURATED),
    "graph-properties": SuiteDef(check_graph_properties, CONNECTED),
    "lemma10": SuiteDef(check_lemma10, (), LEMMA10_GROUPS),
    "semi-structure": SuiteDef(check_semi_structure, SEMI_STRUCTURE),
}
ALL_SUITES = tuple(SUITES)
# suites run by "all" (the expensive property suites are opt-in)
DEFAULT_SUITES = ("radicals", "semiregular", "regularity", "connectivity", "planarity", "icyc",
                  "critical")


def _group_cases(suite: str, name: str, formation_names: tuple[str, ...]) -> list[Case]:
    G = C.lookup(name)
    forms = _formations(formation_names)
    try:
        return SUITES[suite].check(G, forms)
    except (LatticeCapExceeded, OrderCapExceeded) as exc:
        return [Case(name, f, SKIPPED, {"error": f"{type(exc).__name__}: {exc}"}, check=suite)
                for f in (formation_names or ("",))]


def select_groups(max_order: int = C.DEFAULT_MAX_ORDER,
                  groups: Optional[Sequence[str]] = None) -> list[str]:
    names = list(groups) if groups is not None else list(C.default_catalog())
    return [n for n in names if C.lookup(n).order <= max_order]


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("FORMAGRAPH_WORKERS", "1")))
    except ValueError:
        return 1


def run_suite(suite: str, groups: Optional[Sequence[str]] = None,
              max_order: int = C.DEFAULT_MAX_ORDER,
              formations: Optional[Sequence] = None,
              workers: Optional[int] = None) -> SuiteResult:
    """Run one suite over a catalog selection; cases come out in catalog order."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(ALL_SUITES)}")
    sdef = SUITES[suite]
    t0 = time.perf_counter()
    if groups is None and sdef.groups is not None:
        groups = sdef.groups
    names = select_groups(max_order, groups)
    fnames = tuple(str(f) for f in _formations(formations)) if formations else sdef.formations
    workers = default_workers() if workers is None else max(1, workers)
    if workers == 1 or len(names) < 2:
        chunks = [_group_cases(suite, n, fnames) for n in names]
    else:
        # large groups first keeps the pool busy; results are re-sorted below
        order = sorted(range(len(names)), key=lambda i: -C.lookup(names[i]).order)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = {i: pool.submit(_group_cases, suite, names[i], fnames) for i in order}
            chunks = [futures[i].result() for i in range(len(names))]
    result = SuiteResult(suite, [c for chunk in chunks for c in chunk])
    result.wall_time = time.perf_counter() - t0
    return result


def run_all(max_order: int = C.DEFAULT_MAX_ORDER, formations=None, workers=None,
            suites: Sequence[str] = DEFAULT_SUITES) -> list[SuiteResult]:
    return [run_suite(s, max_order=max_order, formations=formations, workers=workers)
            for s in suites]


# named entry points


def suite_radical_identities(groups=None, max_order=C.DEFAULT_MAX_ORDER, workers=None):
    return run_suite("radicals", groups, max_order, workers=workers)


def suite_semiregularity(groups=None, formations=None, max_order=C.DEFAULT_MAX_ORDER,
                         workers=None):
    return run_suite("semiregular", groups, max_order, formations, workers)


def suite_regularity_witness(groups=None, formations=None, max_order=C.DEFAULT_MAX_ORDER,
                             workers=None):
    return run_suite("regularity", groups, max_order, formations, workers)


def suite_connectivity(groups=None, formations=None, max_order=C.DEFAULT_MAX_ORDER,
                       workers=None):
    return run_suite("connectivity", groups, max_order, formations, workers)


def suite_planarity(groups=None, formations=None, max_order=C.DEFAULT_MAX_ORDER, workers=None):
    return run_suite("planarity", groups, max_order, formations, workers)


def suite_icyc(groups=None, formations=None, max_order=C.DEFAULT_MAX_ORDER, workers=None):
    return run_suite("icyc", groups, max_order, formations, workers)


def search_critical(groups=None, formations=None, strongly: bool = True,
                    max_order=C.DEFAULT_MAX_ORDER, workers=None):
    if strongly:
        return run_suite("critical", groups, max_order, formations, workers)
    t0 = time.perf_counter()
    cases = []
    for n in select_groups(max_order, groups):
        cases += check_critical(C.lookup(n), _formations(formations or CRITICAL), strongly=False)
    return SuiteResult("critical", cases, time.perf_counter() - t0)


def suite_thm_semi_structure(G, F, p: Optional[int] = None) -> SuiteResult:
    t0 = time.perf_counter()
    if isinstance(G, str):
        G = C.lookup(G)
    if isinstance(F, str):
        F = FM.parse_formation(F)
    return SuiteResult("semi-structure", semi_structure(G, F, p), time.perf_counter() - t0)
