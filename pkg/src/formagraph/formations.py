"""Membership in the supported group classes, residuals, F-Frattini subgroups.

Supported classes (CLI grammar in parentheses):

=================  =====================  =========================================
abelian            ``abelian``            all pairs commute
nilpotent          ``nilpotent``          lower central series reaches 1
soluble            ``soluble``            derived series reaches 1
supersoluble       ``supersoluble``       soluble, every chief factor of prime order
nilpotent-derived  ``nilpotent-derived``  derived subgroup nilpotent
N^t                ``fitting:<t>``        Fitting length at most t (t >= 1)
S_p N^t            ``pcore-fitting:p:t``  G/O_p(G) has Fitting length at most t
T-groups           ``tgroups``            normality is transitive
=================  =====================  =========================================

All but the last are hereditary saturated formations; T-groups are a bare
class and every formation-axiom shortcut is switched off for them.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Optional

from . import bits as B
from . import structure as S
from .core import (
    center,
    FiniteGroup,
    SubgroupSet,
    closure_bits,
    closure_gens,
    extend_subgroup,
    cyclic_subgroups,
    is_normal_bits,
    quotient,
    subgroup,
    subgroup_as_group,
)
from .errors import NoResidual, NotPrime, UnsupportedFormation

KINDS = ("abelian", "nilpotent", "soluble", "supersoluble", "nilpotent-derived",
         "fitting", "pcore-fitting", "tgroups")


@dataclass(frozen=True)
class FormationSpec:
    kind: str
    p: Optional[int] = None
    t: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown formation {self.kind!r}")
        if self.kind == "fitting":
            if self.t is None or self.t < 1:
                raise ValueError("fitting:<t> needs t >= 1")
        elif self.kind == "pcore-fitting":
            if self.p is None or not S.is_prime(self.p):
                raise NotPrime(f"pcore-fitting needs a prime, got {self.p}")
            if self.t is None or self.t < 0:
                raise ValueError("pcore-fitting:<p>:<t> needs t >= 0")
        elif self.p is not None or self.t is not None:
            raise ValueError(f"{self.kind} takes no parameters")

    def __str__(self):
        if self.kind == "fitting":
            return f"fitting:{self.t}"
        if self.kind == "pcore-fitting":
            return f"pcore-fitting:{self.p}:{self.t}"
        return self.kind

    @property
    def hereditary(self) -> bool:
        return self.kind != "tgroups"

    @property
    def is_formation(self) -> bool:
        return self.kind != "tgroups"

    @property
    def contains_cyclic(self) -> bool:
        return not (self.kind == "pcore-fitting" and self.t == 0)


def parse_formation(text: str) -> FormationSpec:
    """Parse the CLI grammar, e.g. ``"fitting:2"`` or ``"pcore-fitting:3:1"``."""
    parts = text.strip().split(":")
    kind = parts[0]
    try:
        if kind == "fitting" and len(parts) == 2:
            return FormationSpec(kind, t=int(parts[1]))
        if kind == "pcore-fitting" and len(parts) == 3:
            return FormationSpec(kind, p=int(parts[1]), t=int(parts[2]))
        if len(parts) == 1:
            return FormationSpec(kind)
    except ValueError as exc:
        raise ValueError(f"bad formation {text!r}: {exc}") from None
    raise ValueError(f"bad formation {text!r}")


ABELIAN = FormationSpec("abelian")
NILPOTENT = FormationSpec("nilpotent")
SOLUBLE = FormationSpec("soluble")
SUPERSOLUBLE = FormationSpec("supersoluble")
NILPOTENT_DERIVED = FormationSpec("nilpotent-derived")
TGROUPS = FormationSpec("tgroups")


def fitting(t: int) -> FormationSpec:
    return FormationSpec("fitting", t=t)


def pcore_fitting(p: int, t: int) -> FormationSpec:
    return FormationSpec("pcore-fitting", p=p, t=t)


# ---------------------------------------------------------------- membership

# (content_hash, formation string) -> bool; racing writers store equal values
_MEMO: dict[tuple[str, str], bool] = {}
_MEMO_LOCK = threading.Lock()


def clear_memo() -> None:
    with _MEMO_LOCK:
        _MEMO.clear()
        _PHI_MEMO.clear()


def memo_size() -> int:
    return len(_MEMO)


def is_member(G: FiniteGroup, F: FormationSpec) -> bool:
    key = (G.content_hash, str(F))
    got = _MEMO.get(key)
    if got is None:
        got = _decide(G, F)
        with _MEMO_LOCK:
            _MEMO[key] = got
    return got


def is_member_bits(G: FiniteGroup, bits: int, F: FormationSpec) -> bool:
    """Membership of the subgroup with the given bitset."""
    memo = G.cache.setdefault(("member", F), {})
    got = memo.get(bits)
    if got is None:
        got = is_member(subgroup_as_group(G, bits)[0], F)
        memo[bits] = got
    return got


def _decide(G: FiniteGroup, F: FormationSpec) -> bool:
    kind = F.kind
    if G.order == 1:
        return True
    if G.is_abelian() and F.contains_cyclic:
        return True
    if kind == "abelian":
        return G.is_abelian()
    if kind == "pcore-fitting" and F.t == 0:
        return S.is_prime_power(G.order, F.p)
    if kind == "tgroups":
        return _is_t_group(G)
    # p-groups are nilpotent, hence in every remaining class
    if S.is_prime_power(G.order):
        return True
    if kind in ("supersoluble", "nilpotent-derived", "fitting", "pcore-fitting") \
            and kind != "nilpotent" and is_member(G, NILPOTENT):
        return True
    if kind == "nilpotent":
        return S.is_nilpotent(G)
    if kind == "soluble":
        return S.is_soluble(G)
    if kind == "supersoluble":
        return S.is_soluble(G) and all(S.is_prime(k) for k in S.chief_series(G).factor_orders())
    if kind == "nilpotent-derived":
        if not S.is_soluble(G):
            return False
        return S.is_nilpotent(subgroup_as_group(G, S.derived_subgroup(G).bits)[0])
    if kind == "fitting":
        if F.t == 1:
            return is_member(G, NILPOTENT)
        return S.fitting_length(G) <= F.t
    if kind == "pcore-fitting":
        Q, _ = quotient(G, S.p_core(G, F.p), check=False)
        return S.fitting_length(Q) <= F.t
    raise UnsupportedFormation(str(F))


def _is_t_group(G: FiniteGroup) -> bool:
    # H normal in K normal in G must give H normal in G
    for K in S.normal_subgroup_bits(G):
        if K == 1 or K == G.all_bits:
            continue
        KG, idx = subgroup_as_group(G, K)
        for H in S.normal_subgroup_bits(KG):
            if H == 1 or H == KG.all_bits:
                continue
            bits = B.from_indices(idx[B.to_indices(H, KG.order)])
            if not is_normal_bits(G, bits):
                return False
    return True


def t_group_witness(G: FiniteGroup):
    """(H, K) with H normal in K normal in G but H not normal in G, or None."""
    for K in S.normal_subgroup_bits(G):
        KG, idx = subgroup_as_group(G, K)
        for H in S.normal_subgroup_bits(KG):
            bits = B.from_indices(idx[B.to_indices(H, KG.order)])
            if not is_normal_bits(G, bits):
                return subgroup(G, bits), subgroup(G, K)
    return None


# ------------------------------------------------------------------ residual


def residual(G: FiniteGroup, F: FormationSpec) -> SubgroupSet:
    """G^F: the least normal subgroup with quotient in F."""
    if is_member(G, F):
        return subgroup(G, 1)
    cands = [N for N in S.normal_subgroup_bits(G)
             if is_member(quotient(G, subgroup(G, N), check=False)[0], F)]
    if not cands:
        raise NoResidual(f"no quotient of {G.name} lies in {F}")
    meet = G.all_bits
    for N in cands:
        meet &= N
    if meet in cands:
        return subgroup(G, meet)
    if F.is_formation:
        raise AssertionError(f"{F} residual of {G.name} is not unique")
    # T-groups: report the smallest candidate instead of asserting
    return subgroup(G, min(cands, key=lambda b: (b.bit_count(), b)))


# ---------------------------------------------------------------- subgroups


def _generators_of(G: FiniteGroup, bits: int) -> tuple[int, ...]:
    gens: list[int] = []
    got = 1
    for x in B.iter_bits(bits):
        if not got >> x & 1:
            gens.append(x)
            got = closure_gens(G, gens)
    return tuple(gens)


def f_subgroups(G: FiniteGroup, F: FormationSpec, base: int = 1) -> tuple[list[int], list[bool]]:
    """All F-subgroups containing ``base`` (sorted), with flags marking the maximal ones.

    For hereditary F the F-subgroups are grown from ``base`` by adding one
    cyclic subgroup at a time; an F-subgroup is maximal iff no such extension
    stays in F.  Otherwise the full lattice is filtered.  ``base`` must be an
    F-subgroup.
    """
    memo = G.cache.setdefault("f_subgroups", {})
    key = (str(F), base)
    if key in memo:
        return memo[key]
    if F.hereditary:
        cyc, of, _ = S.cyclic_index(G)
        # compat[i]: cyclic j with <c_i, c_j> in F; an extension of cur by c_i
        # can only stay in F if c_i is compatible with every cyclic inside cur
        compat = [0] * len(cyc)
        for bits, pairs in S.joins_by_subgroup(G).items():
            if is_member_bits(G, bits, F):
                for i, j in pairs:
                    compat[i] |= 1 << j
                    compat[j] |= 1 << i
        inside_of = {}

        def inside(bits):
            got = inside_of.get(bits)
            if got is None:
                got = 0
                for x in B.iter_bits(bits):
                    got |= 1 << of[x]
                inside_of[bits] = got
            return got

        _, _, gen_bits = S.cyclic_index(G)
        reps = [B.lowest(g) for g in gen_bits]
        ext = G.cache.setdefault("extensions", {})     # (cur, i) -> <cur, c_i>
        member_memo = G.cache.setdefault(("member", F), {})
        extendable: dict[int, bool] = {base: False}
        gens_of: dict[int, tuple[int, ...]] = {base: _generators_of(G, base)}
        work = [base]
        # subgroups are generated by their cyclic subgroups of prime-power
        # order, and <cur, g> in F implies <cur, g_p> in F for every p-part
        prime_power = 0
        for i, c in enumerate(cyc):
            if c != 1 and S.is_prime_power(c.bit_count()):
                prime_power |= 1 << i
        while work:
            cur = work.pop()
            have = inside(cur)
            cand = prime_power
            for k in B.iter_bits(have):
                cand &= compat[k]
            members = None
            for i in B.iter_bits(cand & ~have):
                j = ext.get((cur, i))
                if j is None:
                    if members is None:
                        members = list(B.iter_bits(cur))
                    j = extend_subgroup(G, cur, gens_of[cur], reps[i], members)
                    ext[cur, i] = j
                ok = member_memo.get(j)
                if ok is None:
                    ok = is_member_bits(G, j, F)
                if not ok:
                    continue
                extendable[cur] = True
                if j not in extendable:
                    extendable[j] = False
                    gens_of[j] = gens_of[cur] + (reps[i],)
                    if len(extendable) > S.LATTICE_SIZE_CAP:
                        raise S.LatticeCapExceeded(f"more than {S.LATTICE_SIZE_CAP} F-subgroups")
                    work.append(j)
        subs = sorted(extendable, key=S._sort_key)
        flags = [not extendable[s] for s in subs]
    else:
        lattice = S.all_subgroups(G)
        subs = [s.bits for s in lattice.subgroups
                if s.bits & base == base and is_member_bits(G, s.bits, F)]
        flags = [not any(o != s and s & ~o == 0 for o in subs) for s in subs]
    memo[key] = (subs, flags)
    return subs, flags


def maximal_f_subgroups(G: FiniteGroup, F: FormationSpec) -> list[SubgroupSet]:
    if is_member(G, F):
        return [subgroup(G, G.all_bits)]
    base = 1
    if F.is_formation and F.contains_cyclic:
        # H Z(G) is an image of H x Z(G), so every maximal F-subgroup contains Z(G)
        base = center(G).bits
    subs, flags = f_subgroups(G, F, base)
    return [subgroup(G, s) for s, m in zip(subs, flags) if m]


# (content_hash, formation string) -> bitset; equal tables give equal indices
_PHI_MEMO: dict[tuple[str, str], int] = {}


def phi_F(G: FiniteGroup, F: FormationSpec) -> SubgroupSet:
    """Intersection of the maximal F-subgroups."""
    key = (G.content_hash, str(F))
    bits = _PHI_MEMO.get(key)
    if bits is None:
        bits = G.all_bits
        for M in maximal_f_subgroups(G, F):
            bits &= M.bits
        with _MEMO_LOCK:
            _PHI_MEMO[key] = bits
    return subgroup(G, bits)


# --------------------------------------------------------------- criticality


@dataclass(frozen=True)
class CriticalityVerdict:
    is_member: bool
    is_critical: bool
    is_strongly_critical: bool
    # ("subgroup", bits) for a proper non-F subgroup, ("quotient", bits of N)
    # for a proper non-F quotient G/N
    witness: Optional[tuple[str, int]] = None


def criticality(G: FiniteGroup, F: FormationSpec) -> CriticalityVerdict:
    if is_member(G, F):
        return CriticalityVerdict(True, False, False, None)
    whole = G.all_bits
    # cheap rejection through proper 2-generated subgroups
    for bits in S.pair_joins(G).values():
        if bits != whole and not is_member_bits(G, bits, F):
            return CriticalityVerdict(False, False, False, ("subgroup", bits))
    lattice = S.all_subgroups(G)
    if F.hereditary:
        to_check = [m.bits for m in lattice.maximal_subgroups()]
    else:
        to_check = [s.bits for s in lattice.subgroups if s.bits != whole]
    for bits in to_check:
        if not is_member_bits(G, bits, F):
            return CriticalityVerdict(False, False, False, ("subgroup", bits))
    if F.is_formation:
        # quotient closure: minimal normal subgroups suffice
        normals = S.minimal_normal_bits(G)
    else:
        normals = [N for N in S.normal_subgroup_bits(G) if N != 1]
    for N in normals:
        if not is_member(quotient(G, subgroup(G, N), check=False)[0], F):
            return CriticalityVerdict(False, True, False, ("quotient", N))
    return CriticalityVerdict(False, True, True, None)


def two_generated_recognizable_on(G: FiniteGroup, F: FormationSpec) -> bool:
    """True iff every <g, h> lies in F."""
    return all(is_member_bits(G, bits, F) for bits in S.pair_joins(G).values())


# ------------------------------------------------------------ local data


def _as_group(K) -> FiniteGroup:
    if isinstance(K, tuple):
        G, H = K
        bits = H.bits if isinstance(H, SubgroupSet) else int(H)
        return subgroup_as_group(G, bits)[0]
    return K


def _exponent(G: FiniteGroup) -> int:
    from math import lcm
    out = 1
    for o in set(G.elem_order.tolist()):
        out = lcm(out, o)
    return out


def fbar_member(K, p: int, F: FormationSpec) -> bool:
    """Membership in the class of X with X/O_p(X) in the local datum f(p) of F.

    ``K`` is a group or a ``(group, subgroup)`` pair.  Supersoluble: f(p) is
    abelian of exponent dividing p - 1.  Nilpotent-derived: f(p) is abelian.
    Fitting length t: the class is S_p N^(t-1).
    """
    if not S.is_prime(p):
        raise NotPrime(f"{p} is not prime")
    X = _as_group(K)
    if F.kind == "fitting":
        return is_member(X, pcore_fitting(p, F.t - 1))
    if F.kind not in ("supersoluble", "nilpotent-derived"):
        raise UnsupportedFormation(f"no local data for {F}")
    Q, _ = quotient(X, S.p_core(X, p), check=False)
    if not Q.is_abelian():
        return False
    if F.kind == "supersoluble":
        return (p - 1) % _exponent(Q) == 0
    return True


def fbar_formation(p: int, F: FormationSpec) -> FormationSpec | None:
    """The local class as a FormationSpec, where it is one of ours."""
    if F.kind == "fitting":
        return pcore_fitting(p, F.t - 1)
    return None
