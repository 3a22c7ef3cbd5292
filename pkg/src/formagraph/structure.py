"""Series, radicals, normal subgroups and the subgroup lattice.

Everything here works on bitsets over the ambient group's element indices
and memoizes into ``G.cache``.  A few radicals are computed element-wise:
for a normal-subgroup-closed property P (p-group, soluble), the largest
normal P-subgroup is exactly the set of ``x`` whose normal closure has P.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import bits as B
from .core import (
    FiniteGroup,
    SubgroupSet,
    center,
    closure_bits,
    closure_gens,
    conjugacy_classes,
    cyclic_bits,
    cyclic_subgroups,
    extend_subgroup,
    is_normal_bits,
    normal_closure_bits,
    product_bits,
    quotient,
    subgroup,
    subgroup_as_group,
)
from .errors import LatticeCapExceeded, NotPrime

LATTICE_ORDER_CAP = 512
LATTICE_SIZE_CAP = 100_000
NORMAL_COUNT_CAP = 100_000
INFINITE_LENGTH = math.inf


@dataclass(frozen=True)
class SeriesChain:
    terms: tuple[SubgroupSet, ...]
    kind: str

    @property
    def sizes(self) -> list[int]:
        return [t.size for t in self.terms]

    def factor_orders(self) -> list[int]:
        """Orders of consecutive factors, largest term first for descending chains."""
        s = self.sizes
        return [max(a, b) // min(a, b) for a, b in zip(s, s[1:])]


@dataclass(frozen=True)
class SubgroupLattice:
    subgroups: tuple[SubgroupSet, ...]
    maximal: tuple[bool, ...]
    normal: tuple[bool, ...]

    def __len__(self):
        return len(self.subgroups)

    def maximal_subgroups(self) -> list[SubgroupSet]:
        return [s for s, m in zip(self.subgroups, self.maximal) if m]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime_power(n: int, p: int | None = None) -> bool:
    ps = prime_divisors(n)
    if n == 1:
        return True
    return len(ps) == 1 and (p is None or ps[0] == p)


# ------------------------------------------------------------- commutators


def commutator_subgroup_bits(G: FiniteGroup, a: int, b: int) -> int:
    """[A, B]: subgroup generated by all x^-1 y^-1 x y with x in A, y in B."""
    ia = B.to_indices(a, G.order)
    ib = B.to_indices(b, G.order)
    t, inv = G.table, G.inv_table
    comms = t[t[inv[ia][:, None], inv[ib][None, :]], t[np.ix_(ia, ib)]]
    return closure_bits(G, B.from_indices(np.unique(comms)) | 1)


def derived_subgroup(G: FiniteGroup, H: int | None = None) -> SubgroupSet:
    h = G.all_bits if H is None else H
    return subgroup(G, commutator_subgroup_bits(G, h, h))


def derived_series(G: FiniteGroup, H: int | None = None) -> SeriesChain:
    cur = G.all_bits if H is None else H
    terms = [cur]
    while True:
        nxt = commutator_subgroup_bits(G, cur, cur)
        if nxt == cur:
            break
        terms.append(nxt)
        cur = nxt
    return SeriesChain(tuple(subgroup(G, t) for t in terms), "derived")


def is_soluble(G: FiniteGroup) -> bool:
    key = "soluble"
    if key not in G.cache:
        G.cache[key] = G.is_abelian() or derived_series(G).terms[-1].is_trivial()
    return G.cache[key]


def is_soluble_bits(G: FiniteGroup, bits: int) -> bool:
    return derived_series(G, bits).terms[-1].is_trivial()


def lower_central_series(G: FiniteGroup) -> SeriesChain:
    cur = G.all_bits
    terms = [cur]
    while True:
        nxt = commutator_subgroup_bits(G, cur, G.all_bits)
        if nxt == cur:
            break
        terms.append(nxt)
        cur = nxt
    return SeriesChain(tuple(subgroup(G, t) for t in terms), "lower_central")


def is_nilpotent(G: FiniteGroup) -> bool:
    key = "nilpotent"
    if key not in G.cache:
        G.cache[key] = G.is_abelian() or _coprime_orders_commute(G)
    return G.cache[key]


def _coprime_orders_commute(G: FiniteGroup) -> bool:
    # a finite group is nilpotent iff elements of coprime order commute
    o = G.elem_order.astype(np.int64)
    coprime = np.gcd.outer(o, o) == 1
    return bool((G.table == G.table.T)[coprime].all())


def upper_central_series(G: FiniteGroup) -> SeriesChain:
    terms = [1]
    cur = 1
    while True:
        Q, proj = quotient(G, subgroup(G, cur), check=False)
        zq = B.to_mask(center(Q).bits, Q.order)
        nxt = B.from_mask(zq[proj])
        if nxt == cur:
            break
        terms.append(nxt)
        cur = nxt
    return SeriesChain(tuple(subgroup(G, t) for t in terms), "upper_central")


def hypercenter(G: FiniteGroup) -> SubgroupSet:
    return upper_central_series(G).terms[-1]


# -------------------------------------------------------- normal subgroups


def class_closures(G: FiniteGroup) -> list[int]:
    """Normal closure of each conjugacy class, in class order."""
    got = G.cache.get("class_closures")
    if got is None:
        got = [normal_closure_bits(G, B.from_indices(c)) for c in conjugacy_classes(G)]
        G.cache["class_closures"] = got
    return got


def element_normal_closures(G: FiniteGroup) -> list[int]:
    """Normal closure of every single element, indexed by element."""
    got = G.cache.get("element_ncl")
    if got is None:
        got = [0] * G.order
        for cls, ncl in zip(conjugacy_classes(G), class_closures(G)):
            for x in cls:
                got[x] = ncl
        G.cache["element_ncl"] = got
    return got


def _sort_key(bits: int):
    return (bits.bit_count(), bits)


def normal_subgroup_bits(G: FiniteGroup, cap: int = NORMAL_COUNT_CAP) -> list[int]:
    """All normal subgroups by join-closing the class closures."""
    got = G.cache.get("normal_subgroups")
    if got is not None:
        return got
    generators = sorted(set(class_closures(G)) - {1}, key=_sort_key)
    gen_idx = [(g, B.to_indices(g, G.order)) for g in generators]
    found = {1}
    work = [1]
    n = G.order
    while work:
        cur = work.pop()
        rows = G.table[B.to_indices(cur, n)]
        for g, ib in gen_idx:
            if g & ~cur == 0:
                continue
            # product of two normal subgroups
            mask = np.zeros(n, dtype=np.uint8)
            mask[rows[:, ib]] = 1
            j = B.from_bytemask(mask.tobytes())
            if j not in found:
                found.add(j)
                if len(found) > cap:
                    raise LatticeCapExceeded(f"more than {cap} normal subgroups")
                work.append(j)
    got = sorted(found, key=_sort_key)
    G.cache["normal_subgroups"] = got
    return got


def normal_subgroups(G: FiniteGroup, cap: int = NORMAL_COUNT_CAP) -> list[SubgroupSet]:
    return [subgroup(G, b) for b in normal_subgroup_bits(G, cap)]


def minimal_normal_bits(G: FiniteGroup) -> list[int]:
    cands = sorted(set(class_closures(G)) - {1}, key=_sort_key)
    return [m for m in cands if not any(o != m and o & ~m == 0 for o in cands)]


def minimal_normal_subgroups(G: FiniteGroup) -> list[SubgroupSet]:
    return [subgroup(G, b) for b in minimal_normal_bits(G)]


def socle(G: FiniteGroup) -> SubgroupSet:
    bits = 1
    for m in minimal_normal_bits(G):
        bits = product_bits(G, bits, m)
    return subgroup(G, bits)


def _group_of(G: FiniteGroup, bits: int) -> FiniteGroup:
    return subgroup_as_group(G, bits)[0]


def p_core(G: FiniteGroup, p: int) -> SubgroupSet:
    """O_p(G): the largest normal p-subgroup."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    memo = G.cache.setdefault("p_core", {})
    if p not in memo:
        ncl = element_normal_closures(G)
        ok = {}
        bits = 0
        for x in range(G.order):
            c = ncl[x]
            if c not in ok:
                ok[c] = is_prime_power(c.bit_count(), p)
            if ok[c]:
                bits |= 1 << x
        memo[p] = bits
    return subgroup(G, memo[p])


def soluble_radical(G: FiniteGroup) -> SubgroupSet:
    if is_soluble(G):
        return subgroup(G, G.all_bits)
    if "radical" not in G.cache:
        ncl = element_normal_closures(G)
        ok = {}
        bits = 0
        for x in range(G.order):
            c = ncl[x]
            if c not in ok:
                ok[c] = is_soluble_bits(G, c)
            if ok[c]:
                bits |= 1 << x
        G.cache["radical"] = bits
    return subgroup(G, G.cache["radical"])


def fitting_subgroup(G: FiniteGroup) -> SubgroupSet:
    bits = 1
    for p in prime_divisors(G.order):
        bits = product_bits(G, bits, p_core(G, p).bits)
    return subgroup(G, bits)


def fitting_length(G: FiniteGroup):
    """Steps G -> G/F(G) to reach 1; ``INFINITE_LENGTH`` when G is not soluble."""
    if "fitting_length" in G.cache:
        return G.cache["fitting_length"]
    H = G
    steps = 0
    while H.order > 1:
        if H.is_abelian() or is_nilpotent(H):
            steps += 1
            break
        F = fitting_subgroup(H)
        if F.is_trivial():
            steps = INFINITE_LENGTH
            break
        H, _ = quotient(H, F, check=False)
        steps += 1
    G.cache["fitting_length"] = steps
    return steps


def chief_series(G: FiniteGroup) -> SeriesChain:
    """Ascending chief series with least-new-element tie-breaking."""
    if "chief" in G.cache:
        return G.cache["chief"]
    terms = [1]
    cur = 1
    while cur != G.all_bits:
        Q, proj = quotient(G, subgroup(G, cur), check=False)
        best = None
        for m in minimal_normal_bits(Q):
            pre = B.from_mask(B.to_mask(m, Q.order)[proj])
            key = (B.lowest(pre & ~cur), pre)
            if best is None or key < best[0]:
                best = (key, pre)
        cur = best[1]
        terms.append(cur)
    chain = SeriesChain(tuple(subgroup(G, t) for t in terms), "chief")
    G.cache["chief"] = chain
    return chain


# ------------------------------------------------------------- lattice


def all_subgroups(G: FiniteGroup, order_cap: int = LATTICE_ORDER_CAP,
                  size_cap: int = LATTICE_SIZE_CAP) -> SubgroupLattice:
    """Every subgroup, grown from cyclic subgroups by joining one cyclic at a time.

    Any subgroup is the join of its cyclic subgroups, so extending each found
    subgroup by every cyclic subgroup reaches the full join-closure.  A proper
    subgroup is maximal iff each such extension gives the whole group.
    """
    if "lattice" in G.cache:
        return G.cache["lattice"]
    if G.order > order_cap:
        raise LatticeCapExceeded(f"lattice enumeration limited to order {order_cap}")
    cyclic = cyclic_subgroups(G)
    extendable: dict[int, bool] = {1: False}
    work = [1]
    for c in cyclic:
        if c not in extendable:
            extendable[c] = False
            work.append(c)
    whole = G.all_bits
    while work:
        cur = work.pop()
        if cur == whole:
            continue
        for c in cyclic:
            if c & ~cur == 0:
                continue
            j = closure_bits(G, cur | c)
            if j != whole:
                extendable[cur] = True
            if j not in extendable:
                extendable[j] = False
                if len(extendable) > size_cap:
                    raise LatticeCapExceeded(f"more than {size_cap} subgroups")
                work.append(j)
    subs = sorted(extendable, key=_sort_key)
    maximal = tuple(s != whole and not extendable[s] for s in subs)
    normal = tuple(is_normal_bits(G, s) for s in subs)
    lattice = SubgroupLattice(tuple(subgroup(G, s) for s in subs), maximal, normal)
    G.cache["lattice"] = lattice
    return lattice


def maximal_subgroups(G: FiniteGroup) -> list[SubgroupSet]:
    return all_subgroups(G).maximal_subgroups()


def frattini_subgroup(G: FiniteGroup) -> SubgroupSet:
    bits = G.all_bits
    for m in maximal_subgroups(G):
        bits &= m.bits
    return subgroup(G, bits)


def primitive_monolithic_soluble(G: FiniteGroup):
    """(socle, complement) for a primitive monolithic soluble group, else None."""
    if G.order == 1 or not is_soluble(G):
        return None
    mins = minimal_normal_bits(G)
    if len(mins) != 1:
        return None
    if not frattini_subgroup(G).is_trivial():
        return None
    soc = mins[0]
    want = G.order // soc.bit_count()
    for s in all_subgroups(G).subgroups:
        if s.size == want and s.bits & soc == 1:
            return subgroup(G, soc), s
    return None


# ------------------------------------------------------- generating pairs


def cyclic_index(G: FiniteGroup):
    """(cyclic subgroups, element -> cyclic-subgroup index, generator bitsets)."""
    got = G.cache.get("cyclic_index")
    if got is None:
        cyc = cyclic_subgroups(G)
        pos = {c: i for i, c in enumerate(cyc)}
        of = [pos[cyclic_bits(G, x)] for x in range(G.order)]
        gens = [0] * len(cyc)
        for x, i in enumerate(of):
            gens[i] |= 1 << x
        got = (cyc, of, gens)
        G.cache["cyclic_index"] = got
    return got


def pair_joins(G: FiniteGroup) -> dict[tuple[int, int], int]:
    """Join of every pair (i <= j) of cyclic subgroups, i.e. every <g, h>."""
    got = G.cache.get("pair_joins")
    if got is None:
        cyc, _, gens = cyclic_index(G)
        reps = [B.lowest(g) for g in gens]
        got = {}
        for i in range(len(cyc)):
            members = list(B.iter_bits(cyc[i]))
            for j in range(i, len(cyc)):
                if cyc[i] & ~cyc[j] == 0:
                    got[i, j] = cyc[j]
                elif cyc[j] & ~cyc[i] == 0:
                    got[i, j] = cyc[i]
                else:
                    got[i, j] = extend_subgroup(G, cyc[i], (reps[i],), reps[j], members)
        G.cache["pair_joins"] = got
    return got


def joins_by_subgroup(G: FiniteGroup) -> dict[int, list[tuple[int, int]]]:
    """Distinct 2-generated subgroups, each with the cyclic pairs that generate it."""
    got = G.cache.get("joins_by_subgroup")
    if got is None:
        got = {}
        for pair, bits in pair_joins(G).items():
            got.setdefault(bits, []).append(pair)
        G.cache["joins_by_subgroup"] = got
    return got


def generating_pair_elements(G: FiniteGroup) -> set[int]:
    """V(G): elements x with <x, y> = G for some y."""
    _, _, gens = cyclic_index(G)
    whole = G.all_bits
    hit = set()
    for (i, j), bits in pair_joins(G).items():
        if bits == whole:
            hit.add(i)
            hit.add(j)
    out = set()
    for i in hit:
        out.update(B.iter_bits(gens[i]))
    return out
