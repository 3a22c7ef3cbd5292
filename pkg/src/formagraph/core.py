"""Finite groups as dense multiplication tables.

Every group is an ``n x n`` table of element indices with the identity at
index 0.  Groups are built from recipes (:class:`PermutationSpec`,
:class:`TableSpec`, :class:`DirectSpec`, :class:`SemidirectSpec`,
:class:`BuiltinSpec`) and are immutable afterwards; per-group memo caches
live in ``FiniteGroup.cache`` and never change observable results.

Conventions
-----------
* Permutations act on the right: ``x * y`` means "apply ``x``, then ``y``",
  i.e. ``(x*y)[i] == y[x[i]]``.
* Semidirect products ``N ⋊ H`` take the action as a right action written
  in conjugation notation: the automorphism attached to ``h`` sends ``n``
  to ``n^h = h^-1 n h``.  Elements are pairs ``(n, h)`` with
  ``(n1, h1)(n2, h2) = (n1 * n2^(h1^-1), h1 * h2)``.  Worked example with
  ``N = C3 = {1, r, r^2}`` and ``H = C2 = {1, s}`` acting by inversion:
  ``(1, s)(r, 1) = (r^(s^-1), s) = (r^2, s)``, so ``s r s^-1 = r^2`` and
  ``s^-1 r s = r^2`` as the action prescribes.
* Direct products number ``(a, b)`` as ``a * |B| + b``; semidirect products
  number ``(n, h)`` as ``n * |H| + h``.
"""
from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np

from . import bits as B
from .errors import (
    InvalidPermutation,
    InvalidTable,
    NotAHomomorphism,
    NotAnAutomorphism,
    NotNormal,
    OrderCapExceeded,
)

ORDER_CAP = 5000
ISOMORPHISM_CAP = 64
ASSOCIATIVITY_EXHAUSTIVE_CAP = 512
ASSOCIATIVITY_SAMPLES = 1_000_000


# ---------------------------------------------------------------- recipes


@dataclass(frozen=True)
class PermutationSpec:
    degree: int
    generators: tuple[tuple[int, ...], ...]


@dataclass(frozen=True, eq=False)
class TableSpec:
    table: np.ndarray


@dataclass(frozen=True)
class DirectSpec:
    factors: tuple["GroupSpec", ...]


@dataclass(frozen=True)
class SemidirectSpec:
    normal: "GroupSpec"
    acting: "GroupSpec"
    # one permutation of the normal group's element indices per generator of
    # the acting group (in the order of ``FiniteGroup.generators``)
    action: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class BuiltinSpec:
    name: str


GroupSpec = Union[PermutationSpec, TableSpec, DirectSpec, SemidirectSpec, BuiltinSpec]


def spec_to_json(spec: GroupSpec) -> dict:
    if isinstance(spec, PermutationSpec):
        return {"type": "permutation", "degree": spec.degree,
                "generators": [list(g) for g in spec.generators]}
    if isinstance(spec, TableSpec):
        return {"type": "table", "table": np.asarray(spec.table).tolist()}
    if isinstance(spec, DirectSpec):
        return {"type": "direct", "factors": [spec_to_json(f) for f in spec.factors]}
    if isinstance(spec, SemidirectSpec):
        return {"type": "semidirect", "normal": spec_to_json(spec.normal),
                "acting": spec_to_json(spec.acting), "action": [list(a) for a in spec.action]}
    if isinstance(spec, BuiltinSpec):
        return {"type": "builtin", "name": spec.name}
    raise TypeError(f"not a group spec: {spec!r}")


def spec_from_json(obj) -> GroupSpec:
    """Parse the JSON group-spec grammar; raises ValueError on bad shape."""
    if not isinstance(obj, dict) or "type" not in obj:
        raise ValueError("group spec must be an object with a 'type' field")
    kind = obj["type"]
    if kind == "permutation":
        gens = tuple(tuple(int(i) for i in g) for g in obj.get("generators", []))
        return PermutationSpec(int(obj["degree"]), gens)
    if kind == "table":
        return TableSpec(np.asarray(obj["table"], dtype=np.int64))
    if kind == "direct":
        factors = obj["factors"]
        if len(factors) < 1:
            raise ValueError("direct product needs at least one factor")
        return DirectSpec(tuple(spec_from_json(f) for f in factors))
    if kind == "semidirect":
        return SemidirectSpec(spec_from_json(obj["normal"]), spec_from_json(obj["acting"]),
                              tuple(tuple(int(i) for i in a) for a in obj["action"]))
    if kind == "builtin":
        return BuiltinSpec(str(obj["name"]))
    raise ValueError(f"unknown group spec type {kind!r}")


# ------------------------------------------------------------------ groups


class FiniteGroup:
    """A finite group given by its full multiplication table.

    Attributes are read-only after construction.  ``generators`` is a
    generating list of element indices (the recipe's own generators where it
    has them); ``named`` maps symbolic names to element indices for groups
    whose recipe defines them (e.g. ``a``, ``b``, ``c`` of ``T100``).
    """

    def __init__(self, table, recipe, labels=None, generators=None, named=None, name=None,
                 inv_table=None, elem_order=None):
        table = np.ascontiguousarray(table, dtype=np.int32)
        n = table.shape[0]
        self.order = n
        self.table = table
        self.table.setflags(write=False)
        self.inv_table = np.asarray(inv_table, dtype=np.int32) if inv_table is not None \
            else _inverses(table)
        self.inv_table.setflags(write=False)
        self._elem_order = None
        if elem_order is not None:
            self._elem_order = np.asarray(elem_order, dtype=np.int32)
            self._elem_order.setflags(write=False)
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        self.recipe = recipe
        self.content_hash = table_hash(table)
        self._generators = tuple(int(g) for g in generators) if generators is not None else None
        self.named = dict(named or {})
        self.name = name or f"group{n}"
        self.cache: dict = {}

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def __getstate__(self):
        state = dict(self.__dict__)
        state["cache"] = {}
        return state

    def __setstate__(self, state):
        self.__dict__.update(state)
        for arr in (self.table, self.inv_table, self._elem_order):
            if arr is not None:
                arr.setflags(write=False)

    @property
    def elem_order(self) -> np.ndarray:
        if self._elem_order is None:
            self._elem_order = _element_orders(self.table)
            self._elem_order.setflags(write=False)
        return self._elem_order

    @property
    def generators(self) -> tuple[int, ...]:
        if self._generators is None:
            self._generators = greedy_generators(self.table)
        return self._generators

    @property
    def all_bits(self) -> int:
        return (1 << self.order) - 1

    def is_abelian(self) -> bool:
        key = "abelian"
        if key not in self.cache:
            self.cache[key] = bool(np.array_equal(self.table, self.table.T))
        return self.cache[key]


def table_hash(table: np.ndarray) -> str:
    h = hashlib.sha256()
    h.update(str(table.shape[0]).encode())
    h.update(np.ascontiguousarray(table, dtype="<i4").tobytes())
    return h.hexdigest()


def _inverses(table: np.ndarray) -> np.ndarray:
    rows, cols = np.nonzero(table == 0)
    inv = np.empty(table.shape[0], dtype=np.int32)
    inv[rows] = cols
    return inv


def _element_orders(table: np.ndarray) -> np.ndarray:
    n = table.shape[0]
    idx = np.arange(n)
    orders = np.zeros(n, dtype=np.int32)
    power = idx.copy()
    k = 1
    while True:
        done = (power == 0) & (orders == 0)
        orders[done] = k
        if orders.all():
            return orders
        power = table[power, idx]
        k += 1


def greedy_generators(table: np.ndarray) -> tuple[int, ...]:
    """Deterministic generating list: scan indices upward, keep x if new."""
    n = table.shape[0]
    gens: list[int] = []
    mask = np.zeros(n, dtype=bool)
    mask[0] = True
    for x in range(n):
        if mask.all():
            break
        if not mask[x]:
            gens.append(x)
            mask = _closure_mask(table, gens)
    return tuple(gens)


def _closure_mask(table: np.ndarray, gens) -> np.ndarray:
    n = table.shape[0]
    mask = np.zeros(n, dtype=bool)
    mask[0] = True
    gens = np.unique(np.asarray(list(gens), dtype=np.int64))
    gens = gens[gens != 0]
    if gens.size == 0:
        return mask
    frontier = np.zeros(1, dtype=np.int64)
    while frontier.size:
        cand = table[np.ix_(frontier, gens)].ravel()
        cand = cand[~mask[cand]]
        if cand.size == 0:
            break
        cand = np.unique(cand)
        mask[cand] = True
        frontier = cand
    return mask


def _validate_table(table: np.ndarray, check_associativity=True) -> None:
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise InvalidTable("table must be a non-empty square array")
    n = table.shape[0]
    if n > ORDER_CAP:
        raise OrderCapExceeded(f"table order {n} exceeds cap {ORDER_CAP}")
    if table.min() < 0 or table.max() >= n:
        raise InvalidTable("table entries must lie in [0, n)")
    idx = np.arange(n)
    if not (np.array_equal(table[0], idx) and np.array_equal(table[:, 0], idx)):
        raise InvalidTable("index 0 must be the identity")
    srt = np.sort(table, axis=1)
    if not (srt == idx).all() or not (np.sort(table, axis=0) == idx[:, None]).all():
        raise InvalidTable("table is not a Latin square")
    if check_associativity and not is_associative(table):
        raise InvalidTable("table is not associative")


def is_associative(table: np.ndarray, samples: int = ASSOCIATIVITY_SAMPLES, seed: int = 0) -> bool:
    """Exhaustive check up to order 512, random triples above."""
    n = table.shape[0]
    if n <= ASSOCIATIVITY_EXHAUSTIVE_CAP:
        for x in range(n):
            # (x*y)*z vs x*(y*z) for all y, z
            if not np.array_equal(table[table[x]], table[x][table]):
                return False
        return True
    rng = np.random.default_rng(seed)
    x, y, z = rng.integers(0, n, size=(3, samples))
    return bool(np.array_equal(table[table[x, y], z], table[x, table[y, z]]))


# ---------------------------------------------------------------- builders


def _cycle_label(perm: Sequence[int]) -> str:
    seen = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        j = perm[start]
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = perm[j]
        cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles) or "()"


def _table_from_right_actions(right: np.ndarray, parent: np.ndarray, via: np.ndarray) -> np.ndarray:
    """Fill the table column by column from right-multiplication maps.

    ``right[g][i]`` is the index of ``e_i * gen_g``; element ``y`` was first
    reached as ``parent[y] * gen_{via[y]}``, so column ``y`` of the table is
    ``right[via[y]][column parent[y]]``.
    """
    n = right.shape[1]
    table = np.empty((n, n), dtype=np.int32)
    table[:, 0] = np.arange(n)
    for y in range(1, n):
        table[:, y] = right[via[y]][table[:, parent[y]]]
    return table


def build_from_permutations(degree: int, generators, order_cap: int = ORDER_CAP,
                            name: str | None = None) -> FiniteGroup:
    """Closure of permutation generators, numbered breadth-first from the identity."""
    if degree < 1:
        raise InvalidPermutation("degree must be positive")
    gens = []
    for g in generators:
        g = tuple(int(i) for i in g)
        if len(g) != degree or sorted(g) != list(range(degree)):
            raise InvalidPermutation(f"{list(g)} is not a bijection of range({degree})")
        gens.append(g)
    identity = tuple(range(degree))
    elements = [identity]
    index = {identity: 0}
    parent = [0]
    via = [0]
    right = [[] for _ in gens]
    i = 0
    while i < len(elements):
        x = elements[i]
        for gi, g in enumerate(gens):
            y = tuple(g[k] for k in x)
            j = index.get(y)
            if j is None:
                if len(elements) >= order_cap:
                    raise OrderCapExceeded(f"permutation closure exceeds cap {order_cap}")
                j = len(elements)
                index[y] = j
                elements.append(y)
                parent.append(i)
                via.append(gi)
            right[gi].append(j)
        i += 1
    if gens:
        table = _table_from_right_actions(np.asarray(right, dtype=np.int32),
                                          np.asarray(parent), np.asarray(via))
    else:
        table = np.zeros((1, 1), dtype=np.int32)
    gen_idx = [index[g] for g in gens]
    spec = PermutationSpec(degree, tuple(gens))
    return FiniteGroup(table, spec, labels=[_cycle_label(e) for e in elements],
                       generators=gen_idx, name=name)


def build_from_table(table, name: str | None = None, labels=None, validate: bool = True,
                     check_associativity: bool = True, recipe=None) -> FiniteGroup:
    table = np.asarray(table, dtype=np.int64)
    if validate:
        _validate_table(table, check_associativity=check_associativity)
    return FiniteGroup(table, recipe if recipe is not None else TableSpec(table),
                       labels=labels, name=name)


def build_direct(a: FiniteGroup, b: FiniteGroup, name: str | None = None) -> FiniteGroup:
    na, nb = a.order, b.order
    if na * nb > ORDER_CAP:
        raise OrderCapExceeded(f"direct product order {na * nb} exceeds cap {ORDER_CAP}")
    ta = a.table.astype(np.int64)
    tb = b.table.astype(np.int64)
    table = (ta[:, None, :, None] * nb + tb[None, :, None, :]).reshape(na * nb, na * nb)
    labels = [f"({la}, {lb})" for la in a.labels for lb in b.labels]
    gens = [g * nb for g in a.generators] + list(b.generators)
    named = {k: v * nb for k, v in a.named.items()}
    named.update({k: v for k, v in b.named.items() if k not in named})
    return FiniteGroup(table, DirectSpec((a.recipe, b.recipe)), labels=labels,
                       generators=gens, named=named, name=name or f"{a.name}x{b.name}")


def _check_automorphism(normal: FiniteGroup, perm) -> np.ndarray:
    perm = np.asarray(perm, dtype=np.int64)
    n = normal.order
    if perm.shape != (n,) or not np.array_equal(np.sort(perm), np.arange(n)):
        raise NotAnAutomorphism("action image is not a permutation of the normal group")
    t = normal.table
    if not np.array_equal(t[perm[:, None], perm[None, :]], perm[t]):
        raise NotAnAutomorphism("action image does not preserve the multiplication")
    return perm


def action_maps(normal: FiniteGroup, acting: FiniteGroup, action) -> np.ndarray:
    """Right-action automorphisms for every acting element, from generator images.

    Row ``h`` of the result sends ``n`` to ``n^h``.  Raises NotAHomomorphism
    when the generator images do not extend to an action of the whole group.
    """
    action = list(action)
    if len(action) != len(acting.generators):
        raise NotAHomomorphism(
            f"{len(action)} action images for {len(acting.generators)} acting generators")
    auts = [_check_automorphism(normal, a) for a in action]
    nh, nn = acting.order, normal.order
    maps = np.full((nh, nn), -1, dtype=np.int64)
    maps[0] = np.arange(nn)
    seen = np.zeros(nh, dtype=bool)
    seen[0] = True
    queue = deque([0])
    th = acting.table
    while queue:
        x = queue.popleft()
        for g, aut in zip(acting.generators, auts):
            y = th[x, g]
            img = aut[maps[x]]
            if not seen[y]:
                seen[y] = True
                maps[y] = img
                queue.append(y)
            elif not np.array_equal(maps[y], img):
                raise NotAHomomorphism("generator images violate a relation of the acting group")
    if not seen.all():
        raise NotAHomomorphism("acting generators do not generate the acting group")
    for x in range(nh):
        # maps[x*y] == maps[y] o maps[x]
        if not np.array_equal(maps[th[x]], maps[:, maps[x]]):
            raise NotAHomomorphism("induced map is not an action")
    return maps


def build_semidirect(normal: FiniteGroup, acting: FiniteGroup, action,
                     name: str | None = None, labels=None) -> FiniteGroup:
    nn, nh = normal.order, acting.order
    if nn * nh > ORDER_CAP:
        raise OrderCapExceeded(f"semidirect product order {nn * nh} exceeds cap {ORDER_CAP}")
    maps = action_maps(normal, acting, action)
    tn = normal.table.astype(np.int64)
    th = acting.table.astype(np.int64)
    twisted = maps[acting.inv_table]            # twisted[h1, n2] = n2^(h1^-1)
    n1 = np.arange(nn)[:, None, None, None]
    h1 = np.arange(nh)[None, :, None, None]
    n2 = np.arange(nn)[None, None, :, None]
    h2 = np.arange(nh)[None, None, None, :]
    npart = tn[n1, twisted[h1, n2]]
    hpart = th[h1, h2]
    table = (npart * nh + hpart).reshape(nn * nh, nn * nh)
    if labels is None:
        labels = [f"{ln}|{lh}" for ln in normal.labels for lh in acting.labels]
    gens = [g * nh for g in normal.generators] + list(acting.generators)
    named = {k: v * nh for k, v in normal.named.items()}
    named.update({k: v for k, v in acting.named.items() if k not in named})
    recipe = SemidirectSpec(normal.recipe, acting.recipe,
                            tuple(tuple(int(i) for i in a) for a in action))
    return FiniteGroup(table, recipe, labels=labels, generators=gens, named=named,
                       name=name or f"{normal.name}:{acting.name}")


def build(spec: GroupSpec, order_cap: int = ORDER_CAP, name: str | None = None) -> FiniteGroup:
    """Build a group from any recipe."""
    if isinstance(spec, PermutationSpec):
        return build_from_permutations(spec.degree, spec.generators, order_cap, name=name)
    if isinstance(spec, TableSpec):
        return build_from_table(spec.table, name=name)
    if isinstance(spec, DirectSpec):
        group = build(spec.factors[0], order_cap)
        for f in spec.factors[1:]:
            group = build_direct(group, build(f, order_cap))
        if name:
            group.name = name
        return group
    if isinstance(spec, SemidirectSpec):
        return build_semidirect(build(spec.normal, order_cap), build(spec.acting, order_cap),
                                spec.action, name=name)
    if isinstance(spec, BuiltinSpec):
        from .catalog import builtin
        return builtin(spec.name)
    raise TypeError(f"not a group spec: {spec!r}")


# -------------------------------------------------------- element access


def mul(G: FiniteGroup, x: int, y: int) -> int:
    return int(G.table[x, y])


def inv(G: FiniteGroup, x: int) -> int:
    return int(G.inv_table[x])


def order_of(G: FiniteGroup, x: int) -> int:
    return int(G.elem_order[x])


def power(G: FiniteGroup, x: int, k: int) -> int:
    k %= int(G.elem_order[x])
    r = 0
    for _ in range(k):
        r = G.table[r, x]
    return int(r)


def commutator(G: FiniteGroup, x: int, y: int) -> int:
    """[x, y] = x^-1 y^-1 x y."""
    t, i = G.table, G.inv_table
    return int(t[t[i[x], i[y]], t[x, y]])


# -------------------------------------------------------------- subgroups


@dataclass(frozen=True)
class SubgroupSet:
    """A subgroup stored as a bitset over the owner group's element indices."""

    bits: int
    owner_hash: str = field(repr=False)

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    def __len__(self):
        return self.size

    def __contains__(self, x: int) -> bool:
        return bool(self.bits >> int(x) & 1)

    def members(self) -> list[int]:
        return list(B.iter_bits(self.bits))

    def issubset(self, other: "SubgroupSet") -> bool:
        return self.bits & ~other.bits == 0

    def is_trivial(self) -> bool:
        return self.bits == 1


def subgroup(G: FiniteGroup, bits: int) -> SubgroupSet:
    return SubgroupSet(bits, G.content_hash)


def trivial_subgroup(G: FiniteGroup) -> SubgroupSet:
    return SubgroupSet(1, G.content_hash)


def whole_group(G: FiniteGroup) -> SubgroupSet:
    return SubgroupSet(G.all_bits, G.content_hash)


def _columns(G: FiniteGroup) -> list[list[int]]:
    cols = G.cache.get("columns")
    if cols is None:
        cols = G.table.T.tolist()          # cols[g][x] == x * g
        G.cache["columns"] = cols
    return cols


def _bfs(G: FiniteGroup, gens, seen: bytearray, out: list[int]) -> None:
    """Extend the right-multiplication closure in ``seen``/``out`` in place."""
    allcols = _columns(G)
    cols = [allcols[g] for g in gens]
    if len(cols) == 2:
        c0, c1 = cols
        for x in out:
            z = c0[x]
            if not seen[z]:
                seen[z] = 1
                out.append(z)
            z = c1[x]
            if not seen[z]:
                seen[z] = 1
                out.append(z)
        return
    for x in out:
        for col in cols:
            z = col[x]
            if not seen[z]:
                seen[z] = 1
                out.append(z)


def closure_gens(G: FiniteGroup, gens) -> int:
    """Bitset of the subgroup generated by a (short) list of elements."""
    gens = sorted({int(g) for g in gens} - {0})
    if not gens:
        return 1
    seen = bytearray(G.order)
    seen[0] = 1
    out = [0]
    _bfs(G, gens, seen, out)
    return B.from_bytemask(seen)


def extend_subgroup(G: FiniteGroup, bits: int, gens, r: int, members=None) -> int:
    """<H, r> for a subgroup H (bitset ``bits``, generated by ``gens``).

    Walks right cosets of H: Hg * s = H(gs), so only coset representatives
    are multiplied by generators.
    """
    if bits >> r & 1:
        return bits
    cols = _columns(G)
    H = members if members is not None else list(B.iter_bits(bits))
    seen = B.to_bytemask(bits, G.order)
    allgens = [cols[s] for s in tuple(gens) + (r,)]
    reps = [0]
    for g in reps:
        for col in allgens:
            y = col[g]
            if not seen[y]:
                cy = cols[y]
                for h in H:
                    seen[cy[h]] = 1
                reps.append(y)
    return B.from_bytemask(seen)


def closure_bits(G: FiniteGroup, seed_bits: int) -> int:
    """Bitset of the subgroup generated by the bitset ``seed_bits`` (memoized).

    Seed elements are scanned upward and kept as generators only when not
    already in the closure so far, so the BFS runs with few generators.
    """
    memo = G.cache.setdefault("closure", {})
    got = memo.get(seed_bits)
    if got is None:
        seen = bytearray(G.order)
        seen[0] = 1
        out = [0]
        gens: list[int] = []
        for x in B.iter_bits(seed_bits):
            if not seen[x]:
                gens.append(x)
                # restart from the identity: the old generators must also
                # act on the newly reached elements
                seen = bytearray(G.order)
                seen[0] = 1
                out = [0]
                _bfs(G, gens, seen, out)
        got = B.from_bytemask(seen)
        memo[seed_bits] = got
    return got


def join_bits(G: FiniteGroup, a: int, b: int) -> int:
    """Subgroup generated by two subgroups (or any two subsets)."""
    if a & ~b == 0:
        return b if b & 1 else closure_bits(G, b)
    if b & ~a == 0:
        return a if a & 1 else closure_bits(G, a)
    return closure_bits(G, a | b)


def subgroup_closure(G: FiniteGroup, seed) -> SubgroupSet:
    """Smallest subgroup containing the elements of ``seed``."""
    if isinstance(seed, SubgroupSet):
        bits = seed.bits
    else:
        bits = B.from_indices(seed)
    return SubgroupSet(closure_bits(G, bits | 1), G.content_hash)


def is_subgroup_bits(G: FiniteGroup, bits: int) -> bool:
    """True iff the subset is non-empty and closed under products."""
    if not bits & 1:
        return False
    idx = B.to_indices(bits, G.order)
    mask = B.to_mask(bits, G.order)
    return bool(mask[G.table[np.ix_(idx, idx)]].all())


def cyclic_bits(G: FiniteGroup, x: int) -> int:
    cyc = G.cache.get("cyclic")
    if cyc is None:
        cyc = _all_cyclic(G)
        G.cache["cyclic"] = cyc
    return cyc[x]


def _all_cyclic(G: FiniteGroup) -> list[int]:
    n = G.order
    idx = np.arange(n)
    maxord = int(G.elem_order.max())
    powers = np.empty((maxord, n), dtype=np.int64)
    powers[0] = 0
    cur = np.zeros(n, dtype=np.int64)
    for k in range(1, maxord):
        cur = G.table[cur, idx]
        powers[k] = cur
    out = []
    for x in range(n):
        out.append(B.from_indices(powers[: G.elem_order[x], x]))
    return out


def cyclic_subgroups(G: FiniteGroup) -> list[int]:
    """Distinct cyclic subgroups as bitsets, ordered by least generator index."""
    seen = {}
    for x in range(G.order):
        c = cyclic_bits(G, x)
        if c not in seen:
            seen[c] = x
    return list(seen)


# ----------------------------------------------------- conjugacy & co


def conjugate_row(G: FiniteGroup, x: int) -> np.ndarray:
    """Array whose entry ``g`` is ``g x g^-1``."""
    n = G.order
    return G.table[G.table[np.arange(n), x], G.inv_table]


def conjugacy_classes(G: FiniteGroup) -> list[list[int]]:
    """Conjugacy classes, each sorted, ordered by least member."""
    cached = G.cache.get("classes")
    if cached is not None:
        return cached
    n = G.order
    assigned = np.zeros(n, dtype=bool)
    classes = []
    for x in range(n):
        if assigned[x]:
            continue
        cls = np.unique(conjugate_row(G, x))
        assigned[cls] = True
        classes.append([int(c) for c in cls])
    G.cache["classes"] = classes
    return classes


def conjugate_bits(G: FiniteGroup, bits: int, g: int) -> int:
    """Bitset of ``g^-1 S g``."""
    idx = B.to_indices(bits, G.order)
    return B.from_indices(G.table[G.table[G.inv_table[g], idx], g])


def centralizer(G: FiniteGroup, x: int) -> SubgroupSet:
    mask = G.table[x] == G.table[:, x]
    return SubgroupSet(B.from_mask(mask), G.content_hash)


def center(G: FiniteGroup) -> SubgroupSet:
    mask = (G.table == G.table.T).all(axis=1)
    return SubgroupSet(B.from_mask(mask), G.content_hash)


def normalizer(G: FiniteGroup, H: SubgroupSet) -> SubgroupSet:
    idx = B.to_indices(H.bits, G.order)
    mask = B.to_mask(H.bits, G.order)
    t = G.table
    # g normalizes H iff g h g^-1 in H for all h in H
    conj = t[t[:, idx], G.inv_table[:, None]]
    return SubgroupSet(B.from_mask(mask[conj].all(axis=1)), G.content_hash)


def is_normal_bits(G: FiniteGroup, bits: int) -> bool:
    idx = B.to_indices(bits, G.order)
    mask = B.to_mask(bits, G.order)
    t = G.table
    conj = t[t[:, idx], G.inv_table[:, None]]
    return bool(mask[conj].all())


def is_normal(G: FiniteGroup, H: SubgroupSet) -> bool:
    return is_normal_bits(G, H.bits)


def normal_closure_bits(G: FiniteGroup, bits: int) -> int:
    """Smallest normal subgroup containing the given subset."""
    idx = B.to_indices(bits, G.order)
    t = G.table
    conj = t[t[:, idx], G.inv_table[:, None]]
    return closure_bits(G, B.from_indices(np.unique(conj)) | 1)


def product_bits(G: FiniteGroup, a: int, b: int) -> int:
    """The product set AB (a subgroup whenever one factor normalizes the other)."""
    ia = B.to_indices(a, G.order)
    ib = B.to_indices(b, G.order)
    mask = np.zeros(G.order, dtype=np.uint8)
    mask[G.table[np.ix_(ia, ib)]] = 1
    return B.from_bytemask(mask.tobytes())


# ------------------------------------------------------ quotients & maps


def quotient(G: FiniteGroup, N: SubgroupSet, check: bool = True):
    """Coset group ``G/N`` and the projection array (element -> coset index).

    Cosets are numbered by their least member, so the identity coset is 0.
    """
    bits = N.bits if isinstance(N, SubgroupSet) else int(N)
    if check and not is_normal_bits(G, bits):
        raise NotNormal("quotient requires a normal subgroup")
    memo = G.cache.setdefault("quotient", {})
    if bits in memo:
        return memo[bits]
    nidx = B.to_indices(bits, G.order)
    reps_of = G.table[:, nidx].min(axis=1)
    # the representative of a coset is its least member
    reps = np.flatnonzero(reps_of == np.arange(G.order))
    coset_of = np.empty(G.order, dtype=np.int64)
    coset_of[reps] = np.arange(len(reps))
    proj = coset_of[reps_of]
    table = proj[G.table[np.ix_(reps, reps)]]
    labels = [f"{G.labels[r]}N" if r else "N" for r in reps.tolist()]
    gens = sorted({int(proj[g]) for g in G.generators} - {0})
    Q = FiniteGroup(table, TableSpec(table), labels=labels, generators=gens or None,
                    inv_table=proj[G.inv_table[reps]],
                    name=f"{G.name}/N{N.size if isinstance(N, SubgroupSet) else ''}")
    memo[bits] = (Q, proj)
    return Q, proj


def subgroup_as_group(G: FiniteGroup, H) -> tuple[FiniteGroup, np.ndarray]:
    """Subgroup as a standalone group, plus the array of its members in G.

    Members keep their relative order, so the identity stays at index 0.
    """
    bits = H.bits if isinstance(H, SubgroupSet) else int(H)
    if bits == G.all_bits:
        return G, np.arange(G.order)
    memo = G.cache.setdefault("subgroup_group", {})
    if bits in memo:
        return memo[bits]
    idx = B.to_indices(bits, G.order)
    pos = np.full(G.order, -1, dtype=np.int64)
    pos[idx] = np.arange(len(idx))
    table = pos[G.table[np.ix_(idx, idx)]]
    K = FiniteGroup(table, TableSpec(table), labels=[G.labels[i] for i in idx],
                    name=f"{G.name}.sub{len(idx)}", inv_table=pos[G.inv_table[idx]],
                    elem_order=G.elem_order[idx])
    memo[bits] = (K, idx)
    return K, idx


def _generators_by_order(G: FiniteGroup) -> list[int]:
    """Small generating list preferring elements of large order."""
    order = sorted(range(G.order), key=lambda x: (-int(G.elem_order[x]), x))
    gens: list[int] = []
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    for x in order:
        if mask.all():
            break
        if not mask[x]:
            gens.append(x)
            mask = _closure_mask(G.table, gens)
    return gens


def _extend_hom(G: FiniteGroup, H: FiniteGroup, gens, images):
    """Extend generator images to a map G -> H; None if inconsistent."""
    phi = np.full(G.order, -1, dtype=np.int64)
    phi[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for g, h in zip(gens, images):
            y = G.table[x, g]
            img = H.table[phi[x], h]
            if phi[y] < 0:
                phi[y] = img
                queue.append(y)
            elif phi[y] != img:
                return None
    return phi


def find_isomorphism(G: FiniteGroup, H: FiniteGroup, cap: int = ISOMORPHISM_CAP):
    """An isomorphism G -> H as an index array, or None."""
    if G.order != H.order:
        return None
    if G.order > cap:
        raise OrderCapExceeded(f"isomorphism test limited to order {cap}")
    if not np.array_equal(np.sort(G.elem_order), np.sort(H.elem_order)):
        return None
    if G.is_abelian() != H.is_abelian():
        return None
    gens = _generators_by_order(G)
    candidates = [np.flatnonzero(H.elem_order == G.elem_order[g]) for g in gens]
    images: list[int] = []

    def search(k):
        if k == len(gens):
            phi = _extend_hom(G, H, gens, images)
            if phi is not None and len(np.unique(phi)) == G.order:
                return phi
            return None
        for c in candidates[k]:
            images.append(int(c))
            found = search(k + 1)
            if found is not None:
                return found
            images.pop()
        return None

    return search(0)


def is_isomorphic(G: FiniteGroup, H: FiniteGroup, cap: int = ISOMORPHISM_CAP) -> bool:
    return find_isomorphism(G, H, cap) is not None
