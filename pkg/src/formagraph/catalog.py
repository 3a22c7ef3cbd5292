"""Builtin groups, the default verification catalog, and spec-file ingestion."""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np

from . import core
from .core import (
    BuiltinSpec,
    DirectSpec,
    FiniteGroup,
    GroupSpec,
    PermutationSpec,
    SemidirectSpec,
)
from .errors import ParseError, UnknownBuiltin

PRODUCT_SEP = "*"
DEFAULT_MAX_ORDER = 200


@dataclass(frozen=True)
class BuiltinEntry:
    name: str
    spec: GroupSpec
    expected_order: int
    notes: str = ""


def _cycle(n):
    return tuple((i + 1) % n for i in range(n))


def _cyclic_spec(n):
    if n == 1:
        return PermutationSpec(1, ())
    return PermutationSpec(n, (_cycle(n),))


def _dihedral_spec(n):
    rotation = _cycle(n)
    reflection = tuple((-i) % n for i in range(n))
    return PermutationSpec(n, (rotation, reflection))


def _symmetric_spec(n):
    transposition = (1, 0) + tuple(range(2, n))
    return PermutationSpec(n, (transposition, _cycle(n)))


# quaternion units as 4-vectors (1, i, j, k); the 8 group elements in order
_Q8_UNITS = [(1, 0, 0, 0), (-1, 0, 0, 0), (0, 1, 0, 0), (0, -1, 0, 0),
             (0, 0, 1, 0), (0, 0, -1, 0), (0, 0, 0, 1), (0, 0, 0, -1)]
_Q8_NAMES = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]


def _hamilton(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)


def _q8_spec():
    # right-regular permutations x -> x*i and x -> x*j on the 8 units
    def right(u):
        return tuple(_Q8_UNITS.index(_hamilton(x, u)) for x in _Q8_UNITS)
    return PermutationSpec(8, (right(_Q8_UNITS[2]), right(_Q8_UNITS[4])))


def _c5sq_aut(matrix):
    """Automorphism of C5 x C5 (element x*5 + y <-> row vector (x, y)) from a 2x2 matrix."""
    (m00, m01), (m10, m11) = matrix
    perm = []
    for x in range(5):
        for y in range(5):
            u = (x * m00 + y * m10) % 5
            v = (x * m01 + y * m11) % 5
            perm.append(u * 5 + v)
    return tuple(perm)


# i -> diag(2, 3), j -> antidiag(-1, 1) over the field with 5 elements
G200_MATRICES = (((2, 0), (0, 3)), ((0, -1 % 5), (1, 0)))
# c acts by a -> a^2, b -> b^3
T100_MATRIX = ((2, 0), (0, 3))


def _c5sq_spec():
    return DirectSpec((_cyclic_spec(5), _cyclic_spec(5)))


def _t100_spec():
    return SemidirectSpec(_c5sq_spec(), _cyclic_spec(4), (_c5sq_aut(T100_MATRIX),))


def _g200_spec():
    return SemidirectSpec(_c5sq_spec(), _q8_spec(), tuple(_c5sq_aut(m) for m in G200_MATRICES))


def _entries() -> dict[str, BuiltinEntry]:
    out: dict[str, BuiltinEntry] = {}
    for n in range(1, 33):
        out[f"C{n}"] = BuiltinEntry(f"C{n}", _cyclic_spec(n), n, f"{n}-cycle")
    out["C2^3"] = BuiltinEntry("C2^3", DirectSpec((_cyclic_spec(2),) * 3), 8,
                               "direct product of three C2")
    out["C5^2"] = BuiltinEntry("C5^2", _c5sq_spec(), 25, "elementary abelian of order 25")
    for n in range(3, 17):
        out[f"D{n}"] = BuiltinEntry(f"D{n}", _dihedral_spec(n), 2 * n,
                                    f"symmetries of the {n}-gon, order {2 * n}")
    out["Q8"] = BuiltinEntry("Q8", _q8_spec(), 8, "right-regular action on the unit quaternions")
    out["S3"] = BuiltinEntry("S3", _symmetric_spec(3), 6, "generated by (0 1) and (0 1 2)")
    out["S4"] = BuiltinEntry("S4", _symmetric_spec(4), 24, "transposition and 4-cycle")
    out["S5"] = BuiltinEntry("S5", _symmetric_spec(5), 120, "transposition and 5-cycle")
    out["A4"] = BuiltinEntry("A4", PermutationSpec(4, ((1, 2, 0, 3), (1, 0, 3, 2))), 12,
                             "(0 1 2) and (0 1)(2 3)")
    out["A5"] = BuiltinEntry("A5", PermutationSpec(5, ((1, 2, 0, 3, 4), _cycle(5))), 60,
                             "(0 1 2) and (0 1 2 3 4)")
    out["S3xC2"] = BuiltinEntry("S3xC2", DirectSpec((_symmetric_spec(3), _cyclic_spec(2))), 12,
                                "S3 times C2")
    out["T100"] = BuiltinEntry("T100", _t100_spec(), 100,
                               "(C5 x C5) : C4 with a^c = a^2, b^c = b^3")
    out["G200"] = BuiltinEntry("G200", _g200_spec(), 200,
                               "(C5 x C5) : Q8, i -> diag(2,3), j -> antidiag(-1,1) over GF(5)")
    return out


BUILTINS: dict[str, BuiltinEntry] = _entries()


def builtin_names() -> list[str]:
    return list(BUILTINS)


def _decorate(name: str, G: FiniteGroup) -> FiniteGroup:
    G.name = name
    if name.startswith("C") and name[1:].isdigit():
        n = G.order
        G.labels = tuple("1" if k == 0 else ("g" if k == 1 else f"g^{k}") for k in range(n))
    elif name == "Q8":
        G.labels = tuple(_Q8_NAMES)
        G.named = {"i": 2, "j": 4}
    elif name == "T100":
        # element (a^x b^y, c^z) has index (5x + y) * 4 + z
        G.named = {"a": 5 * 4, "b": 1 * 4, "c": 1}
        G.labels = tuple(_word(("a", x), ("b", y), ("c", z))
                         for x in range(5) for y in range(5) for z in range(4))
    elif name == "G200":
        G.named = {"a": 5 * 8, "b": 1 * 8, "i": 2, "j": 4}
        G.labels = tuple(_g200_label(x, y, q)
                         for x in range(5) for y in range(5) for q in range(8))
    return G


def _g200_label(x, y, q) -> str:
    w = _word(("a", x), ("b", y))
    if q == 0:
        return w
    return _Q8_NAMES[q] if w == "1" else f"{w}.{_Q8_NAMES[q]}"


def _word(*parts) -> str:
    out = []
    for sym, e in parts:
        if e == 1:
            out.append(sym)
        elif e:
            out.append(f"{sym}^{e}")
    return "".join(out) or "1"


@lru_cache(maxsize=None)
def _builtin_cached(name: str) -> FiniteGroup:
    entry = BUILTINS[name]
    G = core.build(entry.spec)
    assert G.order == entry.expected_order, (name, G.order)
    return _decorate(name, G)


def builtin(name: str) -> FiniteGroup:
    """Builtin group by name; see :data:`BUILTINS`."""
    if name not in BUILTINS:
        raise UnknownBuiltin(f"unknown builtin group {name!r}")
    return _builtin_cached(name)


def builtin_recipe(name: str) -> GroupSpec:
    if name not in BUILTINS:
        raise UnknownBuiltin(f"unknown builtin group {name!r}")
    return BUILTINS[name].spec


@lru_cache(maxsize=None)
def lookup(name: str) -> FiniteGroup:
    """Builtin name or a ``*``-separated direct product of builtins."""
    if name in BUILTINS:
        return builtin(name)
    parts = name.split(PRODUCT_SEP)
    if len(parts) < 2:
        raise UnknownBuiltin(f"unknown group {name!r}")
    G = builtin(parts[0])
    for p in parts[1:]:
        G = core.build_direct(G, builtin(p))
    G.name = name
    return G


def _signature(G: FiniteGroup):
    from .core import center, conjugacy_classes
    return (G.order, G.is_abelian(), tuple(np.sort(G.elem_order).tolist()),
            tuple(sorted(len(c) for c in conjugacy_classes(G))), center(G).size)


@lru_cache(maxsize=None)
def default_catalog(max_order: int = DEFAULT_MAX_ORDER) -> tuple[str, ...]:
    """All builtins up to ``max_order`` plus pairwise direct products of them.

    Products isomorphic to an earlier entry are dropped (abelian groups by
    their element-order statistics, small non-abelian ones by an explicit
    isomorphism test).
    """
    names = [n for n in BUILTINS if BUILTINS[n].expected_order <= max_order]
    kept: dict[tuple, list[str]] = {}

    def duplicate(G):
        sig = _signature(G)
        for other in kept.get(sig, []):
            if G.is_abelian() or (G.order <= core.ISOMORPHISM_CAP
                                  and core.is_isomorphic(G, lookup(other))):
                return True
        return False

    for n in names:
        kept.setdefault(_signature(builtin(n)), []).append(n)
    factors = []
    # prefer the S3 name over its dihedral twin D3 as a product factor
    for n in sorted(names, key=lambda n: n == "D3"):
        G = builtin(n)
        if G.order == 1:
            continue
        if any(core.is_isomorphic(G, builtin(f)) for f in factors
               if builtin(f).order == G.order and G.order <= core.ISOMORPHISM_CAP):
            continue
        factors.append(n)
    products = []
    for i, a in enumerate(factors):
        for b in factors[i:]:
            if BUILTINS[a].expected_order * BUILTINS[b].expected_order > max_order:
                continue
            name = f"{a}{PRODUCT_SEP}{b}"
            G = lookup(name)
            if duplicate(G):
                continue
            kept.setdefault(_signature(G), []).append(name)
            products.append(name)
    return tuple(names + products)


# ------------------------------------------------------------------ ingest


def ingest(path) -> FiniteGroup:
    """Build a group from a JSON group-spec file."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc.msg}", exc.lineno, exc.colno) from None
    try:
        spec = core.spec_from_json(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"{path}: malformed group spec: {exc}") from None
    G = core.build(spec)
    if not isinstance(spec, BuiltinSpec):
        G.name = path.stem
    return G


def resolve(ref: str) -> FiniteGroup:
    """``builtin:NAME`` or ``file:PATH`` (a bare name is treated as builtin)."""
    if ref.startswith("file:"):
        return ingest(ref[5:])
    if ref.startswith("builtin:"):
        ref = ref[8:]
    return lookup(ref)
