import itertools
import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from formagraph import catalog as C
from formagraph import core
from formagraph.core import (
    build_from_permutations,
    center,
    conjugacy_classes,
    is_isomorphic,
    mul,
    order_of,
    quotient,
    subgroup,
    subgroup_closure,
)
from formagraph.errors import InvalidPermutation, NotAnAutomorphism, OrderCapExceeded
from formagraph.structure import socle


def compose(p, q):
    # apply p, then q
    return tuple(q[i] for i in p)


def perm_closure(gens, degree):
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def test_s3_from_permutations():
    G = build_from_permutations(3, [(1, 0, 2), (1, 2, 0)])
    assert G.order == 6


def test_trivial_group():
    G = build_from_permutations(1, [])
    assert G.order == 1
    assert G.table.tolist() == [[0]]


def test_dihedral_of_hexagon():
    rot = tuple((i + 1) % 6 for i in range(6))
    ref = tuple((-i) % 6 for i in range(6))
    assert build_from_permutations(6, [rot, ref]).order == 12


def test_non_bijection_rejected():
    with pytest.raises(InvalidPermutation):
        build_from_permutations(3, [(0, 0, 1)])


def test_order_cap():
    s7 = [(1, 0, 2, 3, 4, 5, 6), tuple((i + 1) % 7 for i in range(7))]
    with pytest.raises(OrderCapExceeded):
        build_from_permutations(7, s7)


def test_identity_is_index_zero_and_table_is_latin():
    for name in ("S4", "Q8", "T100", "D6"):
        G = C.builtin(name)
        n = G.order
        assert G.table[0].tolist() == list(range(n))
        assert G.table[:, 0].tolist() == list(range(n))
        for row in G.table:
            assert sorted(row.tolist()) == list(range(n))


@pytest.mark.parametrize("name", ["S3", "Q8", "A4", "D5"])
def test_associativity_exhaustive(name):
    t = C.builtin(name).table
    n = t.shape[0]
    x, y, z = np.meshgrid(range(n), range(n), range(n), indexing="ij")
    assert np.array_equal(t[t[x, y], z], t[x, t[y, z]])


def test_t100_action():
    G = C.builtin("T100")
    a, b, c = (G.named[k] for k in "abc")
    ci = core.inv(G, c)
    conj = lambda x: mul(G, mul(G, ci, x), c)
    assert conj(a) == core.power(G, a, 2)
    assert conj(b) == core.power(G, b, 3)
    assert mul(G, a, b) == mul(G, b, a)
    assert order_of(G, c) == 4
    assert order_of(G, a) == order_of(G, b) == 5


def test_bad_action_rejected():
    c3 = C.builtin("C3")
    c2 = C.builtin("C2")
    with pytest.raises(NotAnAutomorphism):
        core.build_semidirect(c3, c2, [(0, 1, 1)])


def test_trivial_acting_group_gives_normal_group():
    Q = C.builtin("Q8")
    G = core.build_semidirect(Q, C.builtin("C1"), [])
    assert is_isomorphic(G, Q)


def test_g200_center_of_q8_acts_by_inversion():
    G = C.builtin("G200")
    i = G.named["i"]
    minus_one = mul(G, i, i)
    for v in (G.named["a"], G.named["b"]):
        conj = mul(G, mul(G, core.inv(G, minus_one), v), minus_one)
        assert conj == core.inv(G, v)


def test_g200_against_matrix_model():
    # independent model: pairs (v, M) with v in GF(5)^2, M in the matrix Q8
    p = 5
    mi = ((2, 0), (0, 3))
    mj = ((0, p - 1), (1, 0))

    def mm(A, Bm):
        return tuple(tuple(sum(A[r][k] * Bm[k][c] for k in range(2)) % p for c in range(2))
                     for r in range(2))

    ident = ((1, 0), (0, 1))
    quats = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in (mi, mj):
                y = mm(x, g)
                if y not in quats:
                    quats.add(y)
                    nxt.append(y)
        frontier = nxt
    assert len(quats) == 8

    def vm(v, M):
        return tuple(sum(v[k] * M[k][c] for k in range(2)) % p for c in range(2))

    def inv_mat(M):
        return next(X for X in quats if mm(M, X) == ident)

    # (v, M)(w, N) = (v + w M^-1, M N) is the right-action semidirect law
    def op(x, y):
        (v, M), (w, N) = x, y
        wm = vm(w, inv_mat(M))
        return ((v[0] + wm[0]) % p, (v[1] + wm[1]) % p), mm(M, N)

    elems = [((x, y), M) for x in range(p) for y in range(p) for M in sorted(quats)]
    e = ((0, 0), ident)

    def order(x):
        k, y = 1, x
        while y != e:
            y = op(y, x)
            k += 1
        return k

    model_orders = sorted(order(x) for x in elems)
    G = C.builtin("G200")
    assert G.order == len(elems) == 200
    assert sorted(G.elem_order.tolist()) == model_orders
    centre = [x for x in elems if all(op(x, y) == op(y, x) for y in elems[::7])]
    assert len(centre) == center(G).size == 1


def test_closure_examples():
    S3 = C.builtin("S3")
    T = C.builtin("T100")
    assert subgroup_closure(S3, [0]).size == 1
    assert subgroup_closure(S3, S3.generators).size == 6
    assert subgroup_closure(T, [T.named["a"], T.named["b"]]).size == 25


def test_center_examples():
    assert center(C.builtin("S3")).size == 1
    assert center(C.builtin("Q8")).size == 2
    G = C.builtin("C12")
    assert center(G).size == 12


def test_conjugacy_classes_partition():
    G = C.builtin("S4")
    classes = conjugacy_classes(G)
    assert sorted(len(c) for c in classes) == [1, 3, 6, 6, 8]
    assert sorted(x for c in classes for x in c) == list(range(24))


def test_quotients():
    S3 = C.builtin("S3")
    A3 = subgroup_closure(S3, [next(x for x in range(6) if S3.elem_order[x] == 3)])
    assert quotient(S3, A3)[0].order == 2
    T = C.builtin("T100")
    Q, proj = quotient(T, subgroup_closure(T, [T.named["a"], T.named["b"]]))
    assert Q.order == 4 and 4 in Q.elem_order.tolist()
    assert is_isomorphic(quotient(T, socle(T))[0], C.builtin("C4"))
    Qt, _ = quotient(S3, subgroup(S3, 1))
    assert is_isomorphic(Qt, S3)


def test_quotient_projection_is_homomorphism():
    G = C.builtin("S4")
    V = socle(G)
    Q, proj = quotient(G, V)
    for x, y in itertools.product(range(24), repeat=2):
        assert proj[G.table[x, y]] == Q.table[proj[x], proj[y]]


def test_isomorphism_examples():
    S3 = C.builtin("S3")
    c3, c2 = C.builtin("C3"), C.builtin("C2")
    semi = core.build_semidirect(c3, c2, [tuple(c3.inv_table.tolist())])
    assert semi.order == 6 and is_isomorphic(S3, semi)
    assert not is_isomorphic(C.builtin("C4"), core.build(core.DirectSpec((c2.recipe, c2.recipe))))


def test_construction_is_deterministic():
    a = core.build(C.builtin_recipe("T100"))
    b = core.build(C.builtin_recipe("T100"))
    assert a.content_hash == b.content_hash == C.builtin("T100").content_hash


def test_spec_json_round_trip():
    for name in ("S3", "T100", "G200", "C2^3"):
        spec = C.builtin_recipe(name)
        again = core.spec_from_json(json.loads(json.dumps(core.spec_to_json(spec))))
        assert core.build(again).content_hash == C.builtin(name).content_hash


perms5 = st.permutations(list(range(5))).map(tuple)


@settings(max_examples=40, deadline=None)
@given(st.lists(perms5, min_size=1, max_size=2))
def test_permutation_group_matches_naive_closure(gens):
    G = build_from_permutations(5, gens)
    assert G.order == len(perm_closure(gens, 5))
    # inverses and orders agree with the table
    for x in range(G.order):
        assert G.table[x, G.inv_table[x]] == 0
        assert order_of(G, x) == G.elem_order[x]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["S4", "D6", "Q8", "A4", "S3xC2"]), st.data())
def test_closure_is_smallest_subgroup(name, data):
    G = C.builtin(name)
    seed = data.draw(st.lists(st.integers(0, G.order - 1), max_size=3))
    H = subgroup_closure(G, seed)
    members = H.members()
    assert all(s in H for s in seed) and 0 in H
    assert all(G.table[x, y] in H for x in members for y in members)
