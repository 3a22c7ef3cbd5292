import itertools

import pytest

from formagraph import bits as B
from formagraph import catalog as C
from formagraph import structure as S
from formagraph.core import center, closure_gens, is_isomorphic, quotient, subgroup_as_group


def brute_subgroups(G):
    """Every subgroup, by closing all subsets of size <= 3 (enough for these small groups)."""
    found = set()
    for k in range(4):
        for gens in itertools.combinations(range(G.order), k):
            found.add(closure_gens(G, gens))
    return found


def commutes_with_all(G, x):
    return all(G.table[x, y] == G.table[y, x] for y in range(G.order))


def test_derived_and_solubility():
    assert S.derived_subgroup(C.builtin("S3")).size == 3
    assert not S.is_soluble(C.builtin("A5"))
    assert S.is_soluble(C.builtin("C12"))
    assert S.is_soluble(C.builtin("S4"))


def test_hypercenter():
    assert S.hypercenter(C.builtin("S3")).size == 1
    assert S.hypercenter(C.builtin("Q8")).size == 8
    G = C.lookup("S3*C2")
    Z = S.hypercenter(G)
    assert Z.size == 2
    assert all(commutes_with_all(G, x) for x in Z.members())


def test_nilpotency_matches_lower_central_series():
    for name in ("S3", "Q8", "D8", "D6", "A4", "C2^3", "S4", "D4"):
        G = C.builtin(name)
        lcs_trivial = S.lower_central_series(G).terms[-1].size == 1
        assert S.is_nilpotent(G) == lcs_trivial, name


def test_socles():
    assert S.socle(C.builtin("S4")).size == 4
    assert S.socle(C.builtin("A5")).size == 60
    T = C.builtin("T100")
    soc = S.socle(T)
    assert soc.size == 25
    assert T.named["a"] in soc and T.named["b"] in soc
    assert sorted(m.size for m in S.minimal_normal_subgroups(T)) == [5, 5]


def test_radicals_and_cores():
    assert S.soluble_radical(C.builtin("A5")).size == 1
    assert S.fitting_length(C.builtin("S3")) == 2
    assert S.fitting_length(C.builtin("S4")) == 3
    V = S.p_core(C.builtin("S4"), 2)
    assert V.size == 4 and V.bits == S.socle(C.builtin("S4")).bits


def test_chief_series():
    assert S.chief_series(C.builtin("S3")).sizes == [1, 3, 6]
    assert S.chief_series(C.builtin("S4")).sizes == [1, 4, 12, 24]
    assert S.chief_series(C.builtin("C7")).sizes == [1, 7]


def test_frattini():
    assert S.frattini_subgroup(C.builtin("S3")).size == 1
    assert S.frattini_subgroup(C.builtin("C4")).size == 2
    Q = C.builtin("Q8")
    assert S.frattini_subgroup(Q).bits == center(Q).bits


@pytest.mark.parametrize("name", ["S3", "Q8", "D4", "A4", "C2^3", "D6"])
def test_lattice_matches_brute_force(name):
    G = C.builtin(name)
    got = {s.bits for s in S.all_subgroups(G).subgroups}
    assert got == brute_subgroups(G)


def test_maximal_subgroups_of_s4():
    sizes = sorted(m.size for m in S.maximal_subgroups(C.builtin("S4")))
    assert sizes == [6, 6, 6, 6, 8, 8, 8, 12]


def test_primitive_monolithic():
    S4 = C.builtin("S4")
    N, H = S.primitive_monolithic_soluble(S4)
    assert N.size == 4
    sub, _ = subgroup_as_group(S4, H)
    assert is_isomorphic(sub, C.builtin("S3"))
    N, H = S.primitive_monolithic_soluble(C.builtin("S3"))
    assert (N.size, H.size) == (3, 2)
    assert S.primitive_monolithic_soluble(C.builtin("Q8")) is None


def brute_v(G):
    return {x for x in range(G.order)
            if any(closure_gens(G, (x, y)) == G.all_bits for y in range(G.order))}


@pytest.mark.parametrize("name", ["S3", "C2^3", "Q8", "A4", "D5", "C6"])
def test_generating_pair_elements(name):
    G = C.builtin(name)
    assert S.generating_pair_elements(G) == brute_v(G)


def test_v_examples():
    assert len(S.generating_pair_elements(C.builtin("S3"))) == 5
    assert S.generating_pair_elements(C.builtin("C2^3")) == set()
    V4 = C.lookup("C2*C2")
    assert len(S.generating_pair_elements(V4)) == 3


def test_pair_joins_match_closure():
    G = C.builtin("S4")
    cyc, _, gens = S.cyclic_index(G)
    for (i, j), bits in S.pair_joins(G).items():
        assert bits == closure_gens(G, (B.lowest(gens[i]), B.lowest(gens[j])))


def test_normal_subgroups_are_normal():
    G = C.builtin("S4")
    normals = S.normal_subgroups(G)
    assert sorted(n.size for n in normals) == [1, 4, 12, 24]
    for N in normals:
        Q, _ = quotient(G, N)
        assert Q.order * N.size == 24
