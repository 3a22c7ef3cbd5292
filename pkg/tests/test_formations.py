import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from formagraph import catalog as C
from formagraph import formations as FM
from formagraph import structure as S
from formagraph.core import center, closure_gens, quotient, subgroup_as_group
from formagraph.errors import NotPrime

SMALL = ["S3", "Q8", "D4", "A4", "D6", "S4", "C2^3", "D5", "S3xC2", "C12", "D10", "T100"]


def oracle_member(G, F):
    """Membership from textbook characterizations, independent of the library's own tests."""
    if F.kind == "abelian":
        return G.is_abelian()
    if F.kind == "nilpotent":
        return S.lower_central_series(G).terms[-1].size == 1
    if F.kind == "soluble":
        return S.derived_series(G).terms[-1].size == 1
    if F.kind == "supersoluble":
        # Huppert: every maximal subgroup has prime index
        return all(S.is_prime(G.order // M.size) for M in S.maximal_subgroups(G)) \
            if G.order > 1 else True
    if F.kind == "nilpotent-derived":
        D, _ = subgroup_as_group(G, S.derived_subgroup(G).bits)
        return S.lower_central_series(D).terms[-1].size == 1
    if F.kind == "fitting":
        return S.fitting_length(G) <= F.t
    if F.kind == "pcore-fitting":
        Q, _ = quotient(G, S.p_core(G, F.p), check=False)
        return S.fitting_length(Q) <= F.t
    raise AssertionError(F)


def brute_phi(G, F):
    members = [s.bits for s in S.all_subgroups(G).subgroups
               if FM.is_member(subgroup_as_group(G, s.bits)[0], F)]
    maximal = [m for m in members if not any(o != m and o & m == m for o in members)]
    out = G.all_bits
    for m in maximal:
        out &= m
    return out


FORMS = ["abelian", "nilpotent", "soluble", "supersoluble", "nilpotent-derived", "fitting:1",
         "fitting:2", "pcore-fitting:2:1", "pcore-fitting:3:1", "pcore-fitting:2:0"]


@pytest.mark.parametrize("form", FORMS)
def test_membership_matches_oracle(form):
    F = FM.parse_formation(form)
    for name in SMALL:
        G = C.builtin(name)
        assert FM.is_member(G, F) == oracle_member(G, F), (name, form)


def test_membership_examples():
    assert not FM.is_member(C.builtin("S4"), FM.SUPERSOLUBLE)
    assert FM.is_member(C.builtin("S3"), FM.SUPERSOLUBLE)
    assert FM.is_member(C.builtin("A4"), FM.NILPOTENT_DERIVED)
    assert not FM.is_member(C.builtin("S4"), FM.NILPOTENT_DERIVED)
    assert FM.is_member(C.builtin("S3"), FM.fitting(2))
    assert not FM.is_member(C.builtin("S3"), FM.fitting(1))


def test_t100_is_not_a_t_group():
    T = C.builtin("T100")
    assert not FM.is_member(T, FM.TGROUPS)
    H, K = FM.t_group_witness(T)
    # H normal in K normal in T, H not normal in T
    assert H.bits & K.bits == H.bits
    assert FM.t_group_witness(C.builtin("S3")) is None


def test_parse_formation():
    assert str(FM.parse_formation("pcore-fitting:3:1")) == "pcore-fitting:3:1"
    assert FM.parse_formation("fitting:2") == FM.fitting(2)
    with pytest.raises(ValueError):
        FM.parse_formation("fitting")
    with pytest.raises(NotPrime):
        FM.parse_formation("pcore-fitting:4:1")
    with pytest.raises(ValueError):
        FM.parse_formation("abelian:2")


def test_residuals():
    S3 = C.builtin("S3")
    assert FM.residual(S3, FM.ABELIAN).size == 3
    assert FM.residual(C.builtin("Q8"), FM.NILPOTENT).size == 1
    R = FM.residual(C.builtin("S4"), FM.NILPOTENT)
    assert R.size == 12 and R.bits == S.derived_subgroup(C.builtin("S4")).bits


def test_criticality_examples():
    v = FM.criticality(C.builtin("S3"), FM.ABELIAN)
    assert v.is_critical and v.is_strongly_critical
    assert FM.criticality(C.builtin("T100"), FM.TGROUPS).is_critical
    v = FM.criticality(C.builtin("C6"), FM.ABELIAN)
    assert v.is_member and not v.is_critical
    v = FM.criticality(C.builtin("S4"), FM.ABELIAN)
    assert not v.is_critical and v.witness[0] == "subgroup"


def test_phi_examples():
    Q = C.builtin("Q8")
    assert FM.phi_F(Q, FM.ABELIAN).bits == center(Q).bits
    C6 = C.builtin("C6")
    assert FM.phi_F(C6, FM.ABELIAN).size == 6
    assert FM.phi_F(C.builtin("S3"), FM.NILPOTENT).size == 1


@pytest.mark.parametrize("form", ["abelian", "nilpotent", "supersoluble", "nilpotent-derived",
                                  "fitting:2", "pcore-fitting:2:1", "pcore-fitting:3:0"])
def test_phi_matches_lattice(form):
    F = FM.parse_formation(form)
    for name in ["S3", "Q8", "D4", "A4", "S4", "D6", "S3xC2", "A5"]:
        G = C.builtin(name)
        assert FM.phi_F(G, F).bits == brute_phi(G, F), (name, form)


def test_two_generated_recognizability():
    assert FM.two_generated_recognizable_on(C.builtin("C12"), FM.ABELIAN)
    assert not FM.two_generated_recognizable_on(C.builtin("S3"), FM.NILPOTENT)
    # T100 is itself 2-generated by ab and c, so the pair scan must fail on it
    T = C.builtin("T100")
    ab = T.table[T.named["a"], T.named["b"]]
    assert closure_gens(T, (ab, T.named["c"])) == T.all_bits
    assert not FM.is_member(T, FM.TGROUPS)
    assert not FM.two_generated_recognizable_on(T, FM.TGROUPS)


def test_local_data():
    U = FM.SUPERSOLUBLE
    assert FM.fbar_member(C.builtin("C4"), 5, U)
    assert not FM.fbar_member(C.builtin("Q8"), 5, U)
    assert not FM.fbar_member(C.builtin("S3"), 2, FM.fitting(2))
    with pytest.raises(NotPrime):
        FM.fbar_member(C.builtin("C4"), 4, U)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["S4", "D6", "S3xC2", "A4", "D5", "T100"]),
       st.sampled_from(["abelian", "nilpotent", "supersoluble", "fitting:2"]), st.data())
def test_subgroup_membership_is_hereditary(name, form, data):
    G = C.builtin(name)
    F = FM.parse_formation(form)
    subs = S.all_subgroups(G).subgroups
    H = data.draw(st.sampled_from(subs))
    K = data.draw(st.sampled_from([s for s in subs if s.bits & H.bits == s.bits]))
    if FM.is_member_bits(G, H.bits, F):
        assert FM.is_member_bits(G, K.bits, F)
