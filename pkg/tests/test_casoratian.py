import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from casoratia.casoratian import (
    IndexSet,
    NTooSmall,
    casorati_matrix,
    casoratian,
    det_bareiss,
    det_cofactor,
    deformed_potential_ka,
    deformed_potential_pv,
    dualize,
    ell_D,
    krein_adler_admissible,
    p_Dn,
    varphi_M,
    varphi_M_closed,
    xi_D,
    xibar_D,
)
from casoratia.exact import ONE, I, GaussianRational, QBase
from casoratia.families import FAMILY_NAMES, eigen_poly, family, kappa, phi_poly, potential, sample_params, shift_params
from casoratia.poly import Kind, KindMismatch, RingPoly, shift_substitute, star_conjugate, to_eta_basis

from strategies import kinds, qbases, ring_polys

A, M = Kind.ADDITIVE, Kind.MULTIPLICATIVE
X = RingPoly.var(A)
Z = RingPoly.var(M)
HALF = Fraction(1, 2)


def from_dict(kind, d):
    return RingPoly.from_dict(kind, {int(k): GaussianRational.parse(v) for k, v in d.items()})


def test_wdef_examples():
    assert casoratian([], A) == RingPoly.const(ONE, A)
    f = X ** 3 + X.scale(I)
    assert casoratian([f]) == f
    assert casoratian([RingPoly.const(ONE, A), X]) == RingPoly.const(ONE, A)
    with pytest.raises(KindMismatch):
        casoratian([X, Z], qbase=QBase("1/2"))
    with pytest.raises(ValueError):
        casoratian([])


def test_casoratian_against_oracle(oracles):
    data = oracles["casoratian"]
    got = casoratian([X, X ** 2, X ** 3])
    assert got == from_dict(A, data["additive"]["result"])
    assert casoratian([RingPoly.const(ONE, A), X]) == from_dict(A, data["additive_1x"])
    qb = QBase(data["multiplicative"]["s"])
    zi = RingPoly.monomial(M, -1)
    fs = [Z + zi, Z * Z - 3, zi]
    assert casoratian(fs, qbase=qb) == from_dict(M, data["multiplicative"]["result"])


def test_varphi_against_oracle(oracles):
    data = oracles["varphi"]
    for m, coeffs in data["additive"].items():
        expect = from_dict(A, coeffs)
        assert varphi_M(int(m), "W") == expect
        assert varphi_M_closed(int(m), "W") == expect
    qb = QBase(data["multiplicative"]["s"])
    for m, coeffs in data["multiplicative"]["values"].items():
        expect = from_dict(M, coeffs)
        assert varphi_M(int(m), "AW", qb) == expect
        assert varphi_M_closed(int(m), "AW", qb) == expect


def test_varphi_examples():
    qb = QBase("2/3")
    for name in ("W", "AW", "cH"):
        assert varphi_M(0, name, qb).is_constant() and varphi_M(1, name, qb).is_constant()
    assert varphi_M(2, "W") == phi_poly("W")
    assert varphi_M(2, "AW", qb) == phi_poly("AW", qb)
    assert varphi_M(4, "cH") == RingPoly.const(ONE, A)
    with pytest.raises(ValueError):
        varphi_M_closed(3, "cH")


@pytest.mark.parametrize("name", ["W", "AW"])
@pytest.mark.parametrize("m", range(1, 7))
def test_varphi_laws(name, m):
    qb = QBase("3/5")
    spec = family(name)
    phi = phi_poly(spec, qb)
    up = varphi_M(m + 1, spec, qb)
    here = varphi_M(m, spec, qb)
    prod = here
    for j in range(1, m + 1):
        prod = prod * shift_substitute(phi, Fraction(m + 1, 2) - j, qb)
    assert up == prod
    lhs = shift_substitute(here, HALF, qb) * shift_substitute(here, -HALF, qb) * phi
    assert lhs == varphi_M(m - 1, spec, qb) * up if m >= 1 else True


@given(kinds.flatmap(lambda k: st.lists(ring_polys(k, 4), min_size=1, max_size=4)), qbases)
@settings(max_examples=60)
def test_bareiss_matches_cofactor(fs, qb):
    m = casorati_matrix(fs, qb)
    assert det_bareiss(m) == det_cofactor(m)


@given(kinds.flatmap(lambda k: st.lists(ring_polys(k, 3), min_size=2, max_size=4)), qbases, st.data())
@settings(max_examples=40)
def test_antisymmetry(fs, qb, data):
    i, j = data.draw(st.sampled_from(list(itertools.combinations(range(len(fs)), 2))))
    gs = list(fs)
    gs[i], gs[j] = gs[j], gs[i]
    assert casoratian(gs, qbase=qb) == -casoratian(fs, qbase=qb)


@given(kinds.flatmap(lambda k: st.lists(ring_polys(k, 3), min_size=1, max_size=4)), qbases)
@settings(max_examples=40)
def test_conjugation(fs, qb):
    lhs = star_conjugate(casoratian(fs, qbase=qb))
    assert lhs == casoratian([star_conjugate(f) for f in fs], qbase=qb)


def test_index_set():
    d = IndexSet.of(3, 1, 2)
    assert d.elems == (1, 2, 3) and d.M == 3 and d.max() == 3
    assert IndexSet.of([0, 4]).elems == (0, 4)
    with pytest.raises(ValueError):
        IndexSet((1, 1))
    with pytest.raises(ValueError):
        IndexSet((-1,))


def test_ell_d():
    assert ell_D(()) == 0
    assert ell_D((0, 1, 2)) == 0
    assert ell_D((3,)) == 3


def test_dualize_examples():
    d = dualize((4,), 4)
    assert d.dbar.elems == (1, 2, 3, 4) and d.mu == 0
    assert dualize((0,), 0).dbar.elems == ()
    d = dualize((1, 2), 3)
    assert d.dbar.elems == (0, 3) and d.removed == (2, 1) and d.mu == 1 and d.shift == -4
    with pytest.raises(NTooSmall):
        dualize((1, 5), 4)


@given(st.lists(st.integers(min_value=0, max_value=8), min_size=1, max_size=4, unique=True), st.integers(min_value=0, max_value=3))
def test_dualize_invariants(D, extra):
    N = max(D) + extra
    d = dualize(D, N)
    assert len(d.dbar) == N + 1 - len(D)
    assert all(0 <= e <= N for e in d.removed)
    assert set(d.dbar.elems).isdisjoint(d.removed)


def test_admissibility_examples():
    assert krein_adler_admissible(IndexSet(tuple(range(5))))
    assert not krein_adler_admissible(IndexSet((1,)))
    assert krein_adler_admissible(IndexSet((1, 2)))
    assert krein_adler_admissible(IndexSet(()))
    assert not krein_adler_admissible(IndexSet((1, 3)))


@given(st.lists(st.integers(min_value=0, max_value=9), max_size=5, unique=True))
def test_admissibility_matches_product(es):
    brute = all(_prod(n - e for e in es) >= 0 for n in range(12))
    assert krein_adler_admissible(IndexSet(tuple(es))) == brute


def _prod(it):
    out = 1
    for v in it:
        out *= v
    return out


@pytest.mark.parametrize("name", FAMILY_NAMES)
def test_xi_examples(name):
    p = sample_params(name, 2)
    assert xi_D(name, (), p).is_constant()
    assert xi_D(name, (0,), p).is_constant()
    assert xi_D(name, (0, 1, 2), p).is_constant()
    assert xibar_D(name, (0, 1, 2), p).is_constant()
    spec = family(name)
    assert xibar_D(name, (1,), p) == to_eta_basis(eigen_poly(name, 1, p), spec.eta_kind)


@pytest.mark.parametrize("name", FAMILY_NAMES)
def test_degree_laws(name):
    p = sample_params(name, 4)
    for D in [(1,), (2,), (1, 3), (0, 2, 4), (2, 3, 4)]:
        assert xi_D(name, D, p).degree() == ell_D(D)
        for n in range(3):
            assert p_Dn(name, D, n, p).degree() == ell_D(D) + len(D) + n


def test_p_dn_empty_set_is_eigen():
    p = sample_params("AW", 3)
    spec = family("AW")
    ok = to_eta_basis(eigen_poly(spec, 2, p), spec.eta_kind)
    got = p_Dn(spec, (), 2, p)
    assert got.degree() == 2 and got.poly.scale(ok.poly.leading() / got.poly.leading()) == ok.poly


def test_p_dn_single():
    p = sample_params("W", 3)
    for d in range(4):
        assert p_Dn("W", (d,), 0, p).degree() == d + 1


def test_first_step_against_oracle(oracles):
    from casoratia.families import ParamPoint
    from casoratia.poly import proportional

    a = tuple(GaussianRational.parse(v) for v in oracles["wilson"]["a"])
    p = ParamPoint("W", a)
    ok, ratio = proportional(xi_D("W", (1,), p), xibar_D("W", (1,), shift_params("W", p, -2)))
    assert ok and str(ratio) == oracles["first_step_wilson"]["ratio"]
    aw = oracles["askey_wilson"]
    p = ParamPoint("AW", tuple(GaussianRational.parse(v) for v in aw["a"]), QBase(aw["s"]))
    ok, ratio = proportional(xi_D("AW", (1,), p), xibar_D("AW", (1,), shift_params("AW", p, -2)))
    assert ok and str(ratio) == oracles["first_step_aw"]["ratio"]


@pytest.mark.parametrize("name", FAMILY_NAMES)
def test_deformed_potential_examples(name):
    p = sample_params(name, 6)
    qb = p.qbase
    v, vs = deformed_potential_pv(name, (), p)
    assert v == potential(name, p)
    v0, _ = deformed_potential_pv(name, (0,), p)
    expect = potential(name, shift_params(name, p, -1)).star().shift(-HALF, qb) * kappa(name, p).inverse()
    assert v0 == expect
    ka = deformed_potential_ka(name, dualize((0,), 0), p)
    assert ka == potential(name, shift_params(name, p, -1))
