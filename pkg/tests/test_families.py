from fractions import Fraction

import pytest
from flint import fmpq
from hypothesis import given
from hypothesis import strategies as st

from casoratia.exact import ONE, I, GaussianRational, QBase, gq
from casoratia.families import (
    FAMILY_NAMES,
    CapExceeded,
    ParamPoint,
    UnknownFamily,
    eigen_poly,
    energy,
    family,
    kappa,
    potential,
    pseudo_poly,
    r_factor,
    sample_params,
    shift_params,
    twist_constants,
    twist_params,
)
from casoratia.poly import EtaKind, Kind, to_eta_basis

families = st.sampled_from(FAMILY_NAMES)
seeds = st.integers(min_value=0, max_value=10_000)


def eta_degree(spec, p):
    return to_eta_basis(p, spec.eta_kind).degree()


def test_registry_examples():
    w = family("W")
    assert w.kind is Kind.ADDITIVE and w.delta == (Fraction(1, 2),) * 4
    aw = family("AW")
    p = sample_params(aw, 0)
    assert aw.kind is Kind.MULTIPLICATIVE and kappa(aw, p) == p.qbase.q.inverse()
    assert family("cqH").n_params == 0
    with pytest.raises(UnknownFamily):
        family("Jacobi")


def test_kind_split_and_kappa():
    for name in FAMILY_NAMES:
        spec = family(name)
        additive = name in ("W", "cdH", "cH", "MP")
        assert (spec.kind is Kind.ADDITIVE) == additive
        p = sample_params(spec, 3)
        assert kappa(spec, p) == (ONE if additive else p.qbase.q.inverse())


def test_deltas():
    half = Fraction(1, 2)
    expect = {
        "W": (half,) * 4, "AW": (half,) * 4, "cdH": (half,) * 3, "cH": (half,) * 2, "MP": (half, 0),
        "cqJ": (1, 1), "cdqH": (half,) * 3, "ASC": (half,) * 2, "cbqH": (half,), "cqH": (), "cqL": (1,),
    }
    for name, delta in expect.items():
        assert family(name).delta == tuple(Fraction(d) for d in delta)


@given(families, seeds)
def test_sampling_deterministic(name, seed):
    assert sample_params(name, seed) == sample_params(name, seed)


@given(families, seeds)
def test_sampling_real_and_in_range(name, seed):
    p = sample_params(name, seed)
    assert all(v.is_real() for v in p.values)
    if p.qbase is not None:
        assert 0 < p.qbase.s < 1
    if name == "MP":
        w = ((1 - p.mp_circle ** 2) + 2 * p.mp_circle * I) / (1 + p.mp_circle ** 2)
        assert (w * w.conj()) == ONE


def test_mp_circle_example():
    p = ParamPoint("MP", (Fraction(1, 3),), mp_circle=Fraction(1, 2))
    assert energy("MP", 1, p) == gq(Fraction(8, 5))


def test_sbase_override():
    p = sample_params("AW", 4, "3/5")
    assert p.qbase.s == fmpq(3, 5)


@given(families, seeds, st.integers(min_value=0, max_value=8))
def test_eigen_degree(name, seed, n):
    spec = family(name)
    p = sample_params(spec, seed)
    assert eta_degree(spec, eigen_poly(spec, n, p)) == n


def test_eigen_examples():
    for name in FAMILY_NAMES:
        p = sample_params(name, 1)
        assert eigen_poly(name, 0, p).is_constant()
        assert pseudo_poly(name, 0, p).is_constant()
    pw = sample_params("W", 1)
    w1 = eigen_poly("W", 1, pw)
    assert w1.degree() == 2 and w1.coeff(1) == 0
    paw = sample_params("AW", 1)
    p2 = eigen_poly("AW", 2, paw)
    assert p2.low == -2 and p2.high == 2 and p2.coeff(2) == p2.coeff(-2)
    with pytest.raises(CapExceeded):
        eigen_poly("W", 17, pw)
    with pytest.raises(ValueError):
        eigen_poly("W", -1, pw)


def test_cqh_pseudo_is_inverted_base_hermite():
    p = sample_params("cqH", 2)
    tp = twist_params("cqH", p)
    assert tp.qbase == p.qbase.inverted()
    assert pseudo_poly("cqH", 2, p) == eigen_poly("cqH", 2, tp)


def test_wilson_against_oracle(oracles):
    data = oracles["wilson"]
    p = ParamPoint("W", tuple(GaussianRational.parse(a) for a in data["a"]))
    for n, coeffs in data["coeffs"].items():
        got = to_eta_basis(eigen_poly("W", int(n), p), EtaKind.X2)
        assert [str(c) for c in got.coeffs()] == coeffs


def test_askey_wilson_against_oracle(oracles):
    data = oracles["askey_wilson"]
    p = ParamPoint("AW", tuple(GaussianRational.parse(a) for a in data["a"]), QBase(data["s"]))
    for n, coeffs in data["coeffs"].items():
        got = to_eta_basis(eigen_poly("AW", int(n), p), EtaKind.COS)
        assert [str(c) for c in got.coeffs()] == coeffs


def test_energy_examples():
    pw = sample_params("W", 2)
    b1 = sum(pw.values, GaussianRational())
    assert energy("W", 0, pw) == 0 and energy("W", 1, pw) == b1
    paw = sample_params("AW", 2)
    q = paw.qbase.q
    b4 = ONE
    for a in paw.values:
        b4 = b4 * a
    assert energy("AW", 1, paw) == (q.inverse() - 1) * (1 - b4)
    pb = sample_params("cbqH", 2)
    assert energy("cbqH", -3, pb) == pb.qbase.q ** 3 - 1


def test_twist_examples():
    p = ParamPoint("W", (Fraction(1, 2), Fraction(3, 4), Fraction(5, 3), Fraction(7, 5)))
    assert twist_params("W", p).values == tuple(gq(v) for v in (Fraction(1, 2), Fraction(1, 4), Fraction(-2, 3), Fraction(-2, 5)))
    pb = sample_params("cbqH", 5)
    tb = twist_params("cbqH", pb)
    assert tb.values == (pb.values[0] / pb.qbase.q,) and tb.qbase == pb.qbase.inverted()


@given(families, seeds)
def test_twist_involution(name, seed):
    p = sample_params(name, seed)
    assert twist_params(name, twist_params(name, p)) == p


@given(families, seeds)
def test_alpha_prime_is_e_minus_one(name, seed):
    p = sample_params(name, seed)
    assert twist_constants(name, p)[1] == energy(name, -1, p)


def test_twist_constant_examples():
    pw = sample_params("W", 0)
    b1 = sum(pw.values, GaussianRational())
    assert twist_constants("W", pw) == (ONE, -(b1 - 2))
    pa = sample_params("ASC", 0)
    q = pa.qbase.q
    assert twist_constants("ASC", pa) == (q, q - 1)
    pj = sample_params("cqJ", 0)
    al, be = pj.values
    assert twist_constants("cqJ", pj)[0] == pj.qbase.power(Fraction(str((al + be).re)))


@given(families, seeds, st.integers(min_value=0, max_value=8))
def test_energy_reflection(name, seed, v):
    p = sample_params(name, seed)
    al, alp = twist_constants(name, p)
    assert al * energy(name, v, twist_params(name, p)) + alp == energy(name, -v - 1, p)


def test_potential_examples():
    pw = sample_params("W", 0)
    v = potential("W", pw)
    assert v.num.degree() == 4
    pq = sample_params("cqH", 0)
    vq = potential("cqH", pq)
    assert vq.num.is_constant() and vq.den.high == 4
    for name in ("cdqH", "ASC", "cbqH", "cqH", "cqL"):
        p = sample_params(name, 1)
        tp = twist_params(name, p)
        # V''(x) = V'(-x; t(lambda), 1/q) = V(x)
        vpp = potential(name, tp, twisted=True).star()
        assert vpp == potential(name, p)


def test_shift_params_examples():
    p = sample_params("W", 0)
    assert shift_params("W", p, 0) == p
    assert shift_params("W", p, -3).values == tuple(v - Fraction(3, 2) for v in p.values)
    pa = sample_params("AW", 0)
    assert shift_params("AW", pa, 1).values == tuple(v * pa.qbase.s ** 2 for v in pa.values)


def test_r_factor_examples():
    for name in FAMILY_NAMES:
        p = sample_params(name, 0)
        assert r_factor(name, 1, 0, p).is_constant()
    pw = sample_params("W", 0)
    assert r_factor("W", 1, 1, pw).degree() == 4
    with pytest.raises(ValueError):
        r_factor("W", 3, 1, pw)


def test_ch_reality():
    for seed in range(5):
        p = sample_params("cH", seed)
        for n in range(5):
            # real parameters: P_n(x) has real coefficients in eta = x
            assert eigen_poly("cH", n, p).is_real()


def test_paramspoint_dump_load():
    for name in FAMILY_NAMES:
        p = sample_params(name, 9)
        assert ParamPoint.load(name, p.dump()) == p
