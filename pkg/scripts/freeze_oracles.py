"""Recompute reference values with sympy and write tests/data/oracles.json.

The formulas here are transcribed directly (hypergeometric sums written in
eta, determinants via sympy.Matrix) and share no code with the package, so
the frozen file is an independent check on it.  Run from the repo root:

    python3 scripts/freeze_oracles.py
"""

from __future__ import annotations

import json
from pathlib import Path

import sympy as sp

OUT = Path(__file__).resolve().parent.parent / "tests" / "data" / "oracles.json"

x, z, eta = sp.symbols("x z eta")
R = sp.Rational


def gstr(c) -> str:
    """Gaussian rational in the package's text form (``a+bi``)."""
    c = sp.nsimplify(sp.expand(c))
    re, im = sp.re(c), sp.im(c)
    if im == 0:
        return str(re)
    ims = f"{im}i"
    if re == 0:
        return ims
    return f"{re}{'+' if im > 0 else '-'}{abs(im)}i"


def eta_coeffs(expr) -> list:
    poly = sp.Poly(sp.expand(expr), eta)
    deg = poly.degree()
    return [gstr(poly.coeff_monomial(eta ** k)) for k in range(deg + 1)]


def coeff_dict(expr, var, shift: int = 8) -> dict:
    """Coefficients of a (Laurent) polynomial keyed by exponent."""
    poly = sp.Poly(sp.expand(expr * var ** shift), var)
    out = {}
    for (k,), c in poly.terms():
        out[str(k - shift)] = gstr(c)
    return dict(sorted(out.items(), key=lambda kv: int(kv[0])))


def poch(a, k):
    return sp.prod([a + j for j in range(k)]) if k else sp.Integer(1)


def qpoch(a, q, k):
    return sp.prod([1 - a * q ** j for j in range(k)]) if k else sp.Integer(1)


def wilson(n, a):
    """Wilson W_n in eta = x^2; (a1+ix)_k (a1-ix)_k = prod((a1+j)^2 + eta)."""
    a1, a2, a3, a4 = a
    b1 = sum(a)
    pref = poch(a1 + a2, n) * poch(a1 + a3, n) * poch(a1 + a4, n)
    total = 0
    for k in range(n + 1):
        pair = sp.prod([(a1 + j) ** 2 + eta for j in range(k)]) if k else 1
        term = poch(-n, k) * poch(n + b1 - 1, k) * pair
        term /= poch(a1 + a2, k) * poch(a1 + a3, k) * poch(a1 + a4, k) * sp.factorial(k)
        total += term
    return sp.expand(pref * total)


def askey_wilson(n, a, q):
    """Askey-Wilson p_n in eta = cos x; (a1 e^{ix}, a1 e^{-ix}; q)_k = prod(1 - 2 a1 q^j eta + a1^2 q^2j)."""
    a1, a2, a3, a4 = a
    b4 = a1 * a2 * a3 * a4
    pref = a1 ** (-n) * qpoch(a1 * a2, q, n) * qpoch(a1 * a3, q, n) * qpoch(a1 * a4, q, n)
    total = 0
    for k in range(n + 1):
        pair = sp.prod([1 - 2 * a1 * q ** j * eta + a1 ** 2 * q ** (2 * j) for j in range(k)]) if k else 1
        term = qpoch(q ** (-n), q, k) * qpoch(b4 * q ** (n - 1), q, k) * pair * q ** k
        term /= qpoch(a1 * a2, q, k) * qpoch(a1 * a3, q, k) * qpoch(a1 * a4, q, k) * qpoch(q, q, k)
        total += term
    return sp.expand(pref * total)


def casoratian_add(fs):
    n = len(fs)
    rows = [[f.subs(x, x + sp.I * (R(n + 1, 2) - j)) for f in fs] for j in range(1, n + 1)]
    return sp.expand(sp.I ** (n * (n - 1) // 2) * sp.Matrix(rows).det(method="berkowitz"))


def casoratian_mult(fs, q_quarter):
    """Shift x -> x + i c gamma with gamma = log q, i.e. z -> z q^{-c}; q^{1/4} given."""
    n = len(fs)
    rows = []
    for j in range(1, n + 1):
        c = R(n + 1, 2) - j
        factor = q_quarter ** (-4 * c)
        rows.append([f.subs(z, z * factor) for f in fs])
    return sp.expand(sp.I ** (n * (n - 1) // 2) * sp.Matrix(rows).det(method="berkowitz"))


def varphi_closed_add(M):
    """prod_{j<k} (eta(x_j) - eta(x_k)) / phi(i j / 2) with eta = x^2, phi = 2x."""
    xs = [x + sp.I * (R(M + 1, 2) - j) for j in range(1, M + 1)]
    out = sp.Integer(1)
    for j in range(1, M + 1):
        for k in range(j + 1, M + 1):
            out *= (xs[j - 1] ** 2 - xs[k - 1] ** 2) / (sp.I * j)
    return sp.expand(out)


def varphi_closed_mult(M, s):
    """Same with eta = cos x = (z + 1/z)/2, phi(i j gamma/2) = i (q^{j/2} - q^{-j/2}), times (-2)^{M(M-1)/2}."""
    zs = [z * s ** (-4 * (R(M + 1, 2) - j)) for j in range(1, M + 1)]
    cos = [(w + 1 / w) / 2 for w in zs]
    out = sp.Integer((-2) ** (M * (M - 1) // 2))
    for j in range(1, M + 1):
        for k in range(j + 1, M + 1):
            out *= (cos[j - 1] - cos[k - 1]) / (sp.I * (s ** (2 * j) - s ** (-2 * j)))
    return sp.expand(out)


def ratio_of(p, qexpr, var):
    lp = sp.Poly(sp.expand(p), var)
    lq = sp.Poly(sp.expand(qexpr), var)
    r = sp.nsimplify(lp.LC() / lq.LC())
    assert sp.expand(p - r * qexpr) == 0, "not proportional"
    return r


def main():
    W_A = [R(1, 2), R(3, 4), R(5, 3), R(7, 5)]
    AW_S = R(1, 2)
    AW_Q = AW_S ** 4
    AW_A = [R(1, 3), R(-1, 5), R(2, 7), R(3, 4)]
    data = {"wilson": {"a": [str(v) for v in W_A], "coeffs": {}},
            "askey_wilson": {"s": str(AW_S), "a": [str(v) for v in AW_A], "coeffs": {}}}
    for n in range(4):
        data["wilson"]["coeffs"][str(n)] = eta_coeffs(wilson(n, W_A))
        data["askey_wilson"]["coeffs"][str(n)] = eta_coeffs(askey_wilson(n, AW_A, AW_Q))

    # Casoratians of fixed tuples
    add_fs = [x, x ** 2, x ** 3]
    mult_fs = [z + 1 / z, z ** 2 - 3, 1 / z]
    cs = R(2, 3)
    data["casoratian"] = {
        "additive": {"fs": ["x", "x^2", "x^3"], "result": coeff_dict(casoratian_add(add_fs), x)},
        "additive_1x": coeff_dict(casoratian_add([sp.Integer(1), x]), x),
        "multiplicative": {
            "s": str(cs),
            "fs": ["z+1/z", "z^2-3", "1/z"],
            "result": coeff_dict(casoratian_mult(mult_fs, cs), z),
        },
    }

    # varphi_M closed forms
    data["varphi"] = {
        "additive": {str(M): coeff_dict(varphi_closed_add(M), x) for M in range(1, 5)},
        "multiplicative": {"s": str(cs), "values": {str(M): coeff_dict(varphi_closed_mult(M, cs), z) for M in range(1, 5)}},
    }

    # first-step identity for Wilson, D = {1}, N = 1: xi_1(lambda) ~ P_1(lambda - 2 delta)
    twisted = [1 - a for a in W_A]
    shifted = [a - 1 for a in W_A]
    lhs = wilson(1, twisted)
    rhs = wilson(1, shifted)
    data["first_step_wilson"] = {"ratio": gstr(ratio_of(lhs, rhs, eta))}

    # same for Askey-Wilson: twist a -> q/a, shift a -> a q^{-1}
    lhs = askey_wilson(1, [AW_Q / a for a in AW_A], AW_Q)
    rhs = askey_wilson(1, [a / AW_Q for a in AW_A], AW_Q)
    data["first_step_aw"] = {"ratio": gstr(ratio_of(lhs, rhs, eta))}

    # q-inversion: p_n(q/a | q) against p_n(a/q | 1/q)
    data["awqi"] = {}
    for n in range(4):
        lhs = askey_wilson(n, [AW_Q / a for a in AW_A], AW_Q)
        rhs = askey_wilson(n, [a / AW_Q for a in AW_A], 1 / AW_Q)
        data["awqi"][str(n)] = gstr(ratio_of(lhs, rhs, eta)) if n else gstr(sp.expand(lhs / rhs))

    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
