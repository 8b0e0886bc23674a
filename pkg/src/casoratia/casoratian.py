"""Casorati determinants and the polynomials built from them.

``casoratian`` evaluates ``i**(n(n-1)/2) det(f_k(x_j))`` with
``x_j = x + i((n+1)/2 - j) gamma``.  Two determinant routes are kept on
purpose: fraction-free (Bareiss) elimination over the polynomial ring, and
memoised Laplace expansion.  The second is the oracle for the first.

On top of that sit ``varphi_M``, the pseudo-virtual and eigen Casoratian
polynomials ``Xi_D`` and ``Xibar_D``, the mixed polynomial ``P_{D,n}``,
index duality and the two deformed-potential expressions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import I, ONE, GaussianRational, QBase
from .families import (
    FamilySpec,
    ParamPoint,
    eigen_poly,
    family,
    kappa,
    phi_poly,
    potential,
    pseudo_poly,
    r_factor,
    shift_params,
)
from .poly import (
    EtaKind,
    EtaPoly,
    Kind,
    KindMismatch,
    RatFunc,
    RingPoly,
    exact_div,
    shift_substitute,
    to_eta_basis,
)

__all__ = [
    "IndexSet",
    "DualIndex",
    "NTooSmall",
    "casoratian",
    "casorati_matrix",
    "det_bareiss",
    "det_cofactor",
    "determinant",
    "varphi_M",
    "varphi_M_closed",
    "eta_poly",
    "ell_D",
    "xi_D",
    "xibar_D",
    "xi_D_ring",
    "xibar_D_ring",
    "p_Dn",
    "dualize",
    "krein_adler_admissible",
    "deformed_potential_pv",
    "deformed_potential_ka",
]


class NTooSmall(ValueError):
    pass


# ---------------------------------------------------------------------------
# determinants
# ---------------------------------------------------------------------------


def det_cofactor(matrix) -> RingPoly:
    """Laplace expansion along rows, memoised on the set of used columns."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix has no ring to infer")
    kind = matrix[0][0].kind
    memo = {}

    def minor(row: int, cols: int) -> RingPoly:
        if row == n:
            return RingPoly.const(ONE, kind)
        key = (row, cols)
        hit = memo.get(key)
        if hit is not None:
            return hit
        acc = RingPoly.zero(kind)
        sign = 1
        for c in range(n):
            if cols & (1 << c):
                continue
            entry = matrix[row][c]
            if not entry.is_zero():
                term = entry * minor(row + 1, cols | (1 << c))
                # sign = (-1)**(number of free columns left of c)
                acc = acc + term if sign > 0 else acc - term
            sign = -sign
        memo[key] = acc
        return acc

    return minor(0, 0)


def det_bareiss(matrix) -> RingPoly:
    """Fraction-free Gaussian elimination with exact ring divisions."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix has no ring to infer")
    kind = matrix[0][0].kind
    a = [list(row) for row in matrix]
    sign = 1
    prev = RingPoly.const(ONE, kind)
    for k in range(n - 1):
        if a[k][k].is_zero():
            for r in range(k + 1, n):
                if not a[r][k].is_zero():
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return RingPoly.zero(kind)
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = pivot * a[i][j] - aik * a[k][j]
                a[i][j] = exact_div(num, prev) if k else num
            a[i][k] = RingPoly.zero(kind)
        prev = pivot
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def determinant(matrix, method: str = "auto") -> RingPoly:
    if method == "auto":
        method = "cofactor" if len(matrix) <= 3 else "bareiss"
    if method == "cofactor":
        return det_cofactor(matrix)
    if method == "bareiss":
        return det_bareiss(matrix)
    raise ValueError(f"unknown determinant method {method!r}")


# ---------------------------------------------------------------------------
# Casoratian
# ---------------------------------------------------------------------------


def _row_shifts(n: int):
    return [Fraction(n + 1, 2) - j for j in range(1, n + 1)]


def casorati_matrix(fs, qbase: QBase | None = None):
    """Rows ``j``, columns ``k``: ``f_k(x_j^{(n)})``."""
    n = len(fs)
    return [[shift_substitute(f, c, qbase) for f in fs] for c in _row_shifts(n)]


def _unit_power(k: int) -> GaussianRational:
    return I ** (k % 4)


def casoratian(fs, kind: Kind | None = None, qbase: QBase | None = None, method: str = "auto") -> RingPoly:
    """``W_gamma[f_1, ..., f_n](x)``; the empty list gives 1."""
    fs = list(fs)
    if not fs:
        if kind is None:
            raise ValueError("kind is required for the empty Casoratian")
        return RingPoly.const(ONE, kind)
    k0 = fs[0].kind if kind is None else kind
    for f in fs:
        if f.kind is not k0:
            raise KindMismatch("Casoratian entries must share one kind")
    n = len(fs)
    det = determinant(casorati_matrix(fs, qbase), method)
    return det.scale(_unit_power(n * (n - 1) // 2))


# ---------------------------------------------------------------------------
# varphi_M
# ---------------------------------------------------------------------------


def _spec(spec) -> FamilySpec:
    return family(spec) if isinstance(spec, str) else spec


def varphi_M(M: int, spec, qbase: QBase | None = None) -> RingPoly:
    """Product form ``phi^[M/2] prod_k (phi(x - ik gamma/2) phi(x + ik gamma/2))^[(M-k)/2]``."""
    spec = _spec(spec)
    return _varphi_cached(M, spec.name, qbase)


@lru_cache(maxsize=512)
def _varphi_cached(M: int, name: str, qbase: QBase | None) -> RingPoly:
    spec = family(name)
    phi = phi_poly(spec, qbase)
    out = phi ** (M // 2) if M >= 2 else RingPoly.const(ONE, spec.kind)
    for k in range(1, M - 1):
        e = (M - k) // 2
        if e:
            pair = shift_substitute(phi, Fraction(-k, 2), qbase) * shift_substitute(phi, Fraction(k, 2), qbase)
            out = out * pair ** e
    return out


def eta_poly(spec) -> RingPoly:
    """``eta(x)`` in the x / z ring."""
    spec = _spec(spec)
    if spec.eta_kind is EtaKind.X2:
        return RingPoly.from_coeffs(Kind.ADDITIVE, [0, 0, 1])
    if spec.eta_kind is EtaKind.X:
        return RingPoly.from_coeffs(Kind.ADDITIVE, [0, 1])
    return RingPoly.from_coeffs(Kind.MULTIPLICATIVE, [Fraction(1, 2), 0, Fraction(1, 2)], low=-1)


def varphi_M_closed(M: int, spec, qbase: QBase | None = None) -> RingPoly:
    """Closed form ``prod_{j<k} (eta(x_j) - eta(x_k)) / phi(i j gamma/2)``.

    Stated for the families with ``phi = 2x`` or ``phi = 2 sin x``; the
    latter carries the extra ``(-2)**(M(M-1)/2)``.
    """
    spec = _spec(spec)
    if spec.phi_kind == "1":
        raise ValueError("closed form applies to phi = 2x or 2 sin x only")
    eta = eta_poly(spec)
    shifted = [shift_substitute(eta, c, qbase) for c in _row_shifts(M)]
    out = RingPoly.const(ONE, spec.kind)
    const = ONE
    for j in range(1, M + 1):
        for k in range(j + 1, M + 1):
            out = out * (shifted[j - 1] - shifted[k - 1])
            if spec.phi_kind == "2x":
                const = const * (I * j)
            else:
                const = const * (I * (qbase.power(Fraction(j, 2)) - qbase.power(Fraction(-j, 2))))
    out = out.scale(const.inverse())
    if spec.phi_kind == "2 sin x":
        out = out.scale(GaussianRational(-2) ** (M * (M - 1) // 2))
    return out


# ---------------------------------------------------------------------------
# index sets and duality
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IndexSet:
    elems: tuple

    def __post_init__(self):
        elems = tuple(int(d) for d in self.elems)
        if any(d < 0 for d in elems):
            raise ValueError("index sets hold non-negative integers")
        if len(set(elems)) != len(elems):
            raise ValueError("index set elements must be distinct")
        object.__setattr__(self, "elems", tuple(sorted(elems)))

    @classmethod
    def of(cls, *elems) -> "IndexSet":
        if len(elems) == 1 and not isinstance(elems[0], int):
            elems = tuple(elems[0])
        return cls(tuple(elems))

    @property
    def M(self) -> int:
        return len(self.elems)

    def __len__(self):
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __contains__(self, d):
        return d in self.elems

    def max(self) -> int:
        return max(self.elems) if self.elems else -1

    def without_last(self) -> "IndexSet":
        return IndexSet(self.elems[:-1])

    def without(self, d: int) -> "IndexSet":
        return IndexSet(tuple(e for e in self.elems if e != d))

    def with_(self, d: int) -> "IndexSet":
        return IndexSet(self.elems + (d,))

    def minus_one(self) -> "IndexSet":
        return IndexSet(tuple(d - 1 for d in self.elems))

    def __str__(self):
        return ",".join(str(d) for d in self.elems)


@dataclass(frozen=True)
class DualIndex:
    D: IndexSet
    N: int
    dbar: IndexSet
    removed: tuple
    mu: int

    @property
    def shift(self) -> int:
        return -(self.N + 1)


def ell_D(D) -> int:
    """Generic eta-degree ``sum d_j - M(M-1)/2``."""
    elems = tuple(D)
    M = len(elems)
    return sum(elems) - M * (M - 1) // 2


def dualize(D, N: int) -> DualIndex:
    D = D if isinstance(D, IndexSet) else IndexSet(tuple(D))
    if N < D.max():
        raise NTooSmall(f"N={N} is below max(D)={D.max()}")
    removed = tuple(N - d for d in D.elems)
    dbar = IndexSet(tuple(e for e in range(N + 1) if e not in removed))
    mu = min(removed) if removed else N + 1
    return DualIndex(D, N, dbar, removed, mu)


def krein_adler_admissible(dual) -> bool:
    """``prod_j (n - e_j) >= 0`` for every ``n >= 0``."""
    es = tuple(dual.dbar if isinstance(dual, DualIndex) else dual)
    if not es:
        return True
    for n in range(max(es) + 2):
        prod = 1
        for e in es:
            prod *= n - e
        if prod < 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Casoratian polynomials
# ---------------------------------------------------------------------------


def _as_set(D) -> IndexSet:
    return D if isinstance(D, IndexSet) else IndexSet(tuple(D))


def xi_D_ring(spec, D, p: ParamPoint, method: str = "auto") -> RingPoly:
    """``Xi_D`` in the x / z ring: ``varphi_M^{-1} W[xi_{d_1}, ..., xi_{d_M}]``."""
    spec = _spec(spec)
    D = _as_set(D)
    fs = [pseudo_poly(spec, d, p) for d in D]
    w = casoratian(fs, spec.kind, p.qbase, method)
    return exact_div(w, varphi_M(D.M, spec, p.qbase))


def xibar_D_ring(spec, D, p: ParamPoint, method: str = "auto") -> RingPoly:
    """``Xibar_D`` in the x / z ring: ``varphi_M^{-1} W[P_{d_1}, ..., P_{d_M}]``."""
    spec = _spec(spec)
    D = _as_set(D)
    fs = [eigen_poly(spec, d, p) for d in D]
    w = casoratian(fs, spec.kind, p.qbase, method)
    return exact_div(w, varphi_M(D.M, spec, p.qbase))


def xi_D(spec, D, p: ParamPoint, method: str = "auto") -> EtaPoly:
    spec = _spec(spec)
    return to_eta_basis(xi_D_ring(spec, D, p, method), spec.eta_kind)


def xibar_D(spec, D, p: ParamPoint, method: str = "auto") -> EtaPoly:
    spec = _spec(spec)
    return to_eta_basis(xibar_D_ring(spec, D, p, method), spec.eta_kind)


def p_Dn_ring(spec, D, n: int, p: ParamPoint, method: str = "auto") -> RingPoly:
    spec = _spec(spec)
    D = _as_set(D)
    M = D.M
    size = M + 1
    shifts = _row_shifts(size)
    qb = p.qbase
    xis = [pseudo_poly(spec, d, p) for d in D]
    pn = eigen_poly(spec, n, p)
    matrix = []
    for j, c in enumerate(shifts, start=1):
        row = [shift_substitute(f, c, qb) for f in xis]
        row.append(r_factor(spec, j, M, p) * shift_substitute(pn, c, qb))
        matrix.append(row)
    det = determinant(matrix, method).scale(_unit_power(M * (M + 1) // 2))
    return exact_div(det, varphi_M(size, spec, qb))


def p_Dn(spec, D, n: int, p: ParamPoint, method: str = "auto") -> EtaPoly:
    """``P_{D,n}``: mixed Casoratian of pseudo-virtual columns and one weighted eigen column."""
    spec = _spec(spec)
    return to_eta_basis(p_Dn_ring(spec, D, n, p, method), spec.eta_kind)


# ---------------------------------------------------------------------------
# deformed potentials
# ---------------------------------------------------------------------------


def _shifted_ratio(poly: RingPoly, c_num, c_den, qbase) -> RatFunc:
    return RatFunc(shift_substitute(poly, c_num, qbase), shift_substitute(poly, c_den, qbase))


def deformed_potential_pv(spec, D, p: ParamPoint):
    """``(Vhat_D, Vhat_D^*)`` of the pseudo-virtual-state deformation."""
    spec = _spec(spec)
    D = _as_set(D)
    M = D.M
    if M == 0:
        v = potential(spec, p)
        return v, v.star()
    qb = p.qbase
    base = potential(spec, shift_params(spec, p, -M)).star().shift(Fraction(-1, 2), qb)
    xi_full = xi_D_ring(spec, D, p)
    xi_prev = xi_D_ring(spec, D.without_last(), p)
    k = kappa(spec, p) ** (-M)
    v = base * k * _shifted_ratio(xi_prev, Fraction(1, 2), Fraction(-1, 2), qb) * _shifted_ratio(xi_full, -1, 0, qb)
    return v, v.star()


def deformed_potential_ka(spec, dual: DualIndex, p: ParamPoint) -> RatFunc:
    """``V^KA`` of the eigenstate-deleting deformation at shifted parameters."""
    spec = _spec(spec)
    qb = p.qbase
    M = dual.D.M
    N = dual.N
    pbar = shift_params(spec, p, -(N + 1))
    base = potential(spec, shift_params(spec, p, -M))
    xb = xibar_D_ring(spec, dual.dbar, pbar)
    xb_prime = xibar_D_ring(spec, dual.dbar.with_(dual.mu), pbar) if dual.mu not in dual.dbar else xb
    k = kappa(spec, p) ** (N + 1 - M)
    return base * k * _shifted_ratio(xb_prime, -1, 0, qb) * _shifted_ratio(xb, Fraction(1, 2), Fraction(-1, 2), qb)
