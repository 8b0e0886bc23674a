"""Identity checks returning structured, exact reports.

Each ``verify_*`` function evaluates one family of identities at a single
parameter point and returns a ``VerificationReport``.  ``Pass`` means exact
equality over Gaussian rationals; ``Fail`` carries the nonzero residual;
``Degenerate`` means the draw broke a generic degree expectation (or made a
side vanish) and says nothing about the identity.

``run_check`` adds resampling on degeneracy, ``run_batch`` fans a task list
out over a process pool.
"""

from __future__ import annotations

import enum
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from fractions import Fraction

from .casoratian import (
    IndexSet,
    dualize,
    deformed_potential_ka,
    deformed_potential_pv,
    ell_D,
    p_Dn,
    xi_D,
    xi_D_ring,
    xibar_D,
    xibar_D_ring,
)
from .exact import I, ONE, GaussianRational
from .families import (
    FamilySpec,
    ParamPoint,
    backward_factor,
    eigen_poly,
    energy,
    family,
    forward_factor,
    kappa,
    phi_poly,
    potential,
    pseudo_poly,
    sample_params,
    shift_params,
    twist_constants,
    twist_params,
)
from .poly import (
    EtaPoly,
    NotDivisible,
    NotInEtaImage,
    RatFunc,
    RingPoly,
    exact_div,
    proportional,
    shift_substitute,
    to_eta_basis,
)

MAX_ATTEMPTS = 10

HALF = Fraction(1, 2)


class Verdict(str, enum.Enum):
    PASS = "Pass"
    FAIL = "Fail"
    DEGENERATE = "Degenerate"


@dataclass
class VerificationReport:
    check_id: str
    family: str
    params: ParamPoint
    verdict: Verdict
    D: tuple | None = None
    N: int | None = None
    n_or_v: int | None = None
    ratio: GaussianRational | None = None
    witness: dict | None = None
    expected_degree: int | None = None
    observed_degree: int | None = None
    note: str | None = None
    attempts: int = 1
    elapsed_ms: float | None = None

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    def __eq__(self, other):
        if not isinstance(other, VerificationReport):
            return NotImplemented
        return all(getattr(self, f.name) == getattr(other, f.name) for f in fields(self))


class _Stop(Exception):
    """Ends a check early with a non-pass verdict."""

    def __init__(self, verdict: Verdict, **info):
        super().__init__(verdict.value)
        self.verdict = verdict
        self.info = info


def _fail(note: str, witness=None, **info):
    raise _Stop(Verdict.FAIL, note=note, witness=witness, **info)


def _degenerate(note: str, expected=None, observed=None, **info):
    raise _Stop(Verdict.DEGENERATE, note=note, expected_degree=expected, observed_degree=observed, **info)


# ---------------------------------------------------------------------------
# small helpers
# ---------------------------------------------------------------------------


def _spec(spec) -> FamilySpec:
    return family(spec) if isinstance(spec, str) else spec


def _d_tuple(D) -> tuple:
    return tuple(D.elems) if isinstance(D, IndexSet) else tuple(sorted(D))


def _witness(obj) -> dict:
    if isinstance(obj, RatFunc):
        return {"num": obj.num.dump(), "den": obj.den.dump()}
    if isinstance(obj, EtaPoly):
        return {"eta": obj.poly.dump()}
    return {"poly": obj.dump()}


def _eta_degree(spec: FamilySpec, p: RingPoly) -> int:
    return to_eta_basis(p, spec.eta_kind).degree()


def _need_degree(spec, poly: RingPoly, expected: int, what: str, **info):
    if poly.is_zero():
        _degenerate(f"{what} vanishes", expected, None, **info)
    got = _eta_degree(spec, poly)
    if got != expected:
        _degenerate(f"{what} has eta-degree {got}", expected, got, **info)


def _same(lhs, rhs, note: str, **info):
    if lhs != rhs:
        _fail(note, _witness(RatFunc(lhs) - RatFunc(rhs) if isinstance(lhs, RingPoly) else lhs - rhs), **info)


def _proportional(lhs, rhs, note: str, **info) -> GaussianRational:
    if lhs.is_zero() or rhs.is_zero():
        _degenerate(f"{note}: a side vanishes", **info)
    ok, ratio = proportional(lhs, rhs)
    if not ok:
        a = lhs.poly if isinstance(lhs, EtaPoly) else lhs
        b = rhs.poly if isinstance(rhs, EtaPoly) else rhs
        c = a.leading() / b.leading()
        _fail(note, _witness(a - b.scale(c)), **info)
    return ratio


def _op(V: RatFunc, P: RingPoly, qb) -> RatFunc:
    """``V (P(x - i gamma) - P) + V^* (P(x + i gamma) - P)``."""
    return V * (shift_substitute(P, -1, qb) - P) + V.star() * (shift_substitute(P, 1, qb) - P)


def _finish(check_id, spec, p, t0, ratio=None, **extra) -> VerificationReport:
    return VerificationReport(check_id, spec.name, p, Verdict.PASS, ratio=ratio, elapsed_ms=_ms(t0), **extra)


def _ms(t0) -> float:
    return round((time.perf_counter() - t0) * 1000, 3)


def _guarded(check_id, spec, p, body, **ctx) -> VerificationReport:
    t0 = time.perf_counter()
    try:
        ratio = body()
    except _Stop as stop:
        info = dict(ctx)
        info.update(stop.info)
        return VerificationReport(check_id, spec.name, p, stop.verdict, elapsed_ms=_ms(t0), **info)
    except (NotDivisible, NotInEtaImage, ZeroDivisionError) as exc:
        return VerificationReport(
            check_id, spec.name, p, Verdict.DEGENERATE, note=f"{type(exc).__name__}: {exc}", elapsed_ms=_ms(t0), **ctx
        )
    return _finish(check_id, spec, p, t0, ratio, **ctx)


# ---------------------------------------------------------------------------
# family-level checks
# ---------------------------------------------------------------------------


def verify_shift_relations(spec, p: ParamPoint, n_max: int = 8) -> VerificationReport:
    """Forward and backward shift relations plus shape covariance of ``V``."""
    spec = _spec(spec)
    qb = p.qbase
    phi = phi_poly(spec, qb)
    V = potential(spec, p)
    Vs = V.star()
    p_up = shift_params(spec, p, 1)

    def body():
        lhs = potential(spec, p_up)
        rhs = V.shift(-HALF, qb) * RatFunc(shift_substitute(phi, -1, qb), phi) * kappa(spec, p).inverse()
        _same(lhs, rhs, "V(x; lambda + delta) differs from its shape-covariant form")
        for n in range(1, n_max + 1):
            P = eigen_poly(spec, n, p)
            Q = eigen_poly(spec, n - 1, p_up)
            _need_degree(spec, P, n, f"P_{n}", n_or_v=n)
            _need_degree(spec, Q, n - 1, f"P_{n - 1}(lambda + delta)", n_or_v=n)
            diff = (shift_substitute(P, -HALF, qb) - shift_substitute(P, HALF, qb)).scale(I)
            try:
                fwd = exact_div(diff, phi)
            except NotDivisible as exc:
                _fail(f"forward shift of P_{n} is not divisible by phi", _witness(exc.remainder), n_or_v=n)
            _same(fwd, Q.scale(forward_factor(spec, n, p)), f"forward shift relation at n={n}", n_or_v=n)
            phq = phi * Q
            back = (V * shift_substitute(phq, -HALF, qb) - Vs * shift_substitute(phq, HALF, qb)) * (-I)
            if not back.is_polynomial():
                _fail(f"backward shift of P_{n - 1} is not polynomial", _witness(back), n_or_v=n)
            _same(back, RatFunc(P.scale(backward_factor(spec, n, p))), f"backward shift relation at n={n}", n_or_v=n)
        return None

    return _guarded("shift_relations", spec, p, body)


def verify_difference_eq(spec, p: ParamPoint, n_max: int = 8, v_max: int = 6) -> VerificationReport:
    """Difference equation for ``P_n`` and the twisted one for ``xi_v``.

    The pseudo-virtual polynomials solve the equation of the twisted
    potential; with ``alpha V' = V + ...`` this reads
    ``alpha * op'(xi_v) + alpha' xi_v = E_{-v-1} xi_v``.
    """
    spec = _spec(spec)
    qb = p.qbase
    V = potential(spec, p)
    Vt = potential(spec, p, twisted=True)
    al, alp = twist_constants(spec, p)

    def body():
        for n in range(n_max + 1):
            P = eigen_poly(spec, n, p)
            _need_degree(spec, P, n, f"P_{n}", n_or_v=n)
            lhs = _op(V, P, qb)
            _same(lhs, RatFunc(P.scale(energy(spec, n, p))), f"difference equation for P_{n}", n_or_v=n)
        for v in range(v_max + 1):
            xi = pseudo_poly(spec, v, p)
            _need_degree(spec, xi, v, f"xi_{v}", n_or_v=v)
            lhs = _op(Vt, xi, qb) * al + RatFunc(xi.scale(alp))
            _same(lhs, RatFunc(xi.scale(energy(spec, -v - 1, p))), f"pseudo difference equation for xi_{v}", n_or_v=v)
        return None

    return _guarded("difference_eq", spec, p, body)


def verify_twist_relations(spec, p: ParamPoint, v_max: int = 8) -> VerificationReport:
    """Potential relations under the twist and the energy reflection."""
    spec = _spec(spec)
    qb = p.qbase
    V = potential(spec, p)
    Vp = potential(spec, p, twisted=True)
    Vs, Vps = V.star(), Vp.star()
    al, alp = twist_constants(spec, p)
    phi = phi_poly(spec, qb)
    tp = twist_params(spec, p)

    def body():
        _same(V * Vs.shift(-1, qb), Vp * Vps.shift(-1, qb) * (al * al), "V V*(x - i gamma) relation")
        _same(V + Vs, (Vp + Vps) * al - alp, "V + V* relation")
        rhs = Vs.shift(-1, qb) * RatFunc(shift_substitute(phi, -1, qb), phi) * al.inverse()
        _same(Vp, rhs, "V' in terms of V*(x - i gamma)")
        if alp != energy(spec, -1, p):
            _fail("alpha' differs from E_{-1}", {"alpha_prime": str(alp), "E_-1": str(energy(spec, -1, p))})
        for v in range(v_max + 1):
            lhs = al * energy(spec, v, tp) + alp
            if lhs != energy(spec, -v - 1, p):
                _fail(f"energy reflection at v={v}", {"lhs": str(lhs), "rhs": str(energy(spec, -v - 1, p))}, n_or_v=v)
        return None

    return _guarded("twist_relations", spec, p, body)


def verify_energy_duality(spec, p: ParamPoint, N: int, n_max: int = 4, v_max: int | None = None) -> VerificationReport:
    spec = _spec(spec)
    pbar = shift_params(spec, p, -(N + 1))
    kn = kappa(spec, p) ** (-(N + 1))
    e0 = energy(spec, -N - 1, p)
    v_max = N if v_max is None else min(v_max, N)

    def body():
        for n in range(n_max + 1):
            lhs = energy(spec, n, p) - e0
            rhs = kn * energy(spec, N + 1 + n, pbar)
            if lhs != rhs:
                _fail(f"eigen energy duality at n={n}", {"lhs": str(lhs), "rhs": str(rhs)}, n_or_v=n)
        for v in range(v_max + 1):
            lhs = energy(spec, -v - 1, p) - e0
            rhs = kn * energy(spec, N - v, pbar)
            if lhs != rhs:
                _fail(f"pseudo energy duality at v={v}", {"lhs": str(lhs), "rhs": str(rhs)}, n_or_v=v)
        return None

    return _guarded("energy_duality", spec, p, body, N=N)


# ---------------------------------------------------------------------------
# Casoratian identities
# ---------------------------------------------------------------------------


def verify_main_identity(spec, p: ParamPoint, D, N: int) -> VerificationReport:
    """``Xi_D(eta; lambda)`` against ``Xibar_{Dbar}(eta; lambda - (N+1) delta)``."""
    spec = _spec(spec)
    D = IndexSet(_d_tuple(D))
    ctx = {"D": D.elems, "N": N}

    def body():
        dual = dualize(D, N)
        lhs = xi_D(spec, D, p)
        rhs = xibar_D(spec, dual.dbar, shift_params(spec, p, -(N + 1)))
        want = ell_D(D)
        for side, poly in (("Xi_D", lhs), ("Xibar_Dbar", rhs)):
            if poly.is_zero():
                _degenerate(f"{side} vanishes", want, None)
            if poly.degree() != want:
                _degenerate(f"{side} has eta-degree {poly.degree()}", want, poly.degree())
        return _proportional(lhs, rhs, "Casoratian identity")

    return _guarded("main_identity", spec, p, body, **ctx)


def verify_poldual(spec, p: ParamPoint, D, N: int, n_max: int = 2) -> VerificationReport:
    """Polynomial shadows of the eigenfunction duality.

    ``P_{D,n}`` against ``Xibar_{Dbar + {N+1+n}}`` and ``Xi_{D - d_j}``
    against ``Xibar_{Dbar + {N - d_j}}``, both at the shifted parameters.
    The reported ratio is that of the first ``P_{D,n}`` comparison.
    """
    spec = _spec(spec)
    D = IndexSet(_d_tuple(D))
    ctx = {"D": D.elems, "N": N}

    def body():
        dual = dualize(D, N)
        pbar = shift_params(spec, p, -(N + 1))
        first = None
        for n in range(n_max + 1):
            lhs = p_Dn(spec, D, n, p)
            want = ell_D(D) + D.M + n
            if lhs.is_zero() or lhs.degree() != want:
                _degenerate(f"P_D,{n} has eta-degree {None if lhs.is_zero() else lhs.degree()}", want,
                            None if lhs.is_zero() else lhs.degree(), n_or_v=n)
            rhs = xibar_D(spec, dual.dbar.with_(N + 1 + n), pbar)
            ratio = _proportional(lhs, rhs, f"P_D,{n} duality", n_or_v=n)
            first = ratio if first is None else first
        for d in D:
            lhs = xi_D(spec, D.without(d), p)
            rhs = xibar_D(spec, dual.dbar.with_(N - d), pbar)
            _proportional(lhs, rhs, f"Xi_(D - {d}) duality", n_or_v=d)
        return first

    return _guarded("poldual", spec, p, body, **ctx)


def verify_potential_duality(spec, p: ParamPoint, D, N: int) -> VerificationReport:
    """``V^KA(x) = kappa^{N+1} Vhat_D^*(x - i gamma/2)``.

    Matching the two deformed Hamiltonians term by term (the constant
    ``E_{-N-1}`` and the factor ``kappa^{-N-1}`` included) leaves exactly
    this equality between the potentials.
    """
    spec = _spec(spec)
    D = IndexSet(_d_tuple(D))
    ctx = {"D": D.elems, "N": N}

    def body():
        dual = dualize(D, N)
        if xi_D_ring(spec, D, p).is_zero():
            _degenerate("Xi_D vanishes")
        _, vhat_star = deformed_potential_pv(spec, D, p)
        v_ka = deformed_potential_ka(spec, dual, p)
        rhs = vhat_star.shift(-HALF, p.qbase) * kappa(spec, p) ** (N + 1)
        _same(v_ka, rhs, "deformed potentials disagree")
        return None

    return _guarded("potential_duality", spec, p, body, **ctx)


def verify_shape_reduction(spec, p: ParamPoint, D, n_max: int = 5) -> VerificationReport:
    """``Xibar_{D + {0}}(lambda) ~ Xibar_{D - 1}(lambda + delta)`` and constancy of ``Xibar_{0..n}``."""
    spec = _spec(spec)
    D = IndexSet(_d_tuple(D))
    ctx = {"D": D.elems}

    def body():
        if 0 in D:
            raise ValueError("shape reduction needs 0 outside D")
        for n in range(n_max + 1):
            full = xibar_D(spec, range(n + 1), p)
            if full.is_zero():
                _degenerate(f"Xibar_(0..{n}) vanishes", 0, None, n_or_v=n)
            if not full.is_constant():
                _fail(f"Xibar_(0..{n}) is not constant", _witness(full), n_or_v=n)
        lhs = xibar_D(spec, D.with_(0), p)
        rhs = xibar_D(spec, D.minus_one(), shift_params(spec, p, 1))
        want = ell_D(D.minus_one())
        if lhs.is_zero() or lhs.degree() != want:
            _degenerate("Xibar_(D + {0}) degree", want, None if lhs.is_zero() else lhs.degree())
        return _proportional(lhs, rhs, "shape reduction")

    return _guarded("shape_reduction", spec, p, body, **ctx)


def verify_xi_twist_link(spec, p: ParamPoint, D) -> VerificationReport:
    """``Xi_D(lambda) = Xibar_D(t(lambda))`` exactly.

    ``Xibar_D`` at the twisted point uses that point's own step.  After a
    base-inverting twist the step is ``-gamma``, which reverses the row
    order and contributes ``(-1)**(M(M-1)/2)``.
    """
    spec = _spec(spec)
    D = IndexSet(_d_tuple(D))

    def body():
        lhs = xi_D_ring(spec, D, p)
        if lhs.is_zero():
            _degenerate("Xi_D vanishes", ell_D(D), None)
        tp = twist_params(spec, p)
        rhs = xibar_D_ring(spec, D, tp)
        if tp.qbase != p.qbase and (D.M * (D.M - 1) // 2) % 2:
            rhs = -rhs
        _same(lhs, rhs, "Xi_D differs from Xibar_D at twisted parameters")
        return None

    return _guarded("xi_twist_link", spec, p, body, D=D.elems)


def verify_pseudo_diffeq_dual(spec, p: ParamPoint, v: int, N: int) -> VerificationReport:
    """``Xibar_{Dbar}(lambda-bar)`` for ``D = {v}`` solves the equation of ``t(lambda)``.

    The operator is built from ``V(x; t(lambda))`` with the twisted step,
    which for a base-inverting twist is ``-gamma``.
    """
    spec = _spec(spec)

    def body():
        dual = dualize((v,), N)
        tp = twist_params(spec, p)
        xb = xibar_D_ring(spec, dual.dbar, shift_params(spec, p, -(N + 1)))
        want = ell_D(dual.dbar)
        _need_degree(spec, xb, want, "Xibar_Dbar")
        lhs = _op(potential(spec, tp), xb, tp.qbase)
        _same(lhs, RatFunc(xb.scale(energy(spec, v, tp))), "dual pseudo difference equation")
        return None

    return _guarded("pseudo_diffeq_dual", spec, p, body, n_or_v=v, N=N)


def awqi_constant(p: ParamPoint, n: int) -> GaussianRational:
    """``(-1)^n q^{n(3n+5)/2} / (a1 a2 a3 a4)^n``."""
    q = p.qbase.q
    b4 = ONE
    for a in p.values:
        b4 = b4 * a
    sign = -1 if n % 2 else 1
    return q.__pow__(n * (3 * n + 5) // 2) * (b4 ** n).inverse() * sign


def _inverted_partner(spec, p: ParamPoint) -> ParamPoint:
    """Point evaluated at base ``q^{-1}`` that matches the twisted one."""
    qb = p.qbase
    if spec.name == "AW":
        return ParamPoint(p.family, tuple(a / qb.q for a in p.values), qb.inverted())
    tp = twist_params(spec, p)
    return ParamPoint(tp.family, tp.values, qb.inverted())


def verify_awqi(spec, p: ParamPoint, n_max: int = 5) -> VerificationReport:
    """Twisted AW (or cqJ) polynomials against base-inverted ones.

    For AW the exact constant ``(-1)^n q^{n(3n+5)/2} b4^{-n}`` is asserted
    as well; for cqJ proportionality alone.
    """
    spec = _spec(spec)
    if spec.name not in ("AW", "cqJ"):
        raise ValueError("the q-inversion relation is stated for AW and cqJ")
    tp = twist_params(spec, p)
    other = _inverted_partner(spec, p)

    def body():
        first = None
        for n in range(n_max + 1):
            lhs = to_eta_basis(eigen_poly(spec, n, tp), spec.eta_kind)
            rhs = to_eta_basis(eigen_poly(spec, n, other), spec.eta_kind)
            if lhs.degree() != n:
                _degenerate(f"twisted P_{n} degree", n, lhs.degree(), n_or_v=n)
            ratio = _proportional(lhs, rhs, f"q-inversion at n={n}", n_or_v=n)
            if spec.name == "AW":
                want = awqi_constant(p, n)
                if ratio != want:
                    _fail(f"q-inversion constant at n={n}", {"ratio": str(ratio), "expected": str(want)}, n_or_v=n)
            first = ratio if n == 1 else first
        return first

    return _guarded("awqi", spec, p, body)


# ---------------------------------------------------------------------------
# registry, resampling and batches
# ---------------------------------------------------------------------------

CHECKS = {
    "shift_relations": verify_shift_relations,
    "difference_eq": verify_difference_eq,
    "twist_relations": verify_twist_relations,
    "energy_duality": verify_energy_duality,
    "main_identity": verify_main_identity,
    "poldual": verify_poldual,
    "potential_duality": verify_potential_duality,
    "shape_reduction": verify_shape_reduction,
    "xi_twist_link": verify_xi_twist_link,
    "pseudo_diffeq_dual": verify_pseudo_diffeq_dual,
    "awqi": verify_awqi,
}


def draw_seed(seed: int, draw: int, attempt: int) -> int:
    """Seed of the ``attempt``-th resample of ``draw``; attempt 0 of draw 0 is ``seed``."""
    return seed + 7919 * draw + 104729 * attempt


@dataclass(frozen=True)
class Task:
    check_id: str
    family: str
    seed: int
    draw: int = 0
    kwargs: tuple = ()
    sbase: str | None = None

    def sort_key(self):
        return (self.family, self.check_id, repr(self.kwargs), self.draw)


def run_check(check_id: str, spec, seed: int, draw: int = 0, sbase=None, timing: bool = False, **kwargs) -> VerificationReport:
    """Run one check, resampling up to ``MAX_ATTEMPTS`` times on degeneracy."""
    spec = _spec(spec)
    fn = CHECKS[check_id]
    report = None
    for attempt in range(MAX_ATTEMPTS):
        p = sample_params(spec, draw_seed(seed, draw, attempt), sbase)
        report = fn(spec, p, **kwargs)
        report.attempts = attempt + 1
        if report.verdict is not Verdict.DEGENERATE:
            break
    if not timing:
        report.elapsed_ms = None
    return report


def _run_task(task: Task, timing: bool) -> VerificationReport:
    return run_check(task.check_id, task.family, task.seed, task.draw, task.sbase, timing, **dict(task.kwargs))


def worker_count() -> int:
    raw = os.environ.get("CASORATIA_THREADS", "")
    try:
        cap = int(raw) if raw else (os.cpu_count() or 1)
    except ValueError:
        cap = 1
    return max(1, cap)


def run_batch(tasks, timing: bool = False, stable_order: bool = False, workers: int | None = None):
    """Yield reports for ``tasks``; parallel when more than one worker is allowed."""
    tasks = list(tasks)
    if stable_order:
        tasks.sort(key=Task.sort_key)
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(tasks) <= 1:
        for t in tasks:
            yield _run_task(t, timing)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        if stable_order:
            yield from pool.map(_run_task, tasks, [timing] * len(tasks))
        else:
            from concurrent.futures import as_completed

            futures = [pool.submit(_run_task, t, timing) for t in tasks]
            for fut in as_completed(futures):
                yield fut.result()


def plan_tasks(families, D, N: int | None, seed: int, draws: int, n_max: int, v_max: int, n_extra: int = 0, sbase=None):
    """Every applicable check for each family at ``D`` and the chosen ``N`` values."""
    D = _d_tuple(D)
    base_N = max(D) if N is None else N
    Ns = [base_N + k for k in range(n_extra + 1)]
    sb = None if sbase is None else str(sbase)
    out = []
    for name in families:
        for draw in range(draws):
            def add(check, **kw):
                out.append(Task(check, name, seed, draw, tuple(sorted(kw.items())), sb))

            add("shift_relations", n_max=n_max)
            add("difference_eq", n_max=n_max, v_max=v_max)
            add("twist_relations", v_max=v_max)
            add("xi_twist_link", D=D)
            if 0 not in D:
                add("shape_reduction", D=D)
            if name in ("AW", "cqJ"):
                add("awqi", n_max=n_max)
            for n_val in Ns:
                add("energy_duality", N=n_val, n_max=n_max)
                add("main_identity", D=D, N=n_val)
                add("poldual", D=D, N=n_val, n_max=min(n_max, 2))
                add("potential_duality", D=D, N=n_val)
                for v in D:
                    if v <= v_max:
                        add("pseudo_diffeq_dual", v=v, N=n_val)
    return out


# ---------------------------------------------------------------------------
# negative controls
# ---------------------------------------------------------------------------

MUTATIONS = ("alpha", "kappa", "forward", "twist_sign")


def mutated_family(spec, what: str) -> FamilySpec:
    """Copy of ``spec`` with one constant deliberately wrong."""
    spec = _spec(spec)
    base = type(spec)
    if what == "alpha":
        def _twist_constants(self, p):
            al, alp = base._twist_constants(self, p)
            return al * 2, alp
        overrides = {"_twist_constants": _twist_constants}
    elif what == "kappa":
        overrides = {"_kappa": lambda self, p: base._kappa(self, p) * 2}
    elif what == "forward":
        overrides = {"_forward": lambda self, n, p: base._forward(self, n, p) * 2}
    elif what == "twist_sign":
        def _twist(self, p):
            tp = base._twist(self, p)
            return tp.with_values(tuple(-v for v in tp.values))
        overrides = {"_twist": _twist}
    else:
        raise ValueError(f"unknown mutation {what!r}; choose from {', '.join(MUTATIONS)}")
    mutant = type(f"{base.__name__}_{what}", (base,), overrides)
    return mutant(**{f.name: getattr(spec, f.name) for f in fields(spec)})
