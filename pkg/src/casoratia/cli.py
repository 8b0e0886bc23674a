"""Command-line front end: ``verify``, ``fuzz``, ``list-families``, ``show-poly``.

Reports are written as JSON lines (one object per check) or TSV.  Every
rational is a fraction string.  Exit status: 0 when nothing failed, 1 on a
failed identity or a bad invocation, 2 when some draw stayed degenerate
after all resamples.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field

from .casoratian import IndexSet
from .exact import GaussianRational, parse_fraction
from .families import FAMILY_NAMES, ParamPoint, UnknownFamily, eigen_poly, family, pseudo_poly, sample_params
from .poly import to_eta_basis
from .verify import Task, Verdict, VerificationReport, plan_tasks, run_batch

FIELDS = (
    "check_id",
    "family",
    "verdict",
    "params",
    "D",
    "N",
    "n_or_v",
    "ratio",
    "expected_degree",
    "observed_degree",
    "attempts",
    "note",
    "witness",
    "elapsed_ms",
)


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    family: str = "all"
    dset: IndexSet = field(default_factory=lambda: IndexSet((1, 2)))
    N: int | None = None
    n_extra: int = 0
    nmax: int = 4
    vmax: int = 4
    seed: int = 0
    draws: int = 1
    sbase: object = None
    out: str | None = None
    format: str = "json"
    stable_order: bool = False
    timing: bool = False
    n: int = 2
    pseudo: bool = False
    max_d: int = 4
    max_m: int = 3

    def families(self) -> list:
        if self.family == "all":
            return list(FAMILY_NAMES)
        names = [f.strip() for f in self.family.split(",")]
        for name in names:
            family(name)
        return names

    def validate(self):
        if self.draws < 1:
            raise ConfigError("--draws must be at least 1")
        if self.N is not None and self.dset.M and self.N < self.dset.max():
            raise ConfigError(f"--N {self.N} is below max(D) = {self.dset.max()}")
        if self.sbase is not None and not 0 < self.sbase < 1:
            raise ConfigError("--sbase must lie strictly between 0 and 1")
        if self.format not in ("json", "tsv"):
            raise ConfigError("--format is json or tsv")
        if min(self.nmax, self.vmax, self.n_extra, self.n) < 0:
            raise ConfigError("degree and N-extra options must be non-negative")


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def _record(r: VerificationReport) -> dict:
    return {
        "check_id": r.check_id,
        "family": r.family,
        "verdict": r.verdict.value,
        "params": r.params.dump(),
        "D": list(r.D) if r.D is not None else None,
        "N": r.N,
        "n_or_v": r.n_or_v,
        "ratio": str(r.ratio) if r.ratio is not None else None,
        "expected_degree": r.expected_degree,
        "observed_degree": r.observed_degree,
        "attempts": r.attempts,
        "note": r.note,
        "witness": r.witness,
        "elapsed_ms": r.elapsed_ms,
    }


def _compact(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def tsv_header() -> bytes:
    return ("\t".join(FIELDS) + "\n").encode()


def serialize_report(r: VerificationReport, fmt: str = "json") -> bytes:
    """One JSON line, or one TSV row with nested fields as compact JSON."""
    rec = _record(r)
    if fmt == "json":
        return (_compact(rec) + "\n").encode()
    if fmt == "tsv":
        cells = []
        for key in FIELDS:
            val = rec[key]
            if val is None:
                cells.append("")
            elif isinstance(val, (dict, list)):
                cells.append(_compact(val))
            else:
                cells.append(str(val))
        return ("\t".join(cells) + "\n").encode()
    raise ValueError(f"unknown format {fmt!r}")


def _from_record(rec: dict) -> VerificationReport:
    ratio = rec.get("ratio")
    D = rec.get("D")
    return VerificationReport(
        check_id=rec["check_id"],
        family=rec["family"],
        params=ParamPoint.load(rec["family"], rec["params"]),
        verdict=Verdict(rec["verdict"]),
        D=tuple(D) if D is not None else None,
        N=rec.get("N"),
        n_or_v=rec.get("n_or_v"),
        ratio=GaussianRational.parse(ratio) if ratio is not None else None,
        witness=rec.get("witness"),
        expected_degree=rec.get("expected_degree"),
        observed_degree=rec.get("observed_degree"),
        note=rec.get("note"),
        attempts=rec.get("attempts", 1),
        elapsed_ms=rec.get("elapsed_ms"),
    )


_INT_FIELDS = {"N", "n_or_v", "expected_degree", "observed_degree", "attempts"}
_JSON_FIELDS = {"params", "D", "witness"}


def parse_report(data: bytes | str, fmt: str = "json") -> VerificationReport:
    """Inverse of ``serialize_report``."""
    text = data.decode() if isinstance(data, bytes) else data
    text = text.rstrip("\n")
    if fmt == "json":
        return _from_record(json.loads(text))
    if fmt == "tsv":
        cells = text.split("\t")
        if len(cells) != len(FIELDS):
            raise ValueError(f"expected {len(FIELDS)} TSV cells, got {len(cells)}")
        rec = {}
        for key, cell in zip(FIELDS, cells):
            if cell == "":
                rec[key] = None
            elif key in _JSON_FIELDS:
                rec[key] = json.loads(cell)
            elif key in _INT_FIELDS:
                rec[key] = int(cell)
            elif key == "elapsed_ms":
                rec[key] = float(cell)
            else:
                rec[key] = cell
        if rec["attempts"] is None:
            rec["attempts"] = 1
        return _from_record(rec)
    raise ValueError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _exit_code(reports) -> int:
    verdicts = {r.verdict for r in reports}
    if Verdict.FAIL in verdicts:
        return 1
    if Verdict.DEGENERATE in verdicts:
        return 2
    return 0


def _emit(reports, cfg: RunConfig, sink) -> list:
    kept = []
    if cfg.format == "tsv":
        sink.write(tsv_header())
    for r in reports:
        sink.write(serialize_report(r, cfg.format))
        kept.append(r)
    return kept


def _fuzz_tasks(cfg: RunConfig) -> list:
    rng = random.Random(cfg.seed)
    tasks = []
    for name in cfg.families():
        for draw in range(cfg.draws):
            m = rng.randint(1, cfg.max_m)
            D = tuple(sorted(rng.sample(range(cfg.max_d + 1), m)))
            N = max(D) + rng.randint(0, 2)
            sb = None if cfg.sbase is None else str(cfg.sbase)
            for check in ("main_identity", "poldual", "potential_duality"):
                kw = {"D": D, "N": N}
                if check == "poldual":
                    kw["n_max"] = min(cfg.nmax, 2)
                tasks.append(Task(check, name, cfg.seed, draw, tuple(sorted(kw.items())), sb))
    return tasks


def run(cfg: RunConfig, stdout=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout.buffer
    cfg.validate()
    if cfg.command == "list-families":
        for name in FAMILY_NAMES:
            spec = family(name)
            stdout.write(f"{name}\t{spec.n_params}\t{spec.kind.value}\t{spec.title}\n".encode())
        return 0
    if cfg.command == "show-poly":
        names = cfg.families()
        if len(names) != 1:
            raise ConfigError("show-poly needs a single --family")
        spec = family(names[0])
        p = sample_params(spec, cfg.seed, cfg.sbase)
        poly = (pseudo_poly if cfg.pseudo else eigen_poly)(spec, cfg.n, p)
        eta = to_eta_basis(poly, spec.eta_kind)
        rec = {
            "family": spec.name,
            "n": cfg.n,
            "pseudo": cfg.pseudo,
            "params": p.dump(),
            "eta": spec.eta_kind.value,
            "coeffs": [str(c) for c in eta.coeffs()],
        }
        stdout.write((_compact(rec) + "\n").encode())
        return 0
    if cfg.command == "verify":
        tasks = plan_tasks(
            cfg.families(), cfg.dset.elems, cfg.N, cfg.seed, cfg.draws, cfg.nmax, cfg.vmax, cfg.n_extra, cfg.sbase
        )
    elif cfg.command == "fuzz":
        tasks = _fuzz_tasks(cfg)
    else:
        raise ConfigError(f"unknown command {cfg.command!r}")
    reports = run_batch(tasks, timing=cfg.timing, stable_order=cfg.stable_order)
    if cfg.out:
        with open(cfg.out, "wb") as fh:
            kept = _emit(reports, cfg, fh)
    else:
        kept = _emit(reports, cfg, stdout)
    return _exit_code(kept)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _dset(text: str) -> IndexSet:
    try:
        return IndexSet(tuple(int(t) for t in text.split(",") if t.strip()))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad index set {text!r}: {exc}") from None


def _N(text: str):
    if text == "auto":
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("--N is an integer or 'auto'") from None


def _rational(text: str):
    try:
        return parse_fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="casoratia", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, draws=1):
        sp.add_argument("--family", default="all", help="family name, comma list or 'all'")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--draws", type=int, default=draws)
        sp.add_argument("--sbase", type=_rational, default=None, help="fourth root s of q, in (0,1)")
        sp.add_argument("--nmax", type=int, default=4)
        sp.add_argument("--vmax", type=int, default=4)
        sp.add_argument("--out", default=None)
        sp.add_argument("--format", choices=("json", "tsv"), default="json")
        sp.add_argument("--stable-order", action="store_true")
        sp.add_argument("--timing", action="store_true", help="record elapsed_ms (breaks byte-identical output)")

    v = sub.add_parser("verify", help="run every applicable check at one index set")
    common(v)
    v.add_argument("--dset", type=_dset, default=IndexSet((1, 2)))
    v.add_argument("--N", type=_N, default=None, help="integer or 'auto' (= max D)")
    v.add_argument("--N-extra", dest="n_extra", type=int, default=0, help="also run N+1 .. N+k")

    f = sub.add_parser("fuzz", help="random index sets through the Casoratian identities")
    common(f, draws=5)
    f.add_argument("--max-d", type=int, default=4)
    f.add_argument("--max-m", type=int, default=3)

    sub.add_parser("list-families", help="family names and parameter counts")

    s = sub.add_parser("show-poly", help="eta coefficients of P_n or xi_n at a sampled point")
    s.add_argument("--family", required=True)
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--sbase", type=_rational, default=None)
    s.add_argument("--pseudo", action="store_true", help="show xi_n instead of P_n")
    return parser


def config_from_args(argv=None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    known = {k: v for k, v in vars(ns).items() if k in RunConfig.__dataclass_fields__}
    return RunConfig(**known)


def main(argv=None) -> int:
    try:
        cfg = config_from_args(argv)
        return run(cfg)
    except (ConfigError, UnknownFamily, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"casoratia: error: {msg}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
