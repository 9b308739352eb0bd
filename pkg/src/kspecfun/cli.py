"""Command-line front end.

Subcommands:

* ``eval FUNCTION --param key=value ...``   evaluate one library function;
* ``verify IDENTITY [--grid key=a:b:n]``    run identity verifiers, one
  report per grid point, exit 1 iff any report failed;
* ``sweep TARGET --grid key=a:b:n ...``     tabulate a function or identity
  over a parameter grid;
* ``selftest [--fixtures PATH]``            recompute the shipped fixture
  values and compare at 1e-8.

Records are flat snake_case JSON (or CSV with the same keys); every record
embeds the package version and the fully resolved parameter set, and output
is deterministic apart from wall_time_ms.  Exit codes: 0 ok, 1 failed
verification, 2 usage/domain error, 3 fixture error.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
import time
from dataclasses import dataclass, field
from importlib import resources

from . import __version__
from .core import k_beta, k_gamma, k_pochhammer
from .errors import (
    DomainError,
    FixtureMismatch,
    FixtureMissing,
    MissingParameter,
    NoConvergence,
    NonFiniteSample,
    PoleError,
    UnknownFunction,
    UnknownIdentity,
)
from .extbeta import ExtBetaParams, chaudhry_beta, ext_k_beta, lee_beta
from .identities import (
    FAILED,
    SPECIAL_CASE_PINS,
    IdentityReport,
    Theorem1Params,
    Theorem2Params,
    Theorem3Params,
    theorem_2_3_lhs,
    verify_corollary_2_1,
    verify_corollary_2_2,
    verify_corollary_2_3,
    verify_corollary_2_4,
    verify_remark_reductions,
    verify_special_case,
    verify_theorem_2_1,
    verify_theorem_2_2,
    verify_theorem_2_3,
)
from .mittag import (
    MLParams,
    ml_classic,
    ml_k,
    ml_prabhakar,
    ml_salim,
    ml_salim_faraj,
    ml_shukla,
    ml_wiman,
)
from .wright import WrightParams, wright_k

SELFTEST_RTOL = 1e-8
_EVAL_SERIES_TOL = 1e-12


@dataclass(frozen=True)
class RunConfig:
    command: str
    function_or_identity: str = ""
    parameters: dict = field(default_factory=dict)
    grid: dict = field(default_factory=dict)  # key -> (start, stop, count)
    tol: float | None = None
    output_format: str = "json"
    output_path: str | None = None
    r_policy: str = "smallest_term"
    exponent: str = "literal"
    n_max: int = 600
    fixtures_path: str | None = None

    def __post_init__(self):
        if self.tol is not None and not (0.0 < self.tol <= 1e-2):
            raise DomainError(f"tol must lie in (0, 1e-2], got {self.tol!r}")
        if self.output_format not in ("json", "csv"):
            raise DomainError(f"format must be json or csv, got {self.output_format!r}")
        for key, (_, _, count) in self.grid.items():
            if count < 1:
                raise DomainError(f"grid count for {key!r} must be >= 1")


def _need(params: dict, *keys) -> list[float]:
    missing = [k for k in keys if k not in params]
    if missing:
        raise MissingParameter(f"missing parameter(s): {', '.join(missing)}")
    return [params[k] for k in keys]


def _wright_params(ps: dict) -> WrightParams:
    (k,) = _need(ps, "k")
    upper, lower = [], []
    for dest, vkey, wkey in ((upper, "a", "A"), (lower, "b", "B")):
        for i in (1, 2, 3, 4):
            v = ps.get(f"{vkey}{i}")
            w = ps.get(f"{wkey}{i}")
            if v is None and w is None:
                continue
            if v is None or w is None:
                raise MissingParameter(f"need both {vkey}{i} and {wkey}{i}")
            dest.append((v, w))
    return WrightParams(k, tuple(upper), tuple(lower))


def _series_diag(res) -> dict:
    return {
        "terms_used": res.terms_used,
        "last_term_abs": res.last_term_abs,
        "converged": res.converged,
    }


def _quad_diag(res) -> dict:
    return {
        "evaluations": res.evaluations,
        "abs_error_estimate": res.abs_error_estimate,
        "converged": res.converged,
    }


def _make_eval_registry():
    def series(fn, *keys):
        def run(ps, tol, n_max):
            args = _need(ps, *keys)
            res = fn(*args, tol=tol, n_max=n_max)
            return res.value, _series_diag(res)
        return run

    def point(fn, *keys):
        def run(ps, tol, n_max):
            return fn(*_need(ps, *keys)), {}
        return run

    def quad(builder):
        def run(ps, tol, n_max):
            res = builder(ps)
            return res.value, _quad_diag(res)
        return run

    def wright(ps, tol, n_max):
        (z,) = _need(ps, "z")
        res = wright_k(_wright_params(ps), z, tol=tol, n_max=n_max)
        return res.value, _series_diag(res)

    return {
        "k_gamma": point(k_gamma, "k", "z"),
        "k_beta": point(k_beta, "k", "x", "y"),
        "k_pochhammer": point(k_pochhammer, "k", "x", "r"),
        "ext_k_beta": quad(lambda ps: ext_k_beta(ExtBetaParams(*_need(ps, "k", "x", "y", "A", "m")))),
        "chaudhry_beta": quad(lambda ps: chaudhry_beta(*_need(ps, "x", "y", "sigma"))),
        "lee_beta": quad(lambda ps: lee_beta(*_need(ps, "x", "y", "p", "m"))),
        "ml_k": series(lambda k, a, b, g, d, p, q, z, **kw: ml_k(MLParams(k, a, b, g, d, p, q), z, **kw),
                       "k", "alpha", "beta", "gamma", "delta", "p", "q", "z"),
        "ml_classic": series(ml_classic, "alpha", "z"),
        "ml_wiman": series(ml_wiman, "alpha", "beta", "z"),
        "ml_prabhakar": series(ml_prabhakar, "alpha", "beta", "gamma", "z"),
        "ml_shukla": series(ml_shukla, "alpha", "beta", "gamma", "q", "z"),
        "ml_salim": series(ml_salim, "alpha", "beta", "gamma", "delta", "z"),
        "ml_salim_faraj": series(ml_salim_faraj, "alpha", "beta", "gamma", "delta", "p", "q", "z"),
        "wright_k": wright,
    }


_EVAL_REGISTRY = _make_eval_registry()


def _ml_from(ps: dict) -> MLParams:
    return MLParams(*_need(ps, "k", "alpha", "beta", "gamma", "delta", "p", "q"))


def _t1_from(ps: dict) -> Theorem1Params:
    ml = _ml_from(ps)
    a, b, z = _need(ps, "a", "b", "z")
    return Theorem1Params(ml, a, b, ps.get("m", 1.0), ps.get("A", 0.0), z)


def _t1_pinned_from(ps: dict) -> Theorem1Params:
    ml = _ml_from(ps)
    b, z = _need(ps, "b", "z")
    return Theorem1Params(ml, ml.beta, b, ps.get("m", 1.0), 0.0, z)


def _t2_from(ps: dict) -> Theorem2Params:
    ml = _ml_from(ps)
    rho, mu, z = _need(ps, "rho", "mu", "z")
    return Theorem2Params(ml, rho, mu, ps.get("m", 1.0), ps.get("A", 0.0), z,
                          ps.get("t", 0.0), ps.get("x", 1.0))


def _t2_pinned_from(ps: dict) -> Theorem2Params:
    ml = _ml_from(ps)
    rho, z = _need(ps, "rho", "z")
    return Theorem2Params(ml, rho, ml.beta, ps.get("m", 1.0), 0.0, z,
                          ps.get("t", 0.0), ps.get("x", 1.0))


def _lam(ps: dict) -> float:
    if "lambda" in ps:
        return ps["lambda"]
    if "lam" in ps:
        return ps["lam"]
    raise MissingParameter("missing parameter(s): lambda")


def _t3_from(ps: dict) -> Theorem3Params:
    ml = _ml_from(ps)
    mu, rho, sigma, z = _need(ps, "mu", "rho", "sigma", "z")
    return Theorem3Params(ml, _lam(ps), mu, rho, sigma, ps.get("a_exp", 0.0),
                          ps.get("u", 0.0), ps.get("m", 1.0), ps.get("A", 0.0), z)


def _t3_pinned_from(ps: dict) -> Theorem3Params:
    ml = _ml_from(ps)
    mu, z = _need(ps, "mu", "z")
    return Theorem3Params(ml, _lam(ps), mu, ps.get("rho", 1.0), ps.get("sigma", 1.0),
                          0.0, 0.0, ps.get("m", 1.0), 0.0, z)


def _make_identity_registry():
    def one(builder, verifier, **fixed):
        def run(ps, cfg: RunConfig):
            kw = dict(fixed)
            kw["n_max"] = cfg.n_max
            if cfg.tol is not None:
                return [verifier(builder(ps), cfg.tol, **kw)]
            return [verifier(builder(ps), **kw)]
        return run

    def t22(builder, verifier):
        def run(ps, cfg: RunConfig):
            kw = {"r_policy": cfg.r_policy, "exponent": cfg.exponent, "n_max": cfg.n_max}
            if cfg.tol is not None:
                return [verifier(builder(ps), cfg.tol, **kw)]
            return [verifier(builder(ps), **kw)]
        return run

    def c22(ps, cfg: RunConfig):
        kw = {"exponent": cfg.exponent, "n_max": cfg.n_max}
        if cfg.tol is not None:
            return [verify_corollary_2_2(_t2_pinned_from(ps), cfg.tol, **kw)]
        return [verify_corollary_2_2(_t2_pinned_from(ps), **kw)]

    def special(case_id, builder):
        def run(ps, cfg: RunConfig):
            kw = {"n_max": cfg.n_max}
            if case_id in ("S3.4", "S3.5", "S3.6"):
                kw.update(r_policy=cfg.r_policy, exponent=cfg.exponent)
            return [verify_special_case(case_id, builder(ps), cfg.tol, **kw)]
        return run

    def remark(ps, cfg: RunConfig):
        if cfg.tol is not None:
            return verify_remark_reductions(cfg.tol, n_max=cfg.n_max)
        return verify_remark_reductions(n_max=cfg.n_max)

    reg = {
        "T2.1": one(_t1_from, verify_theorem_2_1),
        "C2.1": one(_t1_pinned_from, verify_corollary_2_1),
        "T2.2": t22(_t2_from, verify_theorem_2_2),
        "C2.2": c22,
        "T2.3": one(_t3_from, verify_theorem_2_3),
        "C2.3": one(_t3_from, verify_corollary_2_3),
        "C2.4": one(_t3_pinned_from, verify_corollary_2_4),
        "remark": remark,
    }
    builders = {"T2.1": _t1_from, "T2.2": _t2_from, "T2.3": _t3_from}
    for case_id, (parent, _) in SPECIAL_CASE_PINS.items():
        reg[case_id] = special(case_id, builders[parent])
    return reg


def _identity_registry():
    return _make_identity_registry()


def _grid_rows(cfg: RunConfig):
    """Yield (index, merged parameter dict) over the cartesian grid."""
    keys = list(cfg.grid)
    if not keys:
        yield 0, dict(cfg.parameters)
        return
    axes = []
    for key in keys:
        start, stop, count = cfg.grid[key]
        if count == 1:
            axes.append([start])
        else:
            step = (stop - start) / (count - 1)
            axes.append([start + i * step for i in range(count)])
    for idx, combo in enumerate(itertools.product(*axes)):
        ps = dict(cfg.parameters)
        ps.update(zip(keys, combo))
        yield idx, ps


def _report_record(rep: IdentityReport, grid_index: int, wall_ms: float) -> dict:
    rec = {
        "version": __version__,
        "identity": rep.identity_id,
        "parameters": rep.params,
        "lhs_value": rep.lhs.value,
        "lhs_abs_error_estimate": rep.lhs.abs_error_estimate,
        "lhs_evaluations": rep.lhs.evaluations,
        "lhs_converged": rep.lhs.converged,
        "rhs_value": rep.rhs.value,
        "rhs_outer_terms": rep.rhs.outer_terms,
        "rhs_inner_terms": rep.rhs.inner_terms,
        "rhs_truncation_estimate": rep.rhs.truncation_estimate,
        "rhs_converged": rep.rhs.converged,
        "abs_err": rep.abs_err,
        "rel_err": rep.rel_err,
        "ratio": rep.ratio,
        "status": rep.status,
        "grid_index": grid_index,
        "wall_time_ms": wall_ms,
    }
    for key, val in sorted(rep.details.items()):
        rec[f"detail_{key}"] = val
    return rec


def run_eval(cfg: RunConfig) -> dict:
    if cfg.function_or_identity not in _EVAL_REGISTRY:
        raise UnknownFunction(f"unknown function {cfg.function_or_identity!r}")
    if cfg.grid:
        raise DomainError("eval takes fixed parameters only; use sweep for grids")
    tol = cfg.tol if cfg.tol is not None else _EVAL_SERIES_TOL
    start = time.perf_counter()
    value, diag = _EVAL_REGISTRY[cfg.function_or_identity](cfg.parameters, tol, cfg.n_max)
    wall = (time.perf_counter() - start) * 1e3
    rec = {
        "version": __version__,
        "function": cfg.function_or_identity,
        "parameters": dict(cfg.parameters),
        "value": value,
    }
    rec.update(diag)
    rec["wall_time_ms"] = wall
    return rec


def run_verify(cfg: RunConfig) -> tuple[dict, int]:
    registry = _identity_registry()
    tag = cfg.function_or_identity
    if tag not in registry:
        raise UnknownIdentity(f"unknown identity {tag!r}")
    records = []
    counts = {"verified": 0, "flagged_factor_k": 0, "asymptotic_only": 0, "failed": 0}
    for idx, ps in _grid_rows(cfg):
        start = time.perf_counter()
        try:
            reports = registry[tag](ps, cfg)
        except (DomainError, PoleError, NoConvergence,
                NonFiniteSample, OverflowError) as exc:
            counts["failed"] += 1
            records.append({
                "version": __version__,
                "identity": tag,
                "parameters": ps,
                "status": FAILED,
                "error": f"{type(exc).__name__}: {exc}",
                "grid_index": idx,
                "wall_time_ms": (time.perf_counter() - start) * 1e3,
            })
            continue
        wall = (time.perf_counter() - start) * 1e3
        for rep in reports:
            counts[rep.status] += 1
            records.append(_report_record(rep, idx, wall))
    summary = {"version": __version__, "identity": tag, "count": len(records)}
    summary.update(counts)
    payload = {"version": __version__, "command": "verify", "reports": records,
               "summary": summary}
    return payload, (1 if counts["failed"] else 0)


def run_sweep(cfg: RunConfig) -> tuple[dict, int]:
    tag = cfg.function_or_identity
    if tag in _EVAL_REGISTRY:
        tol = cfg.tol if cfg.tol is not None else _EVAL_SERIES_TOL
        rows = []
        for idx, ps in _grid_rows(cfg):
            start = time.perf_counter()
            rec = {"version": __version__, "function": tag, "grid_index": idx,
                   "parameters": ps}
            try:
                value, diag = _EVAL_REGISTRY[tag](ps, tol, cfg.n_max)
                rec["value"] = value
                rec.update(diag)
            except (DomainError, PoleError, NoConvergence,
                    NonFiniteSample, OverflowError) as exc:
                rec["error"] = f"{type(exc).__name__}: {exc}"
            rec["wall_time_ms"] = (time.perf_counter() - start) * 1e3
            rows.append(rec)
        return ({"version": __version__, "command": "sweep", "rows": rows}, 0)
    payload, code = run_verify(cfg)
    payload = {"version": __version__, "command": "sweep",
               "rows": payload["reports"], "summary": payload["summary"]}
    return payload, code


def _builtin_fixtures_path():
    return resources.files("kspecfun").joinpath("data/fixtures.json")


def _selftest_value(entry: dict, n_max: int) -> float:
    fn = entry["function"]
    ps = entry["parameters"]
    if fn == "t2_3_lhs":
        return theorem_2_3_lhs(_t3_from(ps)).value
    if fn not in _EVAL_REGISTRY:
        raise FixtureMissing(f"fixture {entry['id']!r} names unknown function {fn!r}")
    value, _ = _EVAL_REGISTRY[fn](ps, 1e-12, n_max)
    return value


def run_selftest(fixtures_path: str | None = None, n_max: int = 600) -> dict:
    """Recompute every shipped fixture; FixtureMismatch beyond 1e-8 relative."""
    if fixtures_path is None:
        res = _builtin_fixtures_path()
        if not res.is_file():
            raise FixtureMissing("bundled fixture file is missing")
        text = res.read_text()
    else:
        try:
            with open(fixtures_path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise FixtureMissing(f"cannot read fixture file {fixtures_path!r}: {exc}")
    entries = json.loads(text)
    if not entries:
        raise FixtureMissing("fixture file contains no entries")
    offenders = []
    worst = 0.0
    worst_id = ""
    for entry in entries:
        got = _selftest_value(entry, n_max)
        want = entry["value"]
        dev = abs(got - want) / max(abs(want), 1e-300)
        if dev > worst:
            worst, worst_id = dev, entry["id"]
        if dev > SELFTEST_RTOL:
            offenders.append({"id": entry["id"], "expected": want, "got": got,
                              "rel_deviation": dev})
    if offenders:
        raise FixtureMismatch(offenders)
    return {
        "version": __version__,
        "command": "selftest",
        "fixtures": len(entries),
        "max_rel_deviation": worst,
        "worst_id": worst_id,
        "status": "pass",
    }


def _flatten(record: dict, prefix: str = "") -> dict:
    out = {}
    for key, val in record.items():
        name = f"{prefix}{key}"
        if isinstance(val, dict):
            out.update(_flatten(val, f"{name}_"))
        else:
            out[name] = val
    return out


def _fmt_csv(val) -> str:
    if isinstance(val, bool):
        return "true" if val else "false"
    if isinstance(val, float):
        return format(val, ".17g")
    return str(val)


def _to_csv(rows: list[dict]) -> str:
    flat = [_flatten(r) for r in rows]
    header = []
    for row in flat:
        for key in row:
            if key not in header:
                header.append(key)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in flat:
        writer.writerow([_fmt_csv(row[k]) if k in row else "" for k in header])
    return buf.getvalue()


def _to_json(payload) -> str:
    # floats print as the shortest digit string that round-trips to the same
    # double, so output is deterministic and full precision
    return json.dumps(payload, indent=2) + "\n"


def _emit(payload, cfg: RunConfig, csv_rows=None) -> None:
    if cfg.output_format == "csv":
        rows = csv_rows if csv_rows is not None else [payload]
        text = _to_csv(rows)
    else:
        text = _to_json(payload)
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_kv(items, what) -> dict:
    out = {}
    for item in items or []:
        key, sep, val = item.partition("=")
        if not sep or not key:
            raise DomainError(f"malformed --{what} {item!r}; expected key=value")
        try:
            out[key] = float(val)
        except ValueError:
            raise DomainError(f"--{what} {key!r}: {val!r} is not a number")
    return out


def _parse_grid(items) -> dict:
    out = {}
    for item in items or []:
        key, sep, spec = item.partition("=")
        parts = spec.split(":")
        if not sep or not key or len(parts) != 3:
            raise DomainError(
                f"malformed --grid {item!r}; expected key=start:stop:count"
            )
        try:
            start, stop = float(parts[0]), float(parts[1])
            count = int(parts[2])
        except ValueError:
            raise DomainError(f"malformed --grid {item!r}; expected key=start:stop:count")
        out[key] = (start, stop, count)
    return out


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None,
                        help="tolerance override, in (0, 1e-2]")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", default=None, metavar="PATH")
    common.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    common.add_argument("--grid", action="append", default=[],
                        metavar="KEY=START:STOP:COUNT")
    common.add_argument("--n-max", type=int, default=600, dest="n_max",
                        help="series truncation cap")
    common.add_argument("--rpolicy", choices=("truncate_positive", "smallest_term"),
                        default="smallest_term",
                        help="interval-identity cutoff-order truncation policy")
    common.add_argument("--exponent", choices=("literal", "minus1"), default="literal",
                        help="interval-identity (x-t) power convention")

    parser = argparse.ArgumentParser(
        prog="kspecfun",
        description="k-deformed special functions and identity verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    pe = sub.add_parser("eval", parents=[common], help="evaluate one function")
    pe.add_argument("function")
    pv = sub.add_parser("verify", parents=[common], help="verify an identity")
    pv.add_argument("identity")
    pw = sub.add_parser("sweep", parents=[common], help="tabulate over a grid")
    pw.add_argument("target")
    pt = sub.add_parser("selftest", parents=[common], help="recompute shipped fixtures")
    pt.add_argument("--fixtures", default=None, metavar="PATH")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = RunConfig(
            command=args.command,
            function_or_identity=getattr(args, "function", "")
            or getattr(args, "identity", "") or getattr(args, "target", ""),
            parameters=_parse_kv(args.param, "param"),
            grid=_parse_grid(args.grid),
            tol=args.tol,
            output_format=args.format,
            output_path=args.out,
            r_policy=args.rpolicy,
            exponent=args.exponent,
            n_max=args.n_max,
            fixtures_path=getattr(args, "fixtures", None),
        )
        if cfg.command == "eval":
            rec = run_eval(cfg)
            _emit(rec, cfg)
            return 0
        if cfg.command == "verify":
            payload, code = run_verify(cfg)
            _emit(payload, cfg, csv_rows=payload["reports"])
            return code
        if cfg.command == "sweep":
            payload, code = run_sweep(cfg)
            _emit(payload, cfg, csv_rows=payload["rows"])
            return code
        if cfg.command == "selftest":
            rec = run_selftest(cfg.fixtures_path, cfg.n_max)
            _emit(rec, cfg)
            return 0
        raise DomainError(f"unknown command {cfg.command!r}")
    except (FixtureMissing, FixtureMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        if isinstance(exc, FixtureMismatch):
            for off in exc.offenders:
                print(f"  {off['id']}: expected {off['expected']!r}, "
                      f"got {off['got']!r}", file=sys.stderr)
        return 3
    except (UnknownFunction, UnknownIdentity, MissingParameter, DomainError,
            PoleError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
