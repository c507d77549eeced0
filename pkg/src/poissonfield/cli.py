"""Command-line front end: scenario configs, curve sweeps, validation runs.

Outputs are CSV (curves, tables, samples) or JSON (validation reports) and
are byte-identical for identical (config, seed, workers).  CSV headers carry
the resolved configuration, its hash, and the library version as ``#``
comments.  Exit codes: 0 ok, 1 validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import io
import json
import math
import os
import re
import sys
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import __version__, errorprob, field, modulation, oracle, stable
from .exceptions import BracketingError, ConfigError, PoissonFieldError

WORKERS_ENV = "POISSONFIELD_WORKERS"

_TABLE1_REFERENCE = {
    (1.5, "bpsk"): 0.374, (1.5, "qpsk"): 0.385,
    (2.0, "bpsk"): 0.423, (2.0, "qpsk"): 0.441,
    (3.0, "bpsk"): 0.509, (3.0, "qpsk"): 0.531,
    (4.0, "bpsk"): 0.576, (4.0, "qpsk"): 0.599,
}
_TABLE1_TOL = 0.005

_SWEEP_AXES = ("snr_db", "r0", "lambda", "inr_db", "snr_inr_db")
_CONFIG_KEYS = {
    "lambda", "b", "sigma_db", "k", "n0", "t", "r0", "g0",
    "snr_db", "inr_db", "e0", "e",
    "probe_mod", "interferer_mod",
    "metric", "p_star", "n_mc", "n_b", "n_symbols",
    "seed", "workers", "sweep",
}
_SWEEP_KEYS = {"axis", "start", "stop", "points", "log"}


def _fmt(x: float) -> str:
    return format(float(x), ".15e")


def parse_modulation(spec):
    """Modulation spec: 'bpsk', 'qpsk', '<M>psk', '<M>qam', or an inline
    constellation {"points": [[re, im], ...]}."""
    if isinstance(spec, dict):
        return modulation.constellation_from_json(json.dumps(spec))
    if not isinstance(spec, str):
        raise ConfigError(f"bad modulation spec {spec!r}")
    name = spec.strip().lower()
    if name == "bpsk":
        return modulation.mpsk(2)
    if name == "qpsk":
        return modulation.mpsk(4)
    m = re.fullmatch(r"(\d+)psk", name)
    if m:
        return modulation.mpsk(int(m.group(1)))
    m = re.fullmatch(r"(\d+)qam", name)
    if m:
        return modulation.mqam(int(m.group(1)))
    raise ConfigError(f"unknown modulation {spec!r}")


@dataclass
class RunConfig:
    """Resolved run configuration (file fields merged with flag overrides)."""

    lam: float = 0.01
    b: float = 2.0
    sigma_db: float = 0.0
    k: float = 1.0
    n0: float = 1.0
    t: float = 1.0
    r0: float = 1.0
    g0: float | None = None
    snr_db: float | None = None
    inr_db: float | None = None
    e0: float | None = None
    e: float | None = None
    probe_mod: object = "bpsk"
    interferer_mod: object = None
    metric: str = "outage"
    p_star: float = 1e-2
    n_mc: int = 20_000
    n_b: int = 20_000
    n_symbols: int = 100_000
    seed: int = 0
    workers: int | None = None
    sweep: dict | None = dc_field(default=None)

    @classmethod
    def from_dict(cls, doc: dict) -> "RunConfig":
        unknown = set(doc) - _CONFIG_KEYS
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        kwargs = dict(doc)
        if "lambda" in kwargs:
            kwargs["lam"] = kwargs.pop("lambda")
        cfg = cls(**kwargs)
        cfg.validate()
        return cfg

    def validate(self):
        if self.metric not in ("outage", "average"):
            raise ConfigError(f"metric must be outage or average, got {self.metric!r}")
        if self.sweep is not None:
            unknown = set(self.sweep) - _SWEEP_KEYS
            if unknown:
                raise ConfigError(f"unknown sweep keys: {sorted(unknown)}")
            axis = self.sweep.get("axis")
            if axis not in _SWEEP_AXES:
                raise ConfigError(f"sweep axis must be one of {_SWEEP_AXES}")
            if int(self.sweep.get("points", 0)) < 1:
                raise ConfigError("sweep needs at least one point")
        for name in ("n_mc", "n_b", "n_symbols"):
            if int(getattr(self, name)) < 1:
                raise ConfigError(f"{name} must be >= 1")
        if not 0.0 < self.p_star < 1.0:
            raise ConfigError("p_star must be in (0, 1)")

    def resolved_workers(self) -> int:
        if self.workers is not None:
            return max(1, int(self.workers))
        env = os.environ.get(WORKERS_ENV)
        return max(1, int(env)) if env else 1

    def to_scenario(self, **overrides) -> field.NetworkScenario:
        merged = {
            "lam": self.lam, "b": self.b, "sigma_db": self.sigma_db,
            "k": self.k, "n0": self.n0, "t": self.t, "r0": self.r0,
            "g0": self.g0, "snr_db": self.snr_db, "inr_db": self.inr_db,
            "e0": self.e0, "e": self.e,
        }
        merged.update(overrides)
        if merged.get("e0") is not None:
            e0 = merged["e0"]
        elif merged["snr_db"] is not None:
            e0 = merged["n0"] * 10.0 ** (merged["snr_db"] / 10.0)
        else:
            e0 = 1.0
        if merged["e"] is not None:
            e = merged["e"]
        elif merged["inr_db"] is not None and merged["inr_db"] != -math.inf:
            e = merged["n0"] * 10.0 ** (merged["inr_db"] / 10.0)
        else:
            e = 0.0
        return field.NetworkScenario(
            lam=merged["lam"], b=merged["b"],
            sigma=field.sigma_from_db(merged["sigma_db"]),
            k=merged["k"], N0=merged["n0"], T=merged["t"],
            E=e, E0=e0, r0=merged["r0"], G0=merged["g0"])

    def to_json(self) -> str:
        doc = {
            "lambda": self.lam, "b": self.b, "sigma_db": self.sigma_db,
            "k": self.k, "n0": self.n0, "t": self.t, "r0": self.r0,
            "g0": self.g0, "snr_db": self.snr_db, "inr_db": self.inr_db,
            "e0": self.e0, "e": self.e, "probe_mod": self.probe_mod,
            "interferer_mod": self.interferer_mod, "metric": self.metric,
            "p_star": self.p_star, "n_mc": self.n_mc, "n_b": self.n_b,
            "n_symbols": self.n_symbols, "seed": self.seed,
            "workers": self.resolved_workers(), "sweep": self.sweep,
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def load_config(args) -> RunConfig:
    doc = {}
    if getattr(args, "config", None):
        with open(args.config, "r", encoding="utf-8") as fh:
            try:
                doc = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"invalid config JSON: {exc}") from exc
        if not isinstance(doc, dict):
            raise ConfigError("config file must hold a JSON object")
    cfg = RunConfig.from_dict(doc)
    for flag, attr in (("seed", "seed"), ("workers", "workers"),
                       ("p_star", "p_star"), ("n_mc", "n_mc"),
                       ("n_b", "n_b"), ("metric", "metric")):
        val = getattr(args, flag, None)
        if val is not None:
            setattr(cfg, attr, val)
    sweep_axis = getattr(args, "sweep", None)
    if sweep_axis is not None:
        cfg.sweep = {"axis": sweep_axis, "start": args.start, "stop": args.stop,
                     "points": args.points, "log": bool(getattr(args, "log", False))}
    cfg.validate()
    return cfg


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_header(buf: io.StringIO, cfg_json: str, seed: int, workers: int):
    digest = hashlib.sha256(cfg_json.encode()).hexdigest()[:16]
    buf.write(f"# poissonfield {__version__}\n")
    buf.write(f"# config_sha256={digest} seed={seed} workers={workers}\n")
    buf.write(f"# config={cfg_json}\n")


# ---------------------------------------------------------------------------
# stable pdf | stable sample


def cmd_stable(args) -> int:
    if args.points is not None and args.points < 1:
        raise ConfigError("--points must be >= 1")
    if args.n is not None and args.n < 1:
        raise ConfigError("--n must be >= 1")
    s = field.NetworkScenario(lam=args.lam, b=args.b,
                              sigma=field.sigma_from_db(args.sigma_db))
    params = field.power_factor_params(s)
    cfg_json = json.dumps({"action": args.action, "b": args.b,
                           "lambda": args.lam, "sigma_db": args.sigma_db,
                           "xmax": args.xmax, "points": args.points,
                           "n": args.n, "seed": args.seed},
                          sort_keys=True, separators=(",", ":"))
    buf = io.StringIO()
    _csv_header(buf, cfg_json, args.seed or 0, 1)
    if args.action == "pdf":
        xs = np.linspace(args.xmax / args.points, args.xmax, args.points)
        vals = stable.pdf(params, xs)
        buf.write("a,density\n")
        for x, v in zip(xs, vals):
            buf.write(f"{_fmt(x)},{_fmt(v)}\n")
    else:
        rng = np.random.default_rng(args.seed)
        draws = stable.sample_stable(params, rng, args.n)
        buf.write("sample\n")
        for v in draws:
            buf.write(f"{_fmt(v)}\n")
    _emit(buf.getvalue(), args.out)
    return 0


# ---------------------------------------------------------------------------
# table1


def cmd_table1(args) -> int:
    table = modulation.moment_table()
    buf = io.StringIO()
    cfg_json = json.dumps({"action": "table1"}, separators=(",", ":"))
    _csv_header(buf, cfg_json, 0, 1)
    buf.write("b,modulation,moment_ratio,reference,abs_dev,tolerance\n")
    worst = 0.0
    lines = ["  b   mod    ratio    reference  |dev|"]
    for (b, name), value in sorted(table.items()):
        ref = _TABLE1_REFERENCE[(b, name)]
        dev = abs(value - ref)
        worst = max(worst, dev)
        buf.write(f"{_fmt(b)},{name},{_fmt(value)},{_fmt(ref)},{_fmt(dev)},{_fmt(_TABLE1_TOL)}\n")
        lines.append(f"{b:4.1f}  {name:5s}  {value:.4f}   {ref:.3f}      {dev:.4f}")
    buf.write(f"# max_deviation={_fmt(worst)} tolerance={_fmt(_TABLE1_TOL)}\n")
    _emit(buf.getvalue(), args.out)
    if args.out:
        lines.append(f"max deviation {worst:.4f} (tolerance {_TABLE1_TOL})")
        print("\n".join(lines))
    return 0 if worst <= _TABLE1_TOL else 1


# ---------------------------------------------------------------------------
# curve


def _sweep_values(sweep: dict) -> np.ndarray:
    n = int(sweep["points"])
    start, stop = float(sweep["start"]), float(sweep["stop"])
    if sweep.get("log"):
        if start <= 0 or stop <= 0:
            raise ConfigError("log sweep needs positive bounds")
        return np.geomspace(start, stop, n)
    return np.linspace(start, stop, n)


def cmd_curve(args) -> int:
    cfg = load_config(args)
    if cfg.sweep is None:
        raise ConfigError("curve needs a sweep (config 'sweep' or --sweep flags)")
    probe = parse_modulation(cfg.probe_mod)
    interferer = parse_modulation(cfg.interferer_mod) if cfg.interferer_mod else probe
    workers = cfg.resolved_workers()
    axis = cfg.sweep["axis"]
    if axis in ("snr_db", "snr_inr_db") and cfg.e0 is not None:
        raise ConfigError(f"sweeping {axis} conflicts with explicit e0")
    if axis in ("inr_db", "snr_inr_db") and cfg.e is not None:
        raise ConfigError(f"sweeping {axis} conflicts with explicit e")
    xs = _sweep_values(cfg.sweep)

    buf = io.StringIO()
    _csv_header(buf, cfg.to_json(), cfg.seed, workers)
    buf.write("x,value,std_err,n\n")
    trailing_errors = []
    for i, x in enumerate(xs):
        override = {"lambda": {"lam": x}, "snr_db": {"snr_db": x},
                    "inr_db": {"inr_db": x}, "r0": {"r0": x},
                    "snr_inr_db": {"snr_db": x, "inr_db": x}}[axis]
        try:
            s = cfg.to_scenario(**override)
            if cfg.metric == "outage":
                est = errorprob.outage_probability(
                    s, probe, cfg.p_star, cfg.n_mc, cfg.seed + i, workers,
                    interferer_c=interferer)
            else:
                est = errorprob.average_error_probability(
                    s, probe, cfg.n_b, cfg.seed + i, workers,
                    interferer_c=interferer)
            buf.write(f"{_fmt(x)},{_fmt(est.value)},{_fmt(est.std_err)},{est.n}\n")
        except (PoissonFieldError, ValueError) as exc:
            buf.write(f"{_fmt(x)},nan,nan,0\n")
            trailing_errors.append(f"# point x={_fmt(x)} failed: {exc}\n")
    for line in trailing_errors:
        buf.write(line)
    _emit(buf.getvalue(), args.out)
    return 0


# ---------------------------------------------------------------------------
# tradeoff


def cmd_tradeoff(args) -> int:
    cfg = load_config(args)
    if args.pstar is not None:
        cfg.p_star = args.pstar
    cfg.validate()
    probe = parse_modulation(cfg.probe_mod)
    interferer = parse_modulation(cfg.interferer_mod) if cfg.interferer_mod else probe
    workers = cfg.resolved_workers()
    try:
        lams = [float(tok) for tok in args.lambda_grid.split(",") if tok]
    except ValueError as exc:
        raise ConfigError(f"bad --lambda-grid: {exc}") from exc
    if not lams:
        raise ConfigError("empty --lambda-grid")

    buf = io.StringIO()
    _csv_header(buf, cfg.to_json(), cfg.seed, workers)
    buf.write("lambda,inr_db,capped\n")
    trailing_errors = []
    base = cfg.to_scenario()
    for i, lam in enumerate(lams):
        try:
            res = errorprob.inr_for_outage(
                base, probe, lam, args.pout_target, cfg.p_star, cfg.seed + i,
                n_mc=cfg.n_mc, workers=workers, inr_cap_db=args.inr_cap_db,
                interferer_c=interferer)
            buf.write(f"{_fmt(lam)},{_fmt(res.inr_db)},{int(res.capped)}\n")
        except BracketingError as exc:
            buf.write(f"{_fmt(lam)},nan,0\n")
            trailing_errors.append(f"# lambda={_fmt(lam)} unachievable: {exc}\n")
    for line in trailing_errors:
        buf.write(line)
    _emit(buf.getvalue(), args.out)
    return 0


# ---------------------------------------------------------------------------
# validate


def _check(name, measured, tolerance, passed):
    return {"name": name, "measured": float(measured),
            "tolerance": float(tolerance), "passed": bool(passed)}


def _suite_stable(seed: int) -> list[dict]:
    from scipy import stats as sps
    checks = []
    rng = np.random.default_rng(seed)
    # empirical characteristic function against the closed form
    for p in (stable.StableParams(0.5, 1.0, 1.0), stable.StableParams(1.5, 0.5, 1.0),
              stable.StableParams(1.0, 0.7, 1.5)):
        x = stable.sample_stable(p, rng, 100_000)
        worst = 0.0
        for w in (0.5, 1.0, 2.0, 5.0):
            target = stable.char_function(p, w)
            for part, true_part in ((np.cos(w * x), target.real),
                                    (np.sin(w * x), target.imag)):
                se = part.std(ddof=1) / math.sqrt(x.size)
                worst = max(worst, abs(part.mean() - true_part) / se)
        checks.append(_check(f"char_fn alpha={p.alpha} beta={p.beta}", worst, 4.0,
                             worst < 4.0))
    # Levy special case by Kolmogorov-Smirnov
    from scipy.special import erfc
    x = stable.sample_stable(stable.StableParams(0.5, 1.0, 1.0), rng, 100_000)
    ks = sps.kstest(x, lambda v: np.where(v > 0, erfc(np.sqrt(1.0 / (2.0 * np.maximum(v, 1e-300)))), 0.0)).statistic
    checks.append(_check("levy_ks", ks, 0.01, ks < 0.01))
    # Laplace-transform identity of the decomposition mixer
    for b in (1.5, 2.0, 3.0):
        x = stable.sample_stable(field.decomposition_mixer_params(b), rng, 100_000)
        worst = 0.0
        for s_val in (0.5, 1.0, 2.0):
            vals = np.exp(-s_val * x)
            se = vals.std(ddof=1) / math.sqrt(vals.size)
            worst = max(worst, abs(vals.mean() - math.exp(-s_val ** (1.0 / b))) / se)
        checks.append(_check(f"laplace_identity b={b}", worst, 3.0, worst < 3.0))
    return checks


def _suite_field(seed: int) -> list[dict]:
    checks = []
    rng = np.random.default_rng(seed)
    s = field.NetworkScenario(lam=0.1, b=2.0, sigma=field.sigma_from_db(10.0))
    a_emp = oracle.empirical_power_factor(s, 100_000, rng, rel_tol=0.005)
    a_ref = stable.sample_stable(field.power_factor_params(s), rng, 400_000)
    q = [10, 25, 50, 75, 90]
    emp, ref = np.percentile(a_emp, q), np.percentile(a_ref, q)
    worst = float(np.max(np.abs(emp - ref) / ref))
    checks.append(_check("power_factor_quantiles b=2", worst, 0.05, worst < 0.05))
    return checks


def _suite_decomposition(seed: int) -> list[dict]:
    checks = []
    rng = np.random.default_rng(seed)
    s = field.NetworkScenario(lam=0.1, b=2.0, sigma=field.sigma_from_db(10.0), E=1.0)
    bpsk = modulation.mpsk(2)
    moment = modulation.abs_moment(bpsk, s.b, energy=s.E)
    gam = field.interference_params(s, moment).gamma
    n = 100_000
    mix = stable.sample_stable(field.decomposition_mixer_params(s.b), rng, n)
    g_re = rng.normal(0.0, math.sqrt(field.decomposition_gaussian_variance(s, moment)), n)
    y_dec = np.sqrt(mix) * g_re
    y_dir = oracle.sample_aggregate_interference(s, bpsk, n, rng, rel_tol=0.005).real
    for label, y in (("mixed_gaussian", y_dec), ("direct_sim", y_dir)):
        worst = 0.0
        for w in (0.5, 1.0, 2.0):
            target = math.exp(-gam * w ** (2.0 / s.b))
            vals = np.cos(w * y)
            se = vals.std(ddof=1) / math.sqrt(n)
            worst = max(worst, abs(vals.mean() - target) / se)
        checks.append(_check(f"aggregate_cf {label}", worst, 4.0, worst < 4.0))
    return checks


def _suite_oracle(seed: int, mode: str) -> list[dict]:
    checks = []
    bpsk = modulation.mpsk(2)
    s = field.NetworkScenario.from_db(lam=1e-2, b=3.0, sigma_db=10.0,
                                      snr_db=20.0, inr_db=20.0, G0=0.0)
    if mode == "fast":
        ber = oracle.simulate_ser(s, bpsk, bpsk, "fast", 200_000, seed,
                                  workers=1, rel_tol=0.005)
        pe = errorprob.average_error_probability(s, bpsk, 400_000, seed + 1)
        gap = abs(ber.value - pe.value)
        tol = 3.0 * math.hypot(ber.std_err, pe.std_err)
        checks.append(_check("fast_oracle_vs_average", gap, tol, gap < tol))
    else:
        rng = np.random.default_rng(seed)
        geom = modulation.decision_geometry(bpsk)
        v_x = modulation.baseband_variance(bpsk, s.E)
        r_max = field.truncation_radius(s, rel_tol=0.003)
        for i in range(5):
            fld = field.sample_field(s, r_max, rng)
            a = field.power_factor(fld, s.b, s.sigma)
            pe_cond = errorprob.ser_conditional(geom, bpsk.probs,
                                                errorprob.sinr(s, a, v_x))
            est = oracle.simulate_ser(s, bpsk, bpsk, "slow", 200_000,
                                      seed + 10 + i, frozen_field=fld)
            gap = abs(est.value - pe_cond)
            tol = max(0.05 * pe_cond, 3.0 * est.std_err)
            checks.append(_check(f"slow_oracle_vs_conditional draw={i}", gap, tol,
                                 gap < tol))
    return checks


def _suite_geometry(seed: int) -> list[dict]:
    checks = []
    for name, c in (("bpsk", modulation.mpsk(2)), ("qpsk", modulation.mpsk(4)),
                    ("8psk", modulation.mpsk(8)), ("16qam", modulation.mqam(16))):
        geom = modulation.decision_geometry(c)
        worst = 0.0
        for eta0 in (0.5, 2.0, 10.0):
            wedge = errorprob.ser_awgn(geom, c.probs, eta0)
            direct = errorprob.gaussian_ser_oracle(c, math.sqrt(1.0 / (2.0 * eta0)))
            worst = max(worst, abs(wedge - direct))
        checks.append(_check(f"gaussian_oracle {name}", worst, 1e-6, worst < 1e-6))
    return checks


_SUITES = {
    "stable": lambda seed, mode: _suite_stable(seed),
    "field": lambda seed, mode: _suite_field(seed),
    "decomposition": lambda seed, mode: _suite_decomposition(seed),
    "oracle": _suite_oracle,
    "geometry": lambda seed, mode: _suite_geometry(seed),
}


def cmd_validate(args) -> int:
    if args.suite == "all":
        names = list(_SUITES)
    elif args.suite in _SUITES:
        names = [args.suite]
    else:
        raise ConfigError(
            f"unknown suite {args.suite!r}; choose from {sorted(_SUITES)} or 'all'")
    checks = []
    for name in names:
        checks.extend(_SUITES[name](args.seed, args.mode))
    passed = all(c["passed"] for c in checks)
    report = {"suite": args.suite, "seed": args.seed, "mode": args.mode,
              "version": __version__, "passed": passed, "checks": checks}
    _emit(json.dumps(report, indent=2, sort_keys=True) + "\n", args.out)
    return 0 if passed else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="poissonfield",
        description="Aggregate interference distributions and error rates for "
                    "a probe link in a Poisson field of interferers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_stable = sub.add_parser("stable", help="power-factor stable law: pdf or samples")
    p_stable.add_argument("action", choices=("pdf", "sample"))
    p_stable.add_argument("--b", type=float, required=True)
    p_stable.add_argument("--lambda", dest="lam", type=float, required=True)
    p_stable.add_argument("--sigma-db", type=float, default=0.0)
    p_stable.add_argument("--xmax", type=float, default=10.0)
    p_stable.add_argument("--points", type=int, default=200)
    p_stable.add_argument("--n", type=int, default=1000)
    p_stable.add_argument("--seed", type=int, default=0)
    p_stable.add_argument("--out")
    p_stable.set_defaults(func=cmd_stable)

    p_table = sub.add_parser("table1", help="interference moment ratios for "
                                            "BPSK/QPSK across loss exponents")
    p_table.add_argument("--out")
    p_table.set_defaults(func=cmd_table1)

    p_curve = sub.add_parser("curve", help="sweep an error metric over one axis")
    p_curve.add_argument("--config", help="JSON run configuration")
    p_curve.add_argument("--metric", choices=("outage", "average"))
    p_curve.add_argument("--sweep", choices=_SWEEP_AXES)
    p_curve.add_argument("--start", type=float)
    p_curve.add_argument("--stop", type=float)
    p_curve.add_argument("--points", type=int)
    p_curve.add_argument("--log", action="store_true")
    p_curve.add_argument("--p-star", dest="p_star", type=float)
    p_curve.add_argument("--n-mc", dest="n_mc", type=int)
    p_curve.add_argument("--n-b", dest="n_b", type=int)
    p_curve.add_argument("--seed", type=int)
    p_curve.add_argument("--workers", type=int)
    p_curve.add_argument("--out")
    p_curve.set_defaults(func=cmd_curve)

    p_trade = sub.add_parser("tradeoff", help="iso-outage INR versus density")
    p_trade.add_argument("--config")
    p_trade.add_argument("--pout-target", type=float, required=True)
    p_trade.add_argument("--pstar", type=float)
    p_trade.add_argument("--lambda-grid", required=True,
                         help="comma-separated densities")
    p_trade.add_argument("--inr-cap-db", type=float, default=60.0)
    p_trade.add_argument("--n-mc", dest="n_mc", type=int)
    p_trade.add_argument("--seed", type=int)
    p_trade.add_argument("--workers", type=int)
    p_trade.add_argument("--out")
    p_trade.set_defaults(func=cmd_tradeoff)

    p_val = sub.add_parser("validate", help="run a cross-validation suite")
    p_val.add_argument("suite")
    p_val.add_argument("--seed", type=int, default=0)
    p_val.add_argument("--mode", choices=("fast", "slow"), default="fast")
    p_val.add_argument("--out")
    p_val.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PoissonFieldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
