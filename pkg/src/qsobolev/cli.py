"""Command-line surface.

Four subcommands:

    hermite   emit H_0..H_n coefficients, recurrence gammas, normalized norms
    sobolev   emit the perturbed family S_0..S_n and derivative data
    verify    run the identity suites over the built-in parameter grid
    eval      evaluate one polynomial or kernel at one point

Parameters come from ``key=value`` config-file lines and/or flags; flags
win.  Exact mode serializes every number as a rational string ("p/q"),
never as a float.  Exit codes: 0 success, 1 verification failure, 2 bad
usage or configuration.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .algebra import EXACT, FLOAT, QContext, Scalar, poly_to_strings, scalar_to_str
from .qcalc import q_derivative
from .qhermite import HermiteFamily
from .sobolev import EFFECTIVE, RAW, SobolevFamily, SobolevParams
from .verify import SUITES, VerifyConfig, run_verification

CONFIG_KEYS = {
    "q",
    "alpha",
    "mass",
    "mass_convention",
    "n_max",
    "mode",
    "precision_bits",
    "tail_tol",
    "output",
    "seed",
}


class UsageError(Exception):
    """Bad flags or configuration; exits with status 2."""


@dataclass
class RunConfig:
    q: str | None = None
    alpha: str | None = None
    mass: str | None = None
    mass_convention: str | None = None
    n_max: int = 8
    mode: str = EXACT
    precision_bits: int = 256
    tail_tol: str = "1e-30"
    output: str = "json"
    seed: int = 20240901

    @staticmethod
    def load(args: argparse.Namespace) -> "RunConfig":
        cfg = RunConfig()
        if getattr(args, "config", None):
            for key, value in _read_config_file(args.config).items():
                cfg._set(key, value)
        for key in ("q", "alpha", "n_max", "mode", "output", "seed"):
            value = getattr(args, key, None)
            if value is not None:
                cfg._set(key, value)
        if getattr(args, "precision_bits", None) is not None:
            cfg._set("precision_bits", args.precision_bits)
        if getattr(args, "tail_tol", None) is not None:
            cfg._set("tail_tol", args.tail_tol)
        if getattr(args, "effective_mass", None) is not None and getattr(
            args, "mass", None
        ) is not None:
            raise UsageError("give either --mass or --effective-mass, not both")
        if getattr(args, "effective_mass", None) is not None:
            cfg.mass, cfg.mass_convention = args.effective_mass, EFFECTIVE
        elif getattr(args, "mass", None) is not None:
            cfg.mass, cfg.mass_convention = args.mass, RAW
        cfg._validate()
        return cfg

    def _set(self, key: str, value):
        if key not in CONFIG_KEYS:
            raise UsageError(f"unknown configuration key {key!r}")
        if key in ("n_max", "precision_bits", "seed"):
            try:
                value = int(value)
            except ValueError as exc:
                raise UsageError(f"{key} must be an integer, got {value!r}") from exc
        setattr(self, key, value)

    def _validate(self):
        if self.mode not in (EXACT, FLOAT):
            raise UsageError(f"mode must be 'exact' or 'float', got {self.mode!r}")
        if self.output not in ("json", "csv"):
            raise UsageError(f"output must be 'json' or 'csv', got {self.output!r}")
        if self.n_max < 0:
            raise UsageError("n_max must be >= 0")
        if self.mass_convention not in (None, EFFECTIVE, RAW):
            raise UsageError(
                f"mass_convention must be 'effective' or 'raw', got {self.mass_convention!r}"
            )
        if self.mass_convention == RAW and self.mode == EXACT:
            raise UsageError(
                "raw masses require float mode; exact mode takes the effective "
                "mass (use --effective-mass or mass_convention=effective)"
            )

    # -- value construction -------------------------------------------------

    def context(self) -> QContext:
        if self.q is None:
            raise UsageError("q is required (flag --q or config key q)")
        try:
            qf = Fraction(self.q)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"cannot parse q={self.q!r} as a rational") from exc
        if not 0 < qf < 1:
            raise UsageError(f"q must lie strictly inside (0, 1), got {self.q}")
        if self.mode == EXACT:
            return QContext.exact(qf)
        return QContext.inexact(qf, self.precision_bits, self.tail_tol)

    def scalar(self, text: str, ctx: QContext, what: str) -> Scalar:
        try:
            value = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"cannot parse {what}={text!r} as a rational") from exc
        if ctx.mode == EXACT:
            return Scalar.exact(value)
        return Scalar.inexact(value, ctx.prec)

    def sobolev_family(self, ctx: QContext) -> SobolevFamily:
        if self.alpha is None:
            raise UsageError("alpha is required (flag --alpha or config key alpha)")
        if self.mass is None:
            raise UsageError("a mass is required (--effective-mass or --mass)")
        convention = self.mass_convention or (
            EFFECTIVE if self.mode == EXACT else RAW
        )
        alpha = self.scalar(self.alpha, ctx, "alpha")
        mass = self.scalar(self.mass, ctx, "mass")
        try:
            params = SobolevParams(alpha, mass, convention)
        except (ValueError, ArithmeticError) as exc:
            raise UsageError(str(exc)) from exc
        return SobolevFamily(HermiteFamily(ctx, self.n_max), params)


def _read_config_file(path: str) -> dict:
    out = {}
    try:
        with open(path, encoding="utf-8") as handle:
            for lineno, raw in enumerate(handle, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise UsageError(f"{path}:{lineno}: expected key=value, got {raw!r}")
                key, value = line.split("=", 1)
                out[key.strip()] = value.strip()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from exc
    return out


# -- output helpers -------------------------------------------------------------


def _emit_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _emit_csv(header: list[str], rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _pad(cells: list[str], width: int) -> list[str]:
    return cells + [""] * (width - len(cells))


# -- subcommands ------------------------------------------------------------------


def cmd_hermite(args) -> int:
    cfg = RunConfig.load(args)
    ctx = cfg.context()
    fam = HermiteFamily(ctx, cfg.n_max)
    rows = []
    for n in range(cfg.n_max + 1):
        rows.append(
            {
                "n": n,
                "coeffs": poly_to_strings(fam.hermite(n)),
                "gamma": scalar_to_str(fam.gamma(n)) if n >= 1 else None,
                "nu": scalar_to_str(fam.norm_sq_normalized(n)),
            }
        )
    if cfg.output == "json":
        payload = {"q": scalar_to_str(ctx.q), "mode": ctx.mode, "n_max": cfg.n_max, "rows": rows}
        sys.stdout.write(_emit_json(payload))
    else:
        header = ["n", "gamma", "nu"] + [f"c{k}" for k in range(cfg.n_max + 1)]
        csv_rows = [
            _pad([str(r["n"]), r["gamma"] or "", r["nu"]] + r["coeffs"], len(header))
            for r in rows
        ]
        sys.stdout.write(_emit_csv(header, csv_rows))
    return 0


def cmd_sobolev(args) -> int:
    cfg = RunConfig.load(args)
    ctx = cfg.context()
    sfam = cfg.sobolev_family(ctx)
    payload = sfam.serialize(cfg.n_max)
    if args.connection:
        if cfg.output != "json":
            raise UsageError("--connection output is JSON only")
        connection = {}
        for n in range(2, cfg.n_max + 1):
            cc = sfam.connection_coeffs(n)
            connection[str(n)] = {
                name: {
                    "num": poly_to_strings(fn.num),
                    "den": poly_to_strings(fn.den),
                }
                for name, fn in (
                    ("E1", cc.E1),
                    ("F1", cc.F1),
                    ("E2", cc.E2),
                    ("F2", cc.F2),
                    ("E3", cc.E3),
                    ("F3", cc.F3),
                    ("Xi", cc.Xi),
                    ("E4", cc.E4),
                    ("F4", cc.F4),
                )
            }
        payload["connection"] = connection
    if cfg.output == "json":
        sys.stdout.write(_emit_json(payload))
    else:
        header = ["n", "dq_at_alpha"] + [f"c{k}" for k in range(cfg.n_max + 1)]
        rows = [
            _pad([str(n), payload["dq_at_alpha"][n]] + payload["S"][n], len(header))
            for n in range(cfg.n_max + 1)
        ]
        sys.stdout.write(_emit_csv(header, rows))
    return 0


def cmd_verify(args) -> int:
    cfg = RunConfig.load(args)
    suites = args.suites or ["all"]
    unknown = set(suites) - set(SUITES) - {"all"}
    if unknown:
        raise UsageError(
            f"unknown suites {sorted(unknown)}; choose from {', '.join(SUITES + ('all',))}"
        )
    vcfg = VerifyConfig(seed=cfg.seed, prec=cfg.precision_bits, tail_tol=cfg.tail_tol)
    if cfg.q is not None:
        vcfg.qs = (Fraction(cfg.q),)
    if cfg.alpha is not None:
        vcfg.alphas = (Fraction(cfg.alpha),)
    if cfg.mass is not None:
        if (cfg.mass_convention or EFFECTIVE) != EFFECTIVE:
            raise UsageError("verification grids take effective masses")
        vcfg.masses = (Fraction(cfg.mass),)
    if getattr(args, "n_max", None) is not None:
        vcfg.n_cap = cfg.n_max
    vcfg.mutate_e4 = args.mutate_e4
    report = run_verification(suites, vcfg)

    payload = {
        "suites": report.suites,
        "summary": {"pass": report.passed, "fail": report.failed},
        "wall_time_s": round(report.wall_time, 3),
        "cases": [
            {
                "suite": c.suite,
                "invariant": c.invariant,
                "params": c.params,
                "status": c.status,
                "witness": c.witness,
            }
            for c in report.cases
        ],
    }
    if cfg.output == "json":
        sys.stdout.write(_emit_json(payload))
    else:
        header = ["suite", "invariant", "status", "params", "witness"]
        rows = [
            [
                c.suite,
                c.invariant,
                c.status,
                ";".join(f"{k}={v}" for k, v in sorted(c.params.items())),
                c.witness or "",
            ]
            for c in report.cases
        ]
        sys.stdout.write(_emit_csv(header, rows))
    print(
        f"verify: {report.passed} passed, {report.failed} failed "
        f"({report.wall_time:.1f}s)",
        file=sys.stderr,
    )
    return 0 if report.ok else 1


def cmd_eval(args) -> int:
    cfg = RunConfig.load(args)
    ctx = cfg.context()
    x0 = cfg.scalar(args.at, ctx, "at")
    target = args.target
    if target == "H":
        fam = HermiteFamily(ctx, args.n)
        value = fam.hermite(args.n)(x0)
    elif target in ("S", "DqS"):
        sfam = cfg.sobolev_family(ctx)
        poly = sfam.s_poly(args.n)
        if target == "DqS":
            poly = q_derivative(poly, ctx)
        value = poly(x0)
    elif target == "kernel":
        if args.y is None:
            raise UsageError("kernel evaluation needs --y")
        fam = HermiteFamily(ctx, args.n + 1)
        value = fam.kernel_poly(args.n, args.i, args.j, cfg.scalar(args.y, ctx, "y"))(x0)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown target {target!r}")
    sys.stdout.write(scalar_to_str(value) + "\n")
    return 0


# -- parser -------------------------------------------------------------------------


def _add_common(parser: argparse.ArgumentParser, mass_flags: bool = True):
    parser.add_argument("--config", help="key=value configuration file")
    parser.add_argument("--q", help="base q as a rational in (0,1), e.g. 1/2")
    parser.add_argument("--n-max", dest="n_max", type=int, help="largest degree")
    parser.add_argument("--mode", choices=(EXACT, FLOAT), help="arithmetic mode")
    parser.add_argument(
        "--precision-bits", dest="precision_bits", type=int, help="float mantissa bits"
    )
    parser.add_argument("--tail-tol", dest="tail_tol", help="float truncation tolerance")
    parser.add_argument("--output", choices=("json", "csv"), help="table format")
    parser.add_argument("--seed", type=int, help="seed for randomized checks")
    if mass_flags:
        parser.add_argument("--alpha", help="mass point, |alpha| > 1, e.g. 2 or -5/4")
        parser.add_argument(
            "--effective-mass",
            dest="effective_mass",
            help="mass already divided by the norm constant (exact-mode convention)",
        )
        parser.add_argument(
            "--mass", help="raw mass on the derivative term (float-mode convention)"
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsobolev",
        description=(
            "q-Hermite I polynomials, their Sobolev-type mass-point "
            "perturbation, and the degree-lowering operator"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_hermite = sub.add_parser("hermite", help="emit the base family")
    _add_common(p_hermite, mass_flags=False)
    p_hermite.set_defaults(func=cmd_hermite)

    p_sob = sub.add_parser("sobolev", help="emit the perturbed family")
    _add_common(p_sob)
    p_sob.add_argument(
        "--connection",
        action="store_true",
        help="include the connection-coefficient numerators and denominators",
    )
    p_sob.set_defaults(func=cmd_sobolev)

    p_verify = sub.add_parser("verify", help="run the identity suites")
    _add_common(p_verify)
    p_verify.add_argument(
        "suites",
        nargs="*",
        metavar="suite",
        help=f"subset of {{{', '.join(SUITES)}, all}} (default: all)",
    )
    p_verify.add_argument(
        "--mutate-e4",
        dest="mutate_e4",
        action="store_true",
        help="corrupted-build canary: inject E4+1 and expect failures",
    )
    p_verify.set_defaults(func=cmd_verify)

    p_eval = sub.add_parser("eval", help="evaluate one value")
    _add_common(p_eval)
    p_eval.add_argument("target", choices=("H", "S", "DqS", "kernel"))
    p_eval.add_argument("n", type=int)
    p_eval.add_argument("--at", required=True, help="evaluation point (rational)")
    p_eval.add_argument("--y", help="kernel second argument")
    p_eval.add_argument("--i", type=int, default=0, choices=(0, 1))
    p_eval.add_argument("--j", type=int, default=0, choices=(0, 1))
    p_eval.set_defaults(func=cmd_eval)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:  # pragma: no cover
        return 0


if __name__ == "__main__":
    sys.exit(main())
