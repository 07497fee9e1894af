"""Command-line front end.

Exit codes: 0 success, 2 bad arguments or out-of-domain values,
3 ``certify`` found a dependent pair, 4 output path not writable.

Machine-readable output (JSON, CSV) prints floats with 17 significant
digits so values survive a parse/re-emit round trip unchanged; text
output uses 6.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass, fields

from .errors import BudgetExceeded, DomainError
from .independence import (
    Ensemble,
    certify_ensemble,
    independence_locus,
    is_independent,
    search_independent_configurations,
)
from .information import LN2, info_report
from .measurement import (
    OUTCOMES,
    born_joint_distribution,
    closed_form_distribution,
    correlation,
)
from .operators import GateAngles, bell_state

EXIT_OK, EXIT_USAGE, EXIT_DEPENDENT, EXIT_UNWRITABLE = 0, 2, 3, 4

SWEEP_HEADER = ("mu", "nu", "s", "xi1", "xi2", "xi3", "xi4", "theta", "entropy", "flow", "degree", "independent")


def fmt(x: float) -> str:
    return format(x, ".17g")


def dumps(obj) -> str:
    """JSON with 17-significant-digit floats."""
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError(f"non-finite value {obj!r} cannot be emitted as JSON")
        return fmt(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    if hasattr(obj, "item"):
        return dumps(obj.item())
    raise TypeError(f"cannot emit {type(obj).__name__}")


@dataclass(frozen=True)
class SweepRow:
    mu: float
    nu: float
    s: int
    xi1: float
    xi2: float
    xi3: float
    xi4: float
    theta: float
    entropy: float
    flow: float
    degree: float
    independent: bool

    @classmethod
    def compute(cls, mu: float, nu: float, s: int) -> "SweepRow":
        dist = closed_form_distribution(mu, nu, s)
        rep = info_report(mu, nu, s)
        return cls(
            mu, nu, s, *dist.xi,
            theta=rep.theta.value,
            entropy=rep.entropy,
            flow=rep.flow,
            degree=rep.degree,
            independent=is_independent(mu, nu, s),
        )

    def validate(self) -> None:
        checks = {
            "xi sums to 1": abs(self.xi1 + self.xi2 + self.xi3 + self.xi4 - 1.0) <= 1e-12,
            "xi1 == xi4 == theta": self.xi1 == self.xi4 and abs(self.xi1 - self.theta) <= 1e-12,
            "xi2 == xi3": self.xi2 == self.xi3,
            "flow == 2 ln2 - entropy": abs(self.flow - (2 * LN2 - self.entropy)) <= 1e-12,
            "degree magnitude == flow / ln2": abs(abs(self.degree) - self.flow / LN2) <= 1e-12,
            "independent iff flow <= 1e-9": self.independent == (self.flow <= 1e-9),
        }
        bad = [name for name, ok in checks.items() if not ok]
        if bad:
            raise ValueError(f"inconsistent sweep row at mu={self.mu}, nu={self.nu}: {', '.join(bad)}")

    def as_dict(self) -> dict:
        return asdict(self)


def sweep_rows(s: int, steps: int) -> list[SweepRow]:
    """Row-major grid, ``mu`` outer and ``nu`` inner, ``steps`` points on [0, pi]."""
    if steps < 2:
        raise DomainError("steps", steps, "integers >= 2")
    grid = [math.pi * k / (steps - 1) for k in range(steps)]
    rows = []
    for mu in grid:
        for nu in grid:
            row = SweepRow.compute(mu, nu, s)
            row.validate()
            rows.append(row)
    return rows


def render_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SWEEP_HEADER)
    for r in rows:
        out = []
        for f in fields(SweepRow):
            v = getattr(r, f.name)
            if isinstance(v, bool):
                out.append("true" if v else "false")
            elif isinstance(v, float):
                out.append(fmt(v))
            else:
                out.append(str(v))
        w.writerow(out)
    return buf.getvalue()


def render_json(rows) -> str:
    if not rows:
        return "[]\n"
    return "[\n" + ",\n".join("  " + dumps(r.as_dict()) for r in rows) + "\n]\n"


# -- argument helpers -------------------------------------------------------

def _angle(args, value: float) -> float:
    return math.radians(value) if args.degrees else value


def _s_value(text: str) -> int:
    if text not in ("0", "1"):
        raise argparse.ArgumentTypeError("s must be 0 or 1")
    return int(text)


def _angle_list(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}") from None


def _grid_step(text: str) -> float:
    t = text.strip().lower().replace(" ", "")
    if t.startswith("pi/"):
        try:
            return math.pi / int(t[3:])
        except (ValueError, ZeroDivisionError):
            raise argparse.ArgumentTypeError(f"bad grid step {text!r}") from None
    try:
        return float(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad grid step {text!r}; use radians or pi/K") from None


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _outcome(pair) -> str:
    return "(" + ",".join(f"{v:+d}" for v in pair) + ")"


# -- subcommands ------------------------------------------------------------

def cmd_dist(args) -> int:
    mu, nu = _angle(args, args.mu), _angle(args, args.nu)
    eta, zeta = _angle(args, args.eta), _angle(args, args.zeta)
    closed = closed_form_distribution(mu, nu, args.s)
    if args.oracle:
        dist = born_joint_distribution(bell_state(args.s), GateAngles(mu, eta), GateAngles(nu, zeta))
        deviation = max(abs(p - q) for p, q in zip(dist.xi, closed.xi))
    else:
        dist, deviation = closed, None
    if args.format == "json":
        rec = {"mu": mu, "nu": nu, "s": args.s, "provenance": dist.provenance}
        rec.update({f"xi{k + 1}": x for k, x in enumerate(dist.xi)})
        rec["correlation"] = correlation(dist)
        if deviation is not None:
            rec["eta"], rec["zeta"] = eta, zeta
            rec["deviation"] = deviation
        _emit(dumps(rec))
        return EXIT_OK
    lines = [f"mu={mu:.6g} nu={nu:.6g} s={args.s} ({dist.provenance})"]
    for k, (pair, x) in enumerate(zip(OUTCOMES, dist.xi)):
        lines.append(f"xi{k + 1} {_outcome(pair)}  {x:.6g}")
    lines.append(f"correlation  {correlation(dist):.6g}")
    if deviation is not None:
        lines.append(f"max |born - closed_form| = {deviation:.6g}")
    _emit("\n".join(lines))
    return EXIT_OK


def cmd_info(args) -> int:
    mu, nu = _angle(args, args.mu), _angle(args, args.nu)
    rep = info_report(mu, nu, args.s)
    scale = 1.0 / LN2 if args.log2 else 1.0
    unit = "bits" if args.log2 else "nats"
    rec = {
        "mu": mu,
        "nu": nu,
        "s": args.s,
        "theta": rep.theta.value,
        "entropy": rep.entropy * scale,
        "flow": rep.flow * scale,
        "degree": rep.degree,
        "class": rep.classification,
        "unit": unit,
    }
    if args.format == "json":
        _emit(dumps(rec))
    else:
        _emit(
            "\n".join(
                [
                    f"theta   {rep.theta.value:.6g}",
                    f"entropy {rec['entropy']:.6g} {unit}",
                    f"flow    {rec['flow']:.6g} {unit}",
                    f"degree  {rep.degree:.6g}",
                    f"class   {rep.classification}",
                ]
            )
        )
    return EXIT_OK


def cmd_certify(args) -> int:
    angles = [_angle(args, a) for a in args.angles]
    report = certify_ensemble(Ensemble(tuple(angles), args.s), tol=args.tol)
    if args.format == "json":
        _emit(dumps(report.as_dict()))
    else:
        lines = [f"s={args.s} angles=" + ", ".join(f"{a:.6g}" for a in report.ensemble.angles)]
        lines.append("flow matrix (nats):")
        for row in report.flow_matrix:
            lines.append("  " + " ".join(f"{v:12.6g}" for v in row))
        lines.append(f"independent pairs: {report.independent_pairs}")
        for (i, j), f in report.dependent_pairs:
            lines.append(f"dependent pair ({i}, {j}): flow {f:.6g}")
        if report.witness is not None:
            i, j = report.witness
            a = report.ensemble.angles
            lines.append(
                f"witness: pair ({i}, {j}) at angles ({a[i]:.6g}, {a[j]:.6g}) "
                f"with flow {report.min_positive_flow:.6g}"
            )
        lines.append(f"locus: {independence_locus(args.s).describe()}")
        lines.extend(f"note: {n}" for n in report.notes)
        lines.append(f"verdict: {report.verdict}")
        _emit("\n".join(lines))
    return EXIT_OK if report.verdict == "all_pairs_independent" else EXIT_DEPENDENT


def cmd_sweep(args) -> int:
    rows = sweep_rows(args.s, args.steps)
    text = render_csv(rows) if args.format == "csv" else render_json(rows)
    if args.out is None or args.out == "-":
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_UNWRITABLE
    return EXIT_OK


def cmd_search(args) -> int:
    configs = search_independent_configurations(args.n, args.s, args.grid_step)
    if args.format == "json":
        _emit(dumps([{"angles": list(c.angles), "tag": c.tag} for c in configs]))
        return EXIT_OK
    lines = [f"{len(configs)} pairwise-independent configuration(s) for n={args.n}, s={args.s}"]
    for c in configs:
        in_pi = ", ".join(f"{a / math.pi:.6g}pi" for a in c.angles)
        lines.append(f"({in_pi})  [{c.tag}]")
    lines.extend(f"note: {n}" for n in independence_locus(args.s).notes)
    _emit("\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bellinfo", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=("text", "json")):
        sp.add_argument("--s", type=_s_value, required=True, help="Bell state index (0 or 1)")
        sp.add_argument("--degrees", action="store_true", help="angles are given in degrees")
        sp.add_argument("--format", choices=formats, default=formats[0])

    d = sub.add_parser("dist", help="joint outcome distribution")
    d.add_argument("--mu", type=float, required=True)
    d.add_argument("--nu", type=float, required=True)
    d.add_argument("--eta", type=float, default=0.0)
    d.add_argument("--zeta", type=float, default=0.0)
    d.add_argument("--oracle", action="store_true", help="use the Born rule and print its deviation")
    common(d)
    d.set_defaults(func=cmd_dist)

    i = sub.add_parser("info", help="entropy, information flow and degree of dependence")
    i.add_argument("--mu", type=float, required=True)
    i.add_argument("--nu", type=float, required=True)
    i.add_argument("--log2", action="store_true", help="report entropy and flow in bits")
    common(i)
    i.set_defaults(func=cmd_info)

    c = sub.add_parser("certify", help="pairwise independence of an ensemble")
    c.add_argument("--angles", type=_angle_list, required=True, help="comma-separated polar angles")
    c.add_argument("--tol", type=float, default=1e-9, help="flow tolerance in nats")
    common(c)
    c.set_defaults(func=cmd_certify)

    sw = sub.add_parser("sweep", help="grid table over (mu, nu)")
    sw.add_argument("--steps", type=int, required=True)
    sw.add_argument("--out", default=None, help="output path (stdout if omitted)")
    common(sw, formats=("csv", "json"))
    sw.set_defaults(func=cmd_sweep)

    se = sub.add_parser("search", help="grid search for pairwise-independent ensembles")
    se.add_argument("--n", type=int, required=True)
    se.add_argument("--grid-step", type=_grid_step, default=math.pi / 32, help="radians or pi/K")
    common(se)
    se.set_defaults(func=cmd_search)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
