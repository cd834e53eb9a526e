"""Command-line front end.

Examples::

    flagspec describe A 2 --nodes 1
    flagspec spectrum A 2 --nodes 1 --line-bundle 1 --kahler 1
    flagspec bound A 2 --nodes 1 --line-bundle -1 --scalar-target auto-ke --json
    flagspec scan A 2 --nodes 1 --q-range=-3:3

Exit codes: 0 success, 1 usage error, 2 mathematical precondition failure.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .documents import (
    emit,
    make_document,
    parse_rational,
    rational_str,
    spectrum_json,
    value_json,
)
from .errors import FlagSpecError, InvalidInputError
from .flag_variety import (
    KahlerClass,
    LineBundleClass,
    PiScalar,
    build_flag,
    fano_index,
    ke_class,
    scalar_curvature,
)
from .root_system import LieType, build_root_system
from .spectral import (
    dirac_lower_bound,
    harmonic_spinors,
    is_spinc,
    spinc_parity,
    theta_spectrum,
    twist_weight,
    weitzenboeck_min,
    weitzenboeck_spectrum,
)

COMMANDS = ("describe", "spinc-check", "theta-spectrum", "spectrum", "min", "bound",
            "harmonic", "scan")
_VALUE_FLAGS = ("--line-bundle", "--theta", "--kahler", "--q-range", "--scalar-target",
                "--nodes")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


@dataclass
class JobSpec:
    command: str
    lie_family: str
    rank: int
    painted: list
    line_bundle: list | None = None
    theta: list | None = None
    kahler: list | None = None
    kahler_units: str = "plain"
    options: dict = field(default_factory=dict)

    def echo(self) -> dict:
        def rats(v):
            return None if v is None else [rational_str(x) for x in v]

        return {
            "kahler": rats(self.kahler),
            "kahler_units": self.kahler_units,
            "line_bundle": self.line_bundle,
            "max_distinct": self.options.get("max_distinct"),
            "nodes": self.painted,
            "q_range": self.options.get("q_range"),
            "rank": self.rank,
            "scalar_target": self.options.get("scalar_target"),
            "theta": rats(self.theta),
            "type": self.lie_family,
        }


def _int_list(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")


def _rational_list(text: str) -> list:
    try:
        return [parse_rational(x) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"expected comma-separated rationals (p/q), got {text!r}")


def _q_range(text: str) -> tuple:
    m = re.fullmatch(r"\s*(-?\d+)\s*[:,]\s*(-?\d+)\s*", text)
    if not m:
        raise UsageError(f"--q-range expects LO:HI, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    return lo, hi


def _scalar_target(text: str):
    """``auto-ke``, ``rho0``, a rational, or a rational followed by ``pi``."""
    t = text.strip().lower()
    if t in ("auto-ke", "rho0"):
        return t
    power = 0
    if t.endswith("pi"):
        t = t[:-2].strip().rstrip("*") or "1"
        power = 1
    try:
        return PiScalar(parse_rational(t), power)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse --scalar-target {text!r}")


def _normalise_argv(argv: list) -> list:
    # "--kahler -1,2" would otherwise be read as an unknown option
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and re.match(r"-\d", argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="flagspec",
                description="Spin^c Dirac spectra and indices on flag varieties G/P.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("family", nargs="?", help="Lie family A-G (or use --type)")
    p.add_argument("rank_pos", nargs="?", metavar="rank", help="rank (or use --rank)")
    p.add_argument("--type", dest="type_flag")
    p.add_argument("--rank", dest="rank_flag")
    p.add_argument("--nodes", required=True,
                   help="painted nodes (Bourbaki, 1-based), comma separated")
    p.add_argument("--line-bundle", help="integer Picard coordinates on painted nodes")
    p.add_argument("--theta", help="rational coordinates of the (1,1)-class theta")
    p.add_argument("--kahler", help="rational coordinates of the Kähler class")
    p.add_argument("--kahler-units", choices=("plain", "pi"), default="plain")
    p.add_argument("--scalar-target",
                   help="use the Kähler-Einstein class with this scalar curvature: "
                        "auto-ke (4m(m+1)), rho0 (the Ricci form), p/q or p/q*pi")
    p.add_argument("--q-range", help="LO:HI range of q for scan")
    p.add_argument("--max-distinct", type=int,
                   help="cap on distinct eigenvalues before summarising "
                        "(default: $FLAGSPEC_MAX_DISTINCT or 2^20)")
    p.add_argument("--json", action="store_true", help="emit JSON")
    return p


def parse_job(argv: list) -> tuple:
    args = build_parser().parse_args(_normalise_argv(argv))
    family = args.type_flag or args.family
    rank = args.rank_flag or args.rank_pos
    if family is None or rank is None:
        raise UsageError("a Lie type is required: give FAMILY RANK or --type/--rank")
    try:
        rank = int(rank)
    except ValueError:
        raise UsageError(f"rank must be an integer, got {rank!r}")
    options = {}
    if args.max_distinct is not None:
        if args.max_distinct < 0:
            raise UsageError("--max-distinct must be non-negative")
        options["max_distinct"] = args.max_distinct
    if args.q_range is not None:
        options["q_range"] = list(_q_range(args.q_range))
    if args.scalar_target is not None:
        target = _scalar_target(args.scalar_target)
        options["scalar_target"] = (target if isinstance(target, str)
                                    else value_json(target))
    job = JobSpec(
        command=args.command,
        lie_family=family.upper(),
        rank=rank,
        painted=_int_list(args.nodes),
        line_bundle=None if args.line_bundle is None else _int_list(args.line_bundle),
        theta=None if args.theta is None else _rational_list(args.theta),
        kahler=None if args.kahler is None else _rational_list(args.kahler),
        kahler_units=args.kahler_units,
        options=options,
    )
    return job, args.json


def _require(job: JobSpec, attr: str, flag: str):
    value = getattr(job, attr)
    if value is None:
        raise UsageError(f"command {job.command!r} requires {flag}")
    return value


def _omega(job: JobSpec, X) -> KahlerClass:
    target = job.options.get("scalar_target")
    if target == "auto-ke":
        m = X.dim_c
        return ke_class(X, PiScalar(4 * m * (m + 1)))
    if target == "rho0":
        return ke_class(X)
    if target is not None:
        return ke_class(X, PiScalar(parse_rational(target["rational"]), target["pi_power"]))
    kahler = _require(job, "kahler", "--kahler or --scalar-target")
    return KahlerClass(kahler, pi_units=job.kahler_units == "pi")


def _kahler_json(omega: KahlerClass) -> dict:
    return {"coeffs": [rational_str(x) for x in omega.coeffs],
            "units": "pi" if omega.pi_units else "plain"}


def _ints(v) -> list:
    return [int(x) for x in v]


def cmd_describe(job: JobSpec, X) -> dict:
    rs = X.rs
    radical = []
    for beta, ks in zip(X.radical_roots, X.radical_coroots):
        radical.append({
            "root": list(beta),
            "pairings": {str(node): int(k) for node, k in zip(X.painted, ks)},
        })
    return {
        "delta_p": _ints(X.delta_p),
        "dim_c": X.dim_c,
        "fano_index": fano_index(X),
        "positive_root_count": len(rs.positive_roots),
        "radical_roots": radical,
        "spinc_parity": list(spinc_parity(X)),
    }


def _harmonic_json(report) -> dict:
    c = report.cohomology
    return {
        "degree": c.degree,
        "dominant_weight": None if c.vanishes else _ints(c.dominant_weight),
        "index": str(report.index),
        "kernel_dimension": str(report.kernel_dimension),
        "outcome": "none" if c.vanishes else "harmonic",
        "twist_weight": list(report.twist_weight.coeffs),
        "weyl_word": list(c.word),
    }


def cmd_compute(job: JobSpec, X) -> dict:
    cmd = job.command
    cap = job.options.get("max_distinct")
    if cmd == "spinc-check":
        L = LineBundleClass(_require(job, "line_bundle", "--line-bundle"))
        ok = is_spinc(X, L)
        return {
            "line_bundle": list(L.coeffs),
            "parity": list(spinc_parity(X)),
            "spinc": ok,
            "twist_weight": list(twist_weight(X, L).coeffs) if ok else None,
        }
    if cmd == "harmonic":
        L = LineBundleClass(_require(job, "line_bundle", "--line-bundle"))
        return _harmonic_json(harmonic_spinors(X, L))
    omega = _omega(job, X)
    if cmd == "theta-spectrum":
        theta = KahlerClass(_require(job, "theta", "--theta"), omega.pi_units)
        spec = theta_spectrum(X, theta, omega, max_distinct=cap)
        return {"kahler": _kahler_json(omega), "spectrum": spectrum_json(spec)}
    L = LineBundleClass(_require(job, "line_bundle", "--line-bundle"))
    if cmd == "spectrum":
        spec = weitzenboeck_spectrum(X, L, omega, max_distinct=cap)
        return {
            "kahler": _kahler_json(omega),
            "scalar_curvature": value_json(scalar_curvature(X, omega)),
            "spectrum": spectrum_json(spec),
        }
    if cmd == "min":
        return {"kahler": _kahler_json(omega), "min": value_json(weitzenboeck_min(X, L, omega))}
    if cmd == "bound":
        b = dirac_lower_bound(X, L, omega)
        return {"bound": value_json(b.value), "kahler": _kahler_json(omega),
                "vacuous": b.vacuous}
    raise UsageError(f"unknown command {cmd!r}")


def cmd_scan(job: JobSpec, X) -> dict:
    """Kähler-Einstein comparison over powers of the primitive anticanonical root."""
    lo, hi = _require_qrange(job)
    p = fano_index(X)
    m = X.dim_c
    target = PiScalar(4 * m * (m + 1))
    omega = ke_class(X, target)
    delta = X.restrict(X.delta_p)
    rows = []
    for q in range(lo, hi + 1):
        if (p + q) % 2:
            continue
        L = LineBundleClass([Fraction(-q, p) * d for d in delta])
        ok = is_spinc(X, L)
        row = {"line_bundle": list(L.coeffs), "q": q, "spinc": ok}
        if ok:
            b = dirac_lower_bound(X, L, omega)
            h = harmonic_spinors(X, L)
            row.update(bound=value_json(b.value), vacuous=b.vacuous,
                       harmonic="harmonic" if h.has_harmonic_spinors else "none",
                       index=str(h.index))
        rows.append(row)
    return {"dim_c": m, "fano_index": p, "kahler": _kahler_json(omega), "rows": rows,
            "scalar_target": value_json(target)}


def _require_qrange(job):
    q = job.options.get("q_range")
    if q is None:
        raise UsageError("scan requires --q-range LO:HI")
    return q


def run(job: JobSpec) -> dict:
    rs = build_root_system(LieType(job.lie_family, job.rank))
    if any(b <= a for a, b in zip(job.painted, job.painted[1:])):
        raise InvalidInputError("--nodes must be strictly increasing")
    X = build_flag(rs, job.painted)
    if job.command == "describe":
        result = cmd_describe(job, X)
    elif job.command == "scan":
        result = cmd_scan(job, X)
    else:
        result = cmd_compute(job, X)
    return make_document(job.command, job.echo(), result)


def main(argv: list | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    want_json = "--json" in argv
    try:
        job, want_json = parse_job(argv)
        doc = run(job)
    except UsageError as e:
        return _fail("usage", str(e), 1, want_json)
    except FlagSpecError as e:
        return _fail(e.kind, str(e), e.exit_code, want_json)
    sys.stdout.write(emit(doc, "json" if want_json else "table"))
    return 0


def _fail(kind: str, message: str, code: int, want_json: bool) -> int:
    if want_json:
        sys.stderr.write(json.dumps({"error": {"kind": kind, "message": message}},
                                    sort_keys=True) + "\n")
    else:
        sys.stderr.write(f"flagspec: error [{kind}]: {message}\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
