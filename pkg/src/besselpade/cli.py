"""Command-line front end.

Subcommands: gbp | pade | budak | analyze | sweep | compare. Reports are
plain text by default and JSON with --json; all rationals cross the
boundary as exact "p/q" strings. Decimals appear only in CSV sweeps and
surd renderings, whose digit count comes from BESSELPADE_PRECISION
(default 12). Exit codes: 0 success, 2 usage error, 1 computational
error.
"""

from __future__ import annotations

import argparse
import cmath
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .budak import BudakParams, budak_tf, gamma_order2, order2_certificate
from .core import Polynomial, TransferFunction, surd_to_float
from .gbp import GbpParams, classical_bessel, gbp
from .pade import PadeIndex, pade_exp
from .response import (
    FlatnessReport,
    delay_flatness,
    group_delay,
    magnitude_flatness,
)
from .stability import StabilityReport, Verdict, routh_hurwitz

DEFAULT_PRECISION = 12

_VERDICT_WORDS = {
    Verdict.STRICT_HURWITZ: "Stable",
    Verdict.NOT_HURWITZ: "Unstable",
    Verdict.MARGINAL: "Marginal",
}


class UsageError(Exception):
    """Bad arguments or malformed input specs; exits with status 2."""


# ---------------------------------------------------------------------------
# Serialization helpers
# ---------------------------------------------------------------------------


def _poly_strings(p: Polynomial) -> list[str]:
    return [str(c) for c in p.coefficients]


def _tf_dict(tf: TransferFunction) -> dict:
    return {
        "num": _poly_strings(tf.numerator),
        "den": _poly_strings(tf.denominator),
        "rendered": str(tf),
    }


def _stability_dict(report: StabilityReport) -> dict:
    return {
        "verdict": str(report.verdict),
        "routh_first_column": [str(c) for c in report.routh_first_column],
        "sign_changes": report.sign_changes,
        "degenerate_rows": list(report.degenerate_rows),
    }


def _flatness_dict(report: FlatnessReport) -> dict:
    return {
        "quantity": str(report.quantity) if report.quantity else None,
        "value_at_origin": str(report.value_at_origin),
        "order": report.order,
        "leading_deviation": str(report.leading_deviation),
    }


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


# ---------------------------------------------------------------------------
# Design reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DesignReport:
    tf: TransferFunction
    stability: StabilityReport
    delay: FlatnessReport
    magnitude: FlatnessReport
    minimum_phase: bool
    provenance: dict


def minimum_phase(tf: TransferFunction) -> bool:
    """All zeros in the closed left half-plane (vacuous without zeros)."""
    if tf.numerator.degree < 1:
        return True
    verdict = routh_hurwitz(tf.numerator).verdict
    return verdict in (Verdict.STRICT_HURWITZ, Verdict.MARGINAL)


def design_report(tf: TransferFunction, provenance: dict) -> DesignReport:
    return DesignReport(
        tf,
        routh_hurwitz(tf.denominator),
        delay_flatness(tf),
        magnitude_flatness(tf),
        minimum_phase(tf),
        provenance,
    )


def _report_dict(report: DesignReport, command: str) -> dict:
    return {
        "report_version": 1,
        "command": command,
        "provenance": report.provenance,
        "transfer_function": _tf_dict(report.tf),
        "stability": _stability_dict(report.stability),
        "delay_flatness": _flatness_dict(report.delay),
        "magnitude_flatness": _flatness_dict(report.magnitude),
        "minimum_phase": report.minimum_phase,
    }


def _print_report_plain(report: DesignReport) -> None:
    stab = report.stability
    column = ", ".join(str(c) for c in stab.routh_first_column)
    print(f"transfer function: {report.tf}")
    print(f"stability: {stab.verdict} (first column {column}; sign changes {stab.sign_changes})")
    for name, flat in (("delay", report.delay), ("magnitude", report.magnitude)):
        print(
            f"{name} flatness: order {flat.order}, value at origin "
            f"{flat.value_at_origin}, leading deviation {flat.leading_deviation}"
        )
    print(f"minimum phase: {'yes' if report.minimum_phase else 'no'}")


# ---------------------------------------------------------------------------
# Source specs
# ---------------------------------------------------------------------------


def _bessel_allpole(n: int) -> TransferFunction:
    den = classical_bessel(n)
    return TransferFunction(Polynomial([den.coeff(0)]), den)


def _load_tf_file(path: str) -> TransferFunction:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read transfer-function file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed transfer-function file: {exc}") from exc
    if not isinstance(data, dict) or "num" not in data or "den" not in data:
        raise ValueError('transfer-function file needs "num" and "den" arrays')
    try:
        num = Polynomial([Fraction(str(c)) for c in data["num"]])
        den = Polynomial([Fraction(str(c)) for c in data["den"]])
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad coefficient in transfer-function file: {exc}") from exc
    return TransferFunction(num, den)


def source_tf(spec: str) -> tuple[TransferFunction, dict]:
    """Resolve "pade:N,M" | "budak:M,N,G" | "bessel:N" | "file:PATH"."""
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise UsageError(f"source spec needs a kind prefix, got {spec!r}")
    try:
        if kind == "pade":
            n, m = (int(x) for x in rest.split(","))
            return pade_exp(PadeIndex(n, m)), {"family": "pade", "n": n, "m": m}
        if kind == "budak":
            m_s, n_s, g_s = rest.split(",")
            m, n, g = int(m_s), int(n_s), Fraction(g_s)
            tf = budak_tf(BudakParams(m, n, g))
            return tf, {"family": "budak", "m": m, "n": n, "gamma": str(g)}
        if kind == "bessel":
            n = int(rest)
            return _bessel_allpole(n), {"family": "bessel", "n": n}
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad source spec {spec!r}: {exc}") from exc
    if kind == "file":
        tf = _load_tf_file(rest)
        return tf, {
            "family": "file",
            "num": _poly_strings(tf.numerator),
            "den": _poly_strings(tf.denominator),
        }
    raise UsageError(f"unknown source kind {kind!r}")


def tf_from_provenance(provenance: dict) -> TransferFunction:
    """Rebuild the transfer function a report was derived from."""
    family = provenance["family"]
    if family == "pade":
        return pade_exp(PadeIndex(provenance["n"], provenance["m"]))
    if family == "budak":
        return budak_tf(
            BudakParams(provenance["m"], provenance["n"], Fraction(provenance["gamma"]))
        )
    if family == "bessel":
        return _bessel_allpole(provenance["n"])
    if family == "file":
        return TransferFunction(
            Polynomial([Fraction(c) for c in provenance["num"]]),
            Polynomial([Fraction(c) for c in provenance["den"]]),
        )
    raise ValueError(f"unknown provenance family {family!r}")


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_gbp(args, precision: int) -> int:
    poly = gbp(GbpParams(args.n, args.alpha, args.beta))
    descending = [str(poly.coeff(k)) for k in range(poly.degree, -1, -1)]
    if args.json:
        _emit_json(
            {
                "report_version": 1,
                "command": "gbp",
                "n": args.n,
                "alpha": str(Fraction(args.alpha)),
                "beta": str(Fraction(args.beta)),
                "coefficients_descending": descending,
                "rendered": str(poly),
            }
        )
    else:
        print(poly)
    return 0


def _cmd_pade(args, precision: int) -> int:
    if args.n < 0 or args.m < 0:
        raise UsageError("degrees must be non-negative")
    tf = pade_exp(PadeIndex(args.n, args.m))
    provenance = {"family": "pade", "n": args.n, "m": args.m}
    if not args.analyze:
        if args.json:
            _emit_json(
                {
                    "report_version": 1,
                    "command": "pade",
                    "provenance": provenance,
                    "transfer_function": _tf_dict(tf),
                }
            )
        else:
            print(tf)
        return 0
    report = design_report(tf, provenance)
    if args.json:
        _emit_json(_report_dict(report, "pade"))
    else:
        _print_report_plain(report)
    return 0


def _surd_entry(surd, precision: int) -> dict:
    return {"surd": str(surd), "decimal": surd_to_float(surd, precision)}


def _cmd_budak(args, precision: int) -> int:
    if (args.gamma is None) == (not args.order2_gamma):
        raise UsageError("exactly one of --gamma or --order2-gamma is required")
    if args.order2_gamma:
        if not 1 <= args.m < args.n:
            raise UsageError("order-2 gamma needs 1 <= m < n")
        pair = gamma_order2(args.n, args.m)
        if args.json:
            _emit_json(
                {
                    "report_version": 1,
                    "command": "budak-order2",
                    "m": args.m,
                    "n": args.n,
                    "gamma_plus": _surd_entry(pair.gamma_plus, precision),
                    "gamma_minus": _surd_entry(pair.gamma_minus, precision),
                    "quadratic": {
                        "rendered": pair.quadratic.to_str("gamma"),
                        "coefficients_ascending": _poly_strings(pair.quadratic),
                    },
                }
            )
        else:
            for surd in (pair.gamma_plus, pair.gamma_minus):
                print(f"{surd} ≈ {surd_to_float(surd, precision)}")
            print(f"q(gamma) = {pair.quadratic.to_str('gamma')}")
        return 0
    if args.gamma <= 0:
        raise UsageError("gamma must be positive")
    if not 0 <= args.m <= args.n or args.n < 1:
        raise UsageError("need 0 <= m <= n and n >= 1")
    tf = budak_tf(BudakParams(args.m, args.n, args.gamma))
    provenance = {
        "family": "budak",
        "m": args.m,
        "n": args.n,
        "gamma": str(Fraction(args.gamma)),
    }
    report = design_report(tf, provenance)
    if args.json:
        _emit_json(_report_dict(report, "budak"))
    else:
        _print_report_plain(report)
    return 0


def _cmd_analyze(args, precision: int) -> int:
    tf, provenance = source_tf(args.source)
    report = design_report(tf, provenance)
    if args.json:
        _emit_json(_report_dict(report, "analyze"))
    else:
        _print_report_plain(report)
    return 0


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".besselpade-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def sweep_rows(
    tf: TransferFunction, omega_max: float, points: int
) -> list[tuple[float, float, float, float, bool]]:
    """(omega, magnitude, phase, delay, pole_adjacent) at each grid point."""
    delay_fn = group_delay(tf)
    rows = []
    for i in range(points):
        w = omega_max * i / (points - 1)
        den = complex(tf.denominator(1j * w))
        flagged = abs(den) < 1e-12
        if flagged:
            mag = phase = delay = float("inf")
        else:
            h = complex(tf.numerator(1j * w)) / den
            mag = abs(h)
            phase = cmath.phase(h)
            delay = float(delay_fn.value_at(w * w))
        rows.append((w, mag, phase, delay, flagged))
    return rows


def _cmd_sweep(args, precision: int) -> int:
    if args.points < 2:
        raise UsageError("need at least 2 points")
    if not args.omega_max > 0:
        raise UsageError("omega-max must be positive")
    tf, _ = source_tf(args.source)
    lines = ["omega,magnitude,phase_rad,group_delay"]
    for w, mag, phase, delay, flagged in sweep_rows(tf, args.omega_max, args.points):
        line = f"{w!r},{mag!r},{phase!r},{delay!r}"
        if flagged:
            line += ",pole-adjacent"
        lines.append(line)
    text = "\n".join(lines) + "\n"
    if args.output is None or args.output == "-":
        sys.stdout.write(text)
    else:
        _write_atomic(args.output, text)
    return 0


def _compare_rows(n: int, m: int, precision: int) -> list[dict]:
    rows: list[dict] = []

    pade_report = design_report(
        pade_exp(PadeIndex(n, m)), {"family": "pade", "n": n, "m": m}
    )
    rows.append(
        {
            "variant": "pade",
            "label": f"pade({n},{m})",
            "delay_order": pade_report.delay.order,
            "magnitude_order": pade_report.magnitude.order,
            "minimum_phase": pade_report.minimum_phase,
            "stability": str(pade_report.stability.verdict),
        }
    )

    cert = order2_certificate(n, m)
    if cert.magnitude_order is None or cert.delay_order is None:
        raise ArithmeticError("order-2 certificate did not close")
    for surd, min_phase in (
        (cert.gammas.gamma_plus, cert.minimum_phase_plus),
        (cert.gammas.gamma_minus, cert.minimum_phase_minus),
    ):
        decimal = surd_to_float(surd, precision)
        rows.append(
            {
                "variant": "budak",
                "label": f"budak({m},{n}) gamma≈{decimal}",
                "gamma_surd": str(surd),
                "gamma_decimal": decimal,
                "delay_order": cert.delay_order,
                "magnitude_order": cert.magnitude_order,
                "minimum_phase": min_phase,
                "stability": str(cert.denominator_verdict),
            }
        )

    bessel_report = design_report(_bessel_allpole(n), {"family": "bessel", "n": n})
    rows.append(
        {
            "variant": "bessel",
            "label": f"bessel({n})",
            "delay_order": bessel_report.delay.order,
            "magnitude_order": bessel_report.magnitude.order,
            "minimum_phase": None,
            "stability": str(bessel_report.stability.verdict),
        }
    )
    return rows


def _cmd_compare(args, precision: int) -> int:
    if not 1 <= args.m < args.n:
        raise UsageError("compare needs 1 <= m < n")
    rows = _compare_rows(args.n, args.m, precision)
    if args.json:
        _emit_json(
            {
                "report_version": 1,
                "command": "compare",
                "n": args.n,
                "m": args.m,
                "rows": rows,
            }
        )
        return 0
    headers = ["variant", "delay_order", "magnitude_order", "minimum_phase", "stability"]
    table = []
    for row in rows:
        phase = row["minimum_phase"]
        table.append(
            [
                row["label"],
                str(row["delay_order"]),
                str(row["magnitude_order"]),
                "-" if phase is None else ("yes" if phase else "no"),
                _VERDICT_WORDS[Verdict(row["stability"])],
            ]
        )
    widths = [
        max(len(headers[c]), *(len(r[c]) for r in table)) for c in range(len(headers))
    ]
    print("  ".join(h.ljust(widths[c]) for c, h in enumerate(headers)).rstrip())
    for r in table:
        print("  ".join(cell.ljust(widths[c]) for c, cell in enumerate(r)).rstrip())
    return 0


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def _precision_from_env() -> int:
    raw = os.environ.get("BESSELPADE_PRECISION")
    if raw is None:
        return DEFAULT_PRECISION
    try:
        value = int(raw)
    except ValueError as exc:
        raise UsageError(f"BESSELPADE_PRECISION must be an integer, got {raw!r}") from exc
    if value < 1:
        raise UsageError("BESSELPADE_PRECISION must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="besselpade",
        description="Exact delay-approximation toolbox: polynomials, approximants, stability and flatness reports.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gbp", help="construct a generalized Bessel polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=Fraction, required=True)
    p.add_argument("--beta", type=Fraction, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_gbp)

    p = sub.add_parser("pade", help="(n,m) delay approximant")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--analyze", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_pade)

    p = sub.add_parser("budak", help="two-sided scaled-Bessel approximant")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gamma", type=Fraction)
    p.add_argument("--order2-gamma", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_budak)

    p = sub.add_parser("analyze", help="full report for a transfer function source")
    p.add_argument("--source", required=True, help="pade:N,M | budak:M,N,G | bessel:N | file:PATH")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("sweep", help="CSV frequency sweep")
    p.add_argument("--source", required=True, help="pade:N,M | budak:M,N,G | bessel:N | file:PATH")
    p.add_argument("--omega-max", type=float, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--output", help="target CSV path (omit or '-' for stdout)")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("compare", help="side-by-side approximant table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_compare)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        precision = _precision_from_env()
        return args.func(args, precision)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
