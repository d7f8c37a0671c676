"""Command-line driver: ``wres boundary | interior | verify | oracle``."""
from __future__ import annotations

import argparse
import json
import sys
import time
from importlib import resources
from pathlib import Path

from . import __version__
from .boundary import LABEL_ORDER, PAIRINGS, evaluate_pairing, resolve_pairing, sum_results
from .interior import WHICH, trace_identity_suite, wres_integrand
from .poly import HPRIME, Poly
from .scalars import ZERO, GaussianRational
from .sphere import SphereValue

PAIRING_CHOICES = sorted(PAIRINGS) + ["d1-cube"]

# index k of the formal sphere volume Omega_k attached to results in dimension n
OMEGA_INDEX = {4: 3, 6: 4}


# -- rendering ----------------------------------------------------------------

def split_hprime(p: Poly) -> tuple[GaussianRational, int]:
    """Write ``p`` as ``c * h'(0)^m``; anything else is an engine error."""
    if p.is_zero():
        return ZERO, 1
    items = list(p.items())
    if len(items) != 1 or set(items[0][0]) - {HPRIME}:
        raise ValueError(f"boundary value {p} is not a multiple of a power of h'(0)")
    exps, c = items[0]
    return c, exps.get(HPRIME, 0)


def value_json(v: SphereValue, n: int) -> dict:
    c, m = split_hprime(v.coefficient)
    return {"coeff_re": str(c.re), "coeff_im": str(c.im), "pi_pow": v.pi_power,
            "omega": f"Omega_{OMEGA_INDEX[n]}" if v.omega_power else None, "hprime_pow": m}


def value_text(v: SphereValue, n: int) -> str:
    c, m = split_hprime(v.coefficient)
    factors = [f"({c})" if c.re and c.im else str(c)]
    if v.pi_power:
        factors.append("pi" if v.pi_power == 1 else f"pi^{v.pi_power}")
    if m:
        factors.append("h'(0)" if m == 1 else f"h'(0)^{m}")
    if v.omega_power:
        factors.append(f"Omega_{OMEGA_INDEX[n]}")
    return " * ".join(factors)


def boundary_report(n: int, pairing: str, case: str | None) -> dict:
    labels = None if case is None else [case]
    results = evaluate_pairing(n, pairing, labels)
    report = {
        "meta": {"n": n, "pairing": pairing, "engine": __version__},
        "cases": [{"label": r.label, "tuple": list(r.spec.tuple), "value": value_json(r.value, n)}
                  for r in results],
    }
    if case is None:
        report["total"] = value_json(sum_results(results, n), n)
    return report


def _md_value(val: dict) -> str:
    c = GaussianRational.parse(f"{val['coeff_re']}+{val['coeff_im']}*i")
    parts = [f"({c})" if c.re and c.im else str(c)]
    if val["pi_pow"]:
        parts.append("π")
    if val["hprime_pow"]:
        parts.append("h'(0)")
    if val["omega"]:
        parts.append("Ω" + val["omega"].split("_")[1])
    return " ".join(parts)


def boundary_markdown(report: dict) -> str:
    meta = report["meta"]
    lines = [f"# Boundary term, n = {meta['n']}, pairing {meta['pairing']}", "",
             "| case | (r, l, k, j, abs(alpha)) | value |", "|---|---|---|"]
    for c in report["cases"]:
        lines.append(f"| {c['label']} | {tuple(c['tuple'])} | {_md_value(c['value'])} |")
    if "total" in report:
        lines.append(f"| **total** | | {_md_value(report['total'])} |")
    return "\n".join(lines) + "\n"


def interior_report(n: int, which: str) -> dict:
    integrand = wres_integrand(n, which)
    return {
        "meta": {"n": n, "which": which, "engine": __version__},
        "prefactor": str(integrand.prefactor),
        "pi_pow": integrand.pi_power,
        "braces": {k: str(v) for k, v in integrand.coefficients().items()},
    }


def interior_markdown(report: dict) -> str:
    meta = report["meta"]
    lines = [f"# Interior integrand, n = {meta['n']}, {meta['which']}", "",
             f"prefactor: {report['prefactor']} π^{report['pi_pow']}", "",
             "| monomial | coefficient |", "|---|---|"]
    lines += [f"| {k} | {v} |" for k, v in report["braces"].items()]
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dump(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


# -- verification ---------------------------------------------------------------

def load_fixtures(path: str | None) -> dict:
    if path is None:
        text = resources.files("wres").joinpath("data/fixtures.json").read_text(encoding="utf-8")
    else:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise SystemExit(f"wres verify: cannot read fixtures: {exc}") from None
    return json.loads(text)


def _boundary_value(cache: dict, n: int, pairing: str, label: str) -> GaussianRational:
    key = (n, pairing)
    if key not in cache:
        cache[key] = evaluate_pairing(n, pairing)
    results = cache[key]
    wanted = LABEL_ORDER if label == "total" else label.split("+")
    picked = [r for r in results if r.label in wanted]
    if len(picked) != len(wanted):
        raise ValueError(f"unknown case label {label!r}")
    c, _ = split_hprime(sum_results(picked, n).coefficient)
    return c


def run_verify(fixtures: dict) -> list[tuple[str, str, str, bool]]:
    """Return ``(name, expected, got, passed)`` rows."""
    rows = []
    cache: dict = {}
    for fx in fixtures.get("boundary", []):
        n, pairing = fx["n"], resolve_pairing(fx["pairing"])
        expected = GaussianRational.parse(fx["expected"])
        got = _boundary_value(cache, n, pairing, fx["label"])
        rows.append((f"boundary n={n} {pairing} {fx['label']}", str(expected), str(got),
                     expected == got))
    for fx in fixtures.get("interior", []):
        rep = interior_report(fx["n"], fx["which"])
        name = f"interior n={fx['n']} {fx['which']}"
        rows.append((name + " prefactor", f"{fx['prefactor']} pi^{fx['pi_pow']}",
                     f"{rep['prefactor']} pi^{rep['pi_pow']}",
                     fx["prefactor"] == rep["prefactor"] and fx["pi_pow"] == rep["pi_pow"]))
        keys = sorted(set(fx["braces"]) | set(rep["braces"]))
        for k in keys:
            exp = GaussianRational.parse(fx["braces"].get(k, "0"))
            got = GaussianRational.parse(rep["braces"].get(k, "0"))
            rows.append((f"{name} [{k}]", str(exp), str(got), exp == got))
    for n in fixtures.get("trace_identities", []):
        for chk in trace_identity_suite(n):
            rows.append((f"trace n={n} {chk.name}", str(chk.expected), str(chk.got), chk.passed))
    return rows


# -- commands -------------------------------------------------------------------

def cmd_boundary(args) -> int:
    pairing = resolve_pairing(args.pairing)
    dim = PAIRINGS[pairing][0]
    if args.n != dim:
        args.parser.error(f"pairing {args.pairing} needs --n {dim}")
    t0 = time.perf_counter()
    report = boundary_report(args.n, pairing, args.case)
    text = _dump(report) if args.format == "json" else boundary_markdown(report)
    _emit(text, args.out)
    if args.timing:
        print(f"elapsed {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    return 0


def cmd_interior(args) -> int:
    try:
        report = interior_report(args.n, args.which)
    except ValueError as exc:
        args.parser.error(str(exc))
    text = _dump(report) if args.format == "json" else interior_markdown(report)
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    rows = run_verify(load_fixtures(args.fixtures))
    failed = 0
    for name, exp, got, ok in rows:
        if ok:
            print(f"PASS  {name}")
        else:
            failed += 1
            print(f"FAIL  {name}\n        expected: {exp}\n        got:      {got}")
    print(f"{len(rows) - failed}/{len(rows)} checks passed")
    return 0 if failed == 0 else 1


def cmd_oracle(args) -> int:
    from .oracle import run_oracle

    rep = run_oracle(args.seed, args.trials)
    print(f"line integrals: {rep.trials} trials, max relative deviation "
          f"{rep.max_line_deviation:.3e} ({'PASS' if rep.line_ok else 'FAIL'}, bound 1e-9)")
    for n, alpha, exact, mean, se in rep.sphere_checks:
        dev = abs(mean - exact) / se
        print(f"sphere n={n} alpha={alpha}: exact {exact:.6g}, monte carlo {mean:.6g} "
              f"+- {se:.2g} ({dev:.2f} sigma)")
    print("sphere moments:", "PASS" if rep.sphere_ok else "FAIL", "(bound 3 sigma)")
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wres", description="Exact noncommutative-residue "
                                     "boundary and interior terms for perturbed Dirac operators.")
    parser.add_argument("--version", action="version", version=f"wres {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("boundary", help="evaluate boundary cases for a pairing")
    b.add_argument("--n", type=int, choices=(4, 6), required=True)
    b.add_argument("--pairing", choices=PAIRING_CHOICES, required=True)
    b.add_argument("--case", choices=LABEL_ORDER)
    b.add_argument("--format", choices=("json", "md"), default="json")
    b.add_argument("--out")
    b.add_argument("--timing", action="store_true", help="print elapsed time to stderr")
    b.set_defaults(func=cmd_boundary, parser=b)

    i = sub.add_parser("interior", help="interior integrand coefficients")
    i.add_argument("--n", type=int, choices=(4, 6), required=True)
    i.add_argument("--which", choices=sorted(WHICH), required=True)
    i.add_argument("--format", choices=("json", "md"), default="json")
    i.add_argument("--out")
    i.set_defaults(func=cmd_interior, parser=i)

    v = sub.add_parser("verify", help="compare against exact fixtures")
    v.add_argument("--fixtures")
    v.set_defaults(func=cmd_verify, parser=v)

    o = sub.add_parser("oracle", help="floating-point cross-checks")
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--trials", type=int, default=100)
    o.set_defaults(func=cmd_oracle, parser=o)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
