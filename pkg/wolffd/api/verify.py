"""
Verify Command

Runs one verification suite (or all of them), prints the rows and writes
<output-dir>/<suite>.csv and <output-dir>/<suite>.json.
"""

from pathlib import Path

import numpy as np

from wolffd.api.solve import load_problem
from wolffd.core.config import get_settings
from wolffd.core.exceptions import ParseError
from wolffd.engines.cauchy_singular import MonomialExpansion
from wolffd.engines.disk_core import AnalyticPoly, make_polar_grid
from wolffd.engines.multiplier_ops import MultiplierTuple
from wolffd.engines.verify_lemmas import (
    verify_boundary_c0,
    verify_cauchy_oracle,
    verify_hd_extension_bound,
    verify_kernel_identity,
    verify_lemma2,
    verify_lemma3,
    verify_lemma4,
    verify_term_estimates,
)
from wolffd.schemas.report import VerificationReport
from wolffd.utils.io import write_csv, write_json

SUITES = ("lemma2", "lemma3", "lemma4", "kernel", "cauchy", "hd", "terms", "boundary", "all")
DEFAULT_LEMMA2_TUPLE = MultiplierTuple.of(AnalyticPoly.from_list([0.0, 0.5]), AnalyticPoly.constant(0.5))


def _need_problem(args):
    if not args.input:
        raise ParseError(f"suite {args.suite!r} needs a problem file via --input")
    return load_problem(args.input, args)


def run_lemma2(args) -> VerificationReport:
    F = _need_problem(args).F if args.input else DEFAULT_LEMMA2_TUPLE
    return verify_lemma2(F, args.trials, args.seed, threads=args.threads)


def run_lemma3(args) -> VerificationReport:
    return verify_lemma3(l_max=args.lmax, trials=min(args.trials, 50), seed=args.seed)


def run_lemma4(args) -> VerificationReport:
    grid = make_polar_grid(get_settings().grid_nr, get_settings().grid_ntheta)
    rng = np.random.default_rng(args.seed)
    random_phi = AnalyticPoly(rng.standard_normal(9) + 1j * rng.standard_normal(9))
    report = VerificationReport(suite="lemma4")
    for phi in (AnalyticPoly.monomial(1), AnalyticPoly.monomial(2), random_phi):
        report.extend(verify_lemma4(phi, grid, 64))
    return report


def run_kernel(args) -> VerificationReport:
    rng = np.random.default_rng(args.seed)
    r = 0.99 * np.sqrt(rng.uniform(size=(1000, 2)))
    pts = r * np.exp(2j * np.pi * rng.uniform(size=(1000, 2)))
    return verify_kernel_identity([(0.5, 0.0), (0.3, 0.4j)] + [tuple(p) for p in pts])


def run_cauchy(args) -> VerificationReport:
    return verify_cauchy_oracle(points=20, seed=args.seed)


def run_hd(args) -> VerificationReport:
    report = VerificationReport(suite="hd")
    for w in (MonomialExpansion(), MonomialExpansion.monomial(0, 0), MonomialExpansion.monomial(0, 1),
              MonomialExpansion({(2, 1): 1.0, (0, 3): 0.5j})):
        report.extend(verify_hd_extension_bound(w))
    return report


def run_terms(args) -> VerificationReport:
    return verify_term_estimates(_need_problem(args))


def run_boundary(args) -> VerificationReport:
    return verify_boundary_c0(_need_problem(args))


RUNNERS = {
    "lemma2": run_lemma2,
    "lemma3": run_lemma3,
    "lemma4": run_lemma4,
    "kernel": run_kernel,
    "cauchy": run_cauchy,
    "hd": run_hd,
    "terms": run_terms,
    "boundary": run_boundary,
}


def emit(report: VerificationReport, output_dir: Path) -> None:
    rows = report.sorted_rows()
    for r in rows:
        mark = "pass" if r.passed else "FAIL"
        print(f"{mark}  {r.name:<40} {r.measured:.6g} <= {r.bound:.6g}  {r.context}")
    header = ["name", "measured", "bound", "pass", "context"]
    write_csv(output_dir / f"{report.suite}.csv", header,
              ([r.name, repr(r.measured), repr(r.bound), r.passed, r.context] for r in rows))
    data = report.model_dump()
    data["rows"] = [r.model_dump() for r in rows]
    data["passed"] = report.passed
    write_json(output_dir / f"{report.suite}.json", data)


def cmd_verify(args) -> int:
    output_dir = Path(args.output_dir or get_settings().output_dir)
    if args.suite == "all":
        report = VerificationReport(suite="all")
        for name in RUNNERS:
            if name in ("terms", "boundary") and not args.input:
                continue
            report.extend(RUNNERS[name](args))
    else:
        report = RUNNERS[args.suite](args)
    emit(report, output_dir)
    return 0 if report.passed else 1


def register(subparsers) -> None:
    p = subparsers.add_parser("verify", help="Run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--trials", type=int, default=100, help="Random trials")
    p.add_argument("--seed", type=int, default=42, help="Random seed")
    p.add_argument("--lmax", type=int, default=30, help="Largest |l| for the T_l rows")
    p.add_argument("--input", help="Problem JSON file for the terms/boundary suites")
    p.add_argument("--output-dir", help="Report directory (default from WOLFFD_OUTPUT_DIR or reports/)")
    p.set_defaults(handler=cmd_verify)
