"""
Radical Command
"""

from wolffd.api.solve import parse_grid
from wolffd.core.config import get_settings
from wolffd.engines.wolff_solver import CAVEAT, radical_diagnostic
from wolffd.schemas.problem import RadicalFile
from wolffd.utils.io import read_model


def cmd_radical(args) -> int:
    spec = read_model(args.input, RadicalFile)
    settings = get_settings()
    nr, ntheta = args.grid if args.grid else (settings.grid_nr // 2, settings.grid_ntheta // 2)
    result = radical_diagnostic(spec.multiplier_tuple(), spec.poly_H(), args.mmax, nr, ntheta)
    if result is None:
        print(f"no certificate up to m_max = {args.mmax}")
    else:
        m, c0 = result
        print(f"m = {m}, C0 = {c0:.12g}")
    print(f"caveat: {CAVEAT}")
    return 0


def register(subparsers) -> None:
    p = subparsers.add_parser("radical", help="Smallest m with |H|^m <= C0 sum |f_j|^2 on a grid")
    p.add_argument("input", help="JSON file with keys F and H")
    p.add_argument("--mmax", type=int, default=8, help="Largest power tried")
    p.add_argument("--grid", type=parse_grid, help="Coarse grid as NRxNTHETA; the check doubles it")
    p.set_defaults(handler=cmd_radical)
