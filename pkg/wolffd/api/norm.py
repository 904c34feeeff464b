"""
Norm Command

Truncated multiplier norms of a tuple and the row/column √18 comparison.
"""

from wolffd.core.config import get_settings
from wolffd.engines.multiplier_ops import multiplier_tuple_norms
from wolffd.schemas.problem import MultiplierFile
from wolffd.utils.io import read_model


def cmd_norm(args) -> int:
    F = read_model(args.input, MultiplierFile).multiplier_tuple()
    degree = args.degree if args.degree is not None else max(get_settings().degree, 64)
    degree = max(degree, F.max_degree)
    norms = multiplier_tuple_norms(F, degree)
    for j, value in enumerate(norms["entry_norms"], start=1):
        print(f"op_norm f_{j}: {value:.12g}")
    print(f"column_norm: {norms['column_norm']:.12g}")
    print(f"row_norm: {norms['row_norm']:.12g}")
    ok = norms["row_le_sqrt18_column"]
    print(f"row <= sqrt(18)*column ({norms['sqrt18_bound']:.12g}): {'yes' if ok else 'NO'}")
    return 0 if ok else 1


def register(subparsers) -> None:
    p = subparsers.add_parser("norm", help="Multiplier norms of a tuple")
    p.add_argument("input", help="JSON file with key F")
    p.add_argument("--degree", type=int, help="Truncation degree (default 64)")
    p.set_defaults(handler=cmd_norm)
