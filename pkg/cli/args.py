import argparse
import sys
from typing import List, Optional

from core.settings import get_settings
from persistence.serializer import FORMATS

SUBCOMMANDS = ('group', 'chartable', 'frob', 'cob', 'openclosed', 'dw', 'lattice', 'double', 'su2k', 'ym',
               'selftest')


def _int_auto(text: str) -> int:
    """Integers in any base Python understands (0xC0FFEE, 12, 0b101)."""
    try:
        return int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text}")


def _int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(',') if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text}")


def _float_list(text: str) -> List[float]:
    try:
        return [float(x) for x in text.split(',') if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text}")


_SIGNS = {'+': 1, '+1': 1, '1': 1, '-': -1, '-1': -1}


def _sign_list(text: str) -> List[int]:
    """Square-root signs written as +,-,+ or 1,-1,1 (a unicode minus is accepted)."""
    signs = []
    for raw in text.replace('−', '-').split(','):
        raw = raw.strip()
        if raw not in _SIGNS:
            raise argparse.ArgumentTypeError(f"expected signs like +,-,+ or 1,-1,1, got {text}")
        signs.append(_SIGNS[raw])
    return signs


EMITS = ('summary', 's', 't', 'c', 'qdims', 'dims', 'fusion', 'relations')


def _emit_list(text: str) -> List[str]:
    items = [x.strip().lower() for x in text.split(',') if x.strip()]
    unknown = [x for x in items if x not in EMITS]
    if unknown or not items:
        raise argparse.ArgumentTypeError(f"unknown output {', '.join(unknown) or text!r} "
                                         f"(choose from {', '.join(EMITS)})")
    return items


# Options whose values may start with '-' and must not be read as flags
_SIGNED_VALUE_OPTIONS = ('--signs',)


def _join_signed_values(argv: List[str]) -> List[str]:
    """Rewrite '--signs -1,1' as '--signs=-1,1'."""
    joined: List[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in _SIGNED_VALUE_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith(('-', '−')) \
                and argv[i + 1] not in ('-h', '--help'):
            joined.append(f"{token}={argv[i + 1]}")
            i += 2
            continue
        joined.append(token)
        i += 1
    return joined


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=FORMATS, default='table',
                        help='Output format (default: table)')
    common.add_argument('--seed', type=_int_auto, default=get_settings().default_seed,
                        help='Seed for randomized checks (default: 0xC0FFEE)')
    common.add_argument('--threads', type=int,
                        help='Worker thread cap (default: TQFT_THREADS or the CPU count)')
    common.add_argument('--output', type=str,
                        help='Also write the JSON result document to this file')
    return common


def _add_group_option(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument('--group', '--preset', dest='group', required=required,
                        help='Preset alias (Z2, S3, D4, Q8, Z2xZ2, symmetric:4) or a group JSON file')


def build_parser() -> argparse.ArgumentParser:
    """
    Parser for all subcommands.

    Returns:
        parser: The configured ArgumentParser
    """
    parser = argparse.ArgumentParser(prog='finite-tqft',
                                     description='Finite-group topological quantum field theory toolkit')
    common = _common_options()
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    p = sub.add_parser('group', parents=[common], help='Group structure: classes, orders, centralizers')
    _add_group_option(p)
    p.add_argument('query', nargs='?', default='summary',
                   choices=['summary', 'classes', 'orders', 'centralizers', 'cayley', 'structure'],
                   help='What to report (default: summary)')

    p = sub.add_parser('chartable', parents=[common], help='Character table and its checks')
    _add_group_option(p)
    p.add_argument('--checks', action='store_true', help='Also run the orthogonality and root-of-unity checks')

    p = sub.add_parser('frob', parents=[common], help='Frobenius algebra structure and genus invariants')
    p.add_argument('--algebra', required=True,
                   help='Algebra JSON file, classfun:G, groupalg:G, semisimple:t1,t2,.. or matrix:n')
    p.add_argument('--max-genus', type=int, default=4, help='Largest genus to evaluate (default: 4)')
    p.add_argument('--rescale', type=complex, help='Rescale the trace by this factor first')

    p = sub.add_parser('cob', parents=[common], help='Evaluate cobordism words')
    p.add_argument('action', nargs='?', default='eval', choices=['eval', 'suite'],
                   help='eval a word or closed surface, or run the relation suite (default: eval)')
    p.add_argument('--algebra', required=True, help='Commutative algebra (see frob --algebra)')
    target = p.add_mutually_exclusive_group()
    target.add_argument('--word', help="Word file, or inline slices separated by ';'")
    target.add_argument('--genus', type=int, help='Evaluate the closed genus-g word')
    target.add_argument('--suite', action='store_true', help='Run the generating relation suite')

    p = sub.add_parser('openclosed', parents=[common], help='Branes, Cardy condition and boundary maps')
    p.add_argument('action', nargs='?', default='summary', choices=['summary', 'cardy'],
                   help='Full report, or the Cardy condition alone (default: summary)')
    p.add_argument('--traces', type=_float_list, help='Closed traces eps_i, comma-separated')
    p.add_argument('--signs', type=_sign_list, help='Square root signs, comma-separated: +,-,+ or 1,-1,1')
    p.add_argument('--branes', '--k', dest='branes', type=_int_list,
                   help='Brane multiplicities k_i, comma-separated')
    p.add_argument('--random', type=int, default=0, help='Check this many random brane configurations instead')

    p = sub.add_parser('dw', parents=[common], help='Flat G-bundle counts on closed and punctured surfaces')
    _add_group_option(p)
    p.add_argument('--genus', type=int, required=True, help='Genus of the surface')
    p.add_argument('--method', choices=['brute', 'convolution', 'character'], default='convolution',
                   help='Counting method (default: convolution)')
    boundary = p.add_mutually_exclusive_group()
    boundary.add_argument('--boundary', type=_int_list,
                          help='Conjugacy class indices on the boundary circles (n-point function)')
    boundary.add_argument('--points', type=_int_list,
                          help='Holonomy representatives around boundary circles (n-point function)')
    p.add_argument('--compare', action='store_true', help='Also evaluate the character formula')

    p = sub.add_parser('lattice', parents=[common], help='Exact lattice state sums on triangulations')
    _add_group_option(p)
    p.add_argument('--surface', default='genus:1',
                   help='genus:g, sphere, torus, cylinder, disk, triangle or a triangulation JSON file '
                        '(default: genus:1)')
    p.add_argument('--moves', '--shuffle', dest='moves', type=int, default=0,
                   help='Apply this many seeded random Pachner moves first')
    p.add_argument('--check', choices=['pachner', 'bridge', 'cylinder'],
                   help='Run a cross-check instead of a single evaluation')

    p = sub.add_parser('double', parents=[common], help='Modular data of the Drinfeld double D(G)')
    _add_group_option(p)
    p.add_argument('--emit', type=_emit_list, default=['summary'],
                   help='Comma-separated outputs from ' + ', '.join(EMITS) + ' (default: summary)')
    p.add_argument('--genus', type=int, help='Also report the genus-g Verlinde dimension and its oracles')

    p = sub.add_parser('su2k', parents=[common], help='Modular data of SU(2) at level k')
    p.add_argument('--level', type=int, required=True, help='Level k >= 1')
    p.add_argument('--sign', type=int, choices=[1, -1], help='Force the twist sign (default: automatic)')
    p.add_argument('--emit', type=_emit_list, default=['summary'],
                   help='Comma-separated outputs from ' + ', '.join(EMITS) + ' (default: summary)')
    p.add_argument('--genus', type=int, help='Also report the genus-g Verlinde dimension')

    p = sub.add_parser('ym', parents=[common], help='Two-dimensional Yang-Mills partition functions')
    p.add_argument('--spectrum', choices=['su2', 'finite'], default='su2', help='Irrep spectrum (default: su2)')
    _add_group_option(p, required=False)
    p.add_argument('--genus', type=int, required=True, help='Genus of the surface')
    p.add_argument('--area', type=float, default=0.1, help='Total area, coupling absorbed (default: 0.1)')
    p.add_argument('--nmax', type=int, help='Truncation (default: chosen from --tol)')
    p.add_argument('--tol', type=float, default=1e-8, help='Target tail bound (default: 1e-8)')
    p.add_argument('--casimir-scale', type=float, help='Casimir normalization c (default: 0.25)')
    p.add_argument('--gluing', action='store_true', help='Also check gluing consistency of both layouts')

    p = sub.add_parser('selftest', parents=[common], help='Run the cross-module oracle suite')
    p.add_argument('--only', action='append', default=[],
                   help='Run only criteria with this tag or name (repeatable, comma-separated)')
    p.add_argument('--inject', choices=['perturb-s'], help='Inject a fault to exercise failure reporting')
    return parser


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse command line arguments."""
    argv = sys.argv[1:] if argv is None else list(argv)
    return build_parser().parse_args(_join_signed_values(argv))
