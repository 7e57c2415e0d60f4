"""
Befehl 'anf': Zhegalkin-Polynom einer Booleschen Funktion.
"""

from src.function_file import read_function_file
from src.zhegalkin import format_polynomial, to_anf

from ..payload import dumps, payload


def register(subparsers):
    parser = subparsers.add_parser("anf", help="Zhegalkin-Polynom ausgeben")
    parser.add_argument("path", help="Funktionsdatei (k = b = 2)")
    parser.add_argument("--json", action="store_true")
    parser.set_defaults(handler=run)


def run(args, context) -> int:
    p = to_anf(read_function_file(args.path))
    if args.json:
        context.emit(
            dumps(
                payload(
                    "anf",
                    polynomial=format_polynomial(p),
                    monomials=[list(m) for m in p.sorted_monomials()],
                    degree=p.degree,
                )
            )
        )
    else:
        context.emit(format_polynomial(p))
    return 0
