"""
Befehl 'analyze': wesentliche Variablen, essl, Lücke und Zeugenminor einer Funktionsdatei.
"""

from src.errors import EssentialArityTooSmallError
from src.finite_function import gap_report
from src.function_file import read_function_file

from ..payload import dumps, payload


def register(subparsers):
    parser = subparsers.add_parser("analyze", help="wesentliche Stelligkeit und Lücke bestimmen")
    parser.add_argument("path", help="Funktionsdatei")
    parser.add_argument("--json", action="store_true")
    parser.set_defaults(handler=run)


def run(args, context) -> int:
    f = read_function_file(args.path)
    try:
        report = gap_report(f)
    except EssentialArityTooSmallError:
        report = None
    context.logger.debug(f"'{args.path}': k={f.k}, n={f.n}, b={f.b}, ess={f.ess}")

    if args.json:
        context.emit(
            dumps(
                payload(
                    "analyze",
                    k=f.k,
                    b=f.b,
                    n=f.n,
                    ess=f.ess,
                    essential=list(f.essential_variables),
                    essl=report.essl if report else None,
                    gap=report.gap if report else None,
                    witness=list(report.witness) if report else None,
                    minor=list(report.minor.values()) if report else None,
                )
            )
        )
        return 0

    if report:
        i, j = report.witness
        context.emit(f"ess={report.ess} essl={report.essl} gap={report.gap} witness=({i},{j})")
    else:
        context.emit(f"ess={f.ess} gap: undefined")
    essential = " ".join(f"x{i}" for i in f.essential_variables)
    context.emit(f"essential: {essential or '-'}")
    if report:
        context.emit("minor: " + " ".join(str(v) for v in report.minor.values()))
    return 0
