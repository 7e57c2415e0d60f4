"""
Befehl 'classify': Sonderform des Zhegalkin-Polynoms und daraus folgende Lücke.
"""

from src.function_file import read_function_file
from src.gap_classifier import classify
from src.zhegalkin import to_anf

from ..payload import dumps, payload


def register(subparsers):
    parser = subparsers.add_parser("classify", help="Lücke über die Sonderformen bestimmen")
    parser.add_argument("path", help="Funktionsdatei (k = b = 2, ess >= 2)")
    parser.add_argument("--json", action="store_true")
    parser.set_defaults(handler=run)


def run(args, context) -> int:
    form = classify(to_anf(read_function_file(args.path)))
    if args.json:
        context.emit(
            dumps(
                payload(
                    "classify",
                    tag=form.tag.value,
                    participants=list(form.participants),
                    c=form.c,
                    gap=form.implied_gap,
                )
            )
        )
    else:
        participants = ",".join(str(i) for i in form.participants)
        context.emit(f"{form.tag.value} participants=({participants}) c={form.c} gap={form.implied_gap}")
    return 0
