"""
Befehl 'search': Stichprobensuche nach Operationen mit Lücke mindestens 3.
"""

from src.verifier import search_gap3

from ..payload import dumps, report_payload
from .sweep import print_report


def register(subparsers):
    parser = subparsers.add_parser("search", help="nach Lücke >= 3 suchen (k >= 3)")
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--count", type=int, default=10000)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--workers", type=int)
    parser.add_argument("--json", action="store_true")
    parser.set_defaults(handler=run)


def run(args, context) -> int:
    config = context.config
    report = search_gap3(
        args.k,
        args.n,
        args.count,
        args.seed if args.seed is not None else config["default_seed"],
        reject=config["sample_rejection"],
        max_rejections=config["max_rejections"],
        workers=args.workers or config["workers"],
        logger=context.logger,
    )
    if args.json:
        context.emit(dumps(report_payload("search", report)))
    else:
        print_report(report, context)
    return 1 if report.violations else 0
