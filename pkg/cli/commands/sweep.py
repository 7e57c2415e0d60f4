"""
Befehl 'sweep': prüft einen Satz vollständig oder auf einer Stichprobe.
"""

from src.verifier import Population, TheoremId, outcomes_frame, sweep

from ..payload import dumps, report_payload


def register(subparsers):
    parser = subparsers.add_parser("sweep", help="Satz über eine Population prüfen")
    parser.add_argument("--theorem", required=True, choices=[t.value for t in TheoremId])
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--b", type=int, help="Größe des Wertebereichs (Standard: k)")
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--count", type=int, help="Stichprobenumfang; ohne Angabe vollständig")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--limit", type=int, help="höchstens so viele Zeugen sammeln (thm1)")
    parser.add_argument("--no-reject", action="store_true", help="Stichproben ohne Verwerfen ziehen")
    parser.add_argument("--workers", type=int)
    parser.add_argument("--csv", metavar="PATH", help="Ergebnis je Element als CSV schreiben")
    parser.add_argument("--json", action="store_true")
    parser.set_defaults(handler=run)


def print_report(report, context):
    population = report.population
    context.emit(
        f"theorem={report.theorem.value} population={population['kind']} "
        f"k={population['k']} b={population['b']} n={population['n']}"
    )
    context.emit(
        f"examined={report.examined} checked={report.checked} skipped={report.skipped} "
        f"violations={len(report.violations)}"
    )
    if report.gap_histogram:
        histogram = " ".join(f"{gap}:{count}" for gap, count in report.gap_histogram.items())
        context.emit(f"gap histogram: {histogram}")
    for certificate in report.witnesses:
        context.emit("witness: " + " ".join(str(v) for v in certificate.table))
    for certificate in report.violations:
        context.emit(f"violation index={certificate.index}: " + " ".join(str(v) for v in certificate.table))
    for note in report.notes:
        context.emit(note)
    context.emit(f"elapsed={report.elapsed:.2f}s")


def run(args, context) -> int:
    config = context.config
    theorem = TheoremId(args.theorem)
    count = args.count
    if theorem is TheoremId.THM1 and count is None:
        count = config["collapse_samples"]
    population = Population(
        k=args.k,
        b=args.b if args.b is not None else args.k,
        n=args.n,
        count=count,
        seed=args.seed if args.seed is not None else config["default_seed"],
        reject=config["sample_rejection"] and not args.no_reject,
        max_rejections=config["max_rejections"],
    )
    report = sweep(
        theorem,
        population,
        budget=config["enumeration_budget"],
        workers=args.workers or config["workers"],
        limit=args.limit,
        logger=context.logger,
    )

    if args.csv:
        outcomes_frame(report.outcomes).to_csv(args.csv, index=False)
        context.logger.info(f"Ergebnisse je Element nach '{args.csv}' geschrieben.")

    if args.json:
        context.emit(dumps(report_payload("sweep", report)))
    else:
        print_report(report, context)
    return 1 if report.violations else 0
