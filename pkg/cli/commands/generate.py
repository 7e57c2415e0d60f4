"""
Befehl 'generate': erzeugt Funktionsdateien aus Spezifikationen, Polynomen oder Zufallszahlen.
"""

import os

import yaml

from src.errors import SpecInvalidError
from src.finite_function import FiniteFunction
from src.function_file import format_function, read_function_file, write_function_file
from src.generators import LiftSpec, QuasiLinearSpec, lift, quasi_linear, random_function
from src.zhegalkin import from_anf, parse_polynomial


def register(subparsers):
    parser = subparsers.add_parser("generate", help="Funktionsdatei erzeugen")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--quasilinear", metavar="SPEC", help="JSON-Datei mit k, n, h, g")
    source.add_argument("--lift", metavar="SPEC", help="JSON-Datei mit base/base_file, gamma, phi")
    source.add_argument("--random", nargs=4, type=int, metavar=("K", "B", "N", "SEED"))
    source.add_argument("--anf", metavar="POLY", help="Polynom wie 'x1*x2 + x3 + 1'")
    parser.add_argument("--arity", type=int, help="Stelligkeit für --anf (Standard: größter Index)")
    parser.add_argument("--out", metavar="PATH", help="Zieldatei; ohne Angabe stdout")
    parser.add_argument("--hex", action="store_true", help="Hexform (nur k = b = 2)")
    parser.set_defaults(handler=run)


def load_spec(path: str) -> dict:
    """JSON-Spezifikation; der YAML-Lader akzeptiert JSON und YAML."""
    try:
        with open(path, "r", encoding="utf-8") as f:
            content = yaml.safe_load(f)
    except (OSError, yaml.YAMLError) as e:
        raise SpecInvalidError(f"Spezifikation '{path}' konnte nicht gelesen werden: {e}") from e
    if not isinstance(content, dict):
        raise SpecInvalidError(f"Spezifikation '{path}' ist kein Objekt.")
    return content


def quasi_linear_from_spec(spec: dict) -> FiniteFunction:
    try:
        return quasi_linear(QuasiLinearSpec(int(spec["k"]), int(spec["n"]), spec["h"], spec["g"]))
    except (KeyError, TypeError, ValueError) as e:
        raise SpecInvalidError(f"Quasi-lineare Spezifikation unvollständig oder fehlerhaft: {e}") from e


def lift_from_spec(spec: dict, base_dir: str = ".") -> FiniteFunction:
    try:
        if "base_file" in spec:
            base = read_function_file(os.path.join(base_dir, spec["base_file"]))
        else:
            raw = spec["base"]
            base = FiniteFunction(int(raw["k"]), int(raw["b"]), int(raw["n"]), raw["table"])
        return lift(LiftSpec(base, spec["gamma"], spec["phi"]))
    except (KeyError, TypeError, ValueError) as e:
        raise SpecInvalidError(f"Hebungsspezifikation unvollständig oder fehlerhaft: {e}") from e


def run(args, context) -> int:
    if args.quasilinear:
        f = quasi_linear_from_spec(load_spec(args.quasilinear))
    elif args.lift:
        f = lift_from_spec(load_spec(args.lift), os.path.dirname(os.path.abspath(args.lift)))
    elif args.random:
        k, b, n, seed = args.random
        f = random_function(k, b, n, seed, table_budget=context.config["table_budget"])
    else:
        f = from_anf(parse_polynomial(args.anf, args.arity))

    if args.out:
        write_function_file(args.out, f, hex_form=args.hex)
        context.logger.info(f"Funktion (k={f.k}, n={f.n}, b={f.b}) nach '{args.out}' geschrieben.")
    else:
        context.emit(format_function(f, hex_form=args.hex).rstrip("\n"))
    return 0
