"""
Liest und schreibt Funktionsdateien.

Dezimalform: Kopfzeile "k n b", danach k^n Werte in Zeilenordnung.
Für k = b = 2 alternativ "hex:<ziffern>" (Zeile 0 ist das höchstwertige Bit).
Zeilen, die mit '#' beginnen, sind Kommentare.
"""

import os
import re

from .errors import ParseError
from .finite_function import FiniteFunction

HEX_PREFIX = "hex:"
_HEX_DIGITS = re.compile(r"^[0-9a-fA-F]+$")
_DECIMAL = re.compile(r"[0-9]+")


def _hex_width(n: int) -> int:
    return max(1, (1 << n) // 4)


def _arity_from_hex_width(width: int) -> int:
    # eine Ziffer ohne Kopfzeile gilt als n = 2
    n = (width * 4).bit_length() - 1
    if width < 1 or 1 << n != width * 4:
        raise ParseError(f"{width} Hexziffern passen zu keiner Tabelle der Länge 2^n.")
    return n


def to_hex(f: FiniteFunction) -> str:
    if not f.is_boolean:
        raise ParseError("Die Hexform gibt es nur für Boolesche Funktionen.")
    value = 0
    for bit in f.table.tolist():
        value = value << 1 | bit
    return format(value, "x").zfill(_hex_width(f.n))


def from_hex(digits: str, n: int = None) -> FiniteFunction:
    digits = digits.strip()
    if not _HEX_DIGITS.match(digits):
        raise ParseError(f"'{digits}' ist keine Hexzahl.")
    if n is None:
        n = _arity_from_hex_width(len(digits))
    elif len(digits) != _hex_width(n):
        raise ParseError(f"Für n = {n} werden {_hex_width(n)} Hexziffern erwartet, gefunden {len(digits)}.")
    size = 1 << n
    value = int(digits, 16)
    if value >> size:
        raise ParseError(f"Hexwert hat mehr als {size} Bits.")
    return FiniteFunction(2, 2, n, [value >> (size - 1 - row) & 1 for row in range(size)])


def _parse_header(line: str) -> tuple:
    fields = line.split()
    if len(fields) != 3 or not all(_DECIMAL.fullmatch(field) for field in fields):
        raise ParseError(f"Kopfzeile '{line}' hat nicht die Form 'k n b'.")
    k, n, b = (int(field) for field in fields)
    if k < 1 or n < 1 or b < 1:
        raise ParseError(f"Kopfzeile '{line}': k, n und b müssen positiv sein.")
    return k, n, b


def parse_function_text(text: str) -> FiniteFunction:
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if not lines:
        raise ParseError("Die Datei enthält keine Funktion.")

    if lines[0].lower().startswith(HEX_PREFIX):
        if len(lines) != 1:
            raise ParseError("Nach der Hexzeile darf nichts mehr folgen.")
        return from_hex(lines[0][len(HEX_PREFIX):])

    k, n, b = _parse_header(lines[0])
    body = lines[1:]
    if body and body[0].lower().startswith(HEX_PREFIX):
        if (k, b) != (2, 2) or len(body) != 1:
            raise ParseError("Die Hexform ist nur für k = b = 2 und als einzelne Zeile erlaubt.")
        return from_hex(body[0][len(HEX_PREFIX):], n)

    tokens = " ".join(body).split()
    if not all(_DECIMAL.fullmatch(token) for token in tokens):
        raise ParseError("Tabellenwerte müssen nichtnegative Dezimalzahlen sein.")
    values = [int(token) for token in tokens]
    if len(values) != k ** n:
        raise ParseError(f"Es werden {k ** n} Werte erwartet, gefunden {len(values)}.")
    if any(v >= b for v in values):
        raise ParseError(f"Tabellenwerte müssen kleiner als b = {b} sein.")
    return FiniteFunction(k, b, n, values)


def read_function_file(path: str) -> FiniteFunction:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except (OSError, UnicodeDecodeError) as e:
        raise ParseError(f"Datei '{path}' konnte nicht gelesen werden: {e}") from e
    return parse_function_text(text)


def format_function(f: FiniteFunction, hex_form: bool = False) -> str:
    """Normalform einer Funktionsdatei; eine Zeile je Belegung von x1..x_{n-1}."""
    header = f"{f.k} {f.n} {f.b}"
    if hex_form:
        return f"{header}\n{HEX_PREFIX}{to_hex(f)}\n"
    values = f.table.tolist()
    width = f.k if f.n > 1 else len(values)
    rows = [" ".join(str(v) for v in values[start:start + width]) for start in range(0, len(values), width)]
    return "\n".join([header, *rows]) + "\n"


def write_function_file(path: str, f: FiniteFunction, hex_form: bool = False):
    """Schreibt atomar über eine temporäre Datei."""
    temp_file = path + ".tmp"
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    try:
        with open(temp_file, "w", encoding="utf-8") as handle:
            handle.write(format_function(f, hex_form))
        os.replace(temp_file, path)
    finally:
        if os.path.exists(temp_file):
            os.remove(temp_file)
