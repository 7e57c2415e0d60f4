"""
Wertetabellen für Funktionen f: A^n -> B auf endlichen Mengen, mit
wesentlichen Variablen, Substitutionen, Identifikationsminoren und Stelligkeitslücke.

Konvention für die Zeilenordnung: x1 ist die höchstwertige Stelle,
der Zeilenindex eines Tupels ist sum_t x_t * k^(n-t).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    ArityMismatchError,
    DomainMismatchError,
    EssentialArityTooSmallError,
    IndexOutOfRangeError,
    LengthMismatchError,
    SameIndexError,
    SpecInvalidError,
    ValueOutOfRangeError,
)


@lru_cache(maxsize=128)
def _weights(k: int, n: int) -> np.ndarray:
    weights = np.array([k ** (n - t) for t in range(1, n + 1)], dtype=np.int64)
    weights.setflags(write=False)
    return weights


@lru_cache(maxsize=128)
def argument_tuples(k: int, n: int) -> np.ndarray:
    """Alle Argumenttupel aus A^n als (k^n x n)-Matrix in Zeilenordnung."""
    tuples = np.indices((k,) * n, dtype=np.int64).reshape(n, -1).T.copy()
    tuples.setflags(write=False)
    return tuples


def row_indices(k: int, n: int, points: np.ndarray) -> np.ndarray:
    """Zeilenindizes für eine Matrix von Argumenttupeln (eine Zeile pro Tupel)."""
    return np.asarray(points, dtype=np.int64) @ _weights(k, n)


def row_index(k: int, point: Sequence[int]) -> int:
    """Kodiert ein Argumenttupel als Zeilenindex der Wertetabelle."""
    index = 0
    for coordinate in point:
        coordinate = int(coordinate)
        if not 0 <= coordinate < k:
            raise ValueOutOfRangeError(f"Koordinate {coordinate} liegt nicht in {{0, ..., {k - 1}}}.")
        index = index * k + coordinate
    return index


def decode_row(k: int, n: int, index: int) -> tuple:
    """Umkehrung von row_index."""
    if not 0 <= index < k ** n:
        raise ValueOutOfRangeError(f"Zeilenindex {index} liegt außerhalb der Tabelle.")
    return tuple(int(v) for v in argument_tuples(k, n)[index])


@dataclass(frozen=True)
class Substitution:
    """Einfache Variablensubstitution sigma: {1..n} -> {1..m}."""

    source_arity: int
    target_arity: int
    mapping: tuple

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(int(t) for t in self.mapping))
        if len(self.mapping) != self.source_arity:
            raise ArityMismatchError(
                f"Substitution hat {len(self.mapping)} Bilder, erwartet {self.source_arity}."
            )
        if self.target_arity < 1 or any(not 1 <= t <= self.target_arity for t in self.mapping):
            raise IndexOutOfRangeError(
                f"Bilder {self.mapping} liegen nicht in {{1, ..., {self.target_arity}}}."
            )

    @classmethod
    def identity(cls, n: int) -> "Substitution":
        return cls(n, n, tuple(range(1, n + 1)))

    @classmethod
    def identification(cls, n: int, i: int, j: int) -> "Substitution":
        """Ersetzt x_i durch x_j, alle anderen Variablen bleiben stehen."""
        return cls(n, n, tuple(j if t == i else t for t in range(1, n + 1)))

    def then(self, other: "Substitution") -> "Substitution":
        """Komposition: erst self, danach other (t -> other(self(t)))."""
        if other.source_arity != self.target_arity:
            raise ArityMismatchError("Substitutionen sind nicht verkettbar.")
        return Substitution(
            self.source_arity,
            other.target_arity,
            tuple(other.mapping[t - 1] for t in self.mapping),
        )


class FiniteFunction:
    """Explizite Wertetabelle einer Funktion f: A^n -> B mit A = {0..k-1}, B = {0..b-1}."""

    def __init__(self, k: int, b: int, n: int, table: Iterable[int]):
        if k < 1 or b < 1 or n < 1:
            raise ValueOutOfRangeError(f"k, b und n müssen positiv sein (k={k}, b={b}, n={n}).")
        if not isinstance(table, (list, tuple, np.ndarray)):
            table = list(table)
        raw = np.asarray(table).reshape(-1)
        if raw.size and raw.dtype.kind not in "iub":
            raise ValueOutOfRangeError(f"Tabellenwerte müssen ganze Zahlen sein (Typ {raw.dtype}).")
        values = raw.astype(np.int64)
        size = k ** n
        if values.size != size:
            raise LengthMismatchError(f"Tabelle hat {values.size} Einträge, erwartet {size} (= {k}^{n}).")
        if values.min() < 0 or values.max() >= b:
            raise ValueOutOfRangeError(f"Tabellenwerte müssen in {{0, ..., {b - 1}}} liegen.")
        values.setflags(write=False)
        self.k = k
        self.b = b
        self.n = n
        self.table = values

    @property
    def size(self) -> int:
        return self.table.size

    @property
    def is_boolean(self) -> bool:
        return self.k == 2 and self.b == 2

    @property
    def cube(self) -> np.ndarray:
        """Die Tabelle als n-dimensionales Feld, Achse t-1 gehört zu x_t."""
        return self.table.reshape((self.k,) * self.n)

    def values(self) -> tuple:
        return tuple(int(v) for v in self.table)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteFunction):
            return NotImplemented
        return (self.k, self.b, self.n) == (other.k, other.b, other.n) and bool(
            np.array_equal(self.table, other.table)
        )

    def __hash__(self) -> int:
        return hash((self.k, self.b, self.n, self.table.tobytes()))

    def __repr__(self) -> str:
        return f"FiniteFunction(k={self.k}, b={self.b}, n={self.n}, table={self.table.tolist()})"

    def _check_index(self, i: int):
        if not 1 <= i <= self.n:
            raise IndexOutOfRangeError(f"Variablenindex {i} liegt nicht in {{1, ..., {self.n}}}.")

    def evaluate(self, point: Sequence[int]) -> int:
        if len(point) != self.n:
            raise ArityMismatchError(f"Punkt hat {len(point)} Koordinaten, erwartet {self.n}.")
        return int(self.table[row_index(self.k, point)])

    def is_essential(self, i: int) -> bool:
        """x_i ist wesentlich, wenn zwei nur in Koordinate i verschiedene Punkte verschiedene Werte haben."""
        self._check_index(i)
        cube = self.cube
        return bool(np.any(cube != cube.take([0], axis=i - 1)))

    @cached_property
    def essential_variables(self) -> tuple:
        return tuple(i for i in range(1, self.n + 1) if self.is_essential(i))

    @property
    def ess(self) -> int:
        return len(self.essential_variables)

    def is_constant(self) -> bool:
        return bool(np.all(self.table == self.table[0]))

    def substitute(self, substitution: Substitution) -> "FiniteFunction":
        """g(x_1..x_m) = f(x_sigma(1), ..., x_sigma(n))."""
        if substitution.source_arity != self.n:
            raise ArityMismatchError(
                f"Substitution erwartet Stelligkeit {substitution.source_arity}, Funktion hat {self.n}."
            )
        positions = np.asarray(substitution.mapping, dtype=np.int64) - 1
        rows = row_indices(self.k, self.n, argument_tuples(self.k, substitution.target_arity)[:, positions])
        return FiniteFunction(self.k, self.b, substitution.target_arity, self.table[rows])

    def identify(self, i: int, j: int) -> "FiniteFunction":
        """Identifikationsminor f_{i<-j}; die Stelligkeit bleibt n, x_i wird fiktiv."""
        self._check_index(i)
        self._check_index(j)
        if i == j:
            raise SameIndexError(f"Variable x{i} kann nicht mit sich selbst identifiziert werden.")
        return self.substitute(Substitution.identification(self.n, i, j))

    def restrict(self, j: int, c: int) -> "FiniteFunction":
        """Setzt x_j konstant auf c; Ergebnis hat Stelligkeit n - 1."""
        self._check_index(j)
        if not 0 <= c < self.k:
            raise ValueOutOfRangeError(f"Konstante {c} liegt nicht in {{0, ..., {self.k - 1}}}.")
        if self.n == 1:
            raise ArityMismatchError("Eine einstellige Funktion kann nicht weiter eingeschränkt werden.")
        return FiniteFunction(self.k, self.b, self.n - 1, self.cube.take(c, axis=j - 1).reshape(-1))

    def permute(self, permutation: Sequence[int]) -> "FiniteFunction":
        if sorted(permutation) != list(range(1, self.n + 1)):
            raise SpecInvalidError(f"{tuple(permutation)} ist keine Permutation von 1..{self.n}.")
        return self.substitute(Substitution(self.n, self.n, tuple(permutation)))


def make_function(k: int, b: int, n: int, table: Iterable[int]) -> FiniteFunction:
    return FiniteFunction(k, b, n, table)


@dataclass(frozen=True)
class GapReport:
    """ess, essl und Lücke einer Funktion samt einem Minor, der essl erreicht."""

    ess: int
    essl: int
    gap: int
    witness: tuple
    minor: FiniteFunction = field(compare=False, repr=False)


def gap_report(f: FiniteFunction) -> GapReport:
    variables = f.essential_variables
    if len(variables) < 2:
        raise EssentialArityTooSmallError(
            f"Die Lücke ist erst ab zwei wesentlichen Variablen definiert (ess = {len(variables)})."
        )
    best_ess, witness, best_minor = -1, None, None
    # permutations einer sortierten Folge laufen lexikographisch über (i, j)
    for i, j in itertools.permutations(variables, 2):
        minor = f.identify(i, j)
        if minor.ess > best_ess:
            best_ess, witness, best_minor = minor.ess, (i, j), minor
            if best_ess == len(variables) - 1:
                break
    return GapReport(
        ess=len(variables),
        essl=best_ess,
        gap=len(variables) - best_ess,
        witness=witness,
        minor=best_minor,
    )


def leq(f: FiniteFunction, g: FiniteFunction) -> bool:
    """f <= g: f entsteht aus g durch einfache Variablensubstitution."""
    if (f.k, f.b) != (g.k, g.b):
        raise DomainMismatchError("Funktionen haben verschiedene Grundmengen.")
    for mapping in itertools.product(range(1, f.n + 1), repeat=g.n):
        if g.substitute(Substitution(g.n, f.n, mapping)) == f:
            return True
    return False


def equivalent(f: FiniteFunction, g: FiniteFunction) -> bool:
    return leq(f, g) and leq(g, f)


def strictly_below(f: FiniteFunction, g: FiniteFunction) -> bool:
    return leq(f, g) and not leq(g, f)


def essl_by_substitution(f: FiniteFunction) -> int:
    """essl f direkt aus der Definition: Maximum von ess g über alle g < f.

    Zählt jede Substitution sigma: {1..n} -> {1..m} mit 1 <= m <= n auf;
    mehr Zielvariablen liefern keine größere wesentliche Stelligkeit.
    """
    if f.ess < 2:
        raise EssentialArityTooSmallError(f"essl ist erst ab ess >= 2 sinnvoll (ess = {f.ess}).")
    best = 0
    for m in range(1, f.n + 1):
        for mapping in itertools.product(range(1, m + 1), repeat=f.n):
            g = f.substitute(Substitution(f.n, m, mapping))
            # g <= f gilt nach Konstruktion
            if g.ess > best and not leq(f, g):
                best = g.ess
    return best
