"""
Erzeugt Funktionen für Beispiele und Prüfläufe: quasi-lineare Funktionen,
Hebungen auf größere Grundmengen, Funktionen deren Identifikationsminoren
alle konstant sind, sowie aufgezählte und zufällige Wertetabellen.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

from .errors import (
    BudgetExceededError,
    GammaNotSurjectiveError,
    PhiNotInjectiveError,
    SpecInvalidError,
    ValueOutOfRangeError,
)
from .finite_function import FiniteFunction, argument_tuples, row_indices
from .prng import SplitMix64, splitmix64
from .zhegalkin import ZhegalkinPolynomial

DEFAULT_BUDGET = 1 << 24
DEFAULT_TABLE_BUDGET = 1 << 20


@dataclass(frozen=True)
class QuasiLinearSpec:
    """f = g(h_1(x_1) xor ... xor h_n(x_n)) mit h_i: A -> {0,1}, g: {0,1} -> A."""

    k: int
    n: int
    h_maps: tuple
    g_map: tuple

    def __post_init__(self):
        object.__setattr__(self, "h_maps", tuple(tuple(int(v) for v in h) for h in self.h_maps))
        object.__setattr__(self, "g_map", tuple(int(v) for v in self.g_map))
        if self.k < 1 or self.n < 1:
            raise SpecInvalidError(f"k und n müssen positiv sein (k={self.k}, n={self.n}).")
        if len(self.h_maps) != self.n:
            raise SpecInvalidError(f"Es werden {self.n} Abbildungen h_i erwartet, gefunden {len(self.h_maps)}.")
        for index, h in enumerate(self.h_maps, start=1):
            if len(h) != self.k or any(v not in (0, 1) for v in h):
                raise SpecInvalidError(f"h_{index} muss {self.k} Werte aus {{0, 1}} haben.")
        if len(self.g_map) != 2 or any(not 0 <= v < self.k for v in self.g_map):
            raise SpecInvalidError(f"g braucht genau zwei Werte aus {{0, ..., {self.k - 1}}}.")


@dataclass(frozen=True)
class LiftSpec:
    """g = phi(f(gamma(x_1), ..., gamma(x_n))) auf B = {0, ..., len(gamma)-1}."""

    base: FiniteFunction
    gamma: tuple
    phi: tuple

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple(int(v) for v in self.gamma))
        object.__setattr__(self, "phi", tuple(int(v) for v in self.phi))
        k, size = self.base.k, len(self.gamma)
        if self.base.b > k:
            raise SpecInvalidError("Die Werte der Basisfunktion müssen in A liegen (b <= k).")
        if size < k:
            raise SpecInvalidError(f"|B| = {size} ist kleiner als |A| = {k}.")
        if any(not 0 <= v < k for v in self.gamma):
            raise SpecInvalidError("gamma bildet nicht nach A ab.")
        if set(self.gamma) != set(range(k)):
            raise GammaNotSurjectiveError(f"gamma = {self.gamma} trifft nicht alle Elemente von A.")
        if len(self.phi) != k or any(not 0 <= v < size for v in self.phi):
            raise SpecInvalidError(f"phi braucht {k} Werte aus {{0, ..., {size - 1}}}.")
        if len(set(self.phi)) != k:
            raise PhiNotInjectiveError(f"phi = {self.phi} ist nicht injektiv.")

    @property
    def target_size(self) -> int:
        return len(self.gamma)


def quasi_linear(spec: QuasiLinearSpec) -> FiniteFunction:
    points = argument_tuples(spec.k, spec.n)
    h = np.array(spec.h_maps, dtype=np.int64)
    bits = h[np.arange(spec.n)[None, :], points]
    parity = bits.sum(axis=1) % 2
    return FiniteFunction(spec.k, spec.k, spec.n, np.array(spec.g_map, dtype=np.int64)[parity])


def lift(spec: LiftSpec) -> FiniteFunction:
    f, size = spec.base, spec.target_size
    gamma = np.array(spec.gamma, dtype=np.int64)
    phi = np.array(spec.phi, dtype=np.int64)
    rows = row_indices(f.k, f.n, gamma[argument_tuples(size, f.n)])
    return FiniteFunction(size, size, f.n, phi[f.table[rows]])


def random_function(
    k: int, b: int, n: int, seed: int, stream: int = 0, table_budget: int = DEFAULT_TABLE_BUDGET
) -> FiniteFunction:
    """Gleichverteilte Tabelle aus splitmix64; stream wählt einen disjunkten Zählerbereich."""
    size = k ** n
    if size > table_budget:
        raise BudgetExceededError(f"Tabelle mit {size} Zeilen übersteigt das Budget von {table_budget}.")
    values = splitmix64(seed, stream * size, size) % np.uint64(b)
    return FiniteFunction(k, b, n, values.astype(np.int64))


def function_from_index(k: int, b: int, n: int, index: int) -> FiniteFunction:
    """Die index-te Tabelle; Zeile 0 ist die höchstwertige Stelle zur Basis b."""
    size = k ** n
    if not 0 <= index < b ** size:
        raise ValueOutOfRangeError(f"Tabellennummer {index} liegt außerhalb von 0..{b}^{size}-1.")
    digits = []
    for _ in range(size):
        index, digit = divmod(index, b)
        digits.append(digit)
    return FiniteFunction(k, b, n, digits[::-1])


def all_functions(k: int, b: int, n: int, start: int = 0, stop: Optional[int] = None) -> Iterator[FiniteFunction]:
    stop = b ** (k ** n) if stop is None else stop
    for index in range(start, stop):
        yield function_from_index(k, b, n, index)


def count_quadratic_polynomials(n: int) -> int:
    """Anzahl der Zhegalkin-Polynome vom Grad genau 2 in n Variablen."""
    return ((1 << (n * (n - 1) // 2)) - 1) << (n + 1)


def quadratic_polynomial_from_index(n: int, index: int) -> ZhegalkinPolynomial:
    """Obere Bits: nichtleere Auswahl quadratischer Monome, untere n+1 Bits: lineare Glieder und Konstante."""
    if n < 2 or not 0 <= index < count_quadratic_polynomials(n):
        raise ValueOutOfRangeError(f"Kein quadratisches Polynom Nummer {index} in {n} Variablen.")
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    quadratic_mask = (index >> (n + 1)) + 1
    linear_mask = index & ((1 << (n + 1)) - 1)
    monomials = [frozenset(pair) for bit, pair in enumerate(pairs) if quadratic_mask >> bit & 1]
    monomials += [frozenset((i,)) for i in range(1, n + 1) if linear_mask >> (i - 1) & 1]
    if linear_mask >> n & 1:
        monomials.append(frozenset())
    return ZhegalkinPolynomial(n, frozenset(monomials))


def random_gap_two_quasi_linear_spec(rng: SplitMix64, k: int, n: int) -> QuasiLinearSpec:
    """Mindestens zwei gleiche nichtkonstante h_i, die übrigen konstant, g injektiv."""
    if k < 2 or n < 2:
        raise SpecInvalidError("Quasi-lineare Funktionen mit Lücke 2 brauchen k >= 2 und n >= 2.")
    mask = 1 + rng.below((1 << k) - 2)
    shared = tuple(mask >> a & 1 for a in range(k))
    active = set(rng.shuffled(range(n))[: 2 + rng.below(n - 1)])
    h_maps = [shared if i in active else (rng.below(2),) * k for i in range(n)]
    g0 = rng.below(k)
    g1 = rng.below(k - 1)
    if g1 >= g0:
        g1 += 1
    return QuasiLinearSpec(k, n, tuple(h_maps), (g0, g1))


def random_lift_spec(rng: SplitMix64, f: FiniteFunction, max_size: int = 5) -> LiftSpec:
    k = f.k
    size = k + rng.below(max(max_size - k, 0) + 1)
    gamma = rng.shuffled(list(range(k)) + [rng.below(k) for _ in range(size - k)])
    phi = rng.shuffled(range(size))[:k]
    return LiftSpec(f, tuple(gamma), tuple(phi))


def is_total_collapse(f: FiniteFunction) -> bool:
    """ess f = n und jeder Identifikationsminor ist konstant."""
    if f.ess != f.n:
        return False
    # f_{i<-j} und f_{j<-i} sind beide genau dann konstant, wenn f auf x_i = x_j konstant ist
    return all(f.identify(i, j).is_constant() for i, j in itertools.combinations(range(1, f.n + 1), 2))


@dataclass
class CollapseSearchResult:
    k: int
    n: int
    mode: str
    examined: int = 0
    witnesses: list = field(default_factory=list)

    @property
    def exhaustive(self) -> bool:
        return self.mode == "exhaustive"


def find_total_collapse_witnesses(
    k: int,
    n: int,
    limit: Optional[int] = None,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    samples: Optional[int] = None,
    logger: Optional[logging.Logger] = None,
) -> CollapseSearchResult:
    """Sucht Operationen auf k Elementen mit ess = n, deren Identifikationsminoren alle konstant sind.

    Passt der volle Raum k^(k^n) ins Budget, wird er vollständig aufgezählt.
    Sonst wird nur unter Tabellen gesucht, die auf allen Tupeln mit einer
    wiederholten Koordinate denselben Wert haben: Für n >= 3 schneiden sich
    je zwei Diagonalen x_i = x_j, jeder Zeuge hat also diese Gestalt.
    """
    log = logger or logging.getLogger(__name__)
    if k < 1 or n < 1:
        raise SpecInvalidError(f"k und n müssen positiv sein (k={k}, n={n}).")
    size = k ** n

    def search(mode, count, build):
        result = CollapseSearchResult(k, n, mode)
        for index in range(count):
            candidate = build(index)
            result.examined += 1
            if is_total_collapse(candidate):
                result.witnesses.append(candidate)
                if limit is not None and len(result.witnesses) >= limit:
                    break
        log.info(
            f"Suche nach Zeugen (k={k}, n={n}, Modus {mode}): "
            f"{len(result.witnesses)} gefunden, {result.examined} Tabellen geprüft."
        )
        return result

    if k ** size <= budget:
        return search("exhaustive", k ** size, lambda index: function_from_index(k, k, n, index))

    points = argument_tuples(k, n)
    injective_rows = np.array([r for r in range(size) if len(set(points[r].tolist())) == n], dtype=np.int64)

    def build(constant, free_values):
        table = np.full(size, constant, dtype=np.int64)
        table[injective_rows] = free_values
        return FiniteFunction(k, k, n, table)

    reduced = k ** (injective_rows.size + 1)
    if reduced <= budget:
        def from_reduced_index(index):
            digits = []
            for _ in range(injective_rows.size + 1):
                index, digit = divmod(index, k)
                digits.append(digit)
            return build(digits[0], digits[1:])

        return search("reduced", reduced, from_reduced_index)

    if samples is None or samples > budget:
        raise BudgetExceededError(
            f"Suchraum k^{injective_rows.size + 1} übersteigt das Budget; Stichprobenumfang fehlt oder ist zu groß.",
            partial=CollapseSearchResult(k, n, "sampled"),
        )
    rng = SplitMix64(seed)
    return search(
        "sampled", samples, lambda _: build(rng.below(k), rng.integers(k, injective_rows.size))
    )
