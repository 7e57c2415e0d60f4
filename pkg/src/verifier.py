"""
Prüft die Aussagen über wesentliche Variablen und Stelligkeitslücken durch
vollständige Aufzählung oder reproduzierbare Stichproben.

Jeder Satz ist als Regel hinterlegt: wie ein Prüfling gezogen wird, welche
Voraussetzung er erfüllen muss und wie er geprüft wird. Ein Lauf zerlegt den
Indexbereich der Population in zusammenhängende Abschnitte, die seriell oder
in einem multiprocessing-Pool abgearbeitet und in Indexreihenfolge
zusammengeführt werden.
"""

from __future__ import annotations

import itertools
import logging
import math
import multiprocessing
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional

import pandas as pd

from .errors import (
    BudgetExceededError,
    HypothesisNotMetError,
    NotBooleanError,
    NotTotallyEssentialError,
    SpecInvalidError,
    TheoremViolationError,
)
from .finite_function import FiniteFunction, GapReport, essl_by_substitution, gap_report
from .gap_classifier import gap_via_classifier
from .generators import (
    DEFAULT_BUDGET,
    count_quadratic_polynomials,
    find_total_collapse_witnesses,
    function_from_index,
    is_total_collapse,
    lift,
    quadratic_polynomial_from_index,
    quasi_linear,
    random_function,
    random_gap_two_quasi_linear_spec,
    random_lift_spec,
)
from .prng import SplitMix64, derive_seed
from .zhegalkin import from_anf

OK = "ok"
VIOLATION = "violation"
SKIPPED = "skipped"

MAX_DOMAIN_SIZE = 4
MAX_ARITY = 6


class TheoremId(str, Enum):
    THM1 = "thm1"
    SALOMAA_MAIN = "thmsalomaamain"
    GEN = "thmgen"
    SALOMAA_AUX = "thmsalomaaaux"
    KPLUS1 = "lemkplus1"
    STR = "thmstr"
    DEG2 = "lemdeg2"
    QUASI_LINEAR = "quasilinear"
    LIFT = "lift"
    ESSL_FIDELITY = "esslfidelity"
    GAP3 = "gap3"


@dataclass(frozen=True)
class Population:
    """Vollständig (count is None) oder als Stichprobe mit count Elementen und seed."""

    k: int
    b: int
    n: int
    count: Optional[int] = None
    seed: int = 0
    reject: bool = True
    max_rejections: int = 1000

    def __post_init__(self):
        if not 1 <= self.k <= MAX_DOMAIN_SIZE:
            raise SpecInvalidError(f"k = {self.k} wird nicht unterstützt (1 <= k <= {MAX_DOMAIN_SIZE}).")
        if not 1 <= self.n <= MAX_ARITY:
            raise SpecInvalidError(f"n = {self.n} wird nicht unterstützt (1 <= n <= {MAX_ARITY}).")
        if self.b < 1:
            raise SpecInvalidError(f"b = {self.b} muss positiv sein.")
        if self.count is not None and self.count < 0:
            raise SpecInvalidError("Der Stichprobenumfang darf nicht negativ sein.")

    @property
    def exhaustive(self) -> bool:
        return self.count is None

    def describe(self) -> dict:
        description = {"kind": "exhaustive" if self.exhaustive else "sampled", "k": self.k, "b": self.b, "n": self.n}
        if not self.exhaustive:
            description.update(count=self.count, seed=self.seed, reject=self.reject)
        return description


@dataclass(frozen=True)
class Certificate:
    """Eine auffällige Funktion (Verletzung oder Zeuge) samt Zusatzangaben."""

    index: Optional[int]
    k: int
    b: int
    n: int
    table: tuple
    details: dict = field(default_factory=dict)

    @classmethod
    def of(cls, index: Optional[int], f: FiniteFunction, details: Optional[dict] = None) -> "Certificate":
        return cls(index, f.k, f.b, f.n, f.values(), details or {})


@dataclass(frozen=True)
class Outcome:
    index: int
    status: str
    gap: Optional[int] = None
    certificate: Optional[Certificate] = None


@dataclass
class SweepReport:
    theorem: TheoremId
    population: dict
    exhaustive: bool
    examined: int = 0
    checked: int = 0
    skipped: int = 0
    violations: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    gap_histogram: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    elapsed: float = 0.0
    outcomes: list = field(default_factory=list, repr=False)

    @property
    def ok(self) -> bool:
        return not self.violations


# --- Einzelprüfungen -------------------------------------------------------


def _within_general_bound(report: GapReport, k: int) -> bool:
    return report.essl >= report.ess - k


def check_gap_bound(f: FiniteFunction) -> bool:
    """Mehr als k wesentliche Variablen: es gibt einen Minor mit mindestens ess f - k davon."""
    if f.ess <= f.k:
        raise HypothesisNotMetError(f"ess f = {f.ess} ist nicht größer als k = {f.k}.")
    return _within_general_bound(gap_report(f), f.k)


def check_boolean_bound(f: FiniteFunction) -> bool:
    if not f.is_boolean:
        raise NotBooleanError(f"Die Schranke gilt für Boolesche Funktionen (k={f.k}, b={f.b}).")
    return gap_report(f).gap in (1, 2)


def find_restriction_witness(f: FiniteFunction) -> tuple:
    """Erstes (j, c), für das f mit x_j = c von allen übrigen n - 1 Variablen abhängt."""
    if f.ess != f.n:
        raise NotTotallyEssentialError(f"Nur {f.ess} von {f.n} Variablen sind wesentlich.")
    if f.n < 2:
        raise HypothesisNotMetError("Die Einschränkung braucht mindestens zwei Variablen.")
    for j in range(1, f.n + 1):
        for c in range(f.k):
            if f.restrict(j, c).ess == f.n - 1:
                return j, c
    raise TheoremViolationError("Keine Einschränkung behält alle übrigen Variablen wesentlich.", function=f)


def check_kplus1_lemma(f: FiniteFunction) -> tuple:
    """Paar i < j <= k+1, nach dessen Identifikation eine der Variablen x1..x_{k+1} wesentlich bleibt."""
    k = f.k
    if not f.ess == f.n > k:
        raise HypothesisNotMetError(f"Verlangt ess f = n > k (ess={f.ess}, n={f.n}, k={k}).")
    window = range(1, k + 2)
    for i, j in itertools.combinations(window, 2):
        minor = f.identify(i, j)
        if any(minor.is_essential(t) for t in window):
            return i, j
    raise TheoremViolationError("Kein Paar unter x1..x_{k+1} erfüllt das Lemma.", function=f)


# --- Regeln je Satz --------------------------------------------------------


@dataclass(frozen=True)
class _Rule:
    hypothesis: Callable
    check: Callable
    boolean_only: bool = False
    exhaustive_size: Optional[Callable] = None
    draw_exhaustive: Optional[Callable] = None
    draw_sampled: Optional[Callable] = None


def _table_count(population: Population) -> int:
    return population.b ** (population.k ** population.n)


def _table_by_index(population: Population, index: int) -> FiniteFunction:
    return function_from_index(population.k, population.b, population.n, index)


def _random_table(population: Population, index: int, attempt: int) -> FiniteFunction:
    return random_function(
        population.k, population.b, population.n, derive_seed(population.seed, index), stream=attempt
    )


def _sample_rng(population: Population, index: int, attempt: int) -> SplitMix64:
    return SplitMix64(derive_seed(derive_seed(population.seed, index), attempt))


def _check_str(f):
    report = gap_report(f)
    ok = gap_via_classifier(f) == report.gap
    return ok, report.gap, None if ok else (f, {"gap": report.gap})


def _check_salomaa_main(f):
    report = gap_report(f)
    ok = report.gap in (1, 2)
    return ok, report.gap, None if ok else (f, {"gap": report.gap})


def _check_gen(f):
    report = gap_report(f)
    ok = _within_general_bound(report, f.k)
    return ok, report.gap, None if ok else (f, {"ess": report.ess, "essl": report.essl})


def _check_search(search):
    def check(f):
        try:
            search(f)
        except TheoremViolationError:
            return False, None, (f, {})
        return True, None, None

    return check


def _check_deg2(p):
    f = from_anf(p)
    report = gap_report(f)
    ok = report.gap == 1
    return ok, report.gap, None if ok else (f, {"gap": report.gap})


def _check_quasi_linear(spec):
    f = quasi_linear(spec)
    report = gap_report(f)
    ok = report.gap == 2
    details = {"h": [list(h) for h in spec.h_maps], "g": list(spec.g_map), "gap": report.gap}
    return ok, report.gap, None if ok else (f, details)


def _check_lift(spec):
    base, lifted = spec.base, lift(spec)
    ok = lifted.ess == base.ess
    gap = None
    if ok and base.ess >= 2:
        gap = gap_report(base).gap
        ok = gap_report(lifted).gap == gap
    details = {"gamma": list(spec.gamma), "phi": list(spec.phi)}
    return ok, gap, None if ok else (base, details)


def _check_essl_fidelity(f):
    report = gap_report(f)
    oracle = essl_by_substitution(f)
    ok = report.essl == oracle
    return ok, report.gap, None if ok else (f, {"essl": report.essl, "oracle": oracle})


def _check_gap3(f):
    report = gap_report(f)
    if report.gap < 3:
        return True, report.gap, None
    # Zertifikat unabhängig nachrechnen
    again = gap_report(FiniteFunction(f.k, f.b, f.n, f.values()))
    minor = f.identify(*report.witness)
    consistent = again == report and minor == report.minor and minor.ess == report.essl
    details = {"ess": report.ess, "essl": report.essl, "gap": report.gap, "witness": list(report.witness)}
    return consistent, report.gap, (f, details)


def _draw_quasi_linear(population, index, attempt):
    return random_gap_two_quasi_linear_spec(_sample_rng(population, index, attempt), population.k, population.n)


def _draw_lift(population, index, attempt):
    rng = _sample_rng(population, index, attempt)
    k, n = population.k, population.n
    base = FiniteFunction(k, k, n, rng.integers(k, k ** n))
    return random_lift_spec(rng, base)


def _draw_quadratic(population, index, attempt):
    rng = _sample_rng(population, index, attempt)
    return quadratic_polynomial_from_index(population.n, rng.below(count_quadratic_polynomials(population.n)))


_TABLES = dict(exhaustive_size=_table_count, draw_exhaustive=_table_by_index, draw_sampled=_random_table)

_RULES = {
    TheoremId.STR: _Rule(lambda f: f.ess >= 2, _check_str, boolean_only=True, **_TABLES),
    TheoremId.SALOMAA_MAIN: _Rule(lambda f: f.ess >= 2, _check_salomaa_main, boolean_only=True, **_TABLES),
    TheoremId.GEN: _Rule(lambda f: f.ess > f.k, _check_gen, **_TABLES),
    TheoremId.SALOMAA_AUX: _Rule(
        lambda f: f.n >= 2 and f.ess == f.n, _check_search(find_restriction_witness), **_TABLES
    ),
    TheoremId.KPLUS1: _Rule(lambda f: f.ess == f.n > f.k, _check_search(check_kplus1_lemma), **_TABLES),
    TheoremId.ESSL_FIDELITY: _Rule(lambda f: f.ess >= 2, _check_essl_fidelity, **_TABLES),
    TheoremId.DEG2: _Rule(
        lambda p: len(p.occurring_variables) >= 4,
        _check_deg2,
        boolean_only=True,
        exhaustive_size=lambda population: count_quadratic_polynomials(population.n),
        draw_exhaustive=lambda population, index: quadratic_polynomial_from_index(population.n, index),
        draw_sampled=_draw_quadratic,
    ),
    TheoremId.QUASI_LINEAR: _Rule(lambda spec: True, _check_quasi_linear, draw_sampled=_draw_quasi_linear),
    TheoremId.LIFT: _Rule(lambda spec: True, _check_lift, draw_sampled=_draw_lift),
    TheoremId.GAP3: _Rule(lambda f: f.ess >= f.k + 1, _check_gap3, draw_sampled=_random_table),
}


def _evaluate(rule: _Rule, population: Population, index: int) -> Outcome:
    if population.exhaustive:
        subject = rule.draw_exhaustive(population, index)
        if not rule.hypothesis(subject):
            return Outcome(index, SKIPPED)
    else:
        attempts = population.max_rejections if population.reject else 1
        for attempt in range(attempts):
            subject = rule.draw_sampled(population, index, attempt)
            if rule.hypothesis(subject):
                break
        else:
            return Outcome(index, SKIPPED)
    ok, gap, notable = rule.check(subject)
    certificate = Certificate.of(index, *notable) if notable else None
    return Outcome(index, OK if ok else VIOLATION, gap, certificate)


def _run_range(task) -> list:
    """Arbeitspaket eines Prozesses: (Satz, Population, Start, Ende)."""
    theorem, population, start, stop = task
    rule = _RULES[TheoremId(theorem)]
    return [_evaluate(rule, population, index) for index in range(start, stop)]


def _run_outcomes(theorem: TheoremId, population: Population, size: int, workers: int) -> list:
    chunk = max(1, math.ceil(size / max(1, workers * 4)))
    tasks = [(theorem.value, population, start, min(start + chunk, size)) for start in range(0, size, chunk)]
    if workers > 1 and len(tasks) > 1:
        with multiprocessing.Pool(workers) as pool:
            parts = pool.map(_run_range, tasks)
    else:
        parts = [_run_range(task) for task in tasks]
    return [outcome for part in parts for outcome in part]


def outcomes_frame(outcomes: list) -> pd.DataFrame:
    """Ein Datensatz je geprüftem Element: Index, Status und Lücke."""
    return pd.DataFrame(
        [(o.index, o.status, o.gap) for o in outcomes], columns=["index", "status", "gap"]
    )


def _summarize(theorem: TheoremId, population: Population, outcomes: list) -> SweepReport:
    frame = outcomes_frame(outcomes)
    counts = frame["status"].value_counts()
    gaps = frame.loc[frame["status"] != SKIPPED, "gap"].dropna().astype(int)
    return SweepReport(
        theorem=theorem,
        population=population.describe(),
        exhaustive=population.exhaustive,
        examined=len(outcomes),
        checked=int(counts.get(OK, 0) + counts.get(VIOLATION, 0)),
        skipped=int(counts.get(SKIPPED, 0)),
        violations=[o.certificate for o in outcomes if o.status == VIOLATION],
        witnesses=[o.certificate for o in outcomes if o.status == OK and o.certificate is not None],
        gap_histogram={int(g): int(c) for g, c in gaps.value_counts().sort_index().items()},
        outcomes=outcomes,
    )


def _sweep_total_collapse(population: Population, budget: int, limit: Optional[int], log) -> SweepReport:
    if population.b != population.k:
        raise SpecInvalidError("Zeugen für konstante Identifikationsminoren sind Operationen (b = k).")
    result = find_total_collapse_witnesses(
        population.k,
        population.n,
        limit=limit,
        budget=budget,
        seed=population.seed,
        samples=population.count,
        logger=log,
    )
    description = {**population.describe(), "kind": result.mode}
    if result.mode != "sampled":
        description.pop("count", None)
    report = SweepReport(
        TheoremId.THM1,
        description,
        exhaustive=result.exhaustive,
        examined=result.examined,
        checked=result.examined,
        notes=[f"mode={result.mode}"],
    )
    for f in result.witnesses:
        certificate = Certificate.of(None, f, {"ess": f.ess})
        (report.witnesses if is_total_collapse(f) else report.violations).append(certificate)
    complete = result.mode != "sampled" and (limit is None or len(result.witnesses) < limit)
    if population.n <= population.k and complete and not report.witnesses:
        report.violations.append(
            Certificate(None, population.k, population.k, population.n, (), {"reason": "no witness exists"})
        )
    return report


def sweep(
    theorem,
    population: Population,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    limit: Optional[int] = None,
    logger: Optional[logging.Logger] = None,
) -> SweepReport:
    """Prüft einen Satz auf einer Population; gleiche Eingaben liefern gleiche Berichte (bis auf elapsed)."""
    log = logger or logging.getLogger(__name__)
    theorem = TheoremId(theorem)
    started = time.perf_counter()

    if theorem is TheoremId.THM1:
        report = _sweep_total_collapse(population, budget, limit, log)
    else:
        rule = _RULES[theorem]
        if rule.boolean_only and (population.k, population.b) != (2, 2):
            raise NotBooleanError(f"'{theorem.value}' gilt nur für Boolesche Funktionen (k = b = 2).")
        if population.exhaustive:
            if rule.draw_exhaustive is None:
                raise SpecInvalidError(f"'{theorem.value}' ist nur als Stichprobe (--count) möglich.")
            size = rule.exhaustive_size(population)
            if size > budget:
                raise BudgetExceededError(
                    f"Vollständige Aufzählung von {size} Elementen übersteigt das Budget von {budget}."
                )
        else:
            size = population.count
        log.info(f"Starte Prüflauf '{theorem.value}' über {size} Elemente ({population.describe()['kind']}).")
        report = _summarize(theorem, population, _run_outcomes(theorem, population, size, workers))

    report.elapsed = time.perf_counter() - started
    log.info(
        f"Prüflauf '{theorem.value}' beendet: {report.checked} geprüft, {report.skipped} übersprungen, "
        f"{len(report.violations)} Verletzungen, {report.elapsed:.2f}s."
    )
    return report


def search_gap3(
    k: int,
    n: int,
    count: int,
    seed: int,
    reject: bool = True,
    max_rejections: int = 1000,
    workers: int = 1,
    logger: Optional[logging.Logger] = None,
) -> SweepReport:
    """Stichprobensuche nach Operationen mit ess >= k+1 und Lücke >= 3; ein Fund ist nicht zu erwarten."""
    if k < 3:
        raise HypothesisNotMetError("Für k = 2 ist die Lücke nach dem Satz von Salomaa höchstens 2.")
    if n < k + 1:
        raise HypothesisNotMetError(f"Die Suche braucht n >= k + 1 = {k + 1} Variablen.")
    population = Population(k, k, n, count=count, seed=seed, reject=reject, max_rejections=max_rejections)
    report = sweep(TheoremId.GAP3, population, workers=workers, logger=logger)
    report.notes.append("found" if report.witnesses else "none found")
    return report
