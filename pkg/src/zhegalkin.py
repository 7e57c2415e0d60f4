"""
Zhegalkin-Polynome (algebraische Normalform) Boolescher Funktionen.

Ein Polynom ist eine Menge von Monomen, jedes Monom eine Menge von
Variablenindizes; das leere Monom ist das konstante Glied.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .errors import IndexOutOfRangeError, NotBooleanError, ParseError, SameIndexError
from .finite_function import FiniteFunction, argument_tuples

_VARIABLE = re.compile(r"x(\d+)")


@dataclass(frozen=True)
class ZhegalkinPolynomial:
    """Multilineares Polynom über GF(2) in den Variablen x1..x_arity."""

    arity: int
    monomials: frozenset

    def __post_init__(self):
        monomials = frozenset(frozenset(int(v) for v in m) for m in self.monomials)
        for monomial in monomials:
            if any(not 1 <= v <= self.arity for v in monomial):
                raise IndexOutOfRangeError(
                    f"Monom {sorted(monomial)} enthält Variablen außerhalb von 1..{self.arity}."
                )
        object.__setattr__(self, "monomials", monomials)

    @property
    def constant(self) -> int:
        return 1 if frozenset() in self.monomials else 0

    @property
    def degree(self) -> int:
        """Größe des größten Monoms; das Nullpolynom hat wie die Konstanten Grad 0."""
        return max((len(m) for m in self.monomials), default=0)

    @property
    def occurring_variables(self) -> tuple:
        return tuple(sorted(set().union(*self.monomials))) if self.monomials else ()

    def occurs(self, i: int) -> bool:
        if not 1 <= i <= self.arity:
            raise IndexOutOfRangeError(f"Variablenindex {i} liegt nicht in 1..{self.arity}.")
        return any(i in m for m in self.monomials)

    def sorted_monomials(self) -> list:
        """Kanonische Reihenfolge: absteigende Größe, dann lexikographisch."""
        return sorted((tuple(sorted(m)) for m in self.monomials), key=lambda m: (-len(m), m))

    def __str__(self) -> str:
        return format_polynomial(self)


def _mobius(values: np.ndarray, n: int) -> np.ndarray:
    """Schmetterlings-Transformation über GF(2) in O(n 2^n); sie ist ihre eigene Inverse."""
    coeffs = np.array(values, dtype=np.uint8)
    for h in range(n):
        view = coeffs.reshape(-1, 2, 1 << h)
        view[:, 1, :] ^= view[:, 0, :]
    return coeffs


def _monomial_index(arity: int, monomial) -> int:
    return sum(1 << (arity - i) for i in monomial)


def to_anf(f: FiniteFunction) -> ZhegalkinPolynomial:
    if not f.is_boolean:
        raise NotBooleanError(f"Zhegalkin-Polynome gibt es nur für k = b = 2 (k={f.k}, b={f.b}).")
    coeffs = _mobius(f.table, f.n)
    rows = argument_tuples(2, f.n)
    monomials = (frozenset((np.flatnonzero(rows[t]) + 1).tolist()) for t in np.flatnonzero(coeffs))
    return ZhegalkinPolynomial(f.n, frozenset(monomials))


def from_anf(p: ZhegalkinPolynomial) -> FiniteFunction:
    dense = np.zeros(1 << p.arity, dtype=np.uint8)
    for monomial in p.monomials:
        dense[_monomial_index(p.arity, monomial)] = 1
    return FiniteFunction(2, 2, p.arity, _mobius(dense, p.arity))


@lru_cache(maxsize=8)
def _subset_matrix(n: int) -> np.ndarray:
    indices = np.arange(1 << n)
    return ((indices[None, :] & indices[:, None]) == indices[None, :]).astype(np.int64)


def anf_by_definition(f: FiniteFunction) -> ZhegalkinPolynomial:
    """Koeffizient von S = XOR von f über alle Punkte, deren Träger in S liegt."""
    if not f.is_boolean:
        raise NotBooleanError("Zhegalkin-Polynome gibt es nur für k = b = 2.")
    coeffs = (_subset_matrix(f.n) @ f.table) % 2
    rows = argument_tuples(2, f.n)
    return ZhegalkinPolynomial(
        f.n, frozenset(frozenset((np.flatnonzero(rows[t]) + 1).tolist()) for t in np.flatnonzero(coeffs))
    )


def anf_identify(p: ZhegalkinPolynomial, i: int, j: int) -> ZhegalkinPolynomial:
    """Setzt x_i := x_j in jedes Monom ein; gleiche Monome heben sich über GF(2) auf."""
    if i == j:
        raise SameIndexError(f"Variable x{i} kann nicht mit sich selbst identifiziert werden.")
    for index in (i, j):
        if not 1 <= index <= p.arity:
            raise IndexOutOfRangeError(f"Variablenindex {index} liegt nicht in 1..{p.arity}.")
    result = set()
    for monomial in p.monomials:
        image = (monomial - {i}) | {j} if i in monomial else monomial
        result ^= {image}
    return ZhegalkinPolynomial(p.arity, frozenset(result))


def format_polynomial(p: ZhegalkinPolynomial) -> str:
    if not p.monomials:
        return "0"
    return " + ".join(
        "*".join(f"x{i}" for i in monomial) if monomial else "1" for monomial in p.sorted_monomials()
    )


def parse_polynomial(text: str, arity: Optional[int] = None) -> ZhegalkinPolynomial:
    """Liest die Textform von format_polynomial; doppelte Monome heben sich auf."""
    monomials = set()
    seen = set()
    for term in text.split("+"):
        term = term.strip()
        if not term:
            raise ParseError(f"Leerer Summand in '{text}'.")
        variables = set()
        vanishes = False
        for factor in term.split("*"):
            factor = factor.strip()
            if factor == "1":
                continue
            if factor == "0":
                vanishes = True
                continue
            match = _VARIABLE.fullmatch(factor)
            if not match or int(match.group(1)) < 1:
                raise ParseError(f"Unbekannter Faktor '{factor}' in '{text}'.")
            variables.add(int(match.group(1)))
        seen |= variables
        if not vanishes:
            monomials ^= {frozenset(variables)}
    needed = max(seen, default=1)
    if arity is None:
        arity = needed
    elif arity < needed:
        raise ParseError(f"Polynom verwendet x{needed}, Stelligkeit ist aber {arity}.")
    return ZhegalkinPolynomial(arity, frozenset(monomials))
