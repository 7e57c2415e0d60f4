"""
Entscheidet die Stelligkeitslücke Boolescher Funktionen in geschlossener Form.

Eine Funktion mit mindestens zwei wesentlichen Variablen hat genau dann
Lücke 2, wenn ihr Zhegalkin-Polynom (eingeschränkt auf die vorkommenden
Variablen) eine der vier Sonderformen hat; sonst ist die Lücke 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .errors import EssentialArityTooSmallError
from .finite_function import FiniteFunction
from .zhegalkin import ZhegalkinPolynomial, to_anf


class FormTag(str, Enum):
    LINEAR_PARITY = "LinearParity"  # x_i1 + ... + x_in + c
    AND_PLUS_VAR = "AndPlusVar"  # x_i x_j + x_i + c
    TRIANGLE_MAJ = "TriangleMaj"  # x_i x_j + x_i x_k + x_j x_k + c
    TRIANGLE_MAJ_PLUS_TWO = "TriangleMajPlusTwo"  # ... + x_i + x_j + c
    NOT_SPECIAL = "NotSpecial"


@dataclass(frozen=True)
class SpecialForm:
    tag: FormTag
    participants: tuple
    c: int

    @property
    def implied_gap(self) -> int:
        return 1 if self.tag is FormTag.NOT_SPECIAL else 2


def _triangle(i, j, k) -> set:
    return {frozenset((i, j)), frozenset((i, k)), frozenset((j, k))}


# Rolle der Indizes wie in den Formeln oben; nur Formen mit genau so vielen
# vorkommenden Variablen wie Rollen können passen.
_TEMPLATES = (
    (FormTag.AND_PLUS_VAR, 2, lambda i, j: {frozenset((i, j)), frozenset((i,))}),
    (FormTag.TRIANGLE_MAJ, 3, _triangle),
    (
        FormTag.TRIANGLE_MAJ_PLUS_TWO,
        3,
        lambda i, j, k: _triangle(i, j, k) | {frozenset((i,)), frozenset((j,))},
    ),
)


def classify(p: ZhegalkinPolynomial) -> SpecialForm:
    variables = p.occurring_variables
    if len(variables) < 2:
        raise EssentialArityTooSmallError(
            f"Klassifikation braucht mindestens zwei vorkommende Variablen (gefunden: {len(variables)})."
        )
    c = p.constant
    body = set(p.monomials) - {frozenset()}

    if p.degree == 1:
        return SpecialForm(FormTag.LINEAR_PARITY, variables, c)

    for tag, roles, template in _TEMPLATES:
        if roles != len(variables):
            continue
        for assignment in itertools.permutations(variables):
            if template(*assignment) == body:
                return SpecialForm(tag, assignment, c)

    return SpecialForm(FormTag.NOT_SPECIAL, (), c)


def gap_via_classifier(f: FiniteFunction) -> int:
    return classify(to_anf(f)).implied_gap
