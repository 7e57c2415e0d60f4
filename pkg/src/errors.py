"""
Fehlerklassen für die Analyse von Funktionen auf endlichen Mengen.

Alle fachlichen Fehler leiten von ArityGapError ab, damit die Kommandozeile
sie an einer Stelle abfangen und auf Exit-Codes abbilden kann.
"""


class ArityGapError(Exception):
    """Basisklasse für alle fachlichen Fehler dieses Pakets."""


class LengthMismatchError(ArityGapError):
    """Die Wertetabelle hat nicht genau k^n Einträge."""


class ValueOutOfRangeError(ArityGapError):
    """Ein Wert oder eine Koordinate liegt außerhalb des erlaubten Bereichs."""


class IndexOutOfRangeError(ArityGapError):
    """Ein Variablenindex liegt nicht in {1, ..., n}."""


class SameIndexError(ArityGapError):
    """Eine Variable soll mit sich selbst identifiziert werden."""


class ArityMismatchError(ArityGapError):
    """Substitution und Funktion passen in der Stelligkeit nicht zusammen."""


class DomainMismatchError(ArityGapError):
    """Zwei Funktionen haben verschiedene Definitions- oder Wertebereiche."""


class EssentialArityTooSmallError(ArityGapError):
    """Die Lücke ist erst ab zwei wesentlichen Variablen definiert."""


class NotBooleanError(ArityGapError):
    """Die Operation ist nur für k = b = 2 definiert."""


class SpecInvalidError(ArityGapError):
    """Eine Generator- oder Populationsbeschreibung ist ungültig."""


class GammaNotSurjectiveError(SpecInvalidError):
    """Die Abbildung gamma: B -> A ist nicht surjektiv."""


class PhiNotInjectiveError(SpecInvalidError):
    """Die Abbildung phi: A -> B ist nicht injektiv."""


class HypothesisNotMetError(ArityGapError):
    """Die Voraussetzung des geprüften Satzes ist nicht erfüllt."""


class NotTotallyEssentialError(ArityGapError):
    """Die Funktion hängt nicht von allen ihren Variablen ab."""


class ParseError(ArityGapError):
    """Eine Funktionsdatei oder ein Polynomtext ist fehlerhaft."""


class BudgetExceededError(ArityGapError):
    """Eine Aufzählung würde das konfigurierte Budget überschreiten."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class TheoremViolationError(ArityGapError):
    """Eine Suche, deren Erfolg ein Satz garantiert, ist erfolglos geblieben."""

    def __init__(self, message: str, function=None):
        super().__init__(message)
        self.function = function
