"""Exception hierarchy shared by every module of the package."""


class PeriodicProductError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(PeriodicProductError):
    """Input that cannot be turned into a valid object (CLI exit code 2)."""


class ParseError(InvalidInput):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class NotAGroup(InvalidInput):
    """A Cayley table violates a group axiom.

    ``axiom`` is one of ``closure``, ``identity``, ``associativity`` or
    ``inverse``; ``witness`` is the offending tuple of element indices.
    """

    def __init__(self, axiom, witness, message=""):
        self.axiom = axiom
        self.witness = tuple(witness)
        text = f"not a group: {axiom} fails at {self.witness}"
        if message:
            text += f" ({message})"
        super().__init__(text)


class StrictViolation(InvalidInput):
    """Exponent outside the range covered by the theorems (odd n >= 665)."""


class BadReference(InvalidInput):
    """A letter refers to a factor or element that does not exist."""


class FamilyMismatch(PeriodicProductError):
    """Two words from different factor families were combined."""


class BoundExceeded(PeriodicProductError):
    """An enumeration would exceed its configured size or work budget."""


class NotNormal(PeriodicProductError):
    pass


class NotCertified(PeriodicProductError):
    """A defining relation was requested for a word that is not certified."""


class CriterionFails(PeriodicProductError):
    pass


class SideConditionViolated(PeriodicProductError):
    def __init__(self, word, condition):
        self.word = word
        self.condition = condition
        super().__init__(f"{word}: side condition violated: {condition}")


class InvariantViolation(PeriodicProductError):
    """An internal cross-check failed; indicates a bug (CLI exit code 3)."""
