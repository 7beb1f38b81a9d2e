"""Exception family shared across the library."""


class QmetError(Exception):
    """Base class for all library errors."""


class IndeterminateForm(QmetError):
    """Raised for arithmetic with no defined value, e.g. infinity monus infinity."""


class UnknownPoint(QmetError):
    """A point name not present in the carrier of a space."""


class UnknownElement(QmetError):
    """An element name not present in a poset or basis."""


class NoOracle(QmetError):
    """No closed-form way-below rule is registered for this space kind."""


class InvalidSup(QmetError):
    """The supplied ball is not the least upper bound of the family."""


class NotAPartialOrder(QmetError):
    """A relation failed reflexivity, antisymmetry or transitivity."""


class NotAnAbstractBasis(QmetError):
    """A strict relation failed transitivity or interpolation.

    Carries the violated instance in ``args[1]`` as
    ``("transitivity", (a, b, c))`` or ``("interpolation", (subset, y))``.
    """


class TooLarge(QmetError):
    """Input exceeds the configured enumeration bound."""


class IllegalMove(QmetError):
    """A game move violated the containment rules."""
