"""Exception hierarchy.

Everything raised by the library derives from :class:`PowerfulError`, which is
itself a ``ValueError`` so plain ``except ValueError`` callers keep working.
"""


class PowerfulError(ValueError):
    pass


class OutOfRangeMask(PowerfulError):
    pass


class DuplicateMember(PowerfulError):
    pass


class EmptySetMissing(PowerfulError):
    """Rank requested on a multiset with no copy of the empty set."""


class NotPowerful(PowerfulError):
    pass


class DivisionFailure(PowerfulError):
    pass


class NotASet(PowerfulError):
    """The normalized multiset has an entry outside {0, 1}."""

    def __init__(self, mask: int, multiplicity: int):
        super().__init__(f"mask {mask:#b} has normalized multiplicity {multiplicity}")
        self.mask = mask
        self.multiplicity = multiplicity


class GroundTooLarge(PowerfulError):
    pass


class ElementOutOfRange(PowerfulError):
    pass


class ElementAlreadyPresent(PowerfulError):
    pass


class OverlappingSpec(PowerfulError):
    pass


class EmptySystem(PowerfulError):
    """Linearity queries need the empty set to be a member."""


class NonIntegerRank(PowerfulError):
    pass


class NotFound(PowerfulError):
    pass


class UnknownTheoremId(PowerfulError):
    pass


class ParseError(PowerfulError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
