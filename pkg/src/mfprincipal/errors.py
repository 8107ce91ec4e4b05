"""Exception types shared across the package."""


class MFError(Exception):
    """Base class for all package errors."""


class InvalidRank(MFError, ValueError):
    pass


class NotDominant(MFError, ValueError):
    pass


class NotRestricted(MFError, ValueError):
    pass


class PBelowCoxeter(MFError, ValueError):
    pass


class Inconclusive(MFError):
    """The Jantzen data does not pin down the composition factors."""


class NegativeRemainder(MFError, ValueError):
    """Peeling irreducible A1 characters left a negative multiplicity."""


class NegativeMultiplicity(MFError, ValueError):
    """The n_d/s_d recurrence produced a negative factor multiplicity."""


class CharacterUnavailable(MFError):
    pass


class SeparationViolated(MFError, ValueError):
    pass


class NotApplicable(MFError):
    pass


class IngestError(MFError, ValueError):
    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(f"line {n}: {msg}" for n, msg in self.problems))
