"""Exception hierarchy.

Every domain error derives from :class:`MetabicayError`, so callers (and the
command line front end) can catch one type and report ``type(exc).__name__``.
"""

from __future__ import annotations


class MetabicayError(ValueError):
    """Base class for all domain errors raised by this package."""


# residue
class NotAUnit(MetabicayError):
    pass


class NoSuchOrder(MetabicayError):
    pass


class InvalidModulus(MetabicayError):
    pass


# metacyclic
class InvalidGroupParams(MetabicayError):
    pass


class ParamsMismatch(MetabicayError):
    pass


class RelationViolated(MetabicayError):
    pass


class NotGenerating(MetabicayError):
    pass


class OrderViolated(MetabicayError):
    pass


class TooLarge(MetabicayError):
    pass


# bicayley
class SpecViolation(MetabicayError):
    pass


class ConditionFailed(MetabicayError):
    pass


class NotAnAutomorphism(MetabicayError):
    pass


# havt
class InvalidParams(MetabicayError):
    pass


class Unsolvable(MetabicayError):
    pass


class InternalMismatch(MetabicayError):
    pass


class WitnessInvalid(MetabicayError):
    pass


# symmetry
class NotASubgroup(MetabicayError):
    pass


# io
class GraphFormatError(MetabicayError):
    pass
