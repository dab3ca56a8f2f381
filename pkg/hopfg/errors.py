"""Exception hierarchy for the Hopf G-coalgebra engine"""


class HopfGError(Exception):
    """Base class for every error raised by hopfg"""


# Scalars and linear algebra

class DivisionByZero(HopfGError, ZeroDivisionError):
    pass


class ModulusMismatch(HopfGError, ValueError):
    """Two cyclotomic numbers from different fields met without an explicit embed"""


class NoSolution(HopfGError):
    """Linear system is inconsistent"""


class SingularMatrix(HopfGError):
    pass


class ShapeMismatch(HopfGError, ValueError):
    pass


# Hopf data

class WindowIncomplete(HopfGError):
    """A grade needed by a computation is outside the family's window"""

    def __init__(self, missing):
        self.missing = tuple(missing)
        super().__init__(f"grades outside the window: {', '.join(map(str, self.missing))}")


class PivotNotInvertible(HopfGError):
    pass


class GradeMismatch(HopfGError, ValueError):
    pass


# Integrals

class IntegralSpaceDimension(HopfGError):
    def __init__(self, grade, dimension):
        self.grade = grade
        self.dimension = dimension
        super().__init__(f"integral space at grade {grade} has dimension {dimension}, expected 1")


class InconsistentNormalization(HopfGError):
    pass


class NotUnimodular(HopfGError):
    pass


class NoNonvanishingWitness(HopfGError):
    pass


class RelationFails(HopfGError):
    pass


# Modules and traces

class NotIntertwiner(HopfGError):
    pass


class NotEndomorphismOfP(HopfGError):
    pass


class NotIdempotent(HopfGError):
    pass


class AlphaIntegralSingular(HopfGError, ValueError):
    """The weight is an integer, so V_alpha is not simple"""


class DegenerateEigenvalues(HopfGError):
    pass


# Input

class InputError(HopfGError):
    """Bad input data or configuration (CLI exit code 2)"""


class SchemaError(InputError):
    pass


class ConfigError(InputError):
    pass
