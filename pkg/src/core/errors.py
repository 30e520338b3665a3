"""
Exception hierarchy for the slice enumeration engine
"""


class EngineError(Exception):
    """Base class for every error raised by the engine"""


class DomainError(EngineError, ValueError):
    """An argument lies outside the range an operation supports"""


class VariableMismatchError(EngineError):
    """Two series or polynomials in different variables were combined"""


class NotInvertibleError(EngineError, ZeroDivisionError):
    """A coefficient that has to be a unit is not invertible"""


class ValuationError(EngineError):
    """A series does not have the valuation an operation requires"""


class PoleError(EngineError):
    """A rational function has a genuine pole at epsilon = 0"""

    def __init__(self, pole_order: int, message: str = ""):
        self.pole_order = pole_order
        super().__init__(message or f"pole of order {pole_order} at epsilon = 0")


class ConvergenceError(EngineError):
    """A fixed-point iteration did not settle within its sweep budget"""


class DivisibilityError(EngineError):
    """A bracket multiplied by G/t is not divisible by t"""


class BranchError(EngineError):
    """The tracked algebraic branch left the real line or met its companion root"""


class SingularExpansionError(EngineError):
    """Odd or epsilon^2 coefficients that must vanish do not"""


class OracleError(EngineError):
    """A brute-force map construction violated one of its invariants"""
