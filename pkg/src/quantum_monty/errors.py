"""Exception types raised by the game engine."""


class EngineError(Exception):
    """Base class for all engine errors."""

    code = "EngineError"


class ExpNotConverged(EngineError):
    """Matrix exponential series failed its convergence bound (internal bug)."""

    code = "ExpNotConverged"


class DegenerateSample(EngineError):
    """Random unitary draw hit a near-zero column during orthonormalization."""

    code = "DegenerateSample"


class NonUnitaryStrategy(EngineError):
    """A player strategy matrix is not special-unitary within tolerance."""

    code = "NonUnitaryStrategy"


class NonUnitaryResolution(NonUnitaryStrategy):
    """A strategy spec resolved to a matrix that fails the unitarity check.

    Shares the NonUnitaryStrategy wire code: clients see one code for
    every non-unitary input, however it reached the engine.
    """

    code = "NonUnitaryStrategy"


class GammaOutOfRange(EngineError):
    """Switch parameter outside [0, pi/2]."""

    code = "GammaOutOfRange"


class BadCustomState(EngineError):
    """Custom initial state fails normalization or open-box support rules."""

    code = "BadCustomState"


class IncoherentBranchOnly(EngineError):
    """Incoherent final state is only defined at gamma = 0 or pi/2."""

    code = "IncoherentBranchOnly"
