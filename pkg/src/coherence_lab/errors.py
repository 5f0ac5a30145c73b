"""Exception hierarchy shared by every module of the package."""


class CoherenceLabError(Exception):
    """Base class for all library errors."""


class InvalidState(CoherenceLabError, ValueError):
    """Amplitude vector or density matrix fails its construction invariants."""


class HermiticityViolation(InvalidState):
    pass


class DimensionMismatch(CoherenceLabError, ValueError):
    pass


class IndexOutOfRange(CoherenceLabError, IndexError):
    pass


class EigendecompositionFailure(CoherenceLabError, ArithmeticError):
    pass


class NotPureState(CoherenceLabError, ValueError):
    """Raised when a pure-state-only quantity is requested for a mixed state."""

    def __init__(self, purity, tol=1e-9):
        self.purity = float(purity)
        self.tol = tol
        super().__init__(
            f"state is not pure: purity={self.purity:.12g} < 1 - {tol:g}; "
            "the principal-diagonal quantifier is undefined for mixed states"
        )


class PurityDrift(CoherenceLabError, ArithmeticError):
    """Integration lost purity beyond tolerance (step size too coarse)."""

    def __init__(self, area, purity, tol=1e-7):
        self.area = float(area)
        self.purity = float(purity)
        self.tol = tol
        super().__init__(
            f"purity drifted to {self.purity:.12g} at pulse area {self.area:.6g} "
            f"(allowed 1 +/- {tol:g}); increase the number of steps"
        )
