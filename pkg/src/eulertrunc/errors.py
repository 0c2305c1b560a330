"""Exception types shared across the package."""


class InsufficientTableError(ValueError):
    """A prime table does not cover the requested range."""


class ParameterWindowError(ValueError):
    """Sweep parameters fall outside the hypotheses the formulas require."""


class PoleError(ValueError):
    """Evaluation requested at a pole (principal character, or s = 1)."""


class BranchTrackingError(ArithmeticError):
    """Continuation of log L along the real axis could not be trusted."""
