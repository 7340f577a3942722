"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Bad input: wrong parity, non-prime parameter, asymmetric subset, etc."""


class GuardError(RuntimeError):
    """A size/combinatorics guard was exceeded."""


class ConvergenceError(RuntimeError):
    """The Jacobi eigensolver did not converge within the sweep budget."""

    def __init__(self, residual: float, sweeps: int):
        super().__init__(
            f"Jacobi iteration did not converge after {sweeps} sweeps "
            f"(off-diagonal residual ratio {residual:.3e})"
        )
        self.residual = residual
        self.sweeps = sweeps


class FormulaMismatchError(RuntimeError):
    """Closed-form spectrum disagrees with the brute-force eigensolver."""


class RouteDisagreementError(RuntimeError):
    """The two independent exceptional/ordinary classification routes disagree."""
