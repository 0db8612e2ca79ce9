"""Exception and warning types shared across the package."""


class GammaPoleError(ValueError):
    """Argument sits on (or within 1e-12 of) a pole of the gamma function."""


class SeriesConvergenceError(RuntimeError):
    """Power series did not converge within the term budget."""


class NodeError(ValueError):
    """A wave function vanishes where its logarithmic derivative is needed."""


class TanPoleError(ValueError):
    """tan(2qa) is singular at the requested wavenumber."""


class JostPoleError(ValueError):
    """The Jost function vanishes, so s = F*/F or the phase is undefined."""


class NoConvergenceError(RuntimeError):
    """Newton iteration exhausted its budget."""


class ClassificationError(ValueError):
    """A converged root is neither a bound state nor a fourth-quadrant resonance."""


class GridTooCoarseError(ValueError):
    """Sample grid does not straddle a matching point."""


class AsymptoticDivergenceWarning(RuntimeWarning):
    """Asymptotic series terms started growing before the requested order."""


class InsufficientRootsWarning(RuntimeWarning):
    """Fewer roots were found in the search box than requested."""


class UnwrapAmbiguityWarning(RuntimeWarning):
    """Phase grid too coarse: a per-sample step is close to the unwrap period."""
