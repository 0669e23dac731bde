"""Exception types shared across the toolkit."""


class TopoSuperatomError(Exception):
    """Base class for all toolkit errors."""


class InvalidParam(TopoSuperatomError, ValueError):
    """A parameter record violates one of its invariants.

    Carries the offending field name in ``field``.
    """

    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")


class GapClosed(TopoSuperatomError):
    """Bloch gap below tolerance; winding number undefined at a transition."""


class EigensolverFailure(TopoSuperatomError):
    """Dense eigensolver did not converge (numerical pathology, not physics)."""


class DegenerateCoupling(TopoSuperatomError):
    """t_c = +/- t_p degenerates one root quadratic to a linear equation."""


class NotTopological(TopoSuperatomError):
    """Edge-state request outside the topological phase (|delta| >= 2|t_p|)."""


class NoDecayingBranch(TopoSuperatomError):
    """Neither root pair lies inside the unit circle; no normalizable edge state."""


class NoZeroModes(TopoSuperatomError):
    """Mid-gap states not separated from the bulk by at least 3x their own |E|."""


class SingularSystem(TopoSuperatomError):
    """Linear solve residual exceeded tolerance; response is at a dark pole."""


class Unstable(TopoSuperatomError):
    """Drift matrix has an eigenvalue with nonnegative real part."""


class NoTransition(TopoSuperatomError):
    """No gamma_eff = gamma crossing exists on the scanned interval."""


class BadIndex(TopoSuperatomError, IndexError):
    """Bulk target index outside the sorted spectrum."""
