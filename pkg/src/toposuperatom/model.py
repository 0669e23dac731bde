"""Validated parameter records shared by every other module.

All rates and energies share one implicit unit (figures set kappa = 1);
there is no unit-conversion layer.  Every record is an immutable value
object, safe to share between threads.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, fields, replace

import numpy as np

from .errors import InvalidParam

__all__ = [
    "LatticeParams",
    "DissipationParams",
    "DriveSpec",
    "MicroscopicParams",
    "DisorderSpec",
    "ValidatedConfig",
    "LeftEdge",
    "RightEdge",
    "BulkIndex",
    "CustomVector",
    "validate",
]


def _require_finite(obj, names):
    for name in names:
        value = getattr(obj, name)
        if not math.isfinite(float(value)):
            raise InvalidParam(name, f"must be finite, got {value!r}")


@dataclass(frozen=True)
class LatticeParams:
    """Tight-binding numbers of the array: diagonal +/-delta per cell,
    parallel coupling t_p, cross coupling t_c, N unit cells."""

    delta: float
    t_p: float
    t_c: float
    n_cells: int

    def __post_init__(self):
        _require_finite(self, ("delta", "t_p", "t_c"))
        if int(self.n_cells) != self.n_cells or self.n_cells < 2:
            raise InvalidParam("n_cells", f"must be an integer >= 2, got {self.n_cells}")
        object.__setattr__(self, "n_cells", int(self.n_cells))
        if self.t_p == 0.0:
            raise InvalidParam("t_p", "must be nonzero (delta_c = 2|t_p| sets the phase diagram)")

    @property
    def delta_c(self) -> float:
        """Critical splitting 2|t_p| of the topological transition."""
        return 2.0 * abs(self.t_p)

    @property
    def topological(self) -> bool:
        return abs(self.delta) < self.delta_c


@dataclass(frozen=True)
class DissipationParams:
    """Local decay rates gamma_a/gamma_b, intra-cell correlated decay
    gamma_ab, and cavity linewidth kappa."""

    gamma_a: float
    gamma_b: float
    gamma_ab: float
    kappa: float

    def __post_init__(self):
        _require_finite(self, ("gamma_a", "gamma_b", "gamma_ab", "kappa"))
        if self.gamma_a < 0:
            raise InvalidParam("gamma_a", "must be >= 0")
        if self.gamma_b < 0:
            raise InvalidParam("gamma_b", "must be >= 0")
        if self.kappa <= 0:
            raise InvalidParam("kappa", "must be > 0")
        if self.gamma_ab**2 > self.gamma_a * self.gamma_b:
            raise InvalidParam(
                "gamma_ab",
                f"gamma_ab^2 = {self.gamma_ab**2:g} exceeds gamma_a*gamma_b = "
                f"{self.gamma_a * self.gamma_b:g} (per-cell decay block not psd)",
            )


class _Target:
    """Base for drive-target tags."""

    __slots__ = ()


@dataclass(frozen=True)
class LeftEdge(_Target):
    pass


@dataclass(frozen=True)
class RightEdge(_Target):
    pass


@dataclass(frozen=True)
class BulkIndex(_Target):
    """Index into the ascending-sorted single-excitation spectrum."""

    index: int


@dataclass(frozen=True)
class CustomVector(_Target):
    """Explicit drive pattern; normalized before scaling by xi_scale."""

    vector: tuple

    def __init__(self, vector):
        arr = np.asarray(vector, dtype=float)
        if not np.all(np.isfinite(arr)):
            raise InvalidParam("vector", "must be finite")
        object.__setattr__(self, "vector", tuple(arr.tolist()))

    def as_array(self) -> np.ndarray:
        return np.asarray(self.vector, dtype=float)


@dataclass(frozen=True)
class DriveSpec:
    """Cavity drive: target mode, overall coupling magnitude, pump strength,
    and the cavity-detuning grid to scan."""

    target: _Target
    xi_scale: float = 0.01
    eta: float = 0.01
    detuning_grid: tuple = (0.0,)

    def __post_init__(self):
        _require_finite(self, ("xi_scale", "eta"))
        if self.xi_scale <= 0:
            raise InvalidParam("xi_scale", "must be > 0")
        if self.eta <= 0:
            raise InvalidParam("eta", "must be > 0")
        grid = tuple(float(x) for x in self.detuning_grid)
        if not all(math.isfinite(x) for x in grid):
            raise InvalidParam("detuning_grid", "must be finite")
        object.__setattr__(self, "detuning_grid", grid)
        if not isinstance(self.target, _Target):
            raise InvalidParam("target", f"unknown target {self.target!r}")


@dataclass(frozen=True)
class MicroscopicParams:
    """Coupler-level parameters feeding the dispersive (Schrieffer-Wolff)
    reduction.  lambda0 = 2*pi*c/omega0 with c = 1 in the shared units."""

    omega0: float
    gamma0: float
    d_ab: float
    g_a: float
    g_b: float
    g_bar_a: float
    detuning_a: float
    detuning_b: float

    def __post_init__(self):
        _require_finite(
            self,
            ("omega0", "gamma0", "d_ab", "g_a", "g_b", "g_bar_a", "detuning_a", "detuning_b"),
        )
        if self.omega0 <= 0:
            raise InvalidParam("omega0", "must be > 0")
        if self.gamma0 < 0:
            raise InvalidParam("gamma0", "must be >= 0")
        guard = 0.2 * min(abs(self.detuning_a), abs(self.detuning_b))
        for name in ("g_a", "g_b", "g_bar_a"):
            if abs(getattr(self, name)) >= guard:
                raise InvalidParam(
                    name,
                    f"|{name}| = {abs(getattr(self, name)):g} breaks the dispersive guard "
                    f"0.2*min(|detuning_a|,|detuning_b|) = {guard:g}",
                )

    @property
    def lambda0(self) -> float:
        return 2.0 * math.pi / self.omega0


@dataclass(frozen=True)
class DisorderSpec:
    """Uniform on-site disorder of half-width epsilon, drawn per sample from
    the counter-based substream (seed, sample_index)."""

    epsilon: float
    n_samples: int
    seed: int

    def __post_init__(self):
        _require_finite(self, ("epsilon",))
        if self.epsilon < 0:
            raise InvalidParam("epsilon", "must be >= 0")
        if int(self.n_samples) != self.n_samples or self.n_samples < 1:
            raise InvalidParam("n_samples", f"must be an integer >= 1, got {self.n_samples}")
        object.__setattr__(self, "n_samples", int(self.n_samples))
        object.__setattr__(self, "seed", int(self.seed))


@dataclass(frozen=True)
class ValidatedConfig:
    """Jointly validated lattice + dissipation record with derived quantities."""

    lattice: LatticeParams
    dissipation: DissipationParams
    delta_c: float
    topological: bool

    def to_dict(self) -> dict:
        out = {}
        for f in fields(self.lattice):
            out[f.name] = getattr(self.lattice, f.name)
        for f in fields(self.dissipation):
            out[f.name] = getattr(self.dissipation, f.name)
        out["delta_c"] = self.delta_c
        out["topological"] = self.topological
        return out


def validate(lattice, dissipation=None) -> ValidatedConfig:
    """Validate a (lattice, dissipation) pair into a ValidatedConfig.

    Idempotent: passing an existing ValidatedConfig returns an equal config.
    The dataclass constructors enforce the per-field invariants; this adds
    the derived quantities.
    """
    if isinstance(lattice, ValidatedConfig) and dissipation is None:
        return validate(lattice.lattice, lattice.dissipation)
    if not isinstance(lattice, LatticeParams):
        raise InvalidParam("lattice", f"expected LatticeParams, got {type(lattice).__name__}")
    if not isinstance(dissipation, DissipationParams):
        raise InvalidParam(
            "dissipation", f"expected DissipationParams, got {type(dissipation).__name__}"
        )
    # round-trip through replace() re-runs __post_init__ on current field values
    lattice = replace(lattice)
    dissipation = replace(dissipation)
    return ValidatedConfig(
        lattice=lattice,
        dissipation=dissipation,
        delta_c=lattice.delta_c,
        topological=lattice.topological,
    )
