"""Hamiltonian treatment of the nonlocal oscillator L = -(m/alpha^2) q(t) q(t+alpha)."""

from .core import (
    BudgetExceeded,
    CVars,
    DivergentZeroPoint,
    LambdaField,
    ModeCoeffs,
    NonPositiveParameter,
    NonRealEnergy,
    NonRealTrajectory,
    OccupationState,
    PhysicalParams,
    RealityViolation,
    Trajectory,
    extend_field,
    validate_params,
)

__version__ = "0.1.0"
