"""Self-dual Yang-Mills seeds, Backlund transformations and instanton charge."""

from ._sdym import (
    Error,
    ResidualEntry,
    ResidualReport,
    Seed,
    backlund_charge_density,
    charge_density,
    identity_catalogue,
    radial_profile,
    total_charge,
    transform,
    verify,
)

__all__ = [
    "Error",
    "ResidualEntry",
    "ResidualReport",
    "Seed",
    "backlund_charge_density",
    "charge_density",
    "identity_catalogue",
    "radial_profile",
    "total_charge",
    "transform",
    "verify",
]
