"""Supersymmetric quantum mechanics toolkit."""

from ._susyqm import (
    SusyqmError,
    UsageError,
    check_superalgebra,
    heun_coefficients,
    hydrogen_levels,
    lpt_first_order,
    partner_potentials,
    run_table,
    scatter,
    shoot_level,
    variational_energies,
)

__all__ = [
    "SusyqmError",
    "UsageError",
    "check_superalgebra",
    "heun_coefficients",
    "hydrogen_levels",
    "lpt_first_order",
    "partner_potentials",
    "run_table",
    "scatter",
    "shoot_level",
    "variational_energies",
]
