"""Minor-closed labelled graph classes: exact counts, component laws,
Boltzmann sampling and saddle-point asymptotics."""

from ._core import (
    counts,
    distribution,
    membership,
    sample_g6,
    hayman_log,
    closed_form_log,
    connectivity,
    component_prediction,
    pd_rho,
    gumbel_cdf,
    set_precision,
)

__all__ = [
    "counts",
    "distribution",
    "membership",
    "sample_g6",
    "hayman_log",
    "closed_form_log",
    "connectivity",
    "component_prediction",
    "pd_rho",
    "gumbel_cdf",
    "set_precision",
]
