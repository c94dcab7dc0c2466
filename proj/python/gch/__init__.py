"""Python bindings for the characteristic-coordinate shallow-water solvers.

The heavy lifting lives in the compiled extension ``_gch``; this package
re-exports its public names.
"""

from ._gch import (  # noqa: F401
    EnergyReport,
    EtaState,
    EulerianField,
    EulerianGrid,
    GchError,
    GchParams,
    GridSpec,
    InitialData,
    LagrangianState,
    NonlinearitySpec,
    Snapshot,
    TestFunction,
    Trajectory,
    balance_law_residual,
    breaking_diagnostics,
    default_battery,
    eta_from_initial,
    eulerian_from_initial,
    eval_u_at,
    field_energy,
    forward_transform,
    helmholtz_invert,
    initial_gaussian,
    initial_peakon,
    initial_steep,
    initial_zero,
    integrate,
    integrate_eta,
    integrate_eulerian,
    make_preset,
    reconstruct,
    reconstruct_eta,
    suggest_dt,
    to_field,
    weak_form_residual,
)

__all__ = [name for name in dir() if not name.startswith("_")]
