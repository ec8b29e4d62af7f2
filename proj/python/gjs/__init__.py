"""Generalized Heisenberg algebra, generalized sl(2) and two-oscillator realizations."""

from ._gjs import (
    CharFn,
    GhaRep,
    GjsError,
    Gsl2Rep,
    JsMapRep,
    build_gha,
    build_gsl2,
    build_jsmap,
    build_jsmap_full_grid,
    cut_condition_solve,
    figure,
    gauss_numbers,
    periodic_condition_solve,
    run_cli,
    verify_pairing_identity,
)

__all__ = [
    "CharFn",
    "GhaRep",
    "GjsError",
    "Gsl2Rep",
    "JsMapRep",
    "build_gha",
    "build_gsl2",
    "build_jsmap",
    "build_jsmap_full_grid",
    "cut_condition_solve",
    "figure",
    "gauss_numbers",
    "periodic_condition_solve",
    "run_cli",
    "verify_pairing_identity",
]
