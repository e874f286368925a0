"""Genus-zero Gromov-Witten invariants of complete intersections by torus localization.

Exact values are returned as :class:`fractions.Fraction`.
"""

from ._gwloc import (
    ENGINE_VERSION,
    CITarget,
    DegenerateWeights,
    DimensionMismatch,
    DivisionByZero,
    EngineResult,
    FixedGraph,
    InvalidInput,
    QuinticTableRow,
    UnsupportedDimension,
    WeightIndependenceFailure,
    bps0_from_gw0,
    bps1_from_gw1,
    count_graphs,
    enumerate_graphs,
    expected_dimension,
    genus1_from_reduced,
    gw0_from_bps0,
    gw1_from_bps,
    gw_difference,
    is_calabi_yau,
    lines_closed_form,
    positivity_check,
    reproduce_table1,
    run_cli,
    sample_weights,
    sum_at_weights,
    sum_invariant,
    wdvv_p2,
)

__all__ = [name for name in dir() if not name.startswith("_")]
