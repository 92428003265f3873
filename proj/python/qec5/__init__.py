"""Five-qubit-code syndrome extraction: Python face of the C++ core."""

from ._qec5 import (
    Rng,
    Schedule,
    StateVector,
    all_case_ids,
    build_schedule,
    check_syndrome_table,
    encode,
    fidelity,
    logical_one,
    logical_zero,
    parse_schedule,
    run_case,
    sweep_summary,
    syndrome_table,
)

__all__ = [
    "Rng",
    "Schedule",
    "StateVector",
    "all_case_ids",
    "build_schedule",
    "check_syndrome_table",
    "encode",
    "fidelity",
    "logical_one",
    "logical_zero",
    "parse_schedule",
    "run_case",
    "sweep_summary",
    "syndrome_table",
]
