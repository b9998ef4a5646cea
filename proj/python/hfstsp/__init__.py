"""Exact solvers for the FSTSP restricted to a Hamiltonian cycle."""

from ._hfstsp import (
    Cycle,
    Instance,
    InstanceMeta,
    Operation,
    Point,
    RunStats,
    Solution,
    SolveResult,
    Sortie,
    cycle_length,
    exhaustive_fstsp,
    exhaustive_hfstsp,
    generate,
    max_triples,
    mst_double_tree,
    nearest_neighbor,
    read_instance,
    read_solution,
    solution_time,
    solve,
    two_opt_improve,
    validate_respects,
    write_instance,
    write_solution,
)

__all__ = [
    "Cycle",
    "Instance",
    "InstanceMeta",
    "Operation",
    "Point",
    "RunStats",
    "Solution",
    "SolveResult",
    "Sortie",
    "cycle_length",
    "exhaustive_fstsp",
    "exhaustive_hfstsp",
    "generate",
    "max_triples",
    "mst_double_tree",
    "nearest_neighbor",
    "read_instance",
    "read_solution",
    "solution_time",
    "solve",
    "two_opt_improve",
    "validate_respects",
    "write_instance",
    "write_solution",
]
