"""Admissible prime patterns, difference-set packings and density bounds."""

from polignac._core import (
    InvariantViolation,
    PackingCertificate,
    PackingMember,
    difference_set,
    enumerate_admissible_diffsets,
    geh_family,
    greedy_regular_packing,
    is_admissible,
    k3_finite_upper_bound,
    lower_bound_density,
    max_disjoint_packing,
    normalize,
    prime_pair_census,
    primes_up_to,
    primorial,
    regular_admissible,
    regular_overlap,
    run_command,
    trivial_upper_bound_density,
)

__version__ = "0.1.0"
__all__ = [name for name in dir() if not name.startswith("_")]
