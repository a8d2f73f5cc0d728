"""Exact character-degree computations for almost simple groups with
socle PSL(2,q), the two-prime divisibility condition on degree sets,
maximal-subgroup catalogs, and exhaustive classification sweeps."""

from .arithmetic import (
    MAX_VALUE,
    divisors,
    factor,
    is_fermat_prime,
    is_mersenne_prime,
    is_prime,
    omega,
    omega_at_least,
    prime_power_decompose,
    prime_powers_in_range,
    primes_up_to,
    zsigmondy_base2,
)
from .classifier import (
    GroupVerdict,
    SweepReport,
    TableRow,
    brute_force_verdict,
    sweep,
    sweep_report_to_dict,
    table_rows,
    verdict_to_dict,
)
from .facts import FACTS, Fact, FactReport, fact_report_to_dict, verify_all, verify_fact
from .groups import (
    GroupDescriptor,
    OuterExpressionError,
    OuterKind,
    OuterSubgroup,
    PrimePower,
    WhiteParameters,
    character_degrees,
    degree_families,
    enumerate_outer_subgroups,
    epsilon,
    group_name,
    parse_outer,
    pgl_descriptor,
    white_parameters,
)
from .maximals import (
    MaximalSubgroup,
    maximal_subgroups,
    pgl2_order,
    pgl_maximals_special,
    psl2_order,
)
from .twoprime import HypothesisReport, Violation, check_pair, check_set

__version__ = "0.1.0"

__all__ = [
    "FACTS",
    "Fact",
    "FactReport",
    "GroupDescriptor",
    "GroupVerdict",
    "HypothesisReport",
    "MAX_VALUE",
    "MaximalSubgroup",
    "OuterExpressionError",
    "OuterKind",
    "OuterSubgroup",
    "PrimePower",
    "SweepReport",
    "TableRow",
    "Violation",
    "WhiteParameters",
    "brute_force_verdict",
    "character_degrees",
    "check_pair",
    "check_set",
    "degree_families",
    "divisors",
    "enumerate_outer_subgroups",
    "epsilon",
    "fact_report_to_dict",
    "factor",
    "group_name",
    "is_fermat_prime",
    "is_mersenne_prime",
    "is_prime",
    "maximal_subgroups",
    "omega",
    "omega_at_least",
    "parse_outer",
    "pgl2_order",
    "pgl_descriptor",
    "pgl_maximals_special",
    "prime_power_decompose",
    "prime_powers_in_range",
    "primes_up_to",
    "psl2_order",
    "sweep",
    "sweep_report_to_dict",
    "table_rows",
    "verdict_to_dict",
    "verify_all",
    "verify_fact",
    "white_parameters",
    "zsigmondy_base2",
]
