"""Online monotone submodular maximization in random arrival order.

Thin wrapper around the C++ core: value oracles, offline solvers, the three
online algorithms, closed-form bounds, and the Monte Carlo harness.
"""

import json as _json

from subsec._subsec import (
    BudgetError,
    Instance,
    InputError,
    ValueOracle,
    __version__,
    bound_greedy_k_secretary,
    bound_k_secretary,
    bound_matching,
    bound_packing,
    brute_force_cardinality,
    check_monotone,
    check_submodular,
    continuous_greedy,
    estimate_json,
    gen_instance,
    gen_oracle,
    greedy_cardinality,
    greedy_stage_alpha,
    greedy_stage_guarantee_check,
    k_secretary_n_adjustment,
    lp_maximize,
    multilinear_exact,
    multilinear_mc,
    packing_sample_fraction,
    run_json,
)


def run(instance, **kwargs):
    """One traced online run; returns the run record as a dict."""
    return _json.loads(run_json(instance, **kwargs))


def estimate(instance, **kwargs):
    """Monte Carlo ratio estimate; returns the full report as a dict."""
    return _json.loads(estimate_json(instance, **kwargs))


__all__ = [
    "BudgetError",
    "Instance",
    "InputError",
    "ValueOracle",
    "__version__",
    "bound_greedy_k_secretary",
    "bound_k_secretary",
    "bound_matching",
    "bound_packing",
    "brute_force_cardinality",
    "check_monotone",
    "check_submodular",
    "continuous_greedy",
    "estimate",
    "estimate_json",
    "gen_instance",
    "gen_oracle",
    "greedy_cardinality",
    "greedy_stage_alpha",
    "greedy_stage_guarantee_check",
    "k_secretary_n_adjustment",
    "lp_maximize",
    "multilinear_exact",
    "multilinear_mc",
    "packing_sample_fraction",
    "run",
    "run_json",
]
