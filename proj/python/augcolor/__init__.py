"""Coloring algorithms, bounds and experiments for randomly augmented graphs."""

import json

from ._augcolor import (
    RNG,
    ColoringUnavailable,
    DomainError,
    Graph,
    HostSpec,
    InputError,
    RegimeError,
    SizeError,
    __version__,
    augment,
    bounds,
    color,
    complete_graph,
    complete_multipartite,
    count_independent_sets,
    cycle_graph,
    derive_seed,
    exact_chromatic,
    first_conflict,
    greedy_maximal_independent_set,
    host_coloring,
    is_independent,
    is_proper_coloring,
    maximum_independent_set,
    petersen_graph,
    read_dimacs,
    sample_gnp,
    union,
    write_dimacs,
)
from ._augcolor import run_campaign_json as _run_campaign_json


def bound_report(n, p, chi_h=1, k=None):
    """All closed-form quantities for (n, p, chi_H) as a dict."""
    return json.loads(bounds.report_json(n, p, chi_h, k))


def run_campaign(config):
    """Run a campaign from a config dict. Returns (trials_csv_text, summary_dict)."""
    csv, summary = _run_campaign_json(json.dumps(config))
    return csv, json.loads(summary)


__all__ = [name for name in dir() if not name.startswith("_")]
