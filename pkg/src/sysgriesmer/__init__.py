"""Griesmer-type bounds, explicit counterexamples and exhaustive search for systematic codes."""

from .bounds import (
    bound_A,
    bound_B,
    bound_C,
    best_lower_bound,
    classify_family,
    griesmer,
    plotkin_max_M,
    plotkin_min_n,
    singleton,
    singleton_improved_systematic,
)
from .code_core import Code, SystematicCode, check_systematic, minimum_distance, weight_distribution
from .constructions import (
    cyclic_code,
    levenshtein_19_16_10,
    systematic_counterexample_34,
    systematic_form,
)
from .search import compute_S, exists_systematic

__version__ = "0.1.0"
