"""factorgray: Gray-code enumeration of q-ary words avoiding a factor."""

from .automaton import FactorAutomaton, border_array, transition_table
from .classification import (
    Classification,
    Family,
    GrayVerdict,
    Strategy,
    classify,
    gray_verdict,
    induces_zero_tails,
    nonzero_periods,
    one_max_zeros_members,
    one_max_zeros_param,
    one_zeros_members,
    one_zeros_param,
    phi,
    phi_pair,
    submax_run_length,
    submax_run_member,
    swap_symbols,
    zero_suffix_len,
)
from .generation import (
    GenerationPlan,
    GenerationRequest,
    MapKind,
    WordMap,
    apply_word_map,
    count_avoiding,
    extreme_word,
    generate,
    generate_array,
    generate_array_with_stats,
    generate_list,
    iter_words,
    node_count,
    plan,
)
from .oracle import (
    GrayReport,
    brute_force_array,
    brute_force_list,
    contains_factor,
    rank_key,
    smallest_counterexample_n,
    unrank,
    verify,
)
from .words import (
    DEFAULT_WORD_BUDGET,
    BudgetExceeded,
    Order,
    ParityRule,
    Word,
    cmp_dual_rgc,
    cmp_rgc,
    compare,
    complement,
    diff_span,
    format_word,
    hamming,
    natural_order,
    parity,
    parse_word,
    reverse,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
