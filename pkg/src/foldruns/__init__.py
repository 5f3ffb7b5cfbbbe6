"""Paperfolding words: run structure, synchronized automata, bounded checks.

The package splits along the data it handles: `foldcore` builds words from
instruction codes, `runs` decomposes them and scans factors, `automata`
infers and verifies multi-track machines against semantic oracles,
`theorems` bundles the named check suites, `contfrac` carries the exact
continued-fraction correspondence, and `cli` fronts it all.
"""

from .foldcore import (
    MINUS,
    PAD,
    PLUS,
    FoldCode,
    InvalidCodeError,
    MaterializationLimitError,
    PaperfoldingWord,
    all_codes,
    as_code,
    is_valid_code,
    negate,
    paperfolding_term,
    paperfolding_word,
    unfold_once,
)
from .runs import (
    FactorInventory,
    RunDecomposition,
    assoc_code,
    find_overlaps,
    find_palindromes,
    find_squares,
    min_code_length,
    predicted_end_positions,
    regular_run_end,
    regular_run_length,
    regular_run_span,
    regular_run_start,
    right_extension_map,
    right_special_count,
    run_decompose,
    run_end,
    run_length,
    run_length_word,
    run_span,
    run_start,
    square_occurrences,
    subword_complexity,
    window_bound,
)
from .automata import (
    AutomatonFormatError,
    Counterexample,
    EndRelationOracle,
    GapOracle,
    InferenceError,
    MultiTrackAutomaton,
    RegularEndOracle,
    RegularLengthOracle,
    RegularStartOracle,
    RunLengthOracle,
    StartRelationOracle,
    ValueSliceOracle,
    WordOracle,
    accepted_numeric_values,
    accepted_second_values,
    build_semantic_automaton,
    build_tt,
    combine_value_acceptors,
    decode_inputs,
    encode_inputs,
    equivalent,
    gap_wellformedness,
    infer_automaton,
    lnk_accepts,
    minimize,
    oracle_ep,
    oracle_rl,
    oracle_sp,
    read_automaton,
    regular_gap_value,
    specialize_regular,
    to_dot,
    valid_code_length_automaton,
    verify_exhaustive,
    write_automaton,
)
from .theorems import (
    EXPECTED_PALINDROMES,
    EXPECTED_SQUARES,
    SUITES,
    CheckReport,
    complexity,
    no_triple_extension,
    overlapfree,
    palindromes,
    prop1,
    prop4,
    regular_suite,
    right_special_exactly_four,
    run_suite,
    runs_suite,
    sp_suite,
    squares_only,
    squares_present,
    thm3,
)
from .contfrac import (
    MAX_ALPHA_INDEX,
    alpha_value,
    canonical,
    cf_from_rational,
    cf_theorem_check,
    cf_to_rational,
    fold_step,
    folded_alpha,
    predicted_cf,
    set_parity,
)

__version__ = "1.0.0"

__all__ = [
    "MINUS",
    "PAD",
    "PLUS",
    "FoldCode",
    "InvalidCodeError",
    "MaterializationLimitError",
    "PaperfoldingWord",
    "all_codes",
    "as_code",
    "is_valid_code",
    "negate",
    "paperfolding_term",
    "paperfolding_word",
    "unfold_once",
    "FactorInventory",
    "RunDecomposition",
    "assoc_code",
    "find_overlaps",
    "find_palindromes",
    "find_squares",
    "min_code_length",
    "predicted_end_positions",
    "regular_run_end",
    "regular_run_length",
    "regular_run_span",
    "regular_run_start",
    "right_extension_map",
    "right_special_count",
    "run_decompose",
    "run_end",
    "run_length",
    "run_length_word",
    "run_span",
    "run_start",
    "square_occurrences",
    "subword_complexity",
    "window_bound",
    "AutomatonFormatError",
    "Counterexample",
    "EndRelationOracle",
    "GapOracle",
    "InferenceError",
    "MultiTrackAutomaton",
    "RegularEndOracle",
    "RegularLengthOracle",
    "RegularStartOracle",
    "RunLengthOracle",
    "StartRelationOracle",
    "ValueSliceOracle",
    "WordOracle",
    "accepted_numeric_values",
    "accepted_second_values",
    "build_semantic_automaton",
    "build_tt",
    "combine_value_acceptors",
    "decode_inputs",
    "encode_inputs",
    "equivalent",
    "gap_wellformedness",
    "infer_automaton",
    "lnk_accepts",
    "minimize",
    "oracle_ep",
    "oracle_rl",
    "oracle_sp",
    "read_automaton",
    "regular_gap_value",
    "specialize_regular",
    "to_dot",
    "valid_code_length_automaton",
    "verify_exhaustive",
    "write_automaton",
    "EXPECTED_PALINDROMES",
    "EXPECTED_SQUARES",
    "SUITES",
    "CheckReport",
    "complexity",
    "no_triple_extension",
    "overlapfree",
    "palindromes",
    "prop1",
    "prop4",
    "regular_suite",
    "right_special_exactly_four",
    "run_suite",
    "runs_suite",
    "sp_suite",
    "squares_only",
    "squares_present",
    "thm3",
    "MAX_ALPHA_INDEX",
    "alpha_value",
    "canonical",
    "cf_from_rational",
    "cf_theorem_check",
    "cf_to_rational",
    "fold_step",
    "folded_alpha",
    "predicted_cf",
    "set_parity",
]
