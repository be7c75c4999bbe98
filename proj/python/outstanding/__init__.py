"""Exact record statistics for multiset permutations and words.

Strong records are strict left-to-right maxima; weak records allow ties.
Distributions come back as lists of exact ``fractions.Fraction`` coefficients
(ascending by the record count), means as single Fractions, and counts as
plain ints. Template strings use ``Y``/``N``/``*`` for permutations and
``S``/``W``/``*``/``s``/``o`` for words (``s`` = not a strict record,
``o`` = dominated by an earlier letter).
"""

from outstanding._core import (
    TemplateParseError,
    binomial,
    bivariate_strong_gf_check,
    factorial,
    gauss_identity_check,
    harmonic,
    matches_perm,
    matches_word,
    multiset_darroch,
    multiset_gap_and_bound,
    multiset_strong_gf,
    multiset_strong_mean,
    multiset_strong_prob_gf,
    multiset_weak_gf,
    multiset_weak_mean,
    oracle_multiset_distribution,
    oracle_perm_template_count,
    oracle_word_distribution,
    oracle_word_template_count,
    perm_template_count,
    perm_template_probability,
    stirling_first_unsigned,
    stirling_second,
    strong_positions,
    weak_positions,
    word_template_count,
    word_template_gf,
    words_strong_count,
    words_strong_gf,
    words_strong_mean,
    words_weak_gf,
    words_weak_mean,
)

__version__ = "0.1.0"

__all__ = [
    "TemplateParseError",
    "binomial",
    "bivariate_strong_gf_check",
    "factorial",
    "gauss_identity_check",
    "harmonic",
    "matches_perm",
    "matches_word",
    "multiset_darroch",
    "multiset_gap_and_bound",
    "multiset_strong_gf",
    "multiset_strong_mean",
    "multiset_strong_prob_gf",
    "multiset_weak_gf",
    "multiset_weak_mean",
    "oracle_multiset_distribution",
    "oracle_perm_template_count",
    "oracle_word_distribution",
    "oracle_word_template_count",
    "perm_template_count",
    "perm_template_probability",
    "stirling_first_unsigned",
    "stirling_second",
    "strong_positions",
    "weak_positions",
    "word_template_count",
    "word_template_gf",
    "words_strong_count",
    "words_strong_gf",
    "words_strong_mean",
    "words_weak_gf",
    "words_weak_mean",
]
