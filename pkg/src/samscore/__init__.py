"""Sentiment-aware adjustment of machine translation quality scores.

The package scores hypothesis/reference segment pairs with standard
overlap metrics, condenses the sentiment carried by their unmatched words
into a polarity distance, and discounts each base score by that distance.
An evaluation pipeline loads JSON Lines datasets, applies the adjustment
to builtin and externally computed metrics alike, and reports correlations
with human judgements for the raw and adjusted variants side by side.
"""

from samscore.adjustment import (
    SentimentAdjustment,
    TokenScore,
    apply_penalty,
    score_pair,
    sentiment_penalty,
    sentiment_total,
)
from samscore.errors import (
    DatasetError,
    DegenerateInputError,
    ExternalScoresError,
    LexiconError,
    SamscoreError,
)
from samscore.lexicon import PosTag, SentimentLexicon, bundled_lexicon, load_lexicon
from samscore.metrics import (
    MetricScore,
    bleu_sentence,
    load_external_scores,
    meteor_lite,
)
from samscore.mismatch import MismatchSet, extract_mismatches
from samscore.pipeline import (
    BUILTIN_METRIC_NAMES,
    EvaluationReport,
    SegmentRecord,
    SegmentScore,
    evaluate,
    load_dataset,
    report_to_dict,
    write_correlations_csv,
    write_report_json,
    write_report_text,
)
from samscore.stats import CorrelationReport, correlation_report, kendall_tau, pearson
from samscore.textproc import Token, analyze, load_lemma_exceptions, tokenize

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_METRIC_NAMES",
    "CorrelationReport",
    "DatasetError",
    "DegenerateInputError",
    "EvaluationReport",
    "ExternalScoresError",
    "LexiconError",
    "MetricScore",
    "MismatchSet",
    "PosTag",
    "SamscoreError",
    "SegmentRecord",
    "SegmentScore",
    "SentimentAdjustment",
    "SentimentLexicon",
    "Token",
    "TokenScore",
    "analyze",
    "apply_penalty",
    "bleu_sentence",
    "bundled_lexicon",
    "correlation_report",
    "evaluate",
    "extract_mismatches",
    "kendall_tau",
    "load_dataset",
    "load_external_scores",
    "load_lemma_exceptions",
    "load_lexicon",
    "meteor_lite",
    "pearson",
    "report_to_dict",
    "score_pair",
    "sentiment_penalty",
    "sentiment_total",
    "tokenize",
    "write_correlations_csv",
    "write_report_json",
    "write_report_text",
]
