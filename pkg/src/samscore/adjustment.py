"""Sentiment-aware adjustment of segment-level quality scores.

Each side's unmatched tokens are condensed into one polarity total: a
weighted average of lexicon scores where each token's weight is the
magnitude of its own score, so strongly polarized words dominate and
neutral words drop out.  Half the distance between the two totals becomes
a penalty in [0, 1] that scales the base quality score down.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from samscore.lexicon import PosTag, SentimentLexicon
from samscore.mismatch import MismatchSet, extract_mismatches
from samscore.textproc import ExceptionTable, Token, analyze, tokenize


@dataclass(frozen=True)
class TokenScore:
    """Per-token contribution to a sentiment total."""

    lemma: str
    pos: PosTag
    score: float
    weight: float


@dataclass(frozen=True)
class SentimentAdjustment:
    """Full outcome of adjusting one hypothesis/reference pair."""

    hyp_sentiment: float
    ref_sentiment: float
    penalty: float
    base_score: float
    adjusted_score: float
    hyp_detail: Tuple[TokenScore, ...]
    ref_detail: Tuple[TokenScore, ...]
    mismatches: Optional[MismatchSet] = None


def sentiment_total(tokens: Sequence[Token],
                    lexicon: SentimentLexicon) -> Tuple[float, Tuple[TokenScore, ...]]:
    """Condense tokens into one polarity value in [-1, 1].

    Returns the magnitude-weighted average of the tokens' lexicon scores
    together with a per-token breakdown.  A set whose scores are all zero
    (including the empty set) totals 0.0 with all weights 0.0.
    """
    scores = [lexicon.lookup(t.lemma, t.pos) for t in tokens]
    total_weight = math.fsum(abs(s) for s in scores)
    if total_weight == 0.0:
        detail = tuple(
            TokenScore(t.lemma, t.pos, s, 0.0) for t, s in zip(tokens, scores)
        )
        return 0.0, detail
    alphas = [abs(s) / total_weight for s in scores]
    total = math.fsum(a * s for a, s in zip(alphas, scores))
    total = min(max(total, min(scores)), max(scores))
    detail = tuple(
        TokenScore(t.lemma, t.pos, s, a)
        for t, s, a in zip(tokens, scores, alphas)
    )
    return total, detail


def sentiment_penalty(hyp_total: float, ref_total: float) -> float:
    """Half the absolute distance between the two polarity totals."""
    for name, value in (("hyp_total", hyp_total), ("ref_total", ref_total)):
        if not -1.0 <= value <= 1.0:
            raise ValueError(f"{name} {value} outside [-1, 1]")
    return abs(ref_total - hyp_total) / 2.0


def apply_penalty(base_score: float, penalty: float) -> float:
    """Scale a base quality score in [0, 1] down by a penalty in [0, 1]."""
    if not 0.0 <= base_score <= 1.0:
        raise ValueError(f"base_score {base_score} outside [0, 1]")
    if not 0.0 <= penalty <= 1.0:
        raise ValueError(f"penalty {penalty} outside [0, 1]")
    return base_score * (1.0 - penalty)


def score_pair(hyp: str, ref: str, base_score: float,
               lexicon: SentimentLexicon,
               exceptions: ExceptionTable = None) -> SentimentAdjustment:
    """Run the whole adjustment for one raw hypothesis/reference pair."""
    hyp_tokens = analyze(tokenize(hyp), exceptions)
    ref_tokens = analyze(tokenize(ref), exceptions)
    mismatches = extract_mismatches(hyp_tokens, ref_tokens)
    hyp_total, hyp_detail = sentiment_total(mismatches.hyp_mismatches, lexicon)
    ref_total, ref_detail = sentiment_total(mismatches.ref_mismatches, lexicon)
    penalty = sentiment_penalty(hyp_total, ref_total)
    adjusted = apply_penalty(base_score, penalty)
    return SentimentAdjustment(
        hyp_sentiment=hyp_total,
        ref_sentiment=ref_total,
        penalty=penalty,
        base_score=base_score,
        adjusted_score=adjusted,
        hyp_detail=hyp_detail,
        ref_detail=ref_detail,
        mismatches=mismatches,
    )
