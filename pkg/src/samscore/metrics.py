"""Segment-level quality metrics and external score ingestion.

Two built-in reference-overlap metrics are provided: a smoothed sentence
BLEU over n-gram orders 1 to 4 and a harmonic precision/recall score with
stem-level backoff and a fragmentation penalty.  Scores from contextual or
otherwise external systems are read from a small JSON format instead of
being computed here.
"""

from __future__ import annotations

import json
import math
import re
import warnings
from collections import Counter, defaultdict, deque
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from samscore import porter
from samscore.errors import ExternalScoresError

_MAX_ORDER = 4


@dataclass(frozen=True)
class MetricScore:
    """A named segment-level quality score in [0, 1]."""

    metric_name: str
    value: float
    provenance: str  # "builtin" or "external"


_ENTITIES = (("&quot;", '"'), ("&amp;", "&"), ("&lt;", "<"), ("&gt;", ">"))
# every ASCII punctuation character except period, comma, dash and apostrophe
_PUNCT_RE = re.compile(r"([\{-\~\[-\` -\&\(-\+\:-\@\/])")
_PERIOD_BEFORE_RE = re.compile(r"([^0-9])([\.,])")
_PERIOD_AFTER_RE = re.compile(r"([\.,])([^0-9])")
_DIGIT_DASH_RE = re.compile(r"([0-9])(-)")


def bleu_tokenize(line: str) -> List[str]:
    """Split a raw segment for n-gram counting.

    Pads ASCII punctuation with spaces, keeping periods and commas inside
    numbers and dashes after digits intact.  Case is preserved and
    apostrophes stay attached to their words.
    """
    for entity, char in _ENTITIES:
        line = line.replace(entity, char)
    line = _PUNCT_RE.sub(r" \1 ", line)
    line = _PERIOD_BEFORE_RE.sub(r"\1 \2 ", line)
    line = _PERIOD_AFTER_RE.sub(r" \1 \2", line)
    line = _DIGIT_DASH_RE.sub(r"\1 \2 ", line)
    return line.split()


def _ngram_counts(tokens: Sequence[str], order: int) -> Counter:
    counts = Counter()
    for n in range(1, order + 1):
        for i in range(len(tokens) - n + 1):
            counts[tuple(tokens[i:i + n])] += 1
    return counts


def bleu_sentence(hyp: str, ref: str) -> float:
    """Smoothed sentence BLEU in [0, 1].

    Geometric mean of modified n-gram precisions up to order 4 over the
    orders the hypothesis can support, with exponential smoothing of zero
    counts and a brevity penalty for short hypotheses.  Empty input on
    either side scores 0.0 with a warning.
    """
    hyp_tokens = bleu_tokenize(hyp)
    ref_tokens = bleu_tokenize(ref)
    if not hyp_tokens or not ref_tokens:
        warnings.warn("empty hypothesis or reference; returning 0.0 BLEU")
        return 0.0
    hyp_counts = _ngram_counts(hyp_tokens, _MAX_ORDER)
    ref_counts = _ngram_counts(ref_tokens, _MAX_ORDER)
    correct = [0] * _MAX_ORDER
    total = [0] * _MAX_ORDER
    for ngram, count in hyp_counts.items():
        n = len(ngram)
        total[n - 1] += count
        correct[n - 1] += min(count, ref_counts.get(ngram, 0))
    smooth = 1.0
    log_sum = 0.0
    effective_order = 0
    for n in range(1, _MAX_ORDER + 1):
        if total[n - 1] == 0:
            break
        effective_order = n
        if correct[n - 1] == 0:
            smooth *= 2.0
            precision = 1.0 / (smooth * total[n - 1])
        else:
            precision = correct[n - 1] / total[n - 1]
        log_sum += math.log(precision)
    if effective_order == 0:
        return 0.0
    score = math.exp(log_sum / effective_order)
    if len(hyp_tokens) < len(ref_tokens):
        score *= math.exp(1.0 - len(ref_tokens) / len(hyp_tokens))
    return score


def _stage_match(hyp_keys, ref_keys, hyp_idx, ref_idx):
    queues = defaultdict(deque)
    for j in ref_idx:
        queues[ref_keys[j]].append(j)
    pairs = []
    hyp_left = []
    for i in hyp_idx:
        queue = queues.get(hyp_keys[i])
        if queue:
            pairs.append((i, queue.popleft()))
        else:
            hyp_left.append(i)
    matched_ref = {j for _, j in pairs}
    ref_left = [j for j in ref_idx if j not in matched_ref]
    return pairs, hyp_left, ref_left


def _count_chunks(pairs: List[Tuple[int, int]]) -> int:
    chunks = 0
    previous = None
    for i, j in sorted(pairs):
        if previous is None or i != previous[0] + 1 or j != previous[1] + 1:
            chunks += 1
        previous = (i, j)
    return chunks


def meteor_lite(hyp: str, ref: str) -> float:
    """Unigram precision/recall score with stem backoff, in [0, 1].

    Tokens are lowercased and matched exactly first, then by stem.  The
    recall-weighted harmonic mean is discounted by a cubed fragmentation
    penalty based on how many contiguous runs the matches form.  Empty
    input on either side scores 0.0 with a warning.
    """
    hyp_tokens = [t.lower() for t in bleu_tokenize(hyp)]
    ref_tokens = [t.lower() for t in bleu_tokenize(ref)]
    if not hyp_tokens or not ref_tokens:
        warnings.warn("empty hypothesis or reference; returning 0.0")
        return 0.0
    exact_pairs, hyp_left, ref_left = _stage_match(
        hyp_tokens, ref_tokens, range(len(hyp_tokens)), range(len(ref_tokens)))
    hyp_stems = [porter.stem(t) for t in hyp_tokens]
    ref_stems = [porter.stem(t) for t in ref_tokens]
    stem_pairs, _, _ = _stage_match(hyp_stems, ref_stems, hyp_left, ref_left)
    pairs = exact_pairs + stem_pairs
    matches = len(pairs)
    if matches == 0:
        return 0.0
    precision = matches / len(hyp_tokens)
    recall = matches / len(ref_tokens)
    fmean = 10.0 * precision * recall / (recall + 9.0 * precision)
    penalty = 0.5 * (_count_chunks(pairs) / matches) ** 3
    return fmean * (1.0 - penalty)


def load_external_scores(path) -> Tuple[str, Dict[str, float]]:
    """Read a JSON file of externally computed segment scores.

    The file holds an object with a ``metric`` name and a ``scores`` object
    mapping segment ids to values in [0, 1].  Unknown extra keys are
    ignored.  A duplicated id inside ``scores`` keeps the last value and
    warns; an out-of-range value raises ExternalScoresError naming the id.
    """
    duplicates: List[str] = []

    def check_pairs(pairs):
        seen = {}
        for key, value in pairs:
            if key in seen:
                duplicates.append(key)
            seen[key] = value
        return seen

    try:
        with open(path, encoding="utf-8") as handle:
            payload = json.load(handle, object_pairs_hook=check_pairs)
    except json.JSONDecodeError as exc:
        raise ExternalScoresError(f"{path}: invalid JSON: {exc}") from None
    if not isinstance(payload, dict):
        raise ExternalScoresError(f"{path}: top level must be an object")
    metric = payload.get("metric")
    scores = payload.get("scores")
    if not isinstance(metric, str) or not metric:
        raise ExternalScoresError(f"{path}: missing or invalid 'metric' name")
    if not isinstance(scores, dict):
        raise ExternalScoresError(f"{path}: missing or invalid 'scores' object")
    for dup in duplicates:
        warnings.warn(f"{path}: duplicate key {dup!r}; keeping the last value")
    out: Dict[str, float] = {}
    for segment_id, value in scores.items():
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise ExternalScoresError(
                f"{path}: score for id {segment_id!r} is not a number")
        value = float(value)
        if not 0.0 <= value <= 1.0:
            raise ExternalScoresError(
                f"{path}: score {value} for id {segment_id!r} outside [0, 1]")
        out[segment_id] = value
    return metric, out
