"""End-to-end evaluation: datasets in, scored segments and correlations out.

Datasets are JSON Lines files, one segment per line, with fields ``id``,
``hyp``, ``ref`` (mandatory) plus optional ``src``, ``human`` (a judgement
in [1, 10]) and ``ext`` (an object of precomputed metric scores in [0, 1]).
Every requested metric is scored per segment, the sentiment penalty is
computed once per segment and applied to each metric's base score, and
correlations against human judgements are reported for the raw and
adjusted variants side by side.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from samscore.adjustment import sentiment_penalty, sentiment_total
from samscore.errors import DatasetError, DegenerateInputError
from samscore.lexicon import SentimentLexicon
from samscore.metrics import bleu_sentence, meteor_lite
from samscore.mismatch import extract_mismatches
from samscore.stats import CorrelationReport, correlation_report
from samscore.textproc import ExceptionTable, analyze, tokenize

VARIANTS = ("raw", "sam_adjusted")

_BUILTIN_METRICS = {
    "bleu": bleu_sentence,
    "meteor": meteor_lite,
}

BUILTIN_METRIC_NAMES = tuple(_BUILTIN_METRICS)


@dataclass(frozen=True)
class SegmentRecord:
    """One dataset entry: a hypothesis/reference pair with optional extras."""

    segment_id: str
    hyp: str
    ref: str
    src: Optional[str] = None
    human: Optional[float] = None
    ext: Mapping[str, float] = None

    def __post_init__(self):
        if self.ext is None:
            object.__setattr__(self, "ext", {})


@dataclass(frozen=True)
class SegmentScore:
    """One metric's raw and adjusted score for one segment."""

    segment_id: str
    metric_name: str
    base_score: float
    penalty: float
    adjusted_score: float


@dataclass(frozen=True)
class EvaluationReport:
    """Scored segments, correlation rows, and dataset bookkeeping."""

    per_segment: Tuple[SegmentScore, ...]
    correlations: Tuple[CorrelationReport, ...]
    summary: dict


def _require(record: dict, field: str, lineno: int, path):
    if field not in record:
        raise DatasetError(f"{path}:{lineno}: missing mandatory field {field!r}")
    return record[field]


def load_dataset(path) -> List[SegmentRecord]:
    """Read a JSON Lines dataset, validating per line.

    Malformed JSON and missing mandatory fields raise DatasetError with the
    1-based line number; a duplicated segment id raises DatasetError naming
    the id.  Blank lines are skipped.
    """
    records: List[SegmentRecord] = []
    seen_ids = set()
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.strip()
            if not line:
                continue
            try:
                payload = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DatasetError(f"{path}:{lineno}: invalid JSON: {exc}") from None
            if not isinstance(payload, dict):
                raise DatasetError(f"{path}:{lineno}: each line must be an object")
            segment_id = _require(payload, "id", lineno, path)
            if not isinstance(segment_id, str) or not segment_id:
                raise DatasetError(f"{path}:{lineno}: 'id' must be a non-empty string")
            if segment_id in seen_ids:
                raise DatasetError(f"{path}:{lineno}: duplicate segment id {segment_id!r}")
            seen_ids.add(segment_id)
            hyp = _require(payload, "hyp", lineno, path)
            ref = _require(payload, "ref", lineno, path)
            if not isinstance(hyp, str) or not isinstance(ref, str):
                raise DatasetError(f"{path}:{lineno}: 'hyp' and 'ref' must be strings")
            src = payload.get("src")
            if src is not None and not isinstance(src, str):
                raise DatasetError(f"{path}:{lineno}: 'src' must be a string")
            human = payload.get("human")
            if human is not None:
                if not isinstance(human, (int, float)) or isinstance(human, bool):
                    raise DatasetError(f"{path}:{lineno}: 'human' must be a number")
                human = float(human)
                if not 1.0 <= human <= 10.0:
                    raise DatasetError(
                        f"{path}:{lineno}: 'human' score {human} outside [1, 10]")
            ext = payload.get("ext")
            ext_scores: Dict[str, float] = {}
            if ext is not None:
                if not isinstance(ext, dict):
                    raise DatasetError(f"{path}:{lineno}: 'ext' must be an object")
                for name, value in ext.items():
                    if not isinstance(value, (int, float)) or isinstance(value, bool):
                        raise DatasetError(
                            f"{path}:{lineno}: 'ext' score for {name!r} must be a number")
                    value = float(value)
                    if not 0.0 <= value <= 1.0:
                        raise DatasetError(
                            f"{path}:{lineno}: 'ext' score {value} for {name!r} "
                            f"outside [0, 1]")
                    ext_scores[name] = value
            records.append(SegmentRecord(
                segment_id=segment_id, hyp=hyp, ref=ref, src=src,
                human=human, ext=ext_scores,
            ))
    return records


def _segment_penalty(record: SegmentRecord, lexicon: SentimentLexicon,
                     exceptions: ExceptionTable) -> float:
    hyp_tokens = analyze(tokenize(record.hyp), exceptions)
    ref_tokens = analyze(tokenize(record.ref), exceptions)
    mismatches = extract_mismatches(hyp_tokens, ref_tokens)
    hyp_total, _ = sentiment_total(mismatches.hyp_mismatches, lexicon)
    ref_total, _ = sentiment_total(mismatches.ref_mismatches, lexicon)
    return sentiment_penalty(hyp_total, ref_total)


def evaluate(records: Sequence[SegmentRecord], lexicon: SentimentLexicon,
             metrics: Sequence[str] = ("bleu", "meteor"),
             external: Mapping[str, Optional[Mapping[str, float]]] = None,
             exceptions: ExceptionTable = None,
             correlations: bool = True) -> EvaluationReport:
    """Score every segment with every requested metric, then correlate.

    ``metrics`` lists builtin metric names; ``external`` maps further metric
    names to id->score mappings (or None to take values from each record's
    ``ext`` field).  The sentiment penalty is computed once per segment and
    shared by all metrics.  Segments without a human judgement are scored
    but left out of the correlations; requesting correlations with fewer
    than 2 human-scored segments raises DegenerateInputError.
    """
    external = dict(external or {})
    for name in metrics:
        if name not in _BUILTIN_METRICS:
            raise ValueError(f"unknown builtin metric {name!r}")
        if name in external:
            raise ValueError(f"metric name {name!r} used twice")

    penalties = {
        record.segment_id: _segment_penalty(record, lexicon, exceptions)
        for record in records
    }

    metric_order = list(metrics) + list(external)
    per_segment: List[SegmentScore] = []
    base_scores: Dict[str, Dict[str, float]] = {name: {} for name in metric_order}
    missing_external: Dict[str, int] = {name: 0 for name in external}
    for record in records:
        penalty = penalties[record.segment_id]
        for name in metric_order:
            if name in _BUILTIN_METRICS and name in metrics:
                base = _BUILTIN_METRICS[name](record.hyp, record.ref)
            else:
                source = external[name]
                if source is None:
                    base = record.ext.get(name)
                else:
                    base = source.get(record.segment_id)
                if base is None:
                    missing_external[name] += 1
                    continue
            base_scores[name][record.segment_id] = base
            per_segment.append(SegmentScore(
                segment_id=record.segment_id,
                metric_name=name,
                base_score=base,
                penalty=penalty,
                adjusted_score=base * (1.0 - penalty),
            ))

    human_ids = [r.segment_id for r in records if r.human is not None]
    human_by_id = {r.segment_id: r.human for r in records if r.human is not None}

    correlation_rows: List[CorrelationReport] = []
    if correlations:
        if len(human_ids) < 2:
            raise DegenerateInputError(
                f"need at least 2 human-scored segments, got {len(human_ids)}")
        for name in metric_order:
            covered = [sid for sid in human_ids if sid in base_scores[name]]
            human = [human_by_id[sid] for sid in covered]
            raw = [base_scores[name][sid] for sid in covered]
            adjusted = [base_scores[name][sid] * (1.0 - penalties[sid])
                        for sid in covered]
            correlation_rows.append(
                correlation_report(name, "raw", human, raw))
            correlation_rows.append(
                correlation_report(name, "sam_adjusted", human, adjusted))

    summary = {
        "segments": len(records),
        "human_scored": len(human_ids),
        "metrics": metric_order,
        "external_missing": missing_external,
        "lexicon": lexicon.source_name,
    }
    return EvaluationReport(
        per_segment=tuple(per_segment),
        correlations=tuple(correlation_rows),
        summary=summary,
    )


def _filter_correlations(report: EvaluationReport, variants):
    variants = tuple(variants) if variants else VARIANTS
    return [row for row in report.correlations if row.variant in variants]


def report_to_dict(report: EvaluationReport, variants=None) -> dict:
    """Plain-dict form of a report, ready for JSON serialization."""
    return {
        "summary": report.summary,
        "correlations": [
            {
                "metric": row.metric_name,
                "variant": row.variant,
                "pearson": row.pearson_r,
                "abs_pearson": row.abs_pearson,
                "kendall": row.kendall_tau,
                "abs_kendall": row.abs_kendall,
                "n_segments": row.n_segments,
            }
            for row in _filter_correlations(report, variants)
        ],
        "per_segment": [
            {
                "id": row.segment_id,
                "metric": row.metric_name,
                "base": row.base_score,
                "penalty": row.penalty,
                "adjusted": row.adjusted_score,
            }
            for row in report.per_segment
        ],
    }


def write_report_json(report: EvaluationReport, path, variants=None):
    payload = report_to_dict(report, variants)
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, indent=2, ensure_ascii=False)
        handle.write("\n")


def format_report_text(report: EvaluationReport, variants=None) -> str:
    """Human-readable report with aligned columns."""
    lines = []
    summary = report.summary
    lines.append("Evaluation summary")
    lines.append(f"  segments:     {summary['segments']}")
    lines.append(f"  human scored: {summary['human_scored']}")
    lines.append(f"  metrics:      {', '.join(summary['metrics']) or '(none)'}")
    for name, count in summary["external_missing"].items():
        lines.append(f"  {name}: {count} segment(s) without an external score")
    lines.append(f"  lexicon:      {summary['lexicon']}")
    correlation_rows = _filter_correlations(report, variants)
    if correlation_rows:
        lines.append("")
        lines.append("Correlations with human judgements")
        header = (f"  {'metric':<12} {'variant':<12} {'pearson':>9} "
                  f"{'|pearson|':>9} {'kendall':>9} {'|kendall|':>9} {'n':>5}")
        lines.append(header)
        for row in correlation_rows:
            lines.append(
                f"  {row.metric_name:<12} {row.variant:<12} "
                f"{row.pearson_r:>9.4f} {row.abs_pearson:>9.4f} "
                f"{row.kendall_tau:>9.4f} {row.abs_kendall:>9.4f} "
                f"{row.n_segments:>5}")
    if report.per_segment:
        lines.append("")
        lines.append("Per-segment scores")
        id_width = max(len("id"), max(len(r.segment_id) for r in report.per_segment))
        lines.append(
            f"  {'id':<{id_width}} {'metric':<12} {'base':>8} "
            f"{'penalty':>8} {'adjusted':>9}")
        for row in report.per_segment:
            lines.append(
                f"  {row.segment_id:<{id_width}} {row.metric_name:<12} "
                f"{row.base_score:>8.4f} {row.penalty:>8.4f} "
                f"{row.adjusted_score:>9.4f}")
    return "\n".join(lines) + "\n"


def write_report_text(report: EvaluationReport, path, variants=None):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_report_text(report, variants))


def write_correlations_csv(report: EvaluationReport, path, variants=None):
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["metric", "variant", "pearson", "abs_pearson",
                         "kendall", "abs_kendall", "n_segments"])
        for row in _filter_correlations(report, variants):
            writer.writerow([
                row.metric_name, row.variant,
                f"{row.pearson_r:.6f}", f"{row.abs_pearson:.6f}",
                f"{row.kendall_tau:.6f}", f"{row.abs_kendall:.6f}",
                row.n_segments,
            ])
