"""Batch scoring: dataset in, external-scores JSON out."""

import json
from dataclasses import dataclass
from typing import Dict, Sequence

from .dataset import SegmentPair
from .encoder import TextEncoder
from .scores import clip_unit, greedy_f1, mean_pool_cosine

METRICS = ("bertscore", "sentsim")

_SCORERS = {
    "bertscore": greedy_f1,
    "sentsim": mean_pool_cosine,
}


@dataclass(frozen=True)
class BridgeOutput:
    metric: str
    model_id: str
    scores: Dict[str, float]


def compute_scores(pairs: Sequence[SegmentPair], encoder: TextEncoder,
                   metric: str) -> BridgeOutput:
    if metric not in _SCORERS:
        raise ValueError(f"unknown metric {metric!r}; choose from {METRICS}")
    scorer = _SCORERS[metric]
    hyp_embs = encoder.encode([p.hyp for p in pairs])
    ref_embs = encoder.encode([p.ref for p in pairs])
    scores = {}
    for pair, hyp_emb, ref_emb in zip(pairs, hyp_embs, ref_embs):
        scores[pair.segment_id] = clip_unit(
            scorer(hyp_emb, ref_emb), pair.segment_id)
    return BridgeOutput(metric=metric, model_id=encoder.model_id,
                        scores=scores)


def write_output(output: BridgeOutput, path) -> None:
    # model_id rides along for provenance; score consumers ignore it
    payload = {
        "metric": output.metric,
        "model_id": output.model_id,
        "scores": output.scores,
    }
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, indent=2, sort_keys=True)
        handle.write("\n")
