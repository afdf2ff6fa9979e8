"""Similarity scores between hypothesis and reference token embeddings."""

import warnings

import numpy as np


def _unit_rows(matrix: np.ndarray) -> np.ndarray:
    norms = np.linalg.norm(matrix, axis=1, keepdims=True)
    norms[norms == 0.0] = 1.0
    return matrix / norms


def greedy_f1(hyp_emb: np.ndarray, ref_emb: np.ndarray) -> float:
    """Greedy token-matching F1 over pairwise cosine similarity.

    Each hypothesis token matches its most similar reference token and vice
    versa; precision and recall are the mean best similarities per side.
    Either side empty scores 0.0.
    """
    if len(hyp_emb) == 0 or len(ref_emb) == 0:
        return 0.0
    sim = _unit_rows(hyp_emb) @ _unit_rows(ref_emb).T
    precision = float(sim.max(axis=1).mean())
    recall = float(sim.max(axis=0).mean())
    if precision + recall == 0.0:
        return 0.0
    # may go negative; the caller clips into [0, 1] and warns
    return 2.0 * precision * recall / (precision + recall)


def mean_pool_cosine(hyp_emb: np.ndarray, ref_emb: np.ndarray) -> float:
    """Cosine between mean-pooled sentence vectors; empty side scores 0.0."""
    if len(hyp_emb) == 0 or len(ref_emb) == 0:
        return 0.0
    hyp_vec = hyp_emb.mean(axis=0)
    ref_vec = ref_emb.mean(axis=0)
    hyp_norm = float(np.linalg.norm(hyp_vec))
    ref_norm = float(np.linalg.norm(ref_vec))
    if hyp_norm == 0.0 or ref_norm == 0.0:
        return 0.0
    return float(hyp_vec @ ref_vec / (hyp_norm * ref_norm))


_NOISE = 1e-9


def clip_unit(value: float, segment_id: str) -> float:
    """Clamp a score into [0, 1], warning when clipping actually occurs.

    Cosine-based scores can go genuinely negative; those get clipped with a
    warning. Overshoots within float rounding noise snap silently.
    """
    if value < -_NOISE or value > 1.0 + _NOISE:
        warnings.warn(
            f"score {value:.4f} for segment {segment_id!r} outside [0, 1], "
            "clipping")
    return min(1.0, max(0.0, value))
