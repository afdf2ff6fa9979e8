"""Two-stage extraction of unmatched tokens between a hypothesis and a reference.

Stage 1 pairs tokens whose normalized surface forms agree; stage 2 pairs the
leftovers on (lemma, POS).  Matching is multiset-style, so each token pairs
at most once, and whatever remains unpaired on either side is reported in
original sentence order.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Callable, Sequence, Tuple

from samscore.textproc import Token


@dataclass(frozen=True)
class MismatchSet:
    """Unpaired hypothesis and reference tokens, in original order."""

    hyp_mismatches: Tuple[Token, ...]
    ref_mismatches: Tuple[Token, ...]

    @property
    def hyp_count(self) -> int:
        return len(self.hyp_mismatches)

    @property
    def ref_count(self) -> int:
        return len(self.ref_mismatches)


def _match_stage(hyp, ref, hyp_idx, ref_idx, key: Callable):
    # consume reference tokens earliest-first per key
    queues = defaultdict(deque)
    for j in ref_idx:
        queues[key(ref[j])].append(j)
    hyp_left = []
    matched_ref = set()
    for i in hyp_idx:
        queue = queues.get(key(hyp[i]))
        if queue:
            matched_ref.add(queue.popleft())
        else:
            hyp_left.append(i)
    ref_left = [j for j in ref_idx if j not in matched_ref]
    return hyp_left, ref_left


def extract_mismatches(hyp_tokens: Sequence[Token],
                       ref_tokens: Sequence[Token]) -> MismatchSet:
    """Return the tokens of each side left unpaired after both stages."""
    hyp_idx = range(len(hyp_tokens))
    ref_idx = range(len(ref_tokens))
    hyp_idx, ref_idx = _match_stage(
        hyp_tokens, ref_tokens, hyp_idx, ref_idx,
        key=lambda t: t.normalized)
    hyp_idx, ref_idx = _match_stage(
        hyp_tokens, ref_tokens, hyp_idx, ref_idx,
        key=lambda t: (t.lemma, t.pos))
    return MismatchSet(
        hyp_mismatches=tuple(hyp_tokens[i] for i in sorted(hyp_idx)),
        ref_mismatches=tuple(ref_tokens[j] for j in sorted(ref_idx)),
    )
