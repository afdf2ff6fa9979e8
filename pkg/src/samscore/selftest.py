"""Built-in sanity check over two bundled demonstration pairs.

Both cases are sentiment-critical translation errors that a pure overlap
metric barely notices: one drops a negation, the other swaps a polar noun
for its opposite.  The check recomputes the penalty and adjusted score for
each pair with the bundled lexicon and compares against known-good values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from samscore.adjustment import score_pair
from samscore.lexicon import bundled_lexicon


@dataclass(frozen=True)
class SelftestCase:
    case_id: str
    hyp: str
    ref: str
    base_score: float
    expected_penalty: float
    penalty_tol: float
    expected_adjusted: float
    adjusted_tol: float


CASES: Tuple[SelftestCase, ...] = (
    SelftestCase(
        case_id="negation-drop",
        hyp="If he had blown himself up in your country, God would forgive him",
        ref="If he had blown himself up in your country, God would not forgive",
        base_score=0.92,
        expected_penalty=0.5,
        penalty_tol=1e-6,
        expected_adjusted=0.46,
        adjusted_tol=0.005,
    ),
    SelftestCase(
        case_id="polarity-swap",
        hyp="What is this amount of anger, I don’t understand!",
        ref="What is this amount of happiness, I don’t understand!",
        base_score=0.85,
        expected_penalty=0.7625,
        penalty_tol=0.0005,
        expected_adjusted=0.20,
        adjusted_tol=0.005,
    ),
)


def run_selftest() -> Tuple[List[dict], bool]:
    """Score both cases; return per-case rows and an overall pass flag."""
    lexicon = bundled_lexicon()
    rows = []
    all_ok = True
    for case in CASES:
        result = score_pair(case.hyp, case.ref, case.base_score, lexicon)
        penalty_ok = abs(result.penalty - case.expected_penalty) <= case.penalty_tol
        adjusted_ok = abs(result.adjusted_score - case.expected_adjusted) <= case.adjusted_tol
        ok = penalty_ok and adjusted_ok
        all_ok = all_ok and ok
        rows.append({
            "case": case.case_id,
            "penalty": result.penalty,
            "expected_penalty": case.expected_penalty,
            "base": case.base_score,
            "adjusted": result.adjusted_score,
            "expected_adjusted": case.expected_adjusted,
            "ok": ok,
        })
    return rows, all_ok


def format_selftest(rows) -> str:
    width = max(len("case"), max(len(r["case"]) for r in rows))
    lines = [
        f"{'case':<{width}} {'penalty':>8} {'expect':>8} {'base':>6} "
        f"{'adjusted':>9} {'expect':>7} status"
    ]
    for row in rows:
        status = "ok" if row["ok"] else "FAIL"
        lines.append(
            f"{row['case']:<{width}} {row['penalty']:>8.4f} "
            f"{row['expected_penalty']:>8.4f} {row['base']:>6.2f} "
            f"{row['adjusted']:>9.4f} {row['expected_adjusted']:>7.2f} {status}"
        )
    return "\n".join(lines) + "\n"
