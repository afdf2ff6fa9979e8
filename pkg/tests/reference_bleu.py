"""Independent reference implementation of the smoothed sentence BLEU.

Written directly from the published definition of the metric (modified
n-gram precisions, exponential smoothing of zero counts, effective-order
averaging, brevity penalty) with deliberately naive code.  The test suite
compares the package implementation against scores frozen from this one.

Running this module as a script regenerates the conformance fixture:

    python3 tests/reference_bleu.py tests/fixtures/bleu_conformance.json
"""

import math
import re

_RULES = (
    (re.compile(r"([\{-\~\[-\` -\&\(-\+\:-\@\/])"), r" \1 "),
    (re.compile(r"([^0-9])([\.,])"), r"\1 \2 "),
    (re.compile(r"([\.,])([^0-9])"), r" \1 \2"),
    (re.compile(r"([0-9])(-)"), r"\1 - "),
)


def tokenize_reference(line):
    for entity, char in (("&quot;", '"'), ("&amp;", "&"),
                         ("&lt;", "<"), ("&gt;", ">")):
        line = line.replace(entity, char)
    for pattern, replacement in _RULES:
        line = pattern.sub(replacement, line)
    return line.split()


def _clipped_and_total(hyp_tokens, ref_tokens, n):
    hyp_ngrams = [tuple(hyp_tokens[i:i + n])
                  for i in range(len(hyp_tokens) - n + 1)]
    ref_remaining = {}
    for i in range(len(ref_tokens) - n + 1):
        gram = tuple(ref_tokens[i:i + n])
        ref_remaining[gram] = ref_remaining.get(gram, 0) + 1
    clipped = 0
    for gram in hyp_ngrams:
        if ref_remaining.get(gram, 0) > 0:
            clipped += 1
            ref_remaining[gram] -= 1
    return clipped, len(hyp_ngrams)


def sentence_bleu_reference(hyp, ref):
    hyp_tokens = tokenize_reference(hyp)
    ref_tokens = tokenize_reference(ref)
    if not hyp_tokens or not ref_tokens:
        return 0.0
    logs = []
    smooth = 1.0
    for n in (1, 2, 3, 4):
        clipped, total = _clipped_and_total(hyp_tokens, ref_tokens, n)
        if total == 0:
            break
        if clipped == 0:
            smooth *= 2.0
            logs.append(math.log(1.0 / (smooth * total)))
        else:
            logs.append(math.log(clipped / total))
    if not logs:
        return 0.0
    geometric_mean = math.exp(sum(logs) / len(logs))
    if len(hyp_tokens) < len(ref_tokens):
        brevity = math.exp(1.0 - len(ref_tokens) / len(hyp_tokens))
    else:
        brevity = 1.0
    return brevity * geometric_mean


FIXTURE_PAIRS = [
    ("the cat sat on the mat", "the cat sat on the mat"),
    ("the cat sat on the mat", "a cat was sitting on the mat"),
    ("the the the the", "the cat sat down"),
    ("he went home early", "she went home very early yesterday"),
    ("what a wonderful day", "what a terrible day"),
    ("I don't understand this at all", "I do not understand this at all"),
    ("one", "one"),
    ("one", "two"),
    ("one two", "one two three four five"),
    ("a b c d e f g", "a b c d e f g h i j"),
    ("it costs 3.50 dollars", "it costs 3.50 dollars today"),
    ("it costs 3,500 dollars", "the price is 3,500 dollars"),
    ("wait... what happened?", "wait, what happened ?"),
    ("he said &quot;hello&quot; to me", 'he said "hello" to me'),
    ("tom &amp; jerry are friends", "tom & jerry are friends"),
    ("state-of-the-art systems fail here", "state-of-the-art systems succeed here"),
    ("from 1995-2000 sales doubled", "between 1995 and 2000 sales doubled"),
    ("really?!", "really!"),
    ("The Quick Brown Fox", "the quick brown fox"),
    ("numbers like 12.5 are kept", "numbers like 12.5 are kept intact"),
    ("this is a much longer sentence than the reference side",
     "a short reference"),
    ("short one here", "this reference side is considerably longer than the hypothesis"),
    ("repeated words words words here", "repeated words here"),
    ("no overlap whatsoever", "completely different tokens appear"),
    ("an (almost) perfect match", "an (almost) perfect match!"),
    ("quotes 'stay' attached", "quotes 'stay' attached"),
    ("semi;colons split", "semi; colons split"),
    ("slash/separated/path given", "slash / separated / path given"),
    ("email me at a@b.example now", "email me at a@b.example now please"),
    ("what is this amount of anger, I don’t understand!",
     "what is this amount of happiness, I don’t understand!"),
    ("if he had blown himself up, god would forgive him",
     "if he had blown himself up, god would not forgive"),
    ("the film was absolutely wonderful", "the film was absolutely dreadful"),
    ("they walked to the старый city", "they walked to the old city"),
    ("café au lait costs 4 euros", "cafe au lait costs 4 euros"),
    ("multiple   spaces   collapse", "multiple spaces collapse"),
    ("trailing punctuation!!!", "trailing punctuation"),
    ("a-b c-d hyphenated stay", "a-b c-d hyphenated stay joined"),
    ("5-year plan announced", "five year plan announced"),
    ("colon: introduces list", "colon : introduces a list"),
    ("brackets [stay] padded", "brackets stay padded"),
    ("curly {braces} too", "curly braces too"),
    ("tilde ~approximately right", "tilde approximately right"),
    ("he scored 100% on the test", "he scored 100 % on the test"),
    ("version 2.0.1 released today", "version 2.0.1 released yesterday"),
    ("good, better, best", "good, better, best"),
    ("am I dreaming now", "am I dreaming right now"),
    ("twelve 12 mixed 34 numbers", "twelve 12 mixed 34 numbers indeed"),
    ("the mat sat on the cat", "the cat sat on the mat"),
    ("deeply nested (parens (inside) here)", "deeply nested parens inside here"),
    ("final pair of the fixture", "final pair of this fixture"),
]


def build_fixture():
    return {
        "pairs": [
            {"hyp": hyp, "ref": ref,
             "bleu": sentence_bleu_reference(hyp, ref)}
            for hyp, ref in FIXTURE_PAIRS
        ]
    }


if __name__ == "__main__":
    import json
    import sys

    out_path = sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures/bleu_conformance.json"
    with open(out_path, "w", encoding="utf-8") as handle:
        json.dump(build_fixture(), handle, indent=2, ensure_ascii=False)
        handle.write("\n")
    print(f"wrote {len(FIXTURE_PAIRS)} pairs to {out_path}")
