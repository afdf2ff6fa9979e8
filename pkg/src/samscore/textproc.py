"""Tokenization and shallow lexical analysis for sentiment lookup.

The tokenizer splits on whitespace, peels leading and trailing punctuation
into separate tokens, and separates clitic contractions ("don't" becomes
"do" + "n't") while leaving word-internal apostrophes and hyphens alone.
The analyzer folds each surface form to a normalized key and assigns a
(lemma, POS) pair with a small exception table plus suffix heuristics.
The POS inventory matches the lexicon's four coarse tags.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable, Mapping, Optional, Tuple

from samscore.lexicon import PosTag

_NEGATORS = frozenset({"not", "n't", "never", "no"})

_ADVERBS = frozenset({
    "very", "quite", "too", "so", "now", "then", "here", "there", "always",
    "often", "sometimes", "soon", "again", "away", "back", "still", "just",
    "almost", "already", "yesterday", "today", "tomorrow", "well", "also",
    "maybe", "perhaps", "together", "instead", "twice", "once",
})

_ADJECTIVES = frozenset({
    "happy", "sad", "good", "bad", "big", "large", "small", "little", "old",
    "new", "great", "high", "low", "long", "short", "strong", "weak", "young",
    "early", "late", "hot", "cold", "warm", "cool", "easy", "hard", "fast",
    "slow", "quick", "wonderful", "terrible", "awful", "excellent",
    "horrible", "amazing", "beautiful", "ugly", "brilliant", "dreadful",
    "cheerful", "gloomy", "pleasant", "kind", "cruel", "friendly", "hostile",
    "safe", "delicious", "rotten", "sweet", "bitter", "perfect", "useless",
    "helpful", "harmful", "lucky", "glad", "upset", "proud", "ashamed",
    "calm", "angry", "gentle", "generous", "selfish", "honest", "clean",
    "dirty", "fresh", "nice", "fine", "real", "sure", "free", "full",
    "empty", "dark", "bright", "deep", "rich", "poor", "true", "false",
    "wide", "close", "near", "far", "wrong", "right",
})

_VERBS = frozenset({
    "be", "have", "do", "go", "get", "make", "take", "know", "think", "see",
    "come", "want", "look", "use", "find", "give", "tell", "work", "call",
    "try", "ask", "need", "feel", "become", "leave", "put", "mean", "keep",
    "let", "begin", "seem", "help", "talk", "turn", "start", "show", "hear",
    "play", "run", "move", "like", "live", "believe", "hold", "bring",
    "happen", "write", "sit", "stand", "lose", "pay", "meet", "include",
    "continue", "set", "learn", "change", "lead", "watch", "follow", "stop",
    "create", "speak", "read", "spend", "grow", "open", "walk", "win",
    "offer", "remember", "love", "consider", "appear", "buy", "wait",
    "serve", "die", "send", "expect", "build", "stay", "fall", "cut",
    "reach", "kill", "remain", "suggest", "raise", "pass", "sell", "require",
    "report", "decide", "pull", "hate", "enjoy", "suffer", "praise",
    "blame", "celebrate", "mourn", "laugh", "weep", "smile", "cry",
    "comfort", "destroy", "wander", "forgive", "understand", "sleep", "eat",
    "drink", "fly", "say", "blow", "wish", "thank", "agree", "disagree",
    "accept", "refuse", "fail", "succeed", "fear", "hope", "miss", "hurt",
})

# Verbal suffix stripping restores a silent "e" after these final letters
# when the stem ends consonant-vowel-consonant.
_E_RESTORE_CVC = "gk"


@dataclass(frozen=True)
class Token:
    """One analyzed token: raw surface, folded key, lemma, and coarse POS."""

    surface: str
    normalized: str
    lemma: str
    pos: PosTag


_CLITIC_RE = re.compile(r"(.+)(['’](?:s|m|re|ve|ll|d)|n['’]t)$",
                        re.IGNORECASE)


def _split_clitics(core: str) -> list:
    tail = []
    while True:
        match = _CLITIC_RE.fullmatch(core)
        if match is None or not match.group(1)[-1].isalnum():
            break
        tail.insert(0, match.group(2))
        core = match.group(1)
    return ([core] if core else []) + tail


def _split_chunk(chunk: str) -> Iterable[str]:
    left = []
    while chunk and not chunk[0].isalnum():
        left.append(chunk[0])
        chunk = chunk[1:]
    right = []
    while chunk and not chunk[-1].isalnum():
        right.append(chunk[-1])
        chunk = chunk[:-1]
    right.reverse()
    return left + _split_clitics(chunk) + right


def tokenize(text: str) -> list:
    """Split text into surface tokens.

    Whitespace separates tokens; leading and trailing punctuation of each
    chunk becomes one token per character; clitic contractions are split
    off ("don't" -> "do", "n't").  Concatenating the output reproduces the
    input minus its whitespace.
    """
    text = unicodedata.normalize("NFC", text)
    tokens = []
    for chunk in text.split():
        tokens.extend(_split_chunk(chunk))
    return tokens


ExceptionTable = Mapping[str, Tuple[str, PosTag]]


def load_lemma_exceptions(path=None) -> ExceptionTable:
    """Load a form<TAB>lemma<TAB>pos exception table (bundled one by default)."""
    if path is None:
        return _bundled_exceptions()
    return _read_exceptions(path)


def _read_exceptions(path) -> ExceptionTable:
    table = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 3:
                raise ValueError(
                    f"{path}:{lineno}: expected 'form<TAB>lemma<TAB>pos', got {line!r}"
                )
            form, lemma, tag = fields
            table[form.lower()] = (lemma.lower(), PosTag.parse(tag))
    return table


@lru_cache(maxsize=1)
def _bundled_exceptions() -> ExceptionTable:
    ref = resources.files("samscore").joinpath("fixtures/lemma_exceptions.tsv")
    with resources.as_file(ref) as path:
        return _read_exceptions(path)


def _comparative_base(word: str) -> Optional[str]:
    for suffix in ("iest", "ier", "est", "er"):
        if not word.endswith(suffix) or len(word) - len(suffix) < 2:
            continue
        stem = word[: len(word) - len(suffix)]
        if suffix in ("iest", "ier"):
            candidates = (stem + "y",)
        else:
            undoubled = stem[:-1] if len(stem) >= 2 and stem[-1] == stem[-2] else None
            candidates = tuple(c for c in (stem, undoubled, stem + "e") if c)
        for cand in candidates:
            if cand in _ADJECTIVES:
                return cand
    return None


def _is_vowel(ch: str) -> bool:
    return ch in "aeiou"


def _repair_verb_stem(stem: str) -> str:
    # "runn" -> "run", "lov" -> "love", "manag" -> "manage"
    if len(stem) >= 2 and stem[-1] == stem[-2] and not _is_vowel(stem[-1]) \
            and stem[-1] not in "lsz":
        return stem[:-1]
    last = stem[-1]
    if last in "ue":
        return stem + "e"
    if last in "vc":
        return stem + "e"
    if last == "z" and (len(stem) < 2 or stem[-2] != "z"):
        return stem + "e"
    if last in _E_RESTORE_CVC and len(stem) >= 3 \
            and not _is_vowel(stem[-3]) and _is_vowel(stem[-2]):
        return stem + "e"
    return stem


def _verb_stem(word: str) -> Optional[str]:
    if word.endswith("ing") and len(word) >= 6:
        return _repair_verb_stem(word[:-3])
    if word.endswith("ied") and len(word) >= 5:
        return word[:-3] + "y"
    if word.endswith("ed") and len(word) >= 5:
        return _repair_verb_stem(word[:-2])
    return None


def _third_person_base(word: str) -> Optional[str]:
    if word.endswith("ies") and len(word) >= 5:
        cand = word[:-3] + "y"
        if cand in _VERBS:
            return cand
    if word.endswith("es") and len(word) >= 4:
        cand = word[:-2]
        if cand in _VERBS:
            return cand
    if word.endswith("s") and not word.endswith("ss") and len(word) >= 3:
        cand = word[:-1]
        if cand in _VERBS:
            return cand
    return None


def _singular(word: str) -> str:
    if len(word) < 4 or not word.endswith("s"):
        return word
    if word.endswith(("ss", "us", "is")):
        return word
    if word.endswith("ies") and len(word) >= 5:
        return word[:-3] + "y"
    if word.endswith(("xes", "zes", "ches", "shes", "sses")):
        return word[:-2]
    return word[:-1]


def _tag_and_lemmatize(word: str) -> Tuple[str, PosTag]:
    if word in _NEGATORS:
        return word, PosTag.ADVERB
    if word in _ADVERBS:
        return word, PosTag.ADVERB
    if word in _ADJECTIVES:
        return word, PosTag.ADJECTIVE
    if len(word) >= 4 and word.endswith("ly"):
        return word, PosTag.ADVERB
    base = _comparative_base(word)
    if base is not None:
        return base, PosTag.ADJECTIVE
    if word in _VERBS:
        return word, PosTag.VERB
    stem = _verb_stem(word)
    if stem is not None:
        return stem, PosTag.VERB
    third = _third_person_base(word)
    if third is not None:
        return third, PosTag.VERB
    if len(word) >= 6 and word.endswith(("ous", "ful", "less", "ish",
                                         "ive", "able", "ible")):
        return word, PosTag.ADJECTIVE
    return _singular(word), PosTag.NOUN


def _analyze_one(surface: str, exceptions: ExceptionTable) -> Optional[Token]:
    folded = unicodedata.normalize("NFC", surface).lower().replace("’", "'")
    hit = exceptions.get(folded)
    if hit is not None:
        return Token(surface, folded, hit[0], hit[1])
    core = folded
    while core and not core[0].isalnum():
        core = core[1:]
    while core and not core[-1].isalnum():
        core = core[:-1]
    if not core:
        return None
    hit = exceptions.get(core)
    if hit is not None:
        return Token(surface, core, hit[0], hit[1])
    lemma, pos = _tag_and_lemmatize(core)
    return Token(surface, core, lemma, pos)


def analyze(surfaces: Iterable[str], exceptions: ExceptionTable = None) -> list:
    """Analyze surface tokens into Token records.

    Pure punctuation tokens are dropped.  The exception table maps folded
    forms directly to (lemma, POS); everything else goes through suffix
    heuristics with a default-noun fallback.
    """
    if exceptions is None:
        exceptions = _bundled_exceptions()
    out = []
    for surface in surfaces:
        token = _analyze_one(surface, exceptions)
        if token is not None:
            out.append(token)
    return out
