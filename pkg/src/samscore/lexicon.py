"""Prior-polarity sentiment lexicon: file loading and lemma/POS lookup.

Lexicon files are UTF-8 text with one entry per line, ``lemma#pos<TAB>score``.
Lines that are blank or start with ``#`` are skipped.  The POS tag is one of
``n`` (noun), ``v`` (verb), ``a`` (adjective), ``r`` (adverb) and scores are
prior polarities in [-1, 1].
"""

from __future__ import annotations

import enum
from collections import defaultdict
from importlib import resources
from types import MappingProxyType
from typing import Iterable, Mapping, Tuple

from samscore.errors import LexiconError

Entry = Tuple[Tuple[str, "PosTag"], float]


class PosTag(enum.Enum):
    """Coarse part-of-speech categories used to key lexicon entries."""

    NOUN = "n"
    VERB = "v"
    ADJECTIVE = "a"
    ADVERB = "r"

    @classmethod
    def parse(cls, tag: str) -> "PosTag":
        """Return the tag for a one-letter code, raising ValueError if unknown."""
        try:
            return cls(tag)
        except ValueError:
            raise ValueError(
                f"unknown POS tag {tag!r}; expected one of n, v, a, r"
            ) from None


class SentimentLexicon:
    """Immutable map from (lemma, POS) to a prior polarity score.

    Lookup falls back gracefully for out-of-vocabulary queries: an exact
    (lemma, POS) hit wins; otherwise the mean score over the lemma's other
    POS entries is used; a lemma absent under every POS scores 0.0.
    """

    def __init__(self, entries: Iterable[Entry], source_name: str = "unnamed"):
        table: dict = {}
        for (lemma, pos), score in entries:
            if not isinstance(pos, PosTag):
                pos = PosTag.parse(pos)
            score = float(score)
            if not -1.0 <= score <= 1.0:
                raise LexiconError(
                    f"score {score} for {lemma!r}#{pos.value} outside [-1, 1]"
                )
            table[(lemma.lower(), pos)] = score
        by_lemma = defaultdict(list)
        for (lemma, pos), score in table.items():
            by_lemma[lemma].append(score)
        self._table = table
        self._by_lemma = dict(by_lemma)
        self.source_name = source_name

    @property
    def entries(self) -> Mapping[Tuple[str, PosTag], float]:
        return MappingProxyType(self._table)

    @property
    def entry_count(self) -> int:
        return len(self._table)

    def __len__(self) -> int:
        return len(self._table)

    def __contains__(self, key: Tuple[str, PosTag]) -> bool:
        lemma, pos = key
        return (lemma.lower(), pos) in self._table

    def lookup(self, lemma: str, pos: PosTag) -> float:
        """Return the prior polarity for (lemma, pos) with OOV fallback.

        Falls back to the mean over the lemma's entries under other POS tags,
        then to 0.0 when the lemma is absent entirely.
        """
        lemma = lemma.lower()
        hit = self._table.get((lemma, pos))
        if hit is not None:
            return hit
        others = self._by_lemma.get(lemma)
        if others:
            return sum(others) / len(others)
        return 0.0

    def __repr__(self) -> str:
        return f"SentimentLexicon({self.source_name!r}, {len(self)} entries)"


def load_lexicon(path, source_name: str | None = None) -> SentimentLexicon:
    """Load a lemma#pos<TAB>score lexicon file.

    Duplicate (lemma, pos) keys are allowed; the last occurrence wins.
    Raises LexiconError with a 1-based line number for malformed lines and
    out-of-range scores.
    """
    entries: dict = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 2:
                raise LexiconError(
                    f"{path}:{lineno}: expected 'lemma#pos<TAB>score', got {line!r}"
                )
            term, score_text = fields
            lemma, sep, tag = term.rpartition("#")
            if not sep or not lemma:
                raise LexiconError(
                    f"{path}:{lineno}: entry {term!r} is missing a lemma#pos separator"
                )
            try:
                pos = PosTag.parse(tag)
            except ValueError as exc:
                raise LexiconError(f"{path}:{lineno}: {exc}") from None
            try:
                score = float(score_text)
            except ValueError:
                raise LexiconError(
                    f"{path}:{lineno}: score {score_text!r} is not a number"
                ) from None
            if not -1.0 <= score <= 1.0:
                raise LexiconError(
                    f"{path}:{lineno}: score {score} outside [-1, 1]"
                )
            entries[(lemma.lower(), pos)] = score
    name = source_name if source_name is not None else str(path)
    return SentimentLexicon(entries.items(), source_name=name)


def bundled_lexicon() -> SentimentLexicon:
    """Return the small general-purpose lexicon shipped with the package."""
    ref = resources.files("samscore").joinpath("fixtures/mini_lexicon.tsv")
    with resources.as_file(ref) as path:
        return load_lexicon(path, source_name="bundled mini lexicon")
