"""Word frequencies and the common/rare vocabulary split.

Under the biasing-list protocol the ``n`` most frequent training words are
common and every other word is rare. Ties at the cut-off are broken
lexicographically, so a split is reproducible.
"""
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .metrics import WordsEN, tokenize

COMMON_VOCAB_SIZE = 5000


@dataclass(frozen=True)
class FreqTable:
    counts: dict = field(default_factory=dict)
    total_tokens: int = 0

    def __post_init__(self):
        if any(c < 1 for c in self.counts.values()):
            raise ValueError("frequency counts must be >= 1")
        if sum(self.counts.values()) != self.total_tokens:
            raise ValueError("total_tokens does not match counts")

    @property
    def vocabulary(self):
        return set(self.counts)


@dataclass(frozen=True)
class VocabSplit:
    common: frozenset

    def is_rare(self, word: str) -> bool:
        return word not in self.common

    def is_common(self, word: str) -> bool:
        return word in self.common

    def rare_words(self, vocabulary: Iterable[str]) -> list:
        return sorted(w for w in set(vocabulary) if w not in self.common)


def count_frequencies(manifest: Iterable, policy=WordsEN) -> FreqTable:
    """Tally tokens over utterances given as raw text or token lists."""
    counts = Counter()
    for utt in manifest:
        counts.update(tokenize(utt, policy) if isinstance(utt, str) else utt)
    return FreqTable(dict(counts), sum(counts.values()))


def common_word_list(freq: FreqTable, n: int = COMMON_VOCAB_SIZE) -> VocabSplit:
    if n < 0:
        raise ValueError("n must be >= 0")
    ranked = sorted(freq.counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return VocabSplit(frozenset(w for w, _ in ranked[:n]))


def write_vocab(split: VocabSplit, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        for w in sorted(split.common):
            f.write(w + "\n")


def read_word_list(path) -> list:
    """Word-per-line file; blank lines and ``#`` comments skipped."""
    with open(path, encoding="utf-8") as f:
        return [ln.strip() for ln in f if ln.strip() and not ln.startswith("#")]
