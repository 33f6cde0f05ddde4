"""Keyword contexts: grapheme-only lists, grapheme-phoneme annotation and
homophone distractors.

A context comes in three kinds:

* ``G``    - bare words: ``speech, PAC``
* ``GP``   - every word followed by its phonemes: ``speech (S P IY1 CH), PAC (P AE1 K)``
* ``GPGD`` - as ``GP``, and words that occur in the reference transcript are
  followed by a grapheme-only distractor: ``speech (S P IY1 CH), PAC (P AE1 K), pack``

:func:`construct_pgcl_context` samples one of the three kinds from a
grapheme-only context with probabilities ``p1``, ``p2`` and ``1 - p1 - p2``.
"""
import random
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence

from .corpus import VocabSplit
from .errors import EmptyReference, ListTooSmall, PoolOverlap, RareVocabularyExhausted
from .lexicon import Lexicon

P1 = 1 / 3
P2 = 1 / 3
MIN_ARBITRARY = 1
MAX_ARBITRARY = 100
MAX_KEYWORDS = 3

ENGLISH_BIAS_SIZES = (100, 500, 1000, 2000)
MANDARIN_BIAS_SIZES = (187, 400, 600)


class ContextKind(str, Enum):
    G = "G"
    GP = "GP"
    GPGD = "GPGD"


@dataclass(frozen=True)
class ContextEntry:
    word: str
    pron: Optional[tuple] = None
    distractor: Optional[str] = None

    def __post_init__(self):
        if self.pron is not None:
            object.__setattr__(self, "pron", tuple(self.pron))
        if self.distractor is not None:
            if self.pron is None:
                raise ValueError("a distractor requires a pronunciation")
            if self.distractor == self.word:
                raise ValueError(f"distractor equals its word: {self.word!r}")


@dataclass(frozen=True)
class Context:
    kind: ContextKind
    entries: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "kind", ContextKind(self.kind))
        object.__setattr__(self, "entries", tuple(self.entries))
        for e in self.entries:
            if self.kind is ContextKind.G and (e.pron is not None or e.distractor is not None):
                raise ValueError(f"G context entry carries annotation: {e.word!r}")
            if self.kind is not ContextKind.G and e.pron is None:
                raise ValueError(f"{self.kind.value} context entry lacks a pronunciation: {e.word!r}")
            if self.kind is ContextKind.GP and e.distractor is not None:
                raise ValueError(f"GP context entry carries a distractor: {e.word!r}")

    @property
    def words(self):
        return [e.word for e in self.entries]

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class ContextPolicy:
    p1: float = P1
    p2: float = P2
    min_arbitrary: int = MIN_ARBITRARY
    max_arbitrary: int = MAX_ARBITRARY
    # fixed keyword count; None draws k uniformly from [1, min(max_keywords, distinct)]
    keyword_count: Optional[int] = None
    max_keywords: int = MAX_KEYWORDS
    distractor_max_dist: int = 1

    def __post_init__(self):
        if self.p1 < 0 or self.p2 < 0 or self.p1 + self.p2 > 1 + 1e-12:
            raise ValueError(f"need p1, p2 >= 0 and p1 + p2 <= 1 (got {self.p1}, {self.p2})")
        if not 1 <= self.min_arbitrary <= self.max_arbitrary:
            raise ValueError("need 1 <= min_arbitrary <= max_arbitrary")
        if self.keyword_count is not None and self.keyword_count < 1:
            raise ValueError("keyword_count must be >= 1")
        if self.max_keywords < 1:
            raise ValueError("max_keywords must be >= 1")


def _occurs(word, folded_ref):
    return word.casefold() in folded_ref


def select_keywords(reference: Sequence[str], policy: ContextPolicy, rng: random.Random) -> list:
    """Sample distinct reference words without replacement, kept in reference order."""
    distinct = list(dict.fromkeys(reference))
    if not distinct:
        raise EmptyReference()
    if policy.keyword_count is not None:
        k = policy.keyword_count
    else:
        k = rng.randint(1, min(policy.max_keywords, len(distinct)))
    k = min(k, len(distinct))
    picked = sorted(rng.sample(range(len(distinct)), k))
    return [distinct[i] for i in picked]


def build_grapheme_context(keywords: Sequence[str], pool: Sequence[str], policy: ContextPolicy,
                           rng: random.Random) -> Context:
    """Keywords plus ``m`` arbitrary pool words, shuffled.

    ``m`` is uniform on ``[min_arbitrary, max_arbitrary]`` and clamped to the
    pool size.
    """
    folded = {k.casefold() for k in keywords}
    pool = list(dict.fromkeys(pool))
    for w in pool:
        if w.casefold() in folded:
            raise PoolOverlap(w)
    m = min(rng.randint(policy.min_arbitrary, policy.max_arbitrary), len(pool))
    words = list(keywords) + rng.sample(pool, m)
    rng.shuffle(words)
    return Context(ContextKind.G, tuple(ContextEntry(w) for w in words))


def construct_pgcl_context(cg: Context, reference: Sequence[str], lex: Lexicon,
                           policy: ContextPolicy, rng: random.Random,
                           r: Optional[float] = None) -> Context:
    """Sample a G, GP or GPGD context from the grapheme-only ``cg``.

    ``r`` overrides the uniform draw. In the GPGD branch a reference word gets
    the lexicon's best distractor (exact homophone first, then the nearest
    alternative, ties by spelling); a word with none is annotated without one.
    Each word takes part in at most one swap, so perturbation stays a
    transposition: a candidate already used by an earlier entry is skipped.
    """
    if cg.kind is not ContextKind.G:
        raise ValueError(f"expected a G context, got {cg.kind.value}")
    if r is None:
        r = rng.random()
    if r < policy.p1:
        return Context(ContextKind.GP, tuple(ContextEntry(w, lex.g2p(w)) for w in cg.words))
    if r < policy.p1 + policy.p2:
        folded_ref = {t.casefold() for t in reference}
        entries = []
        used = set()
        for w in cg.words:
            pron = lex.g2p(w)
            distractor = None
            if _occurs(w, folded_ref) and w in lex and w.casefold() not in used:
                distractor = lex.best_distractor(w, policy.distractor_max_dist, exclude=used)
                if distractor is not None:
                    used.update((w.casefold(), distractor.casefold()))
            entries.append(ContextEntry(w, pron, distractor))
        return Context(ContextKind.GPGD, tuple(entries))
    return cg


_RESERVED = re.compile(r"[,()]")


def render_context(ctx: Context) -> str:
    items = []
    for e in ctx.entries:
        for text in (e.word, e.distractor):
            if text is not None and (_RESERVED.search(text) or text != text.strip() or not text):
                raise ValueError(f"cannot render context word {text!r}")
        if e.pron is None:
            items.append(e.word)
        else:
            items.append(f"{e.word} ({' '.join(e.pron)})")
            if e.distractor is not None:
                items.append(e.distractor)
    return ", ".join(items)


_ANNOTATED = re.compile(r"^(.+?) \(([^()]*)\)$")


def parse_context(text: str, kind: ContextKind) -> Context:
    """Inverse of :func:`render_context` for a known context kind."""
    kind = ContextKind(kind)
    if not text:
        return Context(kind, ())
    entries = []
    for item in text.split(", "):
        m = _ANNOTATED.match(item)
        if m:
            entries.append(ContextEntry(m.group(1), tuple(m.group(2).split())))
        elif kind is ContextKind.GPGD:
            if not entries or entries[-1].distractor is not None:
                raise ValueError(f"distractor {item!r} does not follow an annotated entry")
            prev = entries.pop()
            entries.append(ContextEntry(prev.word, prev.pron, item))
        else:
            entries.append(ContextEntry(item))
    return Context(kind, tuple(entries))


def build_bias_list(test_refs: Iterable[Sequence[str]], split: VocabSplit, n: int,
                    rng: random.Random, vocabulary: Iterable[str]) -> set:
    """Every rare word in ``test_refs`` plus rare distractors drawn from ``vocabulary``.

    With ``n`` equal to the number of in-reference rare words nothing is
    padded (the ground-truth condition).
    """
    required = sorted({t for ref in test_refs for t in ref if split.is_rare(t)})
    if n < len(required):
        raise ListTooSmall(len(required), n)
    taken = set(required)
    pool = sorted({w for w in vocabulary if split.is_rare(w) and w not in taken})
    need = n - len(required)
    if need > len(pool):
        raise RareVocabularyExhausted(len(pool), n)
    return taken | set(rng.sample(pool, need))
