"""WER/CER and the biased/unbiased error split (B-WER, U-WER).

Substitutions and deletions are charged to the biased side when the
reference token is a bias-list word. Insertions are charged by the inserted
hypothesis token (``insertions="hyp"``, the default) or always to the
unbiased side (``insertions="unbiased"``).

For character-scored Mandarin, bias entries are multi-character strings. They
are located with a greedy left-to-right longest match and every character
inside a matched span counts as biased.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, NamedTuple, Optional, Sequence

from .align import OpKind, align
from .errors import EmptyReferenceCorpus, LengthMismatch


class TokenizationPolicy(str, Enum):
    WORDS_EN = "WordsEN"
    CHARS_ZH = "CharsZH"

    @classmethod
    def for_lang(cls, lang):
        return {"en": cls.WORDS_EN, "zh": cls.CHARS_ZH}[lang]


WordsEN = TokenizationPolicy.WORDS_EN
CharsZH = TokenizationPolicy.CHARS_ZH

INSERTION_MODES = ("hyp", "unbiased")


def tokenize(text: str, policy: TokenizationPolicy = WordsEN) -> list:
    if policy is TokenizationPolicy.CHARS_ZH:
        return [c for c in text if not c.isspace()]
    return text.casefold().split()


@dataclass
class ErrorCounts:
    sub: int = 0
    dele: int = 0
    ins: int = 0
    ref: int = 0

    @property
    def errors(self):
        return self.sub + self.dele + self.ins

    def rate(self) -> Optional[float]:
        """Errors per reference token; None when there are no reference tokens."""
        return self.errors / self.ref if self.ref else None

    def __iadd__(self, other):
        self.sub += other.sub
        self.dele += other.dele
        self.ins += other.ins
        self.ref += other.ref
        return self

    def as_dict(self):
        return {"sub": self.sub, "del": self.dele, "ins": self.ins, "ref": self.ref}


@dataclass
class ErrorBreakdown:
    biased: ErrorCounts = field(default_factory=ErrorCounts)
    unbiased: ErrorCounts = field(default_factory=ErrorCounts)

    @property
    def errors(self):
        return self.biased.errors + self.unbiased.errors

    @property
    def ref_count(self):
        return self.biased.ref + self.unbiased.ref

    def __iadd__(self, other):
        self.biased += other.biased
        self.unbiased += other.unbiased
        return self


class BiasedWerResult(NamedTuple):
    bwer: Optional[float]
    uwer: Optional[float]
    wer: float
    breakdown: ErrorBreakdown


def _as_tokens(x, policy):
    if isinstance(x, str):
        return tokenize(x, policy)
    if policy is TokenizationPolicy.CHARS_ZH:
        return tokenize("".join(x), policy)
    return [t.casefold() for t in x]


def _normalize_bias(bias, policy):
    if policy is TokenizationPolicy.CHARS_ZH:
        return {"".join(b.split()) for b in bias if b.strip()}
    return {b.casefold() for b in bias}


def span_mask(chars: Sequence[str], bias: set) -> list:
    """Mark characters covered by greedy longest-match bias spans."""
    mask = [False] * len(chars)
    if not bias:
        return mask
    longest = max(map(len, bias))
    i = 0
    while i < len(chars):
        for size in range(min(longest, len(chars) - i), 0, -1):
            if "".join(chars[i:i + size]) in bias:
                for k in range(i, i + size):
                    mask[k] = True
                i += size
                break
        else:
            i += 1
    return mask


def _mask(tokens, bias, policy):
    if policy is TokenizationPolicy.CHARS_ZH:
        return span_mask(tokens, bias)
    return [t in bias for t in tokens]


def utterance_breakdown(ref, hyp, bias, policy=WordsEN, insertions="hyp",
                        normalized=False) -> ErrorBreakdown:
    if insertions not in INSERTION_MODES:
        raise ValueError(f"insertions must be one of {INSERTION_MODES}")
    if not normalized:
        ref, hyp = _as_tokens(ref, policy), _as_tokens(hyp, policy)
        bias = _normalize_bias(bias, policy)
    ref_mask = _mask(ref, bias, policy)
    hyp_mask = _mask(hyp, bias, policy)
    out = ErrorBreakdown()
    for m in ref_mask:
        (out.biased if m else out.unbiased).ref += 1
    for op in align(ref, hyp).ops:
        if op.kind is OpKind.MATCH:
            continue
        if op.kind is OpKind.INSERT:
            side = out.biased if insertions == "hyp" and hyp_mask[op.hyp_index] else out.unbiased
            side.ins += 1
            continue
        side = out.biased if ref_mask[op.ref_index] else out.unbiased
        if op.kind is OpKind.SUBSTITUTE:
            side.sub += 1
        else:
            side.dele += 1
    return out


def corpus_wer(refs: Sequence[Sequence[str]], hyps: Sequence[Sequence[str]]) -> float:
    if len(refs) != len(hyps):
        raise LengthMismatch(len(refs), len(hyps))
    total_ref = sum(len(r) for r in refs)
    if total_ref == 0:
        raise EmptyReferenceCorpus()
    return sum(align(r, h).cost for r, h in zip(refs, hyps)) / total_ref


def biased_wer(refs: Iterable, hyps: Iterable, bias: Iterable[str], policy=WordsEN,
               insertions: str = "hyp") -> BiasedWerResult:
    """Corpus-level B-WER, U-WER and WER.

    ``refs``/``hyps`` hold raw strings or token lists. A side with no
    reference tokens has rate ``None`` (undefined), never 0.
    """
    refs, hyps = list(refs), list(hyps)
    if len(refs) != len(hyps):
        raise LengthMismatch(len(refs), len(hyps))
    bias = _normalize_bias(bias, policy)
    total = ErrorBreakdown()
    for r, h in zip(refs, hyps):
        total += utterance_breakdown(_as_tokens(r, policy), _as_tokens(h, policy), bias,
                                     policy, insertions, normalized=True)
    if total.ref_count == 0:
        raise EmptyReferenceCorpus()
    return BiasedWerResult(total.biased.rate(), total.unbiased.rate(),
                           total.errors / total.ref_count, total)


def _fmt(rate, digits):
    if rate is None:
        return "undefined"
    return round(rate, digits) if digits is not None else rate


def report(result: BiasedWerResult, utterances: int, digits: Optional[int] = 4) -> dict:
    """The evaluation report record; undefined rates become ``"undefined"``."""
    b = result.breakdown
    return {
        "utterances": utterances,
        "wer": _fmt(result.wer, digits),
        "bwer": _fmt(result.bwer, digits),
        "uwer": _fmt(result.uwer, digits),
        "biased": b.biased.as_dict(),
        "unbiased": b.unbiased.as_dict(),
    }
