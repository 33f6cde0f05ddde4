"""Perturbed label sampling: swap keywords with their homophone distractors.

Every distractor-bearing entry ``(w, T(w), w')`` of a GPGD context becomes
``(w', T(w'), w)`` and the reference has ``w`` and ``w'`` exchanged at every
occurrence. The exchange is a transposition, so applying it twice restores
the input.
"""
from dataclasses import dataclass
from typing import Sequence

from .context import Context, ContextEntry, ContextKind
from .errors import NoDistractorEntries, SwapConflict, UnknownWord
from .lexicon import Lexicon


@dataclass(frozen=True)
class PerturbedPair:
    original_ref: tuple
    perturbed_ref: tuple
    original_ctx: Context
    perturbed_ctx: Context
    swapped: tuple  # ((word, distractor), ...)

    def inverted(self) -> "PerturbedPair":
        return PerturbedPair(self.perturbed_ref, self.original_ref, self.perturbed_ctx,
                             self.original_ctx, tuple((d, w) for w, d in self.swapped))


def _swap_table(swaps):
    table = {}
    for w, d in swaps:
        for a, b in ((w, d), (d, w)):
            key = a.casefold()
            if key in table and table[key].casefold() != b.casefold():
                raise SwapConflict(a)
            table[key] = b
    return table


def perturb_pair(reference: Sequence[str], ctx: Context, lex: Lexicon) -> PerturbedPair:
    if ctx.kind is not ContextKind.GPGD:
        raise ValueError(f"expected a GPGD context, got {ctx.kind.value}")
    swaps = tuple((e.word, e.distractor) for e in ctx.entries if e.distractor is not None)
    if not swaps:
        raise NoDistractorEntries()
    for _, d in swaps:
        if d not in lex:
            raise UnknownWord(d)
    table = _swap_table(swaps)
    new_ref = tuple(table.get(t.casefold(), t) for t in reference)
    entries = []
    for e in ctx.entries:
        if e.distractor is None:
            entries.append(e)
        else:
            entries.append(ContextEntry(e.distractor, lex.g2p(e.distractor), e.word))
    return PerturbedPair(tuple(reference), new_ref, ctx, Context(ContextKind.GPGD, tuple(entries)), swaps)
