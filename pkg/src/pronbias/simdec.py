"""A homophone-confusion mock decoder producing N-best lists.

Each hypothesis replaces every reference word, independently with
probability ``p_confuse``, by a uniform draw from its exact homophones (words
without homophones, or outside the lexicon, pass through). Scores follow a
fixed formula so tests can compute them by hand:

    loglik = -base_loglik_scale * len(ref)
             - confusion_penalty * (#positions differing from ref)
             + bias_boost * (#hypothesis tokens that are context entry words)
"""
import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .context import Context
from .lexicon import Lexicon
from .reward import NBEST_SIZE, Hypothesis, NBestList


@dataclass(frozen=True)
class ConfusionModel:
    p_confuse: float = 0.3
    bias_boost: float = 2.0
    base_loglik_scale: float = 1.0
    confusion_penalty: float = 1.0

    def __post_init__(self):
        if not 0 <= self.p_confuse <= 1:
            raise ValueError("p_confuse must lie in [0, 1]")
        if self.bias_boost < 0:
            raise ValueError("bias_boost must be >= 0")
        if self.confusion_penalty < 0:
            raise ValueError("confusion_penalty must be >= 0")


def context_words(ctx: Optional[Context]) -> set:
    return {w.casefold() for w in ctx.words} if ctx is not None else set()


def score_hypothesis(tokens: Sequence[str], ref: Sequence[str], ctx_words: Iterable[str],
                     model: ConfusionModel) -> float:
    boosted = {w.casefold() for w in ctx_words}
    confusions = sum(1 for h, r in zip(tokens, ref) if h != r)
    hits = sum(1 for t in tokens if t.casefold() in boosted)
    return (-model.base_loglik_scale * len(ref) - model.confusion_penalty * confusions
            + model.bias_boost * hits)


def simulate_nbest(ref: Sequence[str], ctx: Optional[Context], lex: Lexicon, model: ConfusionModel,
                   n: int = NBEST_SIZE, rng: Optional[random.Random] = None) -> NBestList:
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = rng or random.Random(0)
    # sorted so draws do not depend on set iteration order
    alternatives = [sorted(lex.homophones(t)) if t in lex else [] for t in ref]
    ctx_words = context_words(ctx)
    hyps = []
    for _ in range(n):
        tokens = []
        for t, alts in zip(ref, alternatives):
            # one draw per position keeps the random stream aligned across models
            confuse = rng.random() < model.p_confuse
            pick = rng.choice(alts) if alts else t
            tokens.append(pick if confuse and alts else t)
        hyps.append(Hypothesis(tuple(tokens), score_hypothesis(tokens, ref, ctx_words, model)))
    return NBestList(tuple(hyps))
