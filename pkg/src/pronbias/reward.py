"""Biased minimum-word-error-rate objectives over N-best lists.

For hypotheses ``y_1..y_N`` with normalized likelihoods ``p_i`` and biased
error counts ``W_i`` against the reference, the loss is

    L = (1/N) * sum_i p_i * (W_i - mean(W))

which equals ``(E_p[W] - mean(W)) / N``. Hypotheses with fewer biased errors
than the list average carry negative advantage, so moving probability mass
onto them lowers the loss.
"""
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .metrics import WordsEN, utterance_breakdown

NBEST_SIZE = 8
CE_WEIGHT = 0.01
WB_MODES = ("count", "rate")


@dataclass(frozen=True)
class Hypothesis:
    tokens: tuple
    loglik: float


@dataclass(frozen=True)
class NBestList:
    hyps: tuple

    def __post_init__(self):
        object.__setattr__(self, "hyps", tuple(self.hyps))
        if not self.hyps:
            raise ValueError("an N-best list needs at least one hypothesis")
        for h in self.hyps:
            if not math.isfinite(h.loglik):
                raise ValueError(f"non-finite log-likelihood {h.loglik}")

    @classmethod
    def from_pairs(cls, pairs: Iterable):
        return cls(tuple(Hypothesis(tuple(t), float(ll)) for t, ll in pairs))

    @property
    def logliks(self):
        return np.array([h.loglik for h in self.hyps], dtype=float)

    def __len__(self):
        return len(self.hyps)


@dataclass(frozen=True)
class RewardReport:
    probs: tuple
    wb: tuple
    mean_wb: float
    advantages: tuple
    loss: float

    def as_dict(self):
        return {
            "probs": list(self.probs),
            "wb": list(self.wb),
            "mean_wb": self.mean_wb,
            "advantages": list(self.advantages),
            "loss": self.loss,
        }


def normalize_likelihoods(nbest) -> np.ndarray:
    """Softmax of the log-likelihoods over the list itself."""
    ll = nbest.logliks if isinstance(nbest, NBestList) else np.asarray(nbest, dtype=float)
    z = np.exp(ll - ll.max())
    return z / z.sum()


def biased_error_count(hyp: Sequence[str], ref: Sequence[str], bias, policy=WordsEN,
                       mode: str = "count", insertions: str = "hyp") -> float:
    """Biased errors of ``hyp`` against ``ref``; ``mode="rate"`` divides by biased reference tokens."""
    if mode not in WB_MODES:
        raise ValueError(f"mode must be one of {WB_MODES}")
    side = utterance_breakdown(ref, hyp, bias, policy, insertions).biased
    if mode == "count":
        return side.errors
    return side.errors / max(side.ref, 1)


def mwer_from_arrays(probs: Sequence[float], wb: Sequence[float]) -> RewardReport:
    probs = np.asarray(probs, dtype=float)
    wb = np.asarray(wb, dtype=float)
    n = len(wb)
    mean = math.fsum(wb) / n
    adv = wb - mean
    loss = math.fsum(probs * adv) / n
    return RewardReport(tuple(probs.tolist()), tuple(wb.tolist()), mean, tuple(adv.tolist()), loss)


def mwer_biased_loss(nbest: NBestList, ref: Sequence[str], bias, policy=WordsEN,
                     mode: str = "count", insertions: str = "hyp") -> RewardReport:
    wb = [biased_error_count(h.tokens, ref, bias, policy, mode, insertions) for h in nbest.hyps]
    return mwer_from_arrays(normalize_likelihoods(nbest), wb)


def _loss_of(item, bias, **kw):
    nbest, ref = item[0], item[1]  # a third element (the context) is accepted and ignored
    return mwer_biased_loss(nbest, ref, bias, **kw).loss


def pdrl_loss(orig, pert, bias, pert_bias=None, **kw) -> float:
    """Sum of the biased MWER losses of the original and the perturbed input.

    ``orig`` and ``pert`` are ``(nbest, ref)`` or ``(nbest, ref, ctx)``.
    ``pert_bias`` defaults to ``bias``; it should list the swapped-in words.
    """
    return _loss_of(orig, bias, **kw) + _loss_of(pert, bias if pert_bias is None else pert_bias, **kw)


def pgcl_loss(ce_g: float, ce_gp: float, ce_gpgd: float) -> float:
    """Aggregate cross-entropy over the three context kinds (values computed elsewhere)."""
    return ce_g + ce_gp + ce_gpgd


def combined_objective(pdrl: float, pgcl: float, ce_weight: float = CE_WEIGHT) -> float:
    if ce_weight < 0:
        raise ValueError("ce_weight must be >= 0")
    return pdrl + ce_weight * pgcl
