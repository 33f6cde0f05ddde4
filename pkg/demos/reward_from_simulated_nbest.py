"""
Biased MWER reward on simulated N-best lists
============================================

Generates N-best lists with a homophone-confusion decoder and scores them.
When the context boosts the true keyword, the probability mass sits on
hypotheses with fewer biased errors and the loss is negative. Boosting the
homophone instead flips the sign.
"""
import random

import numpy as np

from pronbias.context import Context, ContextEntry, ContextKind
from pronbias.fixtures import english_lexicon
from pronbias.reward import combined_objective, mwer_biased_loss, mwer_from_arrays, pdrl_loss, pgcl_loss
from pronbias.simdec import ConfusionModel, simulate_nbest

lex = english_lexicon()
model = ConfusionModel(p_confuse=0.5, bias_boost=2.0, confusion_penalty=0.5)
reference = "we met at the sale".split()


def gp(*words):
    return Context(ContextKind.GP, tuple(ContextEntry(w, lex.g2p(w)) for w in words))


for boosted in ("sale", "sail"):
    nbest = simulate_nbest(reference, gp(boosted), lex, model, rng=random.Random(11))
    rep = mwer_biased_loss(nbest, reference, {"sale"})
    print(f"boost {boosted!r}: W_b={list(map(int, rep.wb))} p={np.round(rep.probs, 3).tolist()} loss={rep.loss:+.4f}")
    for h in nbest.hyps[:3]:
        print("   ", " ".join(h.tokens), h.loglik)

# the hand-checkable case: two hypotheses, probabilities 0.8/0.2, W_b 0 and 2
print("fixture loss:", mwer_from_arrays([0.8, 0.2], [0, 2]).loss)

# training objective: both reward terms plus a small weight on the context CE terms
orig = simulate_nbest(reference, gp("sale"), lex, model, rng=random.Random(1))
pert_ref = "we met at the sail".split()
pert = simulate_nbest(pert_ref, gp("sail"), lex, model, rng=random.Random(1))
pdrl = pdrl_loss((orig, reference), (pert, pert_ref), {"sale"}, pert_bias={"sail"})
print("objective:", combined_objective(pdrl, pgcl_loss(2.1, 1.7, 1.9)))
