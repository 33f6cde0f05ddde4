"""
Perturbed reference and context pairs
=====================================

Swaps each keyword that carries a distractor with that distractor, in both
the reference and the context. Applying the swap twice gives back the input.
"""
import random

from pronbias.context import Context, ContextEntry, ContextKind, ContextPolicy, construct_pgcl_context, render_context
from pronbias.fixtures import english_lexicon
from pronbias.perturb import perturb_pair

lex = english_lexicon()
reference = "the PAC will meet after the sale".split()
cg = Context(ContextKind.G, tuple(ContextEntry(w) for w in ("speech", "PAC", "sale")))
ctx = construct_pgcl_context(cg, reference, lex, ContextPolicy(), random.Random(0), r=0.5)

pair = perturb_pair(reference, ctx, lex)
print("reference :", " ".join(pair.original_ref))
print("context   :", render_context(pair.original_ctx))
print("perturbed :", " ".join(pair.perturbed_ref))
print("context   :", render_context(pair.perturbed_ctx))
print("swapped   :", pair.swapped)

back = perturb_pair(pair.perturbed_ref, pair.perturbed_ctx, lex)
print("round trip restores the input:", back.perturbed_ref == tuple(reference) and back.perturbed_ctx == ctx)
