"""
Building keyword contexts
=========================

Draws keywords from a reference, pads them with arbitrary words and samples
one of the three context kinds. The draw ``r`` is forced here so every branch
is shown; left unset it is uniform.
"""
import random
from collections import Counter

from pronbias.context import (ContextPolicy, build_grapheme_context, construct_pgcl_context, render_context,
                              select_keywords)
from pronbias.fixtures import english_lexicon

lex = english_lexicon()
policy = ContextPolicy(min_arbitrary=2, max_arbitrary=4)
rng = random.Random(16)

reference = "please check the PAC before the sale".split()
keywords = select_keywords(reference, policy, rng)
pool = [w for w in lex if w not in keywords]
cg = build_grapheme_context(keywords, pool, policy, rng)
print("keywords:", keywords)

for label, r in (("grapheme only", 0.9), ("with phonemes", 0.1), ("with distractors", 0.5)):
    ctx = construct_pgcl_context(cg, reference, lex, policy, rng, r=r)
    print(f"{label:>16}: {render_context(ctx)}")

# with the default policy each branch is taken a third of the time
counts = Counter(construct_pgcl_context(cg, reference, lex, ContextPolicy(), random.Random(i)).kind.value
                 for i in range(3000))
print("branch counts over 3000 draws:", dict(sorted(counts.items())))
