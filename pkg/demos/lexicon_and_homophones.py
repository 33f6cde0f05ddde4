"""
Pronunciations, homophones and distractors
==========================================

Looks up words in the bundled English and Mandarin lexicons and shows how
candidate distractors are ranked.
"""
from pronbias.fixtures import english_lexicon, mandarin_lexicon

en = english_lexicon()

# spelling and sound disagree: psalm has no /p/
print("psalm ->", " ".join(en.g2p("psalm")))

# lookups are case-insensitive; the stored surface form is kept
print("pac   ->", en.surface("pac"), " ".join(en.g2p("pac")))

# homophone keys drop stress digits, so PAC and pack collide
print("homophones of PAC:", sorted(en.homophones("PAC")))

# near-homophones add one-phoneme neighbours and spelling-rule alternatives
print("near-homophones of sale:", sorted(en.near_homophones("sale", 1)))
print("ranked distractors for sale:", en.distractors("sale")[:5])

# words outside the lexicon fall back to letter-to-sound rules
print("blorp ->", " ".join(en.g2p("blorp")))

zh = mandarin_lexicon()
# Mandarin keys keep tones; phrases are segmented greedily against the lexicon
print("中国银行 ->", " ".join(zh.g2p("中国银行")))
classes = sorted((c for c in zh.homophone_index.values() if len(c) > 1), key=len, reverse=True)
print("largest Mandarin homophone class:", sorted(classes[0]))
