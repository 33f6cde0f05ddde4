"""
Biased and unbiased error rates
===============================

Splits word errors by whether the reference word is on the bias list, for
English words and for Mandarin characters.
"""
from pronbias.align import align
from pronbias.metrics import CharsZH, WordsEN, biased_wer, report, utterance_breakdown

ref = "a b c".split()
hyp = "a c".split()
# the deleted word b is not biased, so all the error lands on the unbiased side
print([op.kind.value for op in align(ref, hyp).ops])
b = utterance_breakdown(ref, hyp, {"c"})
print("biased:", b.biased.as_dict(), "unbiased:", b.unbiased.as_dict())

refs = ["the PAC met after the sale", "a psalm for the sail"]
hyps = ["the pack met after the sail", "a psalm for the sail"]
res = biased_wer(refs, hyps, {"PAC", "sale", "psalm"}, WordsEN)
print(report(res, len(refs)))

# an empty bias list leaves B-WER undefined and U-WER equal to WER
print(report(biased_wer(refs, hyps, set()), len(refs)))

# Mandarin is scored per character; bias phrases mark character spans
zh = biased_wer(["我在中国银行"], ["我在中果银行"], {"中国"}, CharsZH)
print(report(zh, 1))
