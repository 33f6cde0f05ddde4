"""Exception types raised across the package."""


class PronbiasError(ValueError):
    pass


class MalformedLine(PronbiasError):
    def __init__(self, line_no, line=""):
        self.line_no = line_no
        super().__init__(f"malformed line {line_no}: {line!r}")


class UnknownSymbol(PronbiasError):
    def __init__(self, word, symbol):
        self.word = word
        self.symbol = symbol
        super().__init__(f"unknown phoneme symbol {symbol!r} in entry {word!r}")


class UnknownWord(PronbiasError, KeyError):
    def __init__(self, word):
        self.word = word
        PronbiasError.__init__(self, f"word not in lexicon: {word!r}")

    def __str__(self):
        return self.args[0]


class OovUnmappable(UnknownWord):
    """No pronunciation available (absent from the lexicon, no fallback output)."""

    def __init__(self, word):
        self.word = word
        PronbiasError.__init__(self, f"cannot map out-of-vocabulary word to phonemes: {word!r}")


# the name used by context construction when g2p fails
G2pFailure = OovUnmappable


class EmptyReference(PronbiasError):
    def __init__(self):
        super().__init__("reference has no tokens")


class PoolOverlap(PronbiasError):
    def __init__(self, word):
        self.word = word
        super().__init__(f"arbitrary-word pool overlaps keywords: {word!r}")


class ListTooSmall(PronbiasError):
    def __init__(self, required, n):
        self.required = required
        self.n = n
        super().__init__(f"bias list size {n} is smaller than the {required} rare reference words")


class RareVocabularyExhausted(PronbiasError):
    def __init__(self, available, n):
        super().__init__(f"only {available} rare words available to fill a bias list of size {n}")


class NoDistractorEntries(PronbiasError):
    def __init__(self):
        super().__init__("context has no entry carrying a distractor")


class SwapConflict(PronbiasError):
    def __init__(self, word):
        self.word = word
        super().__init__(f"word {word!r} is swapped with more than one partner")


class InputTooLong(PronbiasError):
    def __init__(self, length, limit):
        super().__init__(f"sequence of {length} tokens exceeds alignment limit {limit}")


class LengthMismatch(PronbiasError):
    def __init__(self, n_refs, n_hyps):
        super().__init__(f"{n_refs} references but {n_hyps} hypotheses")


class EmptyReferenceCorpus(PronbiasError):
    def __init__(self):
        super().__init__("reference corpus has no tokens")
