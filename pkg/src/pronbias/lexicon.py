"""Pronunciation lexicons: grapheme-to-phoneme lookup and homophone indexing.

Dictionary files hold one ``word<TAB>sym1 sym2 ...`` entry per line; lines
starting with ``#`` are comments. A word listed on several lines collects
alternate pronunciations in file order and the first one is canonical.

Lookups are case-insensitive but the surface form from the file is kept, so
``PAC`` stays upper-case when rendered.

Homophone keys drop English stress digits (``IY1`` -> ``IY``) and keep
Mandarin tone digits.
"""
import re
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from typing import Optional

from .align import edit_distance
from .errors import MalformedLine, OovUnmappable, UnknownSymbol, UnknownWord

PhonemeSeq = tuple  # tuple[str, ...]


class InventoryId(str, Enum):
    ARPABET_EN = "ArpabetEN"
    PINYIN_ZH = "PinyinZH"


@dataclass(frozen=True)
class PhonemeInventory:
    id: InventoryId
    symbols: frozenset

    def __post_init__(self):
        if not self.symbols:
            raise ValueError("empty phoneme inventory")
        for s in self.symbols:
            if not s or any(c.isspace() for c in s):
                raise ValueError(f"bad inventory symbol {s!r}")

    def __contains__(self, symbol):
        return symbol in self.symbols


ARPABET_CONSONANTS = (
    "B CH D DH F G HH JH K L M N NG P R S SH T TH V W Y Z ZH".split()
)
ARPABET_VOWELS = "AA AE AH AO AW AY EH ER EY IH IY OW OY UH UW".split()

ARPABET_EN = PhonemeInventory(
    InventoryId.ARPABET_EN,
    frozenset(ARPABET_CONSONANTS) | frozenset(v + s for v in ARPABET_VOWELS for s in "012"),
)

PINYIN_BASES = """
a ai an ang ao ba bai ban bang bao bei ben beng bi bian biang biao bie bin bing bo
bong bu ca cai can cang cao ce cei cen ceng cha chai chan chang chao che chen cheng
chi chong chou chu chua chuai chuan chuang chui chun chuo ci cong cou cu cuan cui
cun cuo da dai dan dang dao de dei den deng di dia dian diao die din ding diu dong
dou du duan dui dun duo e ei en eng er fa fan fang fei fen feng fiao fo fou fu ga
gai gan gang gao ge gei gen geng gong gou gu gua guai guan guang gui gun guo ha hai
han hang hao he hei hen heng hm hng hong hou hu hua huai huan huang hui hun huo ji
jia jian jiang jiao jie jin jing jiong jiu ju juan jue jun ka kai kan kang kao ke
kei ken keng kong kou ku kua kuai kuan kuang kui kun kuo la lai lan lang lao le lei
len leng li lia lian liang liao lie lin ling liu lo long lou lu luan lun luo lv lve
m ma mai man mang mao me mei men meng mi mian miao mie min ming miu mo mou mu n na
nai nan nang nao ne nei nen neng ng ni nia nian niang niao nie nin ning niu nong
nou nu nuan nun nuo nv nve o ou pa pai pan pang pao pei pen peng pi pian piao pie
pin ping po pou pu qi qia qian qiang qiao qie qin qing qiong qiu qu quan que qun
ran rang rao re ren reng ri rong rou ru rua ruan rui run ruo sa sai san sang sao
se sen seng sha shai shan shang shao she shei shen sheng shi shou shu shua shuai
shuan shuang shui shun shuo si song sou su suan sui sun suo ta tai tan tang tao te
tei teng ti tian tiao tie ting tong tou tu tuan tui tun tuo wa wai wan wang wei wen
weng wo wong wu xi xia xian xiang xiao xie xin xing xiong xiu xu xuan xue xun ya
yan yang yao ye yi yin ying yo yong you yu yuan yue yun za zai zan zang zao ze zei
zen zeng zha zhai zhan zhang zhao zhe zhei zhen zheng zhi zhong zhou zhu zhua zhuai
zhuan zhuang zhui zhun zhuo zi zong zou zu zuan zui zun zuo
""".split()

PINYIN_ZH = PhonemeInventory(
    InventoryId.PINYIN_ZH,
    frozenset(b + t for b in PINYIN_BASES for t in "12345"),
)


def inventory_for(lang: str) -> PhonemeInventory:
    return {"en": ARPABET_EN, "zh": PINYIN_ZH}[lang]


# Letter-to-sound fallback for English OOV words: greedy longest match,
# left to right. The first vowel gets primary stress, later ones none.
LTS_RULES = {
    "tion": "SH AH N", "sion": "ZH AH N", "igh": "AY", "tch": "CH", "dge": "JH",
    "ch": "CH", "sh": "SH", "th": "TH", "ph": "F", "wh": "W", "ck": "K",
    "ng": "NG", "qu": "K W", "kn": "N", "wr": "R", "gh": "G",
    "ee": "IY", "ea": "IY", "oo": "UW", "ai": "EY", "ay": "EY", "oa": "OW",
    "ou": "AW", "ow": "OW", "oi": "OY", "oy": "OY", "au": "AO", "aw": "AO",
    "ie": "IY", "ei": "EY", "ue": "UW", "ew": "UW",
    "a": "AE", "e": "EH", "i": "IH", "o": "AA", "u": "AH", "y": "IY",
    "b": "B", "c": "K", "d": "D", "f": "F", "g": "G", "h": "HH", "j": "JH",
    "k": "K", "l": "L", "m": "M", "n": "N", "p": "P", "q": "K", "r": "R",
    "s": "S", "t": "T", "v": "V", "w": "W", "x": "K S", "z": "Z",
}
_LTS_MAXLEN = max(map(len, LTS_RULES))


def letter_to_sound(word: str) -> PhonemeSeq:
    """Rule-based English pronunciation guess; empty tuple if nothing maps."""
    letters = re.sub(r"[^a-z]", "", word.casefold())
    # a silent final e after a consonant
    if len(letters) > 2 and letters.endswith("e") and letters[-2] not in "aeiouy":
        letters = letters[:-1]
    out = []
    i = 0
    while i < len(letters):
        for size in range(min(_LTS_MAXLEN, len(letters) - i), 0, -1):
            chunk = letters[i:i + size]
            if chunk in LTS_RULES:
                break
        # doubled consonants sound once
        if size == 1 and i > 0 and letters[i - 1] == chunk and chunk not in "aeiouy":
            i += 1
            continue
        out.extend(LTS_RULES[chunk].split())
        i += size
    stressed = False
    syms = []
    for s in out:
        if s in ARPABET_VOWELS:
            s += "0" if stressed else "1"
            stressed = True
        syms.append(s)
    return tuple(syms)


def load_spelling_rules(text: Optional[str] = None):
    """Parse a spelling-alternative table (``a<TAB>b`` per line, symmetric)."""
    if text is None:
        text = resources.files("pronbias.data").joinpath("en_rules.tsv").read_text("utf-8")
    rules = []
    for no, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise MalformedLine(no, line)
        rules.append((parts[0], parts[1]))
    return tuple(rules)


def spelling_variants(word: str, rules) -> set:
    """All strings reachable from ``word`` by applying one rule at one position."""
    w = word.casefold()
    out = set()
    for a, b in rules:
        for src, dst in ((a, b), (b, a)):
            start = w.find(src)
            while start != -1:
                out.add(w[:start] + dst + w[start + len(src):])
                start = w.find(src, start + 1)
    out.discard(w)
    return out


class Lexicon:
    """Immutable word -> pronunciations table with a homophone index."""

    def __init__(self, inventory: PhonemeInventory, entries=None, spelling_rules=(),
                 oov_fallback: bool = True):
        self.inventory = inventory
        self.spelling_rules = tuple(spelling_rules)
        self.oov_fallback = oov_fallback
        self._entries = {}
        self._fold = {}
        for word, prons in (entries or {}).items():
            for p in prons:
                self._add(word, tuple(p))
        self.homophone_index = {}
        for word, prons in self._entries.items():
            self.homophone_index.setdefault(self.key(prons[0]), set()).add(word)
        self.homophone_index = {k: frozenset(v) for k, v in self.homophone_index.items()}
        self._near_cache = {}

    def _add(self, word, pron):
        if not pron:
            raise ValueError(f"empty pronunciation for {word!r}")
        for s in pron:
            if s not in self.inventory:
                raise UnknownSymbol(word, s)
        surface = self._fold.setdefault(word.casefold(), word)
        self._entries.setdefault(surface, []).append(pron)

    @property
    def is_english(self):
        return self.inventory.id is InventoryId.ARPABET_EN

    @property
    def entries(self):
        return {w: list(p) for w, p in self._entries.items()}

    def __len__(self):
        return len(self._entries)

    def __contains__(self, word):
        return word.casefold() in self._fold

    def __iter__(self):
        return iter(self._entries)

    def surface(self, word: str) -> str:
        try:
            return self._fold[word.casefold()]
        except KeyError:
            raise UnknownWord(word) from None

    def pronunciations(self, word: str):
        return list(self._entries[self.surface(word)])

    def key(self, pron: PhonemeSeq) -> PhonemeSeq:
        if self.is_english:
            return tuple(s.rstrip("012") for s in pron)
        return tuple(pron)

    def g2p(self, word: str, fallback: Optional[bool] = None) -> PhonemeSeq:
        if fallback is None:
            fallback = self.oov_fallback
        folded = word.casefold()
        if folded in self._fold:
            return self._entries[self._fold[folded]][0]
        # phrases: word-by-word concatenation
        parts = word.split()
        if len(parts) > 1:
            return tuple(s for p in parts for s in self.g2p(p, fallback))
        if not self.is_english:
            return self._segment_zh(word)
        if fallback:
            guess = letter_to_sound(word)
            if guess:
                return guess
        raise OovUnmappable(word)

    def _segment_zh(self, word):
        # greedy longest match over known entries; characters never guessed
        out = []
        i = 0
        while i < len(word):
            for j in range(len(word), i, -1):
                if word[i:j] in self._fold:
                    out.extend(self._entries[self._fold[word[i:j]]][0])
                    i = j
                    break
            else:
                raise OovUnmappable(word)
        if not out:
            raise OovUnmappable(word)
        return tuple(out)

    def homophones(self, word: str) -> set:
        surface = self.surface(word)
        key = self.key(self._entries[surface][0])
        return set(self.homophone_index[key]) - {surface}

    def _candidates(self, word, max_dist):
        """(distance, word) pairs for near-homophones; ranked by distance then spelling."""
        cache_key = (word.casefold(), max_dist)
        if cache_key in self._near_cache:
            return self._near_cache[cache_key]
        surface = self.surface(word)
        if max_dist == 0:
            found = {w: 0 for w in self.homophones(surface)}
        else:
            mine = [self.key(p) for p in self._entries[surface]]
            found = {}
            for other, prons in self._entries.items():
                if other == surface:
                    continue
                d = min(edit_distance(a, self.key(b)) for a in mine for b in prons)
                if d <= max_dist:
                    found[other] = d
            if self.is_english:
                for variant in spelling_variants(surface, self.spelling_rules):
                    if variant in self._fold:
                        other = self._fold[variant]
                        if other != surface:
                            found[other] = min(found.get(other, 1), 1)
        ranked = tuple(sorted(((d, w) for w, d in found.items()), key=lambda t: (t[0], t[1].casefold(), t[1])))
        self._near_cache[cache_key] = ranked
        return ranked

    def near_homophones(self, word: str, max_dist: int) -> set:
        if max_dist < 0:
            raise ValueError("max_dist must be >= 0")
        return {w for _, w in self._candidates(word, max_dist)}

    def distractors(self, word: str, max_dist: int = 1) -> list:
        """Candidate distractors, best first: exact homophones, then distance-1 alternatives, ties by spelling."""
        return [w for _, w in self._candidates(word, max_dist)]

    def best_distractor(self, word: str, max_dist: int = 1, exclude=()) -> Optional[str]:
        """First of :meth:`distractors` whose casefold is not in ``exclude``."""
        return next((w for w in self.distractors(word, max_dist) if w.casefold() not in exclude), None)

    def dumps(self) -> str:
        return "".join(f"{w}\t{' '.join(p)}\n" for w, prons in self._entries.items() for p in prons)


def load_lexicon(source: str, inventory: PhonemeInventory, spelling_rules=None,
                 oov_fallback: bool = True) -> Lexicon:
    """Parse dictionary text into a :class:`Lexicon`.

    ``spelling_rules`` defaults to the bundled table for English and to none
    for Mandarin.
    """
    entries = {}
    fold = {}
    for no, line in enumerate(source.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise MalformedLine(no, line)
        word, pron = parts[0].strip(), parts[1].split()
        if not word or not pron:
            raise MalformedLine(no, line)
        surface = fold.setdefault(word.casefold(), word)
        entries.setdefault(surface, []).append(tuple(pron))
    if spelling_rules is None:
        spelling_rules = load_spelling_rules() if inventory.id is InventoryId.ARPABET_EN else ()
    return Lexicon(inventory, entries, spelling_rules, oov_fallback)


def read_lexicon(path, lang: str = "en", **kwargs) -> Lexicon:
    with open(path, encoding="utf-8") as f:
        return load_lexicon(f.read(), inventory_for(lang), **kwargs)


def g2p(lex: Lexicon, word: str, fallback: Optional[bool] = None) -> PhonemeSeq:
    return lex.g2p(word, fallback)


def homophones(lex: Lexicon, word: str) -> set:
    return lex.homophones(word)


def near_homophones(lex: Lexicon, word: str, max_dist: int) -> set:
    return lex.near_homophones(word, max_dist)
