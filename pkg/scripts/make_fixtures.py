"""Regenerate the bundled fixture assets under src/pronbias/data/.

Dev-time only: needs the ``cmudict`` and ``pypinyin`` packages, which the
library itself never imports. Output is deterministic.

    python scripts/make_fixtures.py
"""
import json
import random
from collections import defaultdict
from pathlib import Path

import cmudict
from pypinyin import Style, lazy_pinyin

DATA = Path(__file__).resolve().parents[1] / "src" / "pronbias" / "data"

# homophone pairs/triples first, then filler vocabulary for sentences
EN_HOMOPHONES = """
PAC pack
sale sail
their there
two too
four for
right write
knight night
know no
see sea
hear here
son sun
meat meet
flour flower
pair pear
bear bare
made maid
mail male
plain plane
peace piece
weak week
road rode
tail tale
wait weight
would wood
hole whole
new knew
blue blew
by buy
cell sell
dear deer
eight ate
fair fare
hair hare
one won
steal steel
break brake
cent sent
phone fone
scene seen
grown groan
""".split()

EN_FILLER = """
speech psalm please tell me something about the a is it of in and to
was he she they we you i that with his her as at from on this have had
not but what all were when your can said there an which do if will up
other about out many then them these so some would make like him into time
has look more write go see number way could people my than first water
been call who oil its now find long down day did get come may part
over word sound take only little work place year live back give most
very after thing our just name good sentence man think say great where
help through much before line too mean old any same boy follow came want
show also around form three small set put end does another well large
must big even such because turn why ask went men read need land different
home us move try kind hand picture again change off play spell air away
animal house point page letter mother answer found study still learn should
america world high every near add food between own below country plant last
school father keep tree never start city earth eye light thought head under
story saw left few while along might close open seem together next white
children begin got walk example ease paper group always music those both
mark often until mile river car feet care second book carry took science
eat room friend began idea fish mountain stop once base horse cut sure
watch color face wood main enough girl usual young ready above ever red
list though feel talk bird soon body dog family direct pose leave song
measure door product black short numeral class wind question happen complete
ship area half rock order fire south problem piece told knew pass since
top whole king space heard best hour better true during hundred five
remember step early hold west ground interest reach fast verb sing listen
six table travel less morning ten simple several vowel toward war lay
against pattern slow center love person money serve appear road map rain
rule govern pull cold notice voice unit power town fine certain fly fall
lead cry dark machine note wait plan figure star box noun field rest
correct able pound done beauty drive stood contain front teach week final
gave green oh quick develop ocean warm free minute strong special mind
behind clear tail produce fact street inch multiply nothing course stay
wheel full force blue object decide surface deep moon island foot system
busy test record boat common gold possible plane stead dry wonder laugh
thousand ago ran check game shape equate hot miss brought heat snow tire
bring yes distant fill east paint language among
""".split()


def build_en():
    d = cmudict.dict()
    words = []
    seen = set()
    for w in EN_HOMOPHONES + EN_FILLER:
        if w.casefold() in seen:
            continue
        seen.add(w.casefold())
        words.append(w)
    hom = [w for w in EN_HOMOPHONES]
    filler = [w for w in words if w not in set(hom)]
    # ~200 entries total
    words = hom + filler[: 200 - len(hom)]
    lines = []
    for w in words:
        prons = d[w.casefold()]
        if w == "psalm":
            prons = [["S", "AA1", "M"], ["S", "AA1", "L", "M"]]
        for p in prons[:2]:
            lines.append(f"{w}\t{' '.join(p)}")
    header = [
        "# English ARPAbet test lexicon (subset of CMUdict, stress-marked).",
        "# word<TAB>phonemes; repeated words list alternate pronunciations.",
    ]
    (DATA / "en_lexicon.dict").write_text("\n".join(header + lines) + "\n", encoding="utf-8")
    return words


ZH_WORDS = """
权利 权力 公式 攻势 公事 树木 数目 期中 期终 形式 形势 意义 异议 事故 世故
报复 抱负 功夫 工夫 会议 会意 致辞 致词 油田 游田 清洁 清洁 近视 近世 风度
风都 古迹 古籍 反应 反映 制定 制订 交代 交待 优良 悠凉 时事 实事 食堂 石塘
动机 动迹 以后 已后 幅度 福度 中国 银行 北京 上海 天气 今天 明天 我们 你们
他们 学校 老师 学生 公司 经理 电话 手机 电脑 网络 市场 经济 发展 政府 城市
医院 医生 病人 音乐 电影 朋友 家庭 孩子 父母 工作 时间 问题 方法 技术 科学
研究 历史 文化 语言 世界 国家 人民 社会 生活 环境 能源 交通 汽车 飞机 火车
银河 音频 语音 识别 模型 数据 训练 测试 关键 词语 阿里 百度 腾讯 华为 小米
""".split()

ZH_CHARS = "是事市试世式室示视士的地得在再我你他她们有又右友这那个一衣医依了为位未味说话看见听到去来上下中国大小多少人民生活"


def build_zh():
    entries = []
    seen = set()
    for w in ZH_WORDS:
        if w in seen:
            continue
        seen.add(w)
        entries.append(w)
    for c in ZH_CHARS:
        if c in seen:
            continue
        seen.add(c)
        entries.append(c)
    lines = []
    classes = defaultdict(list)
    for w in entries:
        syl = lazy_pinyin(w, style=Style.TONE3, neutral_tone_with_five=True)
        lines.append(f"{w}\t{' '.join(syl)}")
        classes[tuple(syl)].append(w)
    multi = [c for c in classes.values() if len(c) >= 2]
    print("zh entries", len(entries), "homophone classes", len(multi))
    header = [
        "# Mandarin pinyin test lexicon (tone digits 1-5, 5 = neutral).",
        "# word<TAB>syllables",
    ]
    (DATA / "zh_lexicon.dict").write_text("\n".join(header + lines) + "\n", encoding="utf-8")
    return entries


def zipf_choice(rng, vocab):
    weights = [1.0 / (i + 1) for i in range(len(vocab))]
    return rng.choices(vocab, weights=weights, k=1)[0]


def build_manifests(en_words, zh_words):
    rng = random.Random(2025)
    filler = [w for w in en_words if w not in set(EN_HOMOPHONES)]
    rare = list(EN_HOMOPHONES) + ["psalm", "speech"]
    for split, count in (("train", 200), ("test", 50)):
        recs = []
        for i in range(count):
            n = rng.randint(4, 12)
            toks = [zipf_choice(rng, filler) for _ in range(n)]
            if rng.random() < 0.7:
                toks.insert(rng.randrange(len(toks) + 1), rng.choice(rare))
            if i % 10 == 0:
                toks = "please tell me something about".split() + [rng.choice(rare)]
            recs.append({"id": f"en-{split}-{i:04d}", "text": " ".join(toks), "lang": "en"})
        write_jsonl(DATA / f"en_{split}.jsonl", recs)

    zh_multi = [w for w in zh_words if len(w) > 1]
    zh_common = zh_multi[40:]
    zh_rare = zh_multi[:40]
    for split, count in (("train", 200), ("test", 50)):
        recs = []
        for i in range(count):
            n = rng.randint(3, 7)
            toks = [zipf_choice(rng, zh_common) for _ in range(n)]
            if rng.random() < 0.7:
                toks.insert(rng.randrange(len(toks) + 1), rng.choice(zh_rare))
            recs.append({"id": f"zh-{split}-{i:04d}", "text": " ".join(toks), "lang": "zh"})
        write_jsonl(DATA / f"zh_{split}.jsonl", recs)


def write_jsonl(path, recs):
    with open(path, "w", encoding="utf-8") as f:
        for r in recs:
            f.write(json.dumps(r, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    DATA.mkdir(parents=True, exist_ok=True)
    en = build_en()
    zh = build_zh()
    build_manifests(en, zh)
