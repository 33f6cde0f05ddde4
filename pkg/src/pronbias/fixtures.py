"""Bundled test assets: small lexicons, the spelling-rule table and synthetic manifests.

The English lexicon is a CMUdict subset covering the worked examples
(speech, PAC/pack, psalm, sale/sail); the Mandarin one uses tone-numbered
pinyin. Manifests are whitespace-segmented synthetic sentences. All files
live in ``pronbias/data`` and are regenerated by ``scripts/make_fixtures.py``.
"""
import json
from dataclasses import dataclass
from importlib import resources

from .lexicon import ARPABET_EN, PINYIN_ZH, Lexicon, load_lexicon, load_spelling_rules


def data_path(name: str):
    return resources.files("pronbias.data").joinpath(name)


def read_text(name: str) -> str:
    return data_path(name).read_text("utf-8")


def read_manifest(name: str) -> list:
    return [json.loads(line) for line in read_text(name).splitlines() if line.strip()]


@dataclass(frozen=True)
class FixtureSet:
    en_lexicon: Lexicon
    zh_lexicon: Lexicon
    en_rules: tuple
    manifests: dict  # "en_train", "en_test", "zh_train", "zh_test" -> list of records


def english_lexicon(**kwargs) -> Lexicon:
    return load_lexicon(read_text("en_lexicon.dict"), ARPABET_EN, **kwargs)


def mandarin_lexicon(**kwargs) -> Lexicon:
    return load_lexicon(read_text("zh_lexicon.dict"), PINYIN_ZH, **kwargs)


def bundled_lexicon(lang: str) -> Lexicon:
    return {"en": english_lexicon, "zh": mandarin_lexicon}[lang]()


def load_fixtures() -> FixtureSet:
    rules = load_spelling_rules(read_text("en_rules.tsv"))
    return FixtureSet(
        en_lexicon=load_lexicon(read_text("en_lexicon.dict"), ARPABET_EN, spelling_rules=rules),
        zh_lexicon=mandarin_lexicon(),
        en_rules=rules,
        manifests={f"{lang}_{split}": read_manifest(f"{lang}_{split}.jsonl")
                   for lang in ("en", "zh") for split in ("train", "test")},
    )
