"""JSONL record schemas shared by the command-line tools (see FORMATS.md)."""
import json
from typing import Iterator

from .context import Context, ContextEntry, ContextKind, render_context
from .reward import Hypothesis, NBestList


class InputError(Exception):
    """Malformed input file; the CLI exits with status 2."""


class IdMismatch(Exception):
    """Record ids differ between paired files; the CLI exits with status 3."""

    def __init__(self, missing_hyp, missing_ref):
        self.missing_hyp = sorted(missing_hyp)
        self.missing_ref = sorted(missing_ref)
        parts = []
        if self.missing_hyp:
            parts.append("missing from hypotheses: " + ", ".join(self.missing_hyp))
        if self.missing_ref:
            parts.append("missing from references: " + ", ".join(self.missing_ref))
        super().__init__("; ".join(parts))


def dumps(record: dict) -> str:
    return json.dumps(record, ensure_ascii=False)


def iter_jsonl(path) -> Iterator:
    """Yield ``(line_no, record)``; blank lines are skipped."""
    with open(path, encoding="utf-8") as f:
        for no, line in enumerate(f, 1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as e:
                raise InputError(f"{path}:{no}: invalid JSON ({e.msg})") from None
            if not isinstance(rec, dict):
                raise InputError(f"{path}:{no}: expected a JSON object")
            yield no, rec


def _need(rec, key, typ, where):
    if key not in rec:
        raise InputError(f"{where}: missing field {key!r}")
    if not isinstance(rec[key], typ):
        raise InputError(f"{where}: field {key!r} has the wrong type")
    return rec[key]


def iter_manifest(path, default_lang=None) -> Iterator:
    """Validated manifest records ``{"id", "text", "lang"}`` with unique ids."""
    seen = set()
    for no, rec in iter_jsonl(path):
        where = f"{path}:{no}"
        rid = _need(rec, "id", str, where)
        text = _need(rec, "text", str, where)
        lang = rec.get("lang", default_lang)
        if not rid:
            raise InputError(f"{where}: empty id")
        if rid in seen:
            raise InputError(f"{where}: duplicate id {rid!r}")
        if not text.strip():
            raise InputError(f"{where}: empty text")
        if lang not in ("en", "zh"):
            raise InputError(f"{where}: lang must be 'en' or 'zh'")
        seen.add(rid)
        yield {"id": rid, "text": text, "lang": lang}


def load_manifest(path, default_lang=None) -> dict:
    return {r["id"]: r for r in iter_manifest(path, default_lang)}


def context_to_record(ctx: Context) -> dict:
    return {
        "kind": ctx.kind.value,
        "entries": [{"w": e.word, "pron": list(e.pron) if e.pron is not None else None,
                     "distractor": e.distractor} for e in ctx.entries],
        "rendered": render_context(ctx),
    }


def context_from_record(rec: dict, where: str = "context") -> Context:
    try:
        kind = ContextKind(rec["kind"])
        entries = []
        for e in rec["entries"]:
            pron = e.get("pron")
            if pron is not None and (not isinstance(pron, list) or not all(isinstance(s, str) for s in pron)):
                raise ValueError("pron must be a list of strings")
            if not isinstance(e["w"], str):
                raise ValueError("w must be a string")
            entries.append(ContextEntry(e["w"], tuple(pron) if pron is not None else None, e.get("distractor")))
        return Context(kind, tuple(entries))
    except (KeyError, TypeError, ValueError, AttributeError) as e:
        raise InputError(f"{where}: bad context record ({e})") from None


def nbest_from_record(rec: dict, tokenize, where: str = "nbest") -> NBestList:
    try:
        hyps = tuple(Hypothesis(tuple(tokenize(h["text"])), float(h["loglik"])) for h in rec["hyps"])
        return NBestList(hyps)
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"{where}: bad N-best record ({e})") from None


def nbest_to_record(rid: str, nbest: NBestList, joiner: str = " ") -> dict:
    return {"id": rid, "hyps": [{"text": joiner.join(h.tokens), "loglik": h.loglik} for h in nbest.hyps]}
