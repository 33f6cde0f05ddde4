import json
import subprocess
import sys

import pytest

from pronbias.cli import main
from pronbias.fixtures import data_path

EN_TEST = str(data_path("en_test.jsonl"))
EN_TRAIN = str(data_path("en_train.jsonl"))
ZH_TEST = str(data_path("zh_test.jsonl"))


def write_jsonl(path, recs):
    path.write_text("".join(json.dumps(r, ensure_ascii=False) + "\n" for r in recs), encoding="utf-8")
    return str(path)


def read_jsonl(path):
    return [json.loads(line) for line in open(path, encoding="utf-8") if line.strip()]


def run(*argv):
    return main([str(a) for a in argv])


def test_build_context_schema_and_determinism(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    assert run("build-context", "--manifest", EN_TEST, "--out", a) == 0
    assert run("build-context", "--manifest", EN_TEST, "--out", b) == 0
    assert a.read_bytes() == b.read_bytes()
    recs = read_jsonl(a)
    assert len(recs) == 50
    for r in recs:
        assert list(r) == ["id", "kind", "entries", "rendered"]
        assert r["kind"] in ("G", "GP", "GPGD")
        for e in r["entries"]:
            assert set(e) == {"w", "pron", "distractor"}
    assert {r["kind"] for r in recs} == {"G", "GP", "GPGD"}
    c = tmp_path / "c.jsonl"
    run("build-context", "--manifest", EN_TEST, "--out", c, "--seed", 18)
    assert c.read_bytes() != a.read_bytes()


def test_build_context_forced_gp(tmp_path):
    out = tmp_path / "o.jsonl"
    assert run("build-context", "--manifest", EN_TEST, "--p1", 1.0, "--p2", 0.0, "--out", out) == 0
    assert {r["kind"] for r in read_jsonl(out)} == {"GP"}


def test_build_context_mandarin(tmp_path):
    out = tmp_path / "o.jsonl"
    assert run("build-context", "--lang", "zh", "--manifest", ZH_TEST, "--p1", 0, "--p2", 1, "--out", out) == 0
    recs = read_jsonl(out)
    assert all(r["kind"] == "GPGD" for r in recs)
    assert any(e["distractor"] for r in recs for e in r["entries"])


def test_build_context_custom_pool_and_lexicon(tmp_path):
    lex = tmp_path / "lex.dict"
    lex.write_text("speech\tS P IY1 CH\nPAC\tP AE1 K\npack\tP AE1 K\nabout\tAH0 B AW1 T\n")
    pool = tmp_path / "pool.txt"
    pool.write_text("speech\n")
    man = write_jsonl(tmp_path / "m.jsonl", [{"id": "u1", "text": "about PAC", "lang": "en"}])
    out = tmp_path / "o.jsonl"
    assert run("build-context", "--manifest", man, "--lexicon", lex, "--pool", pool, "--keyword-count", 1,
               "--p1", 0, "--p2", 1, "--out", out) == 0
    (rec,) = read_jsonl(out)
    assert rec["kind"] == "GPGD"


def test_malformed_manifest(tmp_path, capsys):
    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"id": "a", "text": "x y", "lang": "en"}\nnot json\n')
    assert run("build-context", "--manifest", bad) == 2
    assert "bad.jsonl:2" in capsys.readouterr().err
    dup = write_jsonl(tmp_path / "dup.jsonl", [{"id": "a", "text": "x", "lang": "en"}] * 2)
    assert run("build-context", "--manifest", dup) == 2
    empty = write_jsonl(tmp_path / "e.jsonl", [{"id": "a", "text": "  ", "lang": "en"}])
    assert run("build-context", "--manifest", empty) == 2


def test_malformed_lexicon(tmp_path):
    lex = tmp_path / "lex.dict"
    lex.write_text("speech S P IY1 CH\n")
    assert run("build-context", "--manifest", EN_TEST, "--lexicon", lex) == 2


def _contexts(tmp_path, **kw):
    out = tmp_path / "ctx.jsonl"
    run("build-context", "--manifest", EN_TEST, "--p1", 0, "--p2", 1, "--out", out)
    return out


def test_perturb_round_trip(tmp_path, capsys):
    ctx = _contexts(tmp_path)
    p1, p2 = tmp_path / "p1.jsonl", tmp_path / "p2.jsonl"
    assert run("perturb", "--contexts", ctx, "--manifest", EN_TEST, "--out", p1) == 0
    first = read_jsonl(p1)
    assert first
    eligible = [r for r in read_jsonl(ctx) if any(e["distractor"] for e in r["entries"])]
    assert len(first) == len(eligible)
    for r in first:
        assert list(r) == ["id", "ref", "ref_perturbed", "ctx", "ctx_perturbed", "swapped"]
    assert run("perturb", "--pairs", p1, "--out", p2) == 0
    second = read_jsonl(p2)
    for a, b in zip(first, second):
        assert b["ref_perturbed"] == a["ref"]
        assert b["ctx_perturbed"] == a["ctx"]


def test_perturb_skips_non_gpgd(tmp_path, capsys):
    ctx = tmp_path / "ctx.jsonl"
    run("build-context", "--manifest", EN_TEST, "--p1", 1, "--p2", 0, "--out", ctx)
    out = tmp_path / "p.jsonl"
    assert run("perturb", "--contexts", ctx, "--manifest", EN_TEST, "--out", out) == 0
    assert out.read_text() == ""
    assert "skipped 50" in capsys.readouterr().err


def test_perturb_schema_violation(tmp_path):
    ctx = write_jsonl(tmp_path / "c.jsonl", [{"id": "en-test-0000", "kind": "XX", "entries": []}])
    assert run("perturb", "--contexts", ctx, "--manifest", EN_TEST) == 2
    assert run("perturb") == 2


def test_evaluate(tmp_path, capsys):
    ref = write_jsonl(tmp_path / "r.jsonl", [{"id": "u1", "text": "a b c", "lang": "en"}])
    hyp = write_jsonl(tmp_path / "h.jsonl", [{"id": "u1", "text": "a c", "lang": "en"}])
    bias = tmp_path / "bias.txt"
    bias.write_text("c\n")
    out = tmp_path / "rep.json"
    assert run("evaluate", "--ref", ref, "--hyp", hyp, "--bias", bias, "--out", out) == 0
    rep = json.loads(out.read_text())
    assert rep["uwer"] == 0.5 and rep["bwer"] == 0.0 and rep["wer"] == 0.3333
    assert rep["biased"] == {"sub": 0, "del": 0, "ins": 0, "ref": 1}
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    assert run("evaluate", "--ref", ref, "--hyp", hyp, "--bias", empty, "--out", out) == 0
    assert json.loads(out.read_text())["bwer"] == "undefined"


def test_evaluate_identity_and_mismatch(tmp_path, capsys):
    out = tmp_path / "rep.json"
    assert run("evaluate", "--ref", EN_TEST, "--hyp", EN_TEST, "--bias", tmp_path / "none", "--out", out) == 2
    bias = tmp_path / "b.txt"
    bias.write_text("PAC\npsalm\nsale\n")
    assert run("evaluate", "--ref", EN_TEST, "--hyp", EN_TEST, "--bias", bias, "--out", out) == 0
    rep = json.loads(out.read_text())
    assert rep["wer"] == 0 and rep["bwer"] == 0 and rep["utterances"] == 50
    hyp = write_jsonl(tmp_path / "h.jsonl", [{"id": "other", "text": "x", "lang": "en"}])
    assert run("evaluate", "--ref", EN_TEST, "--hyp", hyp) == 3
    err = capsys.readouterr().err
    assert "en-test-0000" in err and "other" in err


def test_evaluate_insertion_switch(tmp_path):
    ref = write_jsonl(tmp_path / "r.jsonl", [{"id": "u", "text": "a PAC", "lang": "en"}])
    hyp = write_jsonl(tmp_path / "h.jsonl", [{"id": "u", "text": "a PAC pack", "lang": "en"}])
    bias = tmp_path / "b.txt"
    bias.write_text("PAC\npack\n")
    out = tmp_path / "o.json"
    run("evaluate", "--ref", ref, "--hyp", hyp, "--bias", bias, "--out", out)
    assert json.loads(out.read_text())["biased"]["ins"] == 1
    run("evaluate", "--ref", ref, "--hyp", hyp, "--bias", bias, "--insertion-attribution", "unbiased", "--out", out)
    assert json.loads(out.read_text())["unbiased"]["ins"] == 1


def test_evaluate_mandarin(tmp_path):
    ref = write_jsonl(tmp_path / "r.jsonl", [{"id": "u", "text": "我 在 中国 银行", "lang": "zh"}])
    hyp = write_jsonl(tmp_path / "h.jsonl", [{"id": "u", "text": "我在中果银行", "lang": "zh"}])
    bias = tmp_path / "b.txt"
    bias.write_text("中国\n", encoding="utf-8")
    out = tmp_path / "o.json"
    assert run("evaluate", "--lang", "zh", "--ref", ref, "--hyp", hyp, "--bias", bias, "--out", out) == 0
    rep = json.loads(out.read_text())
    assert rep["bwer"] == 0.5 and rep["wer"] == 0.1667


def test_reward(tmp_path):
    import math
    ref = write_jsonl(tmp_path / "r.jsonl", [{"id": "u1", "text": "about PAC", "lang": "en"},
                                            {"id": "u2", "text": "about PAC", "lang": "en"}])
    nbest = write_jsonl(tmp_path / "n.jsonl", [
        {"id": "u1", "hyps": [{"text": "about PAC", "loglik": math.log(0.8)},
                              {"text": "about pack pack", "loglik": math.log(0.2)}]},
        {"id": "u2", "hyps": [{"text": "about PAC", "loglik": -1.0}, {"text": "about pack", "loglik": -1.0}]},
    ])
    bias = tmp_path / "b.txt"
    bias.write_text("PAC\npack\n")
    out = tmp_path / "o.jsonl"
    assert run("reward", "--nbest", nbest, "--ref", ref, "--bias", bias, "--out", out) == 0
    r1, r2 = read_jsonl(out)
    assert list(r1) == ["id", "probs", "wb", "mean_wb", "advantages", "loss"]
    assert r1["wb"] == [0, 2] and r1["loss"] == pytest.approx(-0.3, abs=1e-9)
    assert abs(r2["loss"]) <= 1e-12


def test_reward_help_mentions_n8(capsys):
    with pytest.raises(SystemExit):
        main(["reward", "--help"])
    assert "N=8" in capsys.readouterr().out


def test_simulate(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    assert run("simulate", "--manifest", EN_TEST, "--out", a) == 0
    assert run("simulate", "--manifest", EN_TEST, "--out", b) == 0
    assert a.read_bytes() == b.read_bytes()
    recs = read_jsonl(a)
    assert all(len(r["hyps"]) == 8 for r in recs)
    clean = tmp_path / "c.jsonl"
    assert run("simulate", "--manifest", EN_TEST, "--p-confuse", 0, "--out", clean) == 0
    texts = {r["id"]: r["text"] for r in read_jsonl(EN_TEST)}
    for r in read_jsonl(clean):
        assert all(h["text"] == texts[r["id"]] for h in r["hyps"])
    assert run("simulate", "--manifest", EN_TEST, "--p-confuse", 2) == 2


def test_simulate_with_contexts_feeds_reward(tmp_path):
    ctx = _contexts(tmp_path)
    nb = tmp_path / "nb.jsonl"
    assert run("simulate", "--manifest", EN_TEST, "--contexts", ctx, "--p-confuse", 0.5, "--out", nb) == 0
    bias = tmp_path / "b.txt"
    bias.write_text("PAC\npack\nsale\nsail\n")
    out = tmp_path / "r.jsonl"
    assert run("reward", "--nbest", nb, "--ref", EN_TEST, "--bias", bias, "--out", out) == 0
    assert len(read_jsonl(out)) == 50


def test_bias_list(tmp_path):
    out, common = tmp_path / "b.txt", tmp_path / "common.txt"
    assert run("bias-list", "--train", EN_TRAIN, "--test", EN_TEST, "--common-size", 60,
               "--common-out", common, "--out", out) == 0
    gt = out.read_text().split()
    assert gt and len(common.read_text().split()) == 60
    assert not set(gt) & set(common.read_text().split())
    assert run("bias-list", "--train", EN_TRAIN, "--test", EN_TEST, "--common-size", 60, "--size", 100,
               "--out", out) == 0
    padded = out.read_text().split()
    assert len(padded) == 100 and set(gt) <= set(padded)
    assert run("bias-list", "--train", EN_TRAIN, "--test", EN_TEST, "--common-size", 60, "--size", 1) == 2


def test_objective(tmp_path):
    orig = write_jsonl(tmp_path / "o.jsonl", [{"id": "u", "loss": -0.3}])
    pert = write_jsonl(tmp_path / "p.jsonl", [{"id": "u", "loss": -0.1}])
    ce = write_jsonl(tmp_path / "ce.jsonl", [{"id": "u", "ce_g": 1.0, "ce_gp": 2.0, "ce_gpgd": 3.0}])
    out = tmp_path / "out.jsonl"
    assert run("objective", "--orig", orig, "--perturbed", pert, "--ce", ce, "--out", out) == 0
    (rec,) = read_jsonl(out)
    assert rec["pdrl"] == pytest.approx(-0.4) and rec["pgcl"] == 6.0
    assert rec["objective"] == pytest.approx(-0.34, abs=1e-12)
    other = write_jsonl(tmp_path / "x.jsonl", [{"id": "v", "loss": 0.0}])
    assert run("objective", "--orig", orig, "--perturbed", other) == 3


def test_defaults_command(capsys):
    assert main(["defaults"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["p1"] == d["p2"] == 1 / 3 and d["nbest_size"] == 8 and d["ce_weight"] == 0.01


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "pronbias", "defaults"], capture_output=True, text=True)
    assert res.returncode == 0 and '"common_vocab_size": 5000' in res.stdout
