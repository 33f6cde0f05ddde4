"""Command-line front end: ``pronbias <command> ...``.

Every command reads and writes UTF-8 JSONL (or JSON for ``evaluate``), works
record by record, and is a deterministic function of its flags, inputs and
``--seed``: each record draws from its own generator seeded by
``sha256(seed, id)``.

Exit status: 0 ok, 2 malformed input, 3 id mismatch between paired files.
"""
import argparse
import json
import sys
from contextlib import contextmanager

from . import context as ctxmod
from .context import ContextPolicy, build_bias_list, build_grapheme_context, construct_pgcl_context, select_keywords
from .corpus import COMMON_VOCAB_SIZE, common_word_list, count_frequencies, read_word_list, write_vocab
from .errors import PronbiasError
from .fixtures import bundled_lexicon
from .formats import (IdMismatch, InputError, context_from_record, context_to_record, dumps, iter_jsonl,
                      iter_manifest, load_manifest, nbest_from_record, nbest_to_record)
from .lexicon import read_lexicon
from .metrics import INSERTION_MODES, TokenizationPolicy, biased_wer, report, tokenize
from .perturb import perturb_pair
from .reward import CE_WEIGHT, NBEST_SIZE, WB_MODES, combined_objective, mwer_biased_loss, pgcl_loss
from .seeding import DEFAULT_SEED, record_rng
from .simdec import ConfusionModel, simulate_nbest

PROTOCOL_DEFAULTS = {
    "p1": ctxmod.P1,
    "p2": ctxmod.P2,
    "min_arbitrary": ctxmod.MIN_ARBITRARY,
    "max_arbitrary": ctxmod.MAX_ARBITRARY,
    "max_keywords": ctxmod.MAX_KEYWORDS,
    "common_vocab_size": COMMON_VOCAB_SIZE,
    "nbest_size": NBEST_SIZE,
    "ce_weight": CE_WEIGHT,
    "bias_list_sizes": {"en": list(ctxmod.ENGLISH_BIAS_SIZES), "zh": list(ctxmod.MANDARIN_BIAS_SIZES)},
    "seed": DEFAULT_SEED,
}


@contextmanager
def _output(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            yield f


def _lexicon(args):
    if args.lexicon:
        try:
            return read_lexicon(args.lexicon, args.lang)
        except PronbiasError as e:
            raise InputError(f"{args.lexicon}: {e}") from None
    return bundled_lexicon(args.lang)


def _words(text):
    """Surface tokens used for context building (case preserved)."""
    return text.split()


def cmd_build_context(args):
    lex = _lexicon(args)
    try:
        policy = ContextPolicy(args.p1, args.p2, args.min_arbitrary, args.max_arbitrary,
                               args.keyword_count, args.max_keywords)
    except ValueError as e:
        raise InputError(str(e)) from None
    pool = read_word_list(args.pool) if args.pool else list(lex)
    with _output(args.out) as out:
        for rec in iter_manifest(args.manifest, args.lang):
            rng = record_rng(args.seed, rec["id"], "context")
            ref = _words(rec["text"])
            try:
                keywords = select_keywords(ref, policy, rng)
                folded = {k.casefold() for k in keywords}
                cg = build_grapheme_context(keywords, [w for w in pool if w.casefold() not in folded], policy, rng)
                ctx = construct_pgcl_context(cg, ref, lex, policy, rng)
            except PronbiasError as e:
                raise InputError(f"{args.manifest}: record {rec['id']!r}: {e}") from None
            out.write(dumps({"id": rec["id"], **context_to_record(ctx)}) + "\n")


def _pair_record(rid, pair):
    return {
        "id": rid,
        "ref": " ".join(pair.original_ref),
        "ref_perturbed": " ".join(pair.perturbed_ref),
        "ctx": context_to_record(pair.original_ctx),
        "ctx_perturbed": context_to_record(pair.perturbed_ctx),
        "swapped": [list(s) for s in pair.swapped],
    }


def cmd_perturb(args):
    lex = _lexicon(args)
    if args.pairs:
        jobs = ((rec.get("id"), rec.get("ref_perturbed"), rec.get("ctx_perturbed"), f"{args.pairs}:{no}")
                for no, rec in iter_jsonl(args.pairs))
    else:
        if not (args.contexts and args.manifest):
            raise InputError("perturb needs --contexts and --manifest, or --pairs")
        refs = load_manifest(args.manifest, args.lang)

        def from_contexts():
            for no, rec in iter_jsonl(args.contexts):
                rid = rec.get("id")
                if rid not in refs:
                    raise IdMismatch([], [str(rid)])
                yield rid, refs[rid]["text"], rec, f"{args.contexts}:{no}"
        jobs = from_contexts()

    skipped = 0
    with _output(args.out) as out:
        for rid, text, ctx_rec, where in jobs:
            if not isinstance(rid, str) or not isinstance(text, str) or not isinstance(ctx_rec, dict):
                raise InputError(f"{where}: missing id, reference or context")
            ctx = context_from_record(ctx_rec, where)
            if ctx.kind is not ctxmod.ContextKind.GPGD or all(e.distractor is None for e in ctx.entries):
                skipped += 1
                continue
            try:
                pair = perturb_pair(_words(text), ctx, lex)
            except PronbiasError as e:
                raise InputError(f"{where}: {e}") from None
            out.write(dumps(_pair_record(rid, pair)) + "\n")
    if skipped:
        print(f"warning: skipped {skipped} record(s) without GPGD distractor entries", file=sys.stderr)
    return skipped


def _paired(ref_path, hyp_path, lang):
    refs = load_manifest(ref_path, lang)
    hyps = load_manifest(hyp_path, lang)
    missing_hyp = set(refs) - set(hyps)
    missing_ref = set(hyps) - set(refs)
    if missing_hyp or missing_ref:
        raise IdMismatch(missing_hyp, missing_ref)
    return refs, hyps


def cmd_evaluate(args):
    refs, hyps = _paired(args.ref, args.hyp, args.lang)
    bias = read_word_list(args.bias) if args.bias else []
    policy = TokenizationPolicy.for_lang(args.lang)
    ids = list(refs)
    try:
        result = biased_wer([refs[i]["text"] for i in ids], [hyps[i]["text"] for i in ids], bias,
                            policy, args.insertion_attribution)
    except PronbiasError as e:
        raise InputError(str(e)) from None
    with _output(args.out) as out:
        out.write(json.dumps(report(result, len(ids)), ensure_ascii=False) + "\n")


def cmd_reward(args):
    refs = load_manifest(args.ref, args.lang)
    bias = read_word_list(args.bias) if args.bias else []
    policy = TokenizationPolicy.for_lang(args.lang)
    odd = 0
    with _output(args.out) as out:
        for no, rec in iter_jsonl(args.nbest):
            rid = rec.get("id")
            if rid not in refs:
                raise IdMismatch([], [str(rid)])
            nbest = nbest_from_record(rec, lambda t: tokenize(t, policy), f"{args.nbest}:{no}")
            if args.n and len(nbest) != args.n:
                odd += 1
            ref = tokenize(refs[rid]["text"], policy)
            rep = mwer_biased_loss(nbest, ref, bias, policy, args.wb_mode, args.insertion_attribution)
            out.write(dumps({"id": rid, **rep.as_dict()}) + "\n")
    if odd:
        print(f"warning: {odd} N-best list(s) differ from the expected size {args.n}", file=sys.stderr)


def cmd_simulate(args):
    lex = _lexicon(args)
    try:
        model = ConfusionModel(args.p_confuse, args.bias_boost, args.base_scale, args.confusion_penalty)
    except ValueError as e:
        raise InputError(str(e)) from None
    if args.n < 1:
        raise InputError("--n must be >= 1")
    contexts = {}
    if args.contexts:
        for no, rec in iter_jsonl(args.contexts):
            contexts[rec.get("id")] = context_from_record(rec, f"{args.contexts}:{no}")
    with _output(args.out) as out:
        for rec in iter_manifest(args.manifest, args.lang):
            rng = record_rng(args.seed, rec["id"], "simulate")
            nbest = simulate_nbest(_words(rec["text"]), contexts.get(rec["id"]), lex, model, args.n, rng)
            out.write(dumps(nbest_to_record(rec["id"], nbest)) + "\n")


def _bias_tokens(text, lang):
    return text.casefold().split() if lang == "en" else text.split()


def cmd_bias_list(args):
    train = [_bias_tokens(r["text"], args.lang) for r in iter_manifest(args.train, args.lang)]
    test = [_bias_tokens(r["text"], args.lang) for r in iter_manifest(args.test, args.lang)]
    split = common_word_list(count_frequencies(train), args.common_size)
    if args.common_out:
        write_vocab(split, args.common_out)
    vocab = {t for ref in train + test for t in ref}
    if args.size is None:
        size = len({t for ref in test for t in ref if split.is_rare(t)})
    else:
        size = args.size
    try:
        words = build_bias_list(test, split, size, record_rng(args.seed, "bias-list"), vocab)
    except PronbiasError as e:
        raise InputError(str(e)) from None
    with _output(args.out) as out:
        for w in sorted(words):
            out.write(w + "\n")


def cmd_objective(args):
    pert = {rec.get("id"): rec for _, rec in iter_jsonl(args.perturbed)}
    ce = {rec.get("id"): rec for _, rec in iter_jsonl(args.ce)} if args.ce else {}
    with _output(args.out) as out:
        for no, rec in iter_jsonl(args.orig):
            rid = rec.get("id")
            if rid not in pert or (args.ce and rid not in ce):
                raise IdMismatch([str(rid)], [])
            try:
                pdrl = float(rec["loss"]) + float(pert[rid]["loss"])
                c = ce.get(rid)
                pgcl = pgcl_loss(float(c["ce_g"]), float(c["ce_gp"]), float(c["ce_gpgd"])) if c else 0.0
            except (KeyError, TypeError, ValueError) as e:
                raise InputError(f"{args.orig}:{no}: bad reward or CE record ({e})") from None
            out.write(dumps({"id": rid, "pdrl": pdrl, "pgcl": pgcl,
                             "objective": combined_objective(pdrl, pgcl, args.ce_weight)}) + "\n")


def cmd_defaults(args):
    print(json.dumps(PROTOCOL_DEFAULTS, indent=2))


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="global seed (default: %(default)s)")
    common.add_argument("--lang", choices=("en", "zh"), default="en", help="language (default: %(default)s)")
    common.add_argument("--lexicon", help="pronunciation dictionary (default: bundled lexicon for --lang)")
    common.add_argument("--out", help="output file (default: stdout)")

    p = argparse.ArgumentParser(prog="pronbias", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("build-context", parents=[common], help="sample G/GP/GPGD keyword contexts per utterance")
    s.add_argument("--manifest", required=True)
    s.add_argument("--pool", help="arbitrary-word list, one per line (default: lexicon words)")
    s.add_argument("--p1", type=float, default=ctxmod.P1, help="probability of a GP context (default: 1/3)")
    s.add_argument("--p2", type=float, default=ctxmod.P2, help="probability of a GPGD context (default: 1/3)")
    s.add_argument("--min-arbitrary", type=int, default=ctxmod.MIN_ARBITRARY,
                   help="fewest arbitrary words added (default: %(default)s)")
    s.add_argument("--max-arbitrary", type=int, default=ctxmod.MAX_ARBITRARY,
                   help="most arbitrary words added (default: %(default)s)")
    s.add_argument("--max-keywords", type=int, default=ctxmod.MAX_KEYWORDS,
                   help="keywords per utterance are uniform on [1, this] (default: %(default)s)")
    s.add_argument("--keyword-count", type=int, help="fixed number of keywords instead")
    s.set_defaults(func=cmd_build_context)

    s = sub.add_parser("perturb", parents=[common], help="swap keywords with their homophone distractors")
    s.add_argument("--contexts", help="context JSONL from build-context")
    s.add_argument("--manifest", help="reference manifest for --contexts")
    s.add_argument("--pairs", help="perturbed-pair JSONL to perturb again (inverts it)")
    s.set_defaults(func=cmd_perturb)

    s = sub.add_parser("evaluate", parents=[common], help="WER/CER with biased and unbiased error rates")
    s.add_argument("--ref", required=True, help="reference manifest")
    s.add_argument("--hyp", required=True, help="hypothesis manifest")
    s.add_argument("--bias", help="bias list, one word per line")
    s.add_argument("--insertion-attribution", choices=INSERTION_MODES, default="hyp",
                   help="charge insertions by the inserted word ('hyp') or always as unbiased (default: %(default)s)")
    s.set_defaults(func=cmd_evaluate)

    s = sub.add_parser("reward", parents=[common], help="biased MWER reward per N-best list")
    s.add_argument("--nbest", required=True)
    s.add_argument("--ref", required=True, help="reference manifest")
    s.add_argument("--bias", help="bias list, one word per line")
    s.add_argument("--wb-mode", choices=WB_MODES, default="count",
                   help="biased errors as counts or rates (default: %(default)s)")
    s.add_argument("--insertion-attribution", choices=INSERTION_MODES, default="hyp")
    s.add_argument("--n", type=int, default=NBEST_SIZE,
                   help="expected N-best size, N=8 by default; other sizes are reported (0 disables)")
    s.set_defaults(func=cmd_reward)

    s = sub.add_parser("simulate", parents=[common], help="mock homophone-confusion N-best lists")
    s.add_argument("--manifest", required=True)
    s.add_argument("--contexts", help="context JSONL; entry words receive the bias boost")
    s.add_argument("--n", type=int, default=NBEST_SIZE, help="hypotheses per utterance (default: %(default)s)")
    s.add_argument("--p-confuse", type=float, default=0.3, help="per-word confusion probability (default: %(default)s)")
    s.add_argument("--bias-boost", type=float, default=2.0, help="loglik bonus per context word (default: %(default)s)")
    s.add_argument("--confusion-penalty", type=float, default=1.0,
                   help="loglik penalty per confused word (default: %(default)s)")
    s.add_argument("--base-scale", type=float, default=1.0, help="loglik cost per reference word (default: %(default)s)")
    s.set_defaults(func=cmd_simulate)

    s = sub.add_parser("bias-list", parents=[common], help="rare-word bias list for a test manifest")
    s.add_argument("--train", required=True, help="training manifest (word frequencies)")
    s.add_argument("--test", required=True, help="test manifest")
    s.add_argument("--common-size", type=int, default=COMMON_VOCAB_SIZE,
                   help="most frequent training words counted as common (default: %(default)s)")
    s.add_argument("--size", type=int,
                   help="bias list size; protocol sizes are 100, 500, 1000, 2000 (en) and 187, 400, 600 (zh); "
                        "omit for the ground-truth list")
    s.add_argument("--common-out", help="also write the common word list here")
    s.set_defaults(func=cmd_bias_list)

    s = sub.add_parser("objective", parents=[common], help="combine rewards into the training objective")
    s.add_argument("--orig", required=True, help="reward JSONL for the original inputs")
    s.add_argument("--perturbed", required=True, help="reward JSONL for the perturbed inputs")
    s.add_argument("--ce", help='JSONL of {"id", "ce_g", "ce_gp", "ce_gpgd"}')
    s.add_argument("--ce-weight", type=float, default=CE_WEIGHT, help="weight of the CE term (default: %(default)s)")
    s.set_defaults(func=cmd_objective)

    s = sub.add_parser("defaults", help="print the protocol constants as JSON")
    s.set_defaults(func=cmd_defaults)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except IdMismatch as e:
        print(f"error: id mismatch: {e}", file=sys.stderr)
        return 3
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
