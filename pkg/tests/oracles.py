"""Reference implementations that share no code with the library."""
import itertools
from functools import lru_cache

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path


def all_strings(alphabet, max_len):
    return [s for n in range(max_len + 1) for s in itertools.product(alphabet, repeat=n)]


def edit_graph_distances(alphabet, max_len):
    """All-pairs edit distance by breadth-first search over single-token edits.

    Nodes are every string up to ``max_len``. An optimal edit script can be
    ordered deletions, substitutions, insertions, so it never passes through a
    string longer than both endpoints and the bounded graph is exact.
    """
    nodes = all_strings(alphabet, max_len)
    index = {s: i for i, s in enumerate(nodes)}
    rows, cols = [], []
    for s, i in index.items():
        for k in range(len(s)):
            rows.append(i)
            cols.append(index[s[:k] + s[k + 1:]])
            for a in alphabet:
                if a != s[k]:
                    rows.append(i)
                    cols.append(index[s[:k] + (a,) + s[k + 1:]])
        if len(s) < max_len:
            for k in range(len(s) + 1):
                for a in alphabet:
                    rows.append(i)
                    cols.append(index[s[:k] + (a,) + s[k:]])
    graph = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(len(nodes), len(nodes)))
    dist = shortest_path(graph, method="D", unweighted=True, directed=False)
    return nodes, index, dist.astype(int)


def enumerate_alignments(ref, hyp):
    """Every alignment as a list of (op, ref_token, hyp_token); exponential, tiny inputs only."""
    if not ref and not hyp:
        return [[]]
    out = []
    if ref and hyp:
        op = "match" if ref[0] == hyp[0] else "sub"
        out += [[(op, ref[0], hyp[0])] + rest for rest in enumerate_alignments(ref[1:], hyp[1:])]
    if ref:
        out += [[("del", ref[0], None)] + rest for rest in enumerate_alignments(ref[1:], hyp)]
    if hyp:
        out += [[("ins", None, hyp[0])] + rest for rest in enumerate_alignments(ref, hyp[1:])]
    return out


def brute_cost(ref, hyp):
    return min(sum(op != "match" for op, _, _ in a) for a in enumerate_alignments(tuple(ref), tuple(hyp)))


def brute_biased_errors(ref, hyp, bias):
    """Biased error count minimized over alignments, then ties: all minimal-cost values."""
    aligns = enumerate_alignments(tuple(ref), tuple(hyp))
    best = min(sum(op != "match" for op, _, _ in a) for a in aligns)
    values = set()
    for a in aligns:
        if sum(op != "match" for op, _, _ in a) != best:
            continue
        n = 0
        for op, r, h in a:
            if op in ("sub", "del") and r in bias:
                n += 1
            elif op == "ins" and h in bias:
                n += 1
        values.add(n)
    return best, values


@lru_cache(maxsize=None)
def levenshtein_recursive(a, b):
    if not a:
        return len(b)
    if not b:
        return len(a)
    return min(levenshtein_recursive(a[1:], b) + 1, levenshtein_recursive(a, b[1:]) + 1,
               levenshtein_recursive(a[1:], b[1:]) + (a[0] != b[0]))
