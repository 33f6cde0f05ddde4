"""Token-level Levenshtein alignment with a deterministic backtrace.

All edit operations cost 1. When several minimal alignments exist, the
backtrace (walking from the end of both sequences) prefers, at equal cost,
Match > Substitute > Delete > Insert.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .errors import InputTooLong

MAX_TOKENS = 10_000


class OpKind(str, Enum):
    MATCH = "match"
    SUBSTITUTE = "sub"
    DELETE = "del"
    INSERT = "ins"


@dataclass(frozen=True)
class AlignmentOp:
    kind: OpKind
    ref_index: Optional[int] = None
    hyp_index: Optional[int] = None

    def __post_init__(self):
        has_ref = self.ref_index is not None
        has_hyp = self.hyp_index is not None
        if self.kind in (OpKind.MATCH, OpKind.SUBSTITUTE):
            ok = has_ref and has_hyp
        elif self.kind is OpKind.DELETE:
            ok = has_ref and not has_hyp
        else:
            ok = has_hyp and not has_ref
        if not ok:
            raise ValueError(f"bad indices for {self.kind.value}: {self.ref_index}, {self.hyp_index}")


@dataclass(frozen=True)
class Alignment:
    ops: tuple
    cost: int

    def count(self, kind):
        return sum(1 for op in self.ops if op.kind is kind)


def _check_length(seq):
    if len(seq) > MAX_TOKENS:
        raise InputTooLong(len(seq), MAX_TOKENS)


def edit_distance(a: Sequence, b: Sequence) -> int:
    """Unit-cost edit distance with two rolling rows (no backtrace)."""
    _check_length(a)
    _check_length(b)
    if len(a) < len(b):
        a, b = b, a
    prev = list(range(len(b) + 1))
    for i, x in enumerate(a, 1):
        cur = [i]
        for j, y in enumerate(b, 1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (x != y)))
        prev = cur
    return prev[-1]


def align(ref: Sequence, hyp: Sequence) -> Alignment:
    _check_length(ref)
    _check_length(hyp)
    n, m = len(ref), len(hyp)
    # d[i][j] = cost of aligning ref[:i] with hyp[:j]
    d = [list(range(m + 1))]
    for i in range(1, n + 1):
        row = [i]
        r = ref[i - 1]
        above = d[i - 1]
        for j in range(1, m + 1):
            row.append(min(above[j] + 1, row[j - 1] + 1, above[j - 1] + (r != hyp[j - 1])))
        d.append(row)

    ops = []
    i, j = n, m
    while i > 0 or j > 0:
        cur = d[i][j]
        if i > 0 and j > 0:
            same = ref[i - 1] == hyp[j - 1]
            if same and d[i - 1][j - 1] == cur:
                ops.append(AlignmentOp(OpKind.MATCH, i - 1, j - 1))
                i, j = i - 1, j - 1
                continue
            if not same and d[i - 1][j - 1] + 1 == cur:
                ops.append(AlignmentOp(OpKind.SUBSTITUTE, i - 1, j - 1))
                i, j = i - 1, j - 1
                continue
        if i > 0 and d[i - 1][j] + 1 == cur:
            ops.append(AlignmentOp(OpKind.DELETE, ref_index=i - 1))
            i -= 1
        else:
            ops.append(AlignmentOp(OpKind.INSERT, hyp_index=j - 1))
            j -= 1
    ops.reverse()
    return Alignment(tuple(ops), d[n][m])
