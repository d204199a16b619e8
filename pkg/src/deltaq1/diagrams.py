"""Labeled diagrams and the weight-preserving, sign-reversing involution.

A diagram is an ordered list of stacks.  Each stack is a base row of cells
(one cell per unit of row length, each holding a label) with a partition
drawn above it.  The multiset of row lengths rearranges a partition of
k+1; the nonzero labels place the parts of a global partition lam, one per
cell.  The first stack's partition must fit strictly inside its row.

Splitting a wide stack peels off its last column; combining undoes it.
Scanning left to right for the first applicable move pairs every diagram
of sign -1 with one of sign +1 except the all-width-1 diagrams whose
columns satisfy the M-sequence inequalities.
"""

from __future__ import annotations

from .msequences import MSequence
from .partitions import (
    Partition,
    distinct_orderings,
    padded_rearrangements,
    partitions_of,
)


class ColumnStack:
    """One base row of ``row_len`` labeled cells with a partition above it."""

    __slots__ = ("_row_len", "_above", "_labels")

    def __init__(self, row_len, above, labels):
        row_len = int(row_len)
        if row_len < 1:
            raise ValueError("row length must be positive")
        above = above if isinstance(above, Partition) else Partition(above)
        labels = tuple(int(x) for x in labels)
        if len(labels) != row_len:
            raise ValueError("need one label per cell")
        if any(x < 0 for x in labels):
            raise ValueError("labels must be nonnegative")
        if above and above[0] > row_len:
            raise ValueError("partition %r too wide for row of %d" % (above, row_len))
        self._row_len, self._above, self._labels = row_len, above, labels

    @property
    def row_len(self):
        return self._row_len

    @property
    def above(self):
        return self._above

    @property
    def labels(self):
        return self._labels

    def weight(self):
        """Partition size plus positional label contributions."""
        return self._above.size + sum(j * v for j, v in enumerate(self._labels))

    def full_rows(self):
        """Parts of the partition spanning the whole row."""
        return self._above.multiplicity(self._row_len)

    def __eq__(self, other):
        if not isinstance(other, ColumnStack):
            return NotImplemented
        return (
            self._row_len == other._row_len
            and self._above == other._above
            and self._labels == other._labels
        )

    def __hash__(self):
        return hash((self._row_len, self._above, self._labels))

    def __repr__(self):
        return "ColumnStack(%d, %s, %s)" % (
            self._row_len,
            list(self._above.parts),
            list(self._labels),
        )

    def to_json(self):
        return {
            "row_len": self._row_len,
            "above": self._above.to_json(),
            "labels": list(self._labels),
        }


class LabeledDiagram:
    """An ordered sequence of stacks whose row lengths rearrange a partition
    of k+1 and whose nonzero labels place the parts of lam."""

    __slots__ = ("_stacks", "_lam")

    def __init__(self, stacks, lam):
        stacks = tuple(stacks)
        if not stacks:
            raise ValueError("a diagram needs at least one stack")
        lam = lam if isinstance(lam, Partition) else Partition(lam)
        first = stacks[0]
        if first.above and first.above[0] > first.row_len - 1:
            raise ValueError(
                "first stack's partition must fit strictly inside its row"
            )
        placed = Partition(v for st in stacks for v in st.labels if v)
        if placed != lam:
            raise ValueError(
                "labels %r do not place the parts of %r" % (placed, lam)
            )
        self._stacks, self._lam = stacks, lam

    @property
    def stacks(self):
        return self._stacks

    @property
    def lam(self):
        return self._lam

    def mu(self):
        """The partition rearranged by the row lengths."""
        return Partition(st.row_len for st in self._stacks)

    @property
    def m(self):
        return sum(st.row_len for st in self._stacks)

    def sign(self):
        return -1 if (self.m - len(self._stacks)) % 2 else 1

    def weight(self):
        return sum(st.weight() for st in self._stacks)

    def __eq__(self, other):
        if not isinstance(other, LabeledDiagram):
            return NotImplemented
        return self._stacks == other._stacks and self._lam == other._lam

    def __hash__(self):
        return hash((self._stacks, self._lam))

    def __repr__(self):
        return "LabeledDiagram(%s)" % (list(self._stacks),)

    def to_json(self):
        return {"stacks": [st.to_json() for st in self._stacks]}


def can_combine(diagram, i):
    """Whether stack i (a single labeled cell) absorbs stack i+1.

    The label plus the column height must fit among the full rows of the
    next stack's partition; merging into first position additionally needs
    the column empty so the merged partition still fits strictly.
    """
    stacks = diagram.stacks
    if not 0 <= i + 1 < len(stacks):
        raise IndexError("no stack follows index %d" % i)
    st = stacks[i]
    if st.row_len != 1:
        raise ValueError("combining requires a single-cell stack at index %d" % i)
    c, height = st.labels[0], st.above.size
    if i == 0 and height > 0:
        return False
    return c + height <= stacks[i + 1].full_rows()


def split(diagram, i):
    """Replace stack i (width > 1) by its last column over the last label,
    followed by the remainder widened with that many new full rows."""
    stacks = diagram.stacks
    st = stacks[i]
    if st.row_len <= 1:
        raise ValueError("cannot split a single-cell stack")
    r = st.row_len
    column_height = st.above.multiplicity(r)
    c = st.labels[-1]
    head = ColumnStack(1, [1] * column_height, (c,))
    rest_parts = [p - 1 if p == r else p for p in st.above] + [r - 1] * c
    tail = ColumnStack(r - 1, rest_parts, st.labels[:-1])
    return LabeledDiagram(
        stacks[:i] + (head, tail) + stacks[i + 1 :], diagram.lam
    )


def combine(diagram, i):
    """Merge stack i into stack i+1: remove as many full rows as the label,
    append the column on the right, append the label to the row."""
    if not can_combine(diagram, i):
        raise ValueError("stacks %d and %d cannot be combined" % (i, i + 1))
    stacks = diagram.stacks
    st, nxt = stacks[i], stacks[i + 1]
    c, height = st.labels[0], st.above.size
    r = nxt.row_len
    parts = list(nxt.above.parts)
    for _ in range(c):
        parts.remove(r)
    promoted = 0
    merged = []
    for p in sorted(parts, reverse=True):
        if p == r and promoted < height:
            merged.append(r + 1)
            promoted += 1
        else:
            merged.append(p)
    if promoted != height:
        raise AssertionError("combine lost column rows")
    big = ColumnStack(r + 1, merged, nxt.labels + (c,))
    return LabeledDiagram(stacks[:i] + (big,) + stacks[i + 2 :], diagram.lam)


def involution(diagram):
    """The partner of opposite sign and equal weight, or None for a fixed
    point.  Scans left to right; a wide stack splits, a single-cell stack
    tries to combine with its successor."""
    stacks = diagram.stacks
    for i, st in enumerate(stacks):
        if st.row_len > 1:
            return split(diagram, i)
        if i + 1 < len(stacks) and can_combine(diagram, i):
            return combine(diagram, i)
    return None


def _compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def diagrams_of_weight(k, lam, d):
    """All diagrams over all partitions of k+1 with weight exactly d."""
    if d < 0:
        raise ValueError("weight must be nonnegative")
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    m = k + 1
    if len(lam) > m:
        return []
    out = []
    for mu in partitions_of(m):
        for arrangement in distinct_orderings(mu.parts):
            caps = [
                rl - 1 if idx == 0 else rl for idx, rl in enumerate(arrangement)
            ]
            cell_offsets = []
            for rl in arrangement:
                cell_offsets.append(list(range(rl)))
            for flat in padded_rearrangements(lam, m):
                chunks = []
                pos = 0
                for rl in arrangement:
                    chunks.append(flat[pos : pos + rl])
                    pos += rl
                contribution = sum(
                    j * v
                    for offsets, chunk in zip(cell_offsets, chunks)
                    for j, v in zip(offsets, chunk)
                )
                remaining = d - contribution
                if remaining < 0:
                    continue
                for sizes in _compositions(remaining, len(arrangement)):
                    choices = [
                        partitions_of(s, max_part=cap)
                        for s, cap in zip(sizes, caps)
                    ]
                    if any(not ch for ch in choices):
                        continue

                    def build(idx, acc):
                        if idx == len(arrangement):
                            out.append(LabeledDiagram(tuple(acc), lam))
                            return
                        for above in choices[idx]:
                            build(
                                idx + 1,
                                acc
                                + [
                                    ColumnStack(
                                        arrangement[idx], above, chunks[idx]
                                    )
                                ],
                            )

                    build(0, [])
    return out


def fixed_to_msequence(diagram):
    """Read a fixed point (all widths 1) as an M-sequence of column heights
    over labels.  The M-sequence invariants re-assert non-combinability."""
    if any(st.row_len != 1 for st in diagram.stacks):
        raise ValueError("diagram has a stack wider than one cell")
    return MSequence(
        (st.above.size, st.labels[0]) for st in diagram.stacks
    )
