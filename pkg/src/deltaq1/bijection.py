"""The weight-preserving bijection between decorated Dyck paths and
M-sequences, in both directions.

Forward: every vertical segment start contributes its (area, length) pair;
every undecorated non-start row contributes (area, 0), transported
northeast along its diagonal to rest over an East step; pairs are read in
path order, and an undecorated origin appends a final (0, 0).

Inverse: the nonzero pairs rebuild the path, the zero pairs drop southwest
from their East steps back onto rows, and the rows left without a pair are
exactly the decorated ones.
"""

from __future__ import annotations

from .dyck import DecoratedDyckPath, DyckPath
from .msequences import MSequence


def decorated_to_msequence(decorated):
    """Map a decorated path to its M-sequence."""
    path = decorated.path
    rows = decorated.rows
    starts = {s: length for s, length in path.runs()}

    landed = {}
    for i in range(1, path.n + 1):
        if i in starts or i in rows:
            continue
        step = path.east_landing(i)
        if step in landed:
            raise AssertionError(
                "two rows landed on one East step in %r" % (decorated,)
            )
        landed[step] = i

    pairs = []
    row = 0
    for idx, ch in enumerate(path.steps()):
        if ch == "N":
            row += 1
            if row in starts:
                pairs.append((path.alpha(row), starts[row]))
        elif idx in landed:
            pairs.append((path.alpha(landed[idx]), 0))
    if 0 not in rows:
        pairs.append((0, 0))
    seq = MSequence(pairs)
    if seq.rho() != decorated.decorated_area():
        raise AssertionError("weight not preserved for %r" % (decorated,))
    return seq


def _windows(pairs):
    """Split the pair list into segments and the zero pairs trailing each.

    Returns (segments, zero_runs): segments[j] = (a, b) with b > 0, and
    zero_runs[j] lists the (r, 0) values read after segment j.
    """
    segments = []
    zero_runs = []
    for a, b in pairs:
        if b > 0:
            segments.append((a, b))
            zero_runs.append([])
        else:
            if not segments:
                raise ValueError("sequence must begin with a nonzero budget")
            zero_runs[-1].append(a)
    return segments, zero_runs


def msequence_to_decorated(seq):
    """Rebuild the unique decorated path mapping to the given M-sequence.

    Accepts an MSequence or a raw pair list (which is validated first).
    Raises on any malformed input, reporting the first violated inequality.
    """
    if not isinstance(seq, MSequence):
        seq = MSequence(seq)
    pairs = list(seq.pairs)

    origin_decorated = pairs[-1] != (0, 0)
    if not origin_decorated:
        pairs = pairs[:-1]
    if not pairs:
        raise ValueError("nothing left after the origin marker")

    segments, zero_runs = _windows(pairs)

    # Segment starts must descend strictly below the previous segment top;
    # the chained M-inequalities guarantee it, and we assert it per window.
    area = []
    row_of_start = []
    for j, (a, b) in enumerate(segments):
        if j == 0:
            if a != 0:
                raise ValueError("first segment must start on the diagonal")
        else:
            top = segments[j - 1][0] + segments[j - 1][1]
            chain = [top] + zero_runs[j - 1] + [a]
            for x, y in zip(chain, chain[1:]):
                if not x > y:
                    raise AssertionError(
                        "window chain broken: %d is not above %d" % (x, y)
                    )
        row_of_start.append(len(area) + 1)
        area.extend(range(a, a + b))
    final_top = segments[-1][0] + segments[-1][1]
    chain = [final_top] + zero_runs[-1] + [0]
    for x, y in zip(chain, chain[1:]):
        if not x > y:
            raise AssertionError("trailing window chain broken")

    path = DyckPath(area)

    # Index the East steps of each window by the diagonal they end on.
    word = path.steps()
    east_end_diag = {}
    diag = 0
    for idx, ch in enumerate(word):
        diag += 1 if ch == "N" else -1
        if ch == "E":
            east_end_diag[idx] = diag

    landing_row = {}
    for i in range(1, path.n + 1):
        if i not in set(row_of_start):
            landing_row[path.east_landing(i)] = i

    # Walk windows left to right matching zero pairs to East steps.
    assigned = {}
    east_by_window = []
    window = []
    row = 0
    for idx, ch in enumerate(word):
        if ch == "N":
            row += 1
            if row in row_of_start[1:]:
                east_by_window.append(window)
                window = []
        else:
            window.append(idx)
    east_by_window.append(window)
    if len(east_by_window) != len(segments):
        raise AssertionError("window bookkeeping failed")

    for j, zeros in enumerate(zero_runs):
        for r in zeros:
            matches = [e for e in east_by_window[j] if east_end_diag[e] == r]
            if len(matches) != 1:
                raise AssertionError(
                    "no unique East step ends on diagonal %d in window %d"
                    % (r, j)
                )
            step = matches[0]
            if step not in landing_row:
                raise AssertionError(
                    "East step %d is not a landing step" % step
                )
            target = landing_row[step]
            if target in assigned.values():
                raise AssertionError("row %d claimed twice" % target)
            assigned[step] = target

    with_pairs = set(row_of_start) | set(assigned.values())
    decorations = [i for i in range(1, path.n + 1) if i not in with_pairs]
    if not origin_decorated:
        result = DecoratedDyckPath(path, decorations)
    else:
        result = DecoratedDyckPath(path, [0] + decorations)
    if result.decorated_area() != seq.rho():
        raise AssertionError("weight not preserved rebuilding %r" % (seq,))
    return result
