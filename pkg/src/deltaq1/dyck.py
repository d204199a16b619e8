"""Dyck paths, area sequences, vertical runs, and decorated paths.

A path is canonically its area sequence; the North/East step word and the
lattice vertices are derived views.  Decorations mark rows whose area is
discounted, plus optionally the origin.
"""

from __future__ import annotations

from itertools import combinations

from .partitions import Partition
from .tarith import TPoly, TLaurent, ONE


class DyckPath:
    """Lattice path from (0,0) to (n,n) weakly above the diagonal, stored as
    the per-row area sequence (alpha_1, ..., alpha_n)."""

    __slots__ = ("_alpha",)

    def __init__(self, area_seq):
        alpha = tuple(int(a) for a in area_seq)
        if not alpha:
            raise ValueError("empty area sequence")
        if alpha[0] != 0:
            raise ValueError("area sequence must start at 0")
        for i in range(1, len(alpha)):
            if alpha[i] < 0 or alpha[i] > alpha[i - 1] + 1:
                raise ValueError(
                    "invalid area sequence %r at row %d" % (alpha, i + 1)
                )
        self._alpha = alpha

    @property
    def area_seq(self):
        return self._alpha

    @property
    def n(self):
        return len(self._alpha)

    def area(self):
        return sum(self._alpha)

    def alpha(self, i):
        """Area of row i (1-based)."""
        return self._alpha[i - 1]

    def rises(self):
        """Rows i >= 2 whose North step directly follows the one below,
        i.e. alpha_{i-1} = alpha_i - 1.  These are the decorable rows."""
        return [
            i
            for i in range(2, self.n + 1)
            if self._alpha[i - 2] == self._alpha[i - 1] - 1
        ]

    def run_starts(self):
        """Rows that begin a maximal vertical segment."""
        rises = set(self.rises())
        return [i for i in range(1, self.n + 1) if i not in rises]

    def runs(self):
        """Maximal vertical segments as (start row, length) pairs."""
        starts = self.run_starts()
        out = []
        for idx, s in enumerate(starts):
            end = starts[idx + 1] if idx + 1 < len(starts) else self.n + 1
            out.append((s, end - s))
        return out

    def vertical_run_partition(self):
        """The partition of n formed by vertical segment lengths."""
        return Partition(length for _, length in self.runs())

    def steps(self):
        """Step word as a string of 'N' and 'E' characters."""
        word = []
        x = 0
        for i, a in enumerate(self._alpha):
            # Row i+1's North step sits at column (row index) - alpha.
            col = i - a
            word.extend("E" * (col - x))
            word.append("N")
            x = col
        word.extend("E" * (self.n - x))
        return "".join(word)

    def east_landing(self, row):
        """For a non-segment-start row, the index (into steps()) of the East
        step over which the row's travelling pair comes to rest.

        Follow the diagonal of the row's area northeast; the pair lands on
        the East step entering the first East-step start on that diagonal.
        """
        if row in set(self.run_starts()):
            raise ValueError("row %d starts a vertical segment" % row)
        c = self.alpha(row)
        word = self.steps()
        # Locate the start of this row's North step, tracking the diagonal
        # (y - x) of the vertex reached after each step.
        norths_seen = 0
        diag = 0
        pos = 0
        for pos, ch in enumerate(word):
            if ch == "N":
                norths_seen += 1
                diag += 1
                if norths_seen == row:
                    break
            else:
                diag -= 1
        for j in range(pos + 1, len(word)):
            diag += 1 if word[j] == "N" else -1
            if word[j] == "E" and diag == c and j + 1 < len(word) and word[j + 1] == "E":
                return j
        raise AssertionError("no landing East step for row %d of %r" % (row, self))

    def __eq__(self, other):
        if not isinstance(other, DyckPath):
            return NotImplemented
        return self._alpha == other._alpha

    def __hash__(self):
        return hash(self._alpha)

    def __repr__(self):
        return "DyckPath(%s)" % list(self._alpha)


def enumerate_paths(n):
    """All Dyck paths in the n x n square, ordered by area sequence."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []

    def rec(prefix):
        if len(prefix) == n:
            out.append(DyckPath(prefix))
            return
        for nxt in range(prefix[-1] + 2):
            rec(prefix + [nxt])

    rec([0])
    return out


def decoration_weights(path, max_count):
    """Laurent coefficients, by decoration count 0..max_count, of the product
    (1 + w) * prod over decorable rows of (1 + w * t^(-alpha_row))."""
    coeffs = [TLaurent(ONE)] + [TLaurent(0)] * max_count
    factors = [0] + [-path.alpha(i) for i in path.rises()]
    for off in factors:
        term = TLaurent.t_power(off)
        for j in range(min(len(factors), max_count), 0, -1):
            coeffs[j] = coeffs[j] + coeffs[j - 1] * term
    return coeffs


def decoration_weight(path, count):
    """Single Laurent coefficient of decoration_weights; zero past the
    number of available rows plus one (for the origin)."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    if count > len(path.rises()) + 1:
        return TLaurent(0)
    return decoration_weights(path, count)[count]


class DecoratedDyckPath:
    """A Dyck path with a set of decorated rows drawn from {0} union the
    decorable rows; 0 marks the origin."""

    __slots__ = ("_path", "_rows")

    def __init__(self, path, rows):
        rows = frozenset(int(r) for r in rows)
        allowed = set(path.rises()) | {0}
        bad = rows - allowed
        if bad:
            raise ValueError("rows %s cannot carry a decoration" % sorted(bad))
        self._path, self._rows = path, rows

    @property
    def path(self):
        return self._path

    @property
    def rows(self):
        return self._rows

    def decorations(self):
        return sorted(self._rows)

    def decorated_area(self):
        """Area cells outside decorated rows; the origin discounts nothing."""
        return self._path.area() - sum(
            self._path.alpha(i) for i in self._rows if i > 0
        )

    def __eq__(self, other):
        if not isinstance(other, DecoratedDyckPath):
            return NotImplemented
        return self._path == other._path and self._rows == other._rows

    def __hash__(self):
        return hash((self._path, self._rows))

    def __repr__(self):
        return "DecoratedDyckPath(%r, %s)" % (self._path, self.decorations())

    def to_json(self):
        return {
            "area_seq": list(self._path.area_seq),
            "decorated_rows": self.decorations(),
        }

    @classmethod
    def from_json(cls, data):
        return cls(DyckPath(data["area_seq"]), data["decorated_rows"])


def enumerate_decorated(n, k, lam=None):
    """All decorated paths with exactly n - k decorations, optionally
    filtered by the vertical run partition."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if lam is not None and not isinstance(lam, Partition):
        lam = Partition(lam)
    out = []
    for path in enumerate_paths(n):
        if lam is not None and path.vertical_run_partition() != lam:
            continue
        candidates = [0] + path.rises()
        for chosen in combinations(candidates, n - k):
            out.append(DecoratedDyckPath(path, chosen))
    return out
