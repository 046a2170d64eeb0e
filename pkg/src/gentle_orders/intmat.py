"""Exact integer matrices with fraction-free (Bareiss) elimination.

Entries are python ints throughout; nothing here touches floating point.
"""


class IntegerMatrix:
    """Immutable dense integer matrix.

    >>> m = IntegerMatrix([[2, 1], [1, 2]])
    >>> m.det(), m.rank()
    (3, 2)
    """

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows, ncols=None):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        self._rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def rows(self):
        return [list(r) for r in self._rows]

    def tolist(self):
        return self.rows()

    def transpose(self):
        return IntegerMatrix(zip(*self._rows), self.nrows) if self.ncols else \
            IntegerMatrix([], self.nrows)

    @property
    def T(self):
        return self.transpose()

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other._rows)) if other.nrows else [()] * other.ncols
        return IntegerMatrix(
            [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self._rows],
            other.ncols)

    def is_symmetric(self):
        return self.nrows == self.ncols and all(
            self._rows[i][j] == self._rows[j][i]
            for i in range(self.nrows) for j in range(i))

    def diagonal(self):
        return [self._rows[i][i] for i in range(min(self.nrows, self.ncols))]

    def __eq__(self, other):
        return isinstance(other, IntegerMatrix) and self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"IntegerMatrix({self.rows()})"

    def pretty(self):
        if not self.nrows or not self.ncols:
            return f"[] ({self.nrows}x{self.ncols})"
        w = max(len(str(x)) for r in self._rows for x in r)
        return "\n".join(" ".join(str(x).rjust(w) for x in r) for r in self._rows)

    def rank(self):
        return bareiss_rank(self.rows())

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        return bareiss_det(self.rows())


def _bareiss(a):
    """In-place fraction-free elimination with row pivoting.

    Returns ``(rank, sign)`` where ``sign`` tracks row swaps. After the call
    the last nonzero pivot of a square full-rank matrix sits at ``a[n-1][n-1]``
    and equals the determinant up to ``sign``.
    """
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    prev = 1
    sign = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
            sign = -sign
        p = a[r][c]
        for i in range(r + 1, nrows):
            ai = a[i]
            f = ai[c]
            for j in range(c + 1, ncols):
                # exact division is the Bareiss invariant
                ai[j] = (p * ai[j] - f * a[r][j]) // prev
            ai[c] = 0
        prev = p
        r += 1
    return r, sign


def bareiss_rank(rows):
    a = [list(r) for r in rows]
    if not a or not a[0]:
        return 0
    return _bareiss(a)[0]


def bareiss_det(rows):
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    rank, sign = _bareiss(a)
    if rank < n:
        return 0
    return sign * a[n - 1][n - 1]
