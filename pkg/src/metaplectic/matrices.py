"""Small exact linear algebra over the rationals.

Matrices are tuples of tuples of :class:`fractions.Fraction`, which keeps
them hashable and immutable.  Sizes in this package never exceed 8x8, so
plain cubic algorithms are fine.
"""

from fractions import Fraction
from typing import Iterable, Sequence, Tuple

Matrix = Tuple[Tuple[Fraction, ...], ...]


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not accepted in exact matrices")
    return Fraction(x)


def mat(rows: Iterable[Iterable]) -> Matrix:
    return tuple(tuple(to_fraction(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    one, zero = Fraction(1), Fraction(0)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def zeros(n: int, m: int = None) -> Matrix:
    m = n if m is None else m
    return tuple(tuple(Fraction(0) for _ in range(m)) for _ in range(n))


def diag(entries: Sequence) -> Matrix:
    n = len(entries)
    zero = Fraction(0)
    return tuple(
        tuple(to_fraction(entries[i]) if i == j else zero for j in range(n))
        for i in range(n)
    )


def matmul(a: Matrix, b: Matrix) -> Matrix:
    # Row-times-matrix, skipping zero entries: most operands here are sparse.
    width = len(b[0]) if b else 0
    zero = Fraction(0)
    out = []
    for row in a:
        acc = [zero] * width
        for k, x in enumerate(row):
            if x:
                brow = b[k]
                for j in range(width):
                    y = brow[j]
                    if y:
                        acc[j] += x * y
        out.append(tuple(acc))
    return tuple(out)


def mul_all(*ms: Matrix) -> Matrix:
    out = ms[0]
    for m in ms[1:]:
        out = matmul(out, m)
    return out


def transpose(a: Matrix) -> Matrix:
    return tuple(tuple(col) for col in zip(*a))


def scale(c, a: Matrix) -> Matrix:
    c = to_fraction(c)
    return tuple(tuple(c * x for x in row) for row in a)


def add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def neg(a: Matrix) -> Matrix:
    return tuple(tuple(-x for x in row) for row in a)


def block(a: Matrix, b: Matrix, c: Matrix, d: Matrix) -> Matrix:
    """Assemble [[a, b], [c, d]] from four square blocks."""
    top = tuple(ra + rb for ra, rb in zip(a, b))
    bottom = tuple(rc + rd for rc, rd in zip(c, d))
    return top + bottom


def blocks(g: Matrix) -> Tuple[Matrix, Matrix, Matrix, Matrix]:
    """Split a 2n x 2n matrix into its four n x n blocks."""
    n = len(g) // 2
    a = tuple(row[:n] for row in g[:n])
    b = tuple(row[n:] for row in g[:n])
    c = tuple(row[:n] for row in g[n:])
    d = tuple(row[n:] for row in g[n:])
    return a, b, c, d


def is_zero(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def _echelon(rows):
    """Row-reduce a list of lists in place; return (rank, det sign*pivots)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    det = Fraction(1)
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if piv is None:
            det = Fraction(0)
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
            det = -det
        pv = m[rank][col]
        det *= pv
        for r in range(rank + 1, nrows):
            f = m[r][col]
            if f:
                f /= pv
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank, det, m


def rank(a: Matrix) -> int:
    if not a or not a[0]:
        return 0
    return _echelon(a)[0]


def det(a: Matrix) -> Fraction:
    n = len(a)
    if n == 0:
        return Fraction(1)
    r, d, _ = _echelon(a)
    return d if r == n else Fraction(0)


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    m = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def format_matrix(a: Matrix) -> list:
    return [[str(x) for x in row] for row in a]
