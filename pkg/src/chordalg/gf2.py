"""GF(2) linear algebra on int bitsets, plus k x k bit matrices and GF(2)[x] helpers.

Vectors are Python ints (bit i = coordinate i).  Matrices over GF(2) are
tuples of row bitmasks, which keeps them hashable and cheap to multiply at
the k <= 4 sizes used here.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence, Tuple

BitMatrix = Tuple[int, ...]


class Echelon:
    """Incremental row-echelon basis over GF(2)."""

    def __init__(self) -> None:
        self.rows: List[int] = []  # row i has pivot self.pivots[i]
        self.pivots: List[int] = []

    def reduce(self, vec: int) -> int:
        for row, piv in zip(self.rows, self.pivots):
            if (vec >> piv) & 1:
                vec ^= row
        return vec

    def add(self, vec: int) -> bool:
        """Insert vec; return True if it enlarged the span."""
        vec = self.reduce(vec)
        if vec == 0:
            return False
        piv = vec.bit_length() - 1
        self.rows.append(vec)
        self.pivots.append(piv)
        return True

    def contains(self, vec: int) -> bool:
        return self.reduce(vec) == 0

    @property
    def rank(self) -> int:
        return len(self.rows)


def rank(rows: Iterable[int]) -> int:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.rank


# -- k x k matrices as tuples of row bitmasks --------------------------------


def eye(k: int) -> BitMatrix:
    return tuple(1 << i for i in range(k))


def zero(k: int) -> BitMatrix:
    return (0,) * k


def mat_add(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    return tuple(x ^ y for x, y in zip(a, b))


def mat_mul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    out = []
    for row in a:
        acc = 0
        r = row
        while r:
            low = r & -r
            acc ^= b[low.bit_length() - 1]
            r ^= low
        out.append(acc)
    return tuple(out)


def mat_transpose(a: BitMatrix) -> BitMatrix:
    k = len(a)
    return tuple(
        sum(((a[i] >> j) & 1) << i for i in range(k)) for j in range(k)
    )


def mat_is_zero(a: BitMatrix) -> bool:
    return all(r == 0 for r in a)


def mat_from_lists(rows: Sequence[Sequence[int]]) -> BitMatrix:
    k = len(rows)
    for r in rows:
        if len(r) != k:
            raise ValueError("matrix must be square")
    return tuple(sum((int(v) & 1) << j for j, v in enumerate(r)) for r in rows)


def mat_to_lists(a: BitMatrix) -> List[List[int]]:
    k = len(a)
    return [[(a[i] >> j) & 1 for j in range(k)] for i in range(k)]


def kron(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Kronecker product; block (i,j) of the result is a[i][j] * b."""
    ka, kb = len(a), len(b)
    out = []
    for i in range(ka):
        for bi in range(kb):
            acc = 0
            for j in range(ka):
                if (a[i] >> j) & 1:
                    acc |= b[bi] << (j * kb)
            out.append(acc)
    return tuple(out)


def kron_op(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """The twisted product A (x) B^T used for M_k (x) M_k^op actions."""
    return kron(a, mat_transpose(b))


# -- GF(2)[x] on int bitmasks (bit i = coefficient of x^i) -------------------


def polx_mul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def polx_divmod(a: int, b: int) -> Tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    q = 0
    db = b.bit_length()
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def polx_mod(a: int, b: int) -> int:
    return polx_divmod(a, b)[1]


def polx_is_irreducible(p: int) -> bool:
    d = p.bit_length() - 1
    if d <= 0:
        return False
    if d == 1:
        return True
    if not p & 1 and p != 0b10:
        return False  # divisible by x
    for g in range(2, 1 << (d // 2 + 1)):
        if g.bit_length() - 1 < 1:
            continue
        if polx_is_irreducible(g) and polx_mod(p, g) == 0:
            return False
    return True


def polx_irreducible_factor(p: int) -> int:
    """Smallest-degree irreducible factor of p over GF(2); p must not be 0 or 1."""
    if p in (0, 1):
        raise ValueError("polynomial has no irreducible factor")
    d = p.bit_length() - 1
    for deg in range(1, d + 1):
        for tail in range(1 << deg):
            g = (1 << deg) | tail
            if polx_mod(p, g) == 0 and polx_is_irreducible(g):
                return g
    raise AssertionError("unreachable: p > 1 has an irreducible factor")


def companion(g: int) -> BitMatrix:
    """Companion matrix of the monic polynomial g over GF(2).

    For g = x^d + c_{d-1} x^{d-1} + ... + c_0 the last column carries the
    coefficients, so g(companion(g)) = 0.
    """
    d = g.bit_length() - 1
    if d < 1:
        raise ValueError("companion matrix needs degree >= 1")
    rows = []
    for i in range(d):
        row = 0
        if i > 0:
            row |= 1 << (i - 1)  # subdiagonal
        if (g >> i) & 1:
            row |= 1 << (d - 1)  # coefficient column
        rows.append(row)
    return tuple(rows)


def mat_poly_eval(p: int, m: BitMatrix) -> BitMatrix:
    """Evaluate the GF(2)[x] polynomial p at the matrix m."""
    k = len(m)
    acc = zero(k)
    power = eye(k)
    while p:
        if p & 1:
            acc = mat_add(acc, power)
        power = mat_mul(power, m)
        p >>= 1
    return acc
