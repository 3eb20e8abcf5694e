"""Square matrices over an exact field, viewed as a ring with involution.

The involution of :class:`StarMatrix` is the conjugate transpose over ``Qi``
and the plain transpose over ``Q`` and ``Fp``.  Everything here is exact;
elimination routines pick the first nonzero pivot, so results are
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from operator import mul
from typing import Iterable, Sequence

from .errors import DimensionMismatch, FieldMismatch
from .scalars import FieldSpec

__all__ = [
    "StarMatrix",
    "RankForm",
    "rank_form",
    "rank",
    "try_inverse",
    "one_sided_invertible",
    "solve_linear",
    "mat_arith",
]


class StarMatrix:
    """Immutable ``n x n`` matrix over a :class:`FieldSpec`."""

    __slots__ = ("field", "n", "rows", "_hash")

    def __init__(self, field: FieldSpec, rows: Iterable[Sequence]):
        rows = [list(r) for r in rows]
        n = len(rows)
        if n < 1:
            raise DimensionMismatch("matrix dimension must be at least 1")
        for r in rows:
            if len(r) != n:
                raise DimensionMismatch(f"matrix is not square: row of length {len(r)} for n={n}")
        coerce = field.coerce
        self.field = field
        self.n = n
        self.rows = tuple(tuple(coerce(x) for x in r) for r in rows)
        self._hash = None

    @classmethod
    def _raw(cls, field, rows):
        obj = object.__new__(cls)
        obj.field = field
        obj.n = len(rows)
        obj.rows = rows
        obj._hash = None
        return obj

    # -- constructors -----------------------------------------------------

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "StarMatrix":
        one, zero = field.one(), field.zero()
        return cls._raw(field, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, field: FieldSpec, n: int) -> "StarMatrix":
        zero = field.zero()
        return cls._raw(field, tuple((zero,) * n for _ in range(n)))

    @classmethod
    def diag(cls, field: FieldSpec, values: Sequence) -> "StarMatrix":
        n = len(values)
        return cls(field, [[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    # -- basic access -----------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def tolist(self):
        return [list(r) for r in self.rows]

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format(x) for x in r) for r in self.rows)
        return f"StarMatrix({self.field}, [{body}])"

    def __eq__(self, other):
        if not isinstance(other, StarMatrix):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.rows))
        return self._hash

    # -- ring operations --------------------------------------------------

    def _check(self, other):
        if not isinstance(other, StarMatrix):
            raise TypeError(f"expected StarMatrix, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if other.n != self.n:
            raise DimensionMismatch(f"{self.n}x{self.n} vs {other.n}x{other.n}")

    def __add__(self, other):
        if isinstance(other, int):
            other = StarMatrix.identity(self.field, self.n).scale(other)
        self._check(other)
        return StarMatrix._raw(
            self.field,
            tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)),
        )

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = StarMatrix.identity(self.field, self.n).scale(other)
        self._check(other)
        return StarMatrix._raw(
            self.field,
            tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)),
        )

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return StarMatrix._raw(self.field, tuple(tuple(-x for x in r) for r in self.rows))

    def __matmul__(self, other):
        self._check(other)
        cols = list(zip(*other.rows))
        zero = self.field.zero()
        return StarMatrix._raw(
            self.field,
            tuple(tuple(sum(map(mul, r, c), zero) for c in cols) for r in self.rows),
        )

    def __mul__(self, other):
        if isinstance(other, StarMatrix):
            return self @ other
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "StarMatrix":
        c = self.field.coerce(c)
        return StarMatrix._raw(self.field, tuple(tuple(c * x for x in r) for r in self.rows))

    def __pow__(self, k: int) -> "StarMatrix":
        if not isinstance(k, int) or k < 0:
            raise ValueError("matrix powers need an integer exponent >= 0")
        result = StarMatrix.identity(self.field, self.n)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def transpose(self) -> "StarMatrix":
        return StarMatrix._raw(self.field, tuple(zip(*self.rows)))

    def star(self) -> "StarMatrix":
        if self.field.involution == "identity":
            return self.transpose()
        return StarMatrix._raw(self.field, tuple(tuple(x.conjugate() for x in c) for c in zip(*self.rows)))

    @property
    def H(self) -> "StarMatrix":
        return self.star()

    def rank(self) -> int:
        return rank(self)


def mat_arith(a: StarMatrix, b: StarMatrix | None, op: str, arg=None):
    """Dispatch ``add sub mul neg star eq scale pow`` by name."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a @ b
    if op == "neg":
        return -a
    if op == "star":
        return a.star()
    if op == "eq":
        a._check(b)
        return a == b
    if op == "scale":
        return a.scale(arg)
    if op == "pow":
        return a ** arg
    raise ValueError(f"unknown matrix op {op!r}")


# ---------------------------------------------------------------------------
# elimination


def _eliminate(m: list[list], extra: list[list] | None):
    """Reduce ``m`` to reduced row echelon form in place.

    The same row operations are applied to ``extra``. Returns pivot columns.
    """
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        piv = next((i for i in range(row, nrows) if m[i][col]), None)
        if piv is None:
            continue
        if piv != row:
            m[row], m[piv] = m[piv], m[row]
            if extra is not None:
                extra[row], extra[piv] = extra[piv], extra[row]
        inv = 1 / m[row][col]
        if m[row][col] != 1:
            m[row] = [inv * x for x in m[row]]
            if extra is not None:
                extra[row] = [inv * x for x in extra[row]]
        prow = m[row]
        erow = extra[row] if extra is not None else None
        for i in range(nrows):
            if i != row:
                f = m[i][col]
                if f:
                    m[i] = [x - f * y for x, y in zip(m[i], prow)]
                    if erow is not None:
                        extra[i] = [x - f * y for x, y in zip(extra[i], erow)]
        pivots.append(col)
        row += 1
    return pivots


def rank(a: StarMatrix) -> int:
    return len(_eliminate([list(r) for r in a.rows], None))


def try_inverse(a: StarMatrix) -> StarMatrix | None:
    """Two-sided inverse of ``a``, or ``None`` when ``a`` is not a unit."""
    n = a.n
    one, zero = a.field.one(), a.field.zero()
    extra = [[one if i == j else zero for j in range(n)] for i in range(n)]
    pivots = _eliminate([list(r) for r in a.rows], extra)
    if len(pivots) < n:
        return None
    return StarMatrix._raw(a.field, tuple(tuple(r) for r in extra))


def _solve_left(a: StarMatrix, b: StarMatrix) -> StarMatrix | None:
    # a X = b with free variables set to zero
    n = a.n
    m = [list(r) for r in a.rows]
    extra = [list(r) for r in b.rows]
    pivots = _eliminate(m, extra)
    r = len(pivots)
    for i in range(r, n):
        if any(extra[i]):
            return None
    zero = a.field.zero()
    x = [[zero] * n for _ in range(n)]
    for i, col in enumerate(pivots):
        x[col] = extra[i]
    return StarMatrix._raw(a.field, tuple(tuple(row) for row in x))


def solve_linear(a: StarMatrix, b: StarMatrix, side: str = "AX=B") -> StarMatrix | None:
    """One exact solution of ``AX = B`` or ``XA = B``; ``None`` if there is none.

    The returned solution is canonical: every free variable is zero.
    """
    a._check(b)
    if side == "AX=B":
        return _solve_left(a, b)
    if side == "XA=B":
        xt = _solve_left(a.transpose(), b.transpose())
        return None if xt is None else xt.transpose()
    raise ValueError(f"side must be 'AX=B' or 'XA=B', got {side!r}")


def one_sided_invertible(a: StarMatrix, side: str) -> StarMatrix | None:
    """Witness ``S`` with ``S a = 1`` (``side='left'``) or ``a S = 1`` (``'right'``)."""
    one = StarMatrix.identity(a.field, a.n)
    if side == "left":
        return solve_linear(a, one, "XA=B")
    if side == "right":
        return solve_linear(a, one, "AX=B")
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


@dataclass(frozen=True)
class RankForm:
    """``P @ A @ Q == diag_block(I_r, 0)`` with ``P``, ``Q`` invertible."""

    P: StarMatrix
    Q: StarMatrix
    r: int
    P_inv: StarMatrix
    Q_inv: StarMatrix

    @property
    def n(self) -> int:
        return self.P.n

    def block(self) -> StarMatrix:
        f, n, r = self.P.field, self.P.n, self.r
        return StarMatrix._raw(
            f, tuple(tuple(f.one() if i == j and i < r else f.zero() for j in range(n)) for i in range(n))
        )

    def reconstruct(self) -> StarMatrix:
        return self.P_inv @ self.block() @ self.Q_inv


def rank_form(a: StarMatrix) -> RankForm:
    """Rank normal form of ``a`` by row reduction followed by column clearing."""
    f, n = a.field, a.n
    one, zero = f.one(), f.zero()
    m = [list(r) for r in a.rows]
    e = [[one if i == j else zero for j in range(n)] for i in range(n)]
    pivots = _eliminate(m, e)
    r = len(pivots)
    P = StarMatrix._raw(f, tuple(tuple(row) for row in e))
    pivset = set(pivots)
    order = pivots + [c for c in range(n) if c not in pivset]
    # after permuting columns by `order`, m = [[I_r, C], [0, 0]]
    c_block = [[m[i][order[j]] for j in range(r, n)] for i in range(r)]
    # Q = Pi @ [[I, -C], [0, I]] ; Q_inv = [[I, C], [0, I]] @ Pi^T
    inner = [[one if i == j else zero for j in range(n)] for i in range(n)]
    inner_inv = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for i in range(r):
        for j in range(r, n):
            inner[i][j] = -c_block[i][j - r]
            inner_inv[i][j] = c_block[i][j - r]
    q = [[zero] * n for _ in range(n)]
    for j, src in enumerate(order):
        q[src] = list(inner[j])
    q_inv = [[inner_inv[i][order.index(j)] for j in range(n)] for i in range(n)]
    Q = StarMatrix._raw(f, tuple(tuple(row) for row in q))
    Q_inv = StarMatrix._raw(f, tuple(tuple(row) for row in q_inv))
    P_inv = try_inverse(P)
    return RankForm(P=P, Q=Q, r=r, P_inv=P_inv, Q_inv=Q_inv)
