"""Exact dense linear algebra over GF(p) and over the rationals.

Scalars are plain Python ints reduced mod p, or `fractions.Fraction`
values kept in lowest terms; matrices are immutable tuples of row tuples.
There is no floating point anywhere in the package.

The public surface is deliberately small: reduced row echelon form,
kernels, linear solving, subspaces with canonical echelon bases, orbit
closure of vectors under a set of operators ("spinning"), characteristic
polynomials, and a solver for simultaneous conjugation g*A_i = B_i*g
with g invertible.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import isqrt

from .errors import (
    CertificateSearchExhausted,
    DimensionMismatch,
    InternalInvariantViolation,
    InvalidInput,
)

_PRIME_CAP = 2**31


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    top = isqrt(p)
    while d <= top:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """GF(p) for a prime p below 2^31, or the rationals when p is None.

    Instances are interned, so fields compare by identity.  Elements are
    bare ints in [0, p) respectively Fraction values; the field object
    only carries the arithmetic.
    """

    __slots__ = ("p",)
    _instances: dict = {}

    def __new__(cls, p: int | None = None):
        if p in cls._instances:
            return cls._instances[p]
        if p is not None:
            if not isinstance(p, int) or not _is_prime(p):
                raise InvalidInput(f"field order {p!r} is not prime")
            if p >= _PRIME_CAP:
                raise InvalidInput(f"prime {p} exceeds the 2^31 cap")
        obj = super().__new__(cls)
        obj.p = p
        cls._instances[p] = obj
        return obj

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(p)

    @classmethod
    def rational(cls) -> "Field":
        return cls(None)

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def zero(self):
        return Fraction(0) if self.p is None else 0

    @property
    def one(self):
        return Fraction(1) if self.p is None else 1

    def coerce(self, x):
        if self.p is None:
            return x if isinstance(x, Fraction) else Fraction(x)
        return x % self.p

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverting zero field element")
        if self.p is None:
            return 1 / a
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"


class Matrix:
    """Immutable dense matrix over a Field."""

    __slots__ = ("field", "nrows", "ncols", "entries")

    def __init__(self, field: Field, entries, ncols: int | None = None, validate: bool = True):
        if validate:
            rows = tuple(tuple(field.coerce(x) for x in row) for row in entries)
        else:
            rows = tuple(tuple(row) for row in entries)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise DimensionMismatch("ragged rows")
            if ncols is not None and ncols != width:
                raise DimensionMismatch("ncols disagrees with row width")
            ncols = width
        elif ncols is None:
            raise DimensionMismatch("empty matrix needs an explicit ncols")
        self.field = field
        self.entries = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return cls(field, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)),
                   validate=False)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        zero = field.zero
        return cls(field, tuple(tuple(zero for _ in range(ncols)) for _ in range(nrows)),
                   ncols=ncols, validate=False)

    def _check_same_field(self, other: "Matrix"):
        if self.field is not other.field:
            raise DimensionMismatch("mixed base fields")

    def __mul__(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.nrows}x{self.ncols} times {other.nrows}x{other.ncols}")
        p = self.field.p
        cols = tuple(zip(*other.entries)) if other.entries else ()
        if p is None:
            rows = tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                         for row in self.entries)
        else:
            rows = tuple(tuple(sum(a * b for a, b in zip(row, col)) % p for col in cols)
                         for row in self.entries)
        return Matrix(self.field, rows, ncols=other.ncols, validate=False)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("shape mismatch in addition")
        p = self.field.p
        if p is None:
            rows = tuple(tuple(a + b for a, b in zip(r1, r2))
                         for r1, r2 in zip(self.entries, other.entries))
        else:
            rows = tuple(tuple((a + b) % p for a, b in zip(r1, r2))
                         for r1, r2 in zip(self.entries, other.entries))
        return Matrix(self.field, rows, ncols=self.ncols, validate=False)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        p = self.field.p
        if p is None:
            rows = tuple(tuple(-a for a in r) for r in self.entries)
        else:
            rows = tuple(tuple((-a) % p for a in r) for r in self.entries)
        return Matrix(self.field, rows, ncols=self.ncols, validate=False)

    def scale(self, c) -> "Matrix":
        c = self.field.coerce(c)
        p = self.field.p
        if p is None:
            rows = tuple(tuple(c * a for a in r) for r in self.entries)
        else:
            rows = tuple(tuple((c * a) % p for a in r) for r in self.entries)
        return Matrix(self.field, rows, ncols=self.ncols, validate=False)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field is other.field
                and self.ncols == other.ncols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field.p, self.ncols, self.entries))

    def transpose(self) -> "Matrix":
        if not self.entries:
            return Matrix(self.field, tuple(() for _ in range(self.ncols)),
                          ncols=0, validate=False)
        return Matrix(self.field, tuple(zip(*self.entries)), ncols=self.nrows, validate=False)

    def apply(self, v) -> tuple:
        """Act on a vector: returns M*v with v read as a column, as a tuple."""
        if len(v) != self.ncols:
            raise DimensionMismatch("vector length does not match matrix width")
        p = self.field.p
        if p is None:
            return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)
        return tuple(sum(a * b for a, b in zip(row, v)) % p for row in self.entries)

    def trace(self):
        if self.nrows != self.ncols:
            raise DimensionMismatch("trace of a non-square matrix")
        t = self.field.zero
        for i in range(self.nrows):
            t = self.field.add(t, self.entries[i][i])
        return t

    def is_identity(self) -> bool:
        one, zero = self.field.one, self.field.zero
        return (self.nrows == self.ncols and
                all(self.entries[i][j] == (one if i == j else zero)
                    for i in range(self.nrows) for j in range(self.ncols)))

    def is_zero(self) -> bool:
        zero = self.field.zero
        return all(x == zero for row in self.entries for x in row)

    def det(self):
        """Exact determinant by fraction-producing Gaussian elimination."""
        if self.nrows != self.ncols:
            raise DimensionMismatch("determinant of a non-square matrix")
        n = self.nrows
        field = self.field
        rows = [list(r) for r in self.entries]
        sign = False
        acc = field.one
        for c in range(n):
            piv = next((i for i in range(c, n) if rows[i][c] != 0), None)
            if piv is None:
                return field.zero
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                sign = not sign
            pv = rows[c][c]
            acc = field.mul(acc, pv)
            inv = field.inv(pv)
            for i in range(c + 1, n):
                f = rows[i][c]
                if f != 0:
                    f = field.mul(f, inv)
                    rows[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(rows[i], rows[c])]
        return field.neg(acc) if sign else acc

    def inverse(self) -> "Matrix | None":
        """Inverse matrix, or None when singular."""
        if self.nrows != self.ncols:
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.nrows
        field = self.field
        ident = Matrix.identity(field, n)
        aug = Matrix(field,
                     tuple(r + i for r, i in zip(self.entries, ident.entries)),
                     ncols=2 * n, validate=False)
        red, rank, pivots = rref(aug)
        if rank < n or pivots[:n] != list(range(n)):
            return None
        return Matrix(field, tuple(row[n:] for row in red.entries), ncols=n, validate=False)

    def __repr__(self):
        return f"Matrix({self.field!r}, {[list(r) for r in self.entries]!r})"


def rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row echelon form.

    Returns (echelon matrix, rank, pivot column indices).  Pivot choice is
    the first nonzero entry scanning top to bottom in each column, left to
    right, so the output is canonical for the row space.
    """
    field = m.field
    p = field.p
    rows = [list(r) for r in m.entries]
    nrows, ncols = m.nrows, m.ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        if pv != field.one:
            inv = field.inv(pv)
            if p is None:
                rows[r] = [x * inv for x in rows[r]]
            else:
                rows[r] = [(x * inv) % p for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                if p is None:
                    rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
                else:
                    rows[i] = [(a - f * b) % p for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return Matrix(field, rows, ncols=ncols, validate=False), r, pivots


def right_kernel(m: Matrix) -> list[tuple]:
    """Basis of {v : M v = 0}, one vector per free column, in column order."""
    field = m.field
    red, rank, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for j in range(m.ncols):
        if j in pivot_set:
            continue
        v = [field.zero] * m.ncols
        v[j] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(red.entries[i][j])
        basis.append(tuple(v))
    return basis


def solve_linear(a: Matrix, b) -> tuple | None:
    """One solution x of A x = b (free variables set to zero), or None."""
    field = a.field
    bvec = tuple(field.coerce(x) for x in b)
    if len(bvec) != a.nrows:
        raise DimensionMismatch("right-hand side length mismatch")
    aug = Matrix(field, tuple(row + (bv,) for row, bv in zip(a.entries, bvec)),
                 ncols=a.ncols + 1, validate=False)
    red, rank, pivots = rref(aug)
    if pivots and pivots[-1] == a.ncols:
        return None
    x = [field.zero] * a.ncols
    for i, pc in enumerate(pivots):
        x[pc] = red.entries[i][a.ncols]
    return tuple(x)


class EchelonBasis:
    """Accumulates vectors and keeps a reduced echelon basis of their span."""

    __slots__ = ("field", "width", "rows", "pivots")

    def __init__(self, field: Field, width: int):
        self.field = field
        self.width = width
        self.rows: list[tuple] = []
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _reduce(self, vec) -> list:
        p = self.field.p
        v = list(vec)
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if c:
                if p is None:
                    v = [a - c * b for a, b in zip(v, row)]
                else:
                    v = [(a - c * b) % p for a, b in zip(v, row)]
        return v

    def contains(self, vec) -> bool:
        return not any(self._reduce(vec))

    def add(self, vec) -> bool:
        """Insert a vector; returns True when it enlarged the span."""
        field = self.field
        p = field.p
        v = self._reduce(vec)
        lead = next((j for j, x in enumerate(v) if x), None)
        if lead is None:
            return False
        pv = v[lead]
        if pv != field.one:
            inv = field.inv(pv)
            if p is None:
                v = [x * inv for x in v]
            else:
                v = [(x * inv) % p for x in v]
        vt = tuple(v)
        for k, row in enumerate(self.rows):
            c = row[lead]
            if c:
                if p is None:
                    self.rows[k] = tuple(a - c * b for a, b in zip(row, vt))
                else:
                    self.rows[k] = tuple((a - c * b) % p for a, b in zip(row, vt))
        at = next((k for k, pc in enumerate(self.pivots) if pc > lead), len(self.rows))
        self.rows.insert(at, vt)
        self.pivots.insert(at, lead)
        return True

    def matrix(self) -> Matrix:
        return Matrix(self.field, tuple(self.rows), ncols=self.width, validate=False)


class Subspace:
    """A subspace of k^n held by its canonical reduced-echelon basis rows."""

    __slots__ = ("ambient_dim", "basis", "dim")

    def __init__(self, basis: Matrix, ambient_dim: int | None = None):
        n = basis.ncols if ambient_dim is None else ambient_dim
        if basis.ncols != n:
            raise DimensionMismatch("basis width disagrees with ambient dimension")
        self.ambient_dim = n
        self.basis = basis
        self.dim = basis.nrows

    @classmethod
    def from_vectors(cls, field: Field, n: int, vectors) -> "Subspace":
        acc = EchelonBasis(field, n)
        for v in vectors:
            acc.add(tuple(field.coerce(x) for x in v))
        return cls(acc.matrix(), n)

    @classmethod
    def zero(cls, field: Field, n: int) -> "Subspace":
        return cls(Matrix(field, (), ncols=n, validate=False), n)

    @classmethod
    def full(cls, field: Field, n: int) -> "Subspace":
        return cls(Matrix.identity(field, n), n)

    @property
    def field(self) -> Field:
        return self.basis.field

    def contains_vector(self, v) -> bool:
        field = self.field
        acc = EchelonBasis(field, self.ambient_dim)
        acc.rows = list(self.basis.entries)
        acc.pivots = [next(j for j, x in enumerate(row) if x) for row in self.basis.entries]
        return acc.contains(tuple(field.coerce(x) for x in v))

    def contains(self, other: "Subspace") -> bool:
        return all(self.contains_vector(row) for row in other.basis.entries)

    def coordinates(self, v) -> tuple | None:
        """Coefficients of v in the echelon basis, or None when v is outside."""
        field = self.field
        vv = tuple(field.coerce(x) for x in v)
        pivots = [next(j for j, x in enumerate(row) if x) for row in self.basis.entries]
        coords = tuple(vv[pc] for pc in pivots)
        residual = list(vv)
        p = field.p
        for c, row in zip(coords, self.basis.entries):
            if c:
                if p is None:
                    residual = [a - c * b for a, b in zip(residual, row)]
                else:
                    residual = [(a - c * b) % p for a, b in zip(residual, row)]
        if any(residual):
            return None
        return coords

    def sum(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("subspace sum in different ambient spaces")
        return Subspace.from_vectors(self.field, self.ambient_dim,
                                     self.basis.entries + other.basis.entries)

    def intersection(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("intersection in different ambient spaces")
        field = self.field
        n = self.ambient_dim
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(field, n)
        stacked = Matrix(field, self.basis.entries + other.basis.entries, ncols=n, validate=False)
        relations = right_kernel(stacked.transpose())
        a = self.dim
        vectors = []
        for rel in relations:
            vec = [field.zero] * n
            for coeff, row in zip(rel[:a], self.basis.entries):
                if coeff:
                    vec = [field.add(x, field.mul(coeff, y)) for x, y in zip(vec, row)]
            vectors.append(tuple(vec))
        return Subspace.from_vectors(field, n, vectors)

    def is_invariant_under(self, mats) -> bool:
        return all(self.contains_vector(m.apply(row))
                   for m in mats for row in self.basis.entries)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def spin(field: Field, n: int, seeds, operators) -> Subspace:
    """Smallest operator-invariant subspace containing the seed vectors."""
    acc = EchelonBasis(field, n)
    work = []
    for v in seeds:
        vv = tuple(field.coerce(x) for x in v)
        if acc.add(vv):
            work.append(vv)
    i = 0
    while i < len(work):
        v = work[i]
        i += 1
        for op in operators:
            w = op.apply(v)
            if acc.add(w):
                work.append(w)
    return Subspace(acc.matrix(), n)


def all_vectors(field: Field, n: int):
    """Every vector of GF(p)^n, in lexicographic order."""
    if field.p is None:
        raise InvalidInput("cannot enumerate vectors over the rationals")
    return itertools.product(range(field.p), repeat=n)


def projective_vectors(field: Field, n: int):
    """One representative per line of GF(p)^n: first nonzero entry is 1."""
    if field.p is None:
        raise InvalidInput("cannot enumerate lines over the rationals")
    p = field.p
    for lead in range(n):
        for tail in itertools.product(range(p), repeat=n - lead - 1):
            yield (0,) * lead + (1,) + tail


def charpoly(m: Matrix) -> list:
    """Coefficients of det(xI - M), ascending, via Hessenberg reduction.

    Works over any exact field (no division by integer constants), O(n^3).
    """
    if m.nrows != m.ncols:
        raise DimensionMismatch("characteristic polynomial of a non-square matrix")
    n = m.nrows
    field = m.field
    if n == 0:
        return [field.one]
    H = [list(r) for r in m.entries]
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if H[i][j] != 0), None)
        if piv is None:
            continue
        if piv != j + 1:
            H[piv], H[j + 1] = H[j + 1], H[piv]
            for row in H:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        pv = H[j + 1][j]
        pv_inv = field.inv(pv)
        for i in range(j + 2, n):
            if H[i][j] != 0:
                t = field.mul(H[i][j], pv_inv)
                H[i] = [field.sub(a, field.mul(t, b)) for a, b in zip(H[i], H[j + 1])]
                for row in H:
                    row[j + 1] = field.add(row[j + 1], field.mul(t, row[i]))
    # p_m(x) = (x - H[m-1][m-1]) p_{m-1}(x)
    #          - sum_i H[m-1-i][m-1] * (prod of subdiagonal entries) * p_{m-1-i}(x)
    polys = [[field.one]]
    for mdim in range(1, n + 1):
        prev = polys[mdim - 1]
        d = H[mdim - 1][mdim - 1]
        cur = [field.zero] + list(prev)
        for k, c in enumerate(prev):
            cur[k] = field.sub(cur[k], field.mul(d, c))
        prod = field.one
        for i in range(1, mdim):
            prod = field.mul(prod, H[mdim - i][mdim - i - 1])
            coef = field.mul(H[mdim - 1 - i][mdim - 1], prod)
            if coef != 0:
                low = polys[mdim - 1 - i]
                for k, c in enumerate(low):
                    cur[k] = field.sub(cur[k], field.mul(coef, c))
        polys.append(cur)
    return polys[n]


def poly_eval_matrix(coeffs, m: Matrix) -> Matrix:
    """Evaluate a polynomial (ascending coefficients) at a square matrix."""
    field = m.field
    n = m.nrows
    ident = Matrix.identity(field, n)
    acc = Matrix.zeros(field, n, n)
    for c in reversed(list(coeffs)):
        acc = acc * m + ident.scale(c)
    return acc


def _combination(field: Field, basis_mats, coeffs) -> Matrix:
    n = basis_mats[0].nrows
    p = field.p
    rows = [[field.zero] * n for _ in range(n)]
    for c, bm in zip(coeffs, basis_mats):
        if c:
            for i in range(n):
                br = bm.entries[i]
                row = rows[i]
                for j in range(n):
                    row[j] = row[j] + c * br[j]
    if p is not None:
        rows = [[x % p for x in row] for row in rows]
    return Matrix(field, rows, ncols=n, validate=False)


def solve_conjugating(lhs, rhs, *, seed: int = 0,
                      enum_cap: int = 2**20, hard_cap: int = 2**24,
                      grid_cap: int = 2**19) -> Matrix | None:
    """Find invertible g with g * lhs[i] * g^-1 = rhs[i] for all i.

    Returns None only when no invertible solution exists (certified: over
    GF(p) the full solution space is searched; over the rationals a
    vanishing determinant polynomial is certified on an interpolation
    grid).  Raises CertificateSearchExhausted when the bounded search over
    the rationals ends without either outcome.

    The returned matrix is re-verified by direct multiplication before
    being handed back.
    """
    lhs = list(lhs)
    rhs = list(rhs)
    if len(lhs) != len(rhs):
        raise DimensionMismatch("conjugation systems of different lengths")
    if not lhs:
        raise InvalidInput("empty conjugation system")
    field = lhs[0].field
    n = lhs[0].nrows
    for m in itertools.chain(lhs, rhs):
        if m.field is not field or m.nrows != n or m.ncols != n:
            raise DimensionMismatch("conjugation system entries must share one square shape")

    def finish(g: Matrix) -> Matrix:
        gi = g.inverse()
        if gi is None:
            raise InternalInvariantViolation("candidate conjugator is singular")
        for a, b in zip(lhs, rhs):
            if g * a != b * g:
                raise InternalInvariantViolation("conjugator failed re-verification")
        return g

    if all(a == b for a, b in zip(lhs, rhs)):
        return finish(Matrix.identity(field, n))

    # Linear system on g: for each pair, row (i,j) says
    # sum_c g[i][c] A[c][j] - sum_r B[i][r] g[r][j] = 0, variables row-major.
    nn = n * n
    sys_rows = []
    for a, b in zip(lhs, rhs):
        ae = a.entries
        be = b.entries
        for i in range(n):
            for j in range(n):
                row = [field.zero] * nn
                for c in range(n):
                    row[i * n + c] = field.add(row[i * n + c], ae[c][j])
                for r in range(n):
                    row[r * n + j] = field.sub(row[r * n + j], be[i][r])
                sys_rows.append(tuple(row))
    kernel = right_kernel(Matrix(field, tuple(sys_rows), ncols=nn, validate=False))
    d = len(kernel)
    if d == 0:
        return None
    basis_mats = [Matrix(field, tuple(tuple(v[i * n:(i + 1) * n]) for i in range(n)),
                         ncols=n, validate=False) for v in kernel]

    if field.p is not None:
        p = field.p
        total = p**d
        if total <= enum_cap:
            for coeffs in itertools.product(range(p), repeat=d):
                if not any(coeffs):
                    continue
                g = _combination(field, basis_mats, coeffs)
                if g.det() != 0:
                    return finish(g)
            return None
        rng = random.Random(seed)
        for _ in range(64):
            coeffs = tuple(rng.randrange(p) for _ in range(d))
            if not any(coeffs):
                continue
            g = _combination(field, basis_mats, coeffs)
            if g.det() != 0:
                return finish(g)
        if total <= hard_cap:
            for coeffs in itertools.product(range(p), repeat=d):
                if not any(coeffs):
                    continue
                g = _combination(field, basis_mats, coeffs)
                if g.det() != 0:
                    return finish(g)
            return None
        raise CertificateSearchExhausted(
            f"solution space of dimension {d} over GF({p}) exceeds the enumeration cap")

    rng = random.Random(seed)
    bound = 1
    while bound <= 1024:
        for _ in range(32):
            coeffs = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(d))
            if not any(coeffs):
                continue
            g = _combination(field, basis_mats, coeffs)
            if g.det() != 0:
                return finish(g)
        bound *= 2
    # det(sum x_k E_k) has degree <= n in each variable, so vanishing on the
    # grid {0..n}^d certifies it is identically zero: no invertible solution.
    if (n + 1)**d <= grid_cap:
        for coeffs in itertools.product(range(n + 1), repeat=d):
            if not any(coeffs):
                continue
            g = _combination(field, basis_mats, tuple(Fraction(c) for c in coeffs))
            if g.det() != 0:
                return finish(g)
        return None
    raise CertificateSearchExhausted(
        f"randomized search over QQ exhausted with hom-space dimension {d}; "
        f"certification grid of size {(n + 1)**d} exceeds the cap")
