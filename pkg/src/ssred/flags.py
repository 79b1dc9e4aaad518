"""Flags in k^n, the cocharacters they induce, and the limit map c_lambda.

A flag V_1 < V_2 < ... < V_r = k^n determines a one-parameter subgroup
lambda(a) = diag(a^r, ..., a^1) in a basis adapted to the flag, with the
weight a^(r-i+1) repeated dim(V_i) - dim(V_{i-1}) times.  Conjugation by
lambda(a) contracts the strictly-upper blocks as a -> 0; the limit map
c_lambda kills them and is a group homomorphism from the flag stabilizer
P_lambda onto its block-diagonal Levi subgroup L_lambda.
"""

from __future__ import annotations

from math import gcd

from .errors import (
    DimensionMismatch,
    InvalidInput,
    LimitDoesNotExist,
    NotInUnipotentRadical,
)
from .exact import Field, Matrix, Subspace


class Flag:
    """A strictly increasing chain of subspaces ending at the full space.

    The zero space is left implicit; the trivial flag is the single step
    [k^n].
    """

    __slots__ = ("ambient_dim", "steps", "block_sizes")

    def __init__(self, steps):
        steps = tuple(steps)
        if not steps:
            raise InvalidInput("a flag needs at least the full space")
        n = steps[0].ambient_dim
        prev_dim = 0
        for i, v in enumerate(steps):
            if v.ambient_dim != n:
                raise DimensionMismatch("flag steps live in different ambient spaces")
            if v.dim <= prev_dim:
                raise InvalidInput("flag dimensions must strictly increase")
            if i > 0 and not v.contains(steps[i - 1]):
                raise InvalidInput("flag steps must be nested")
            prev_dim = v.dim
        if steps[-1].dim != n:
            raise InvalidInput("last flag step must be the full space")
        self.ambient_dim = n
        self.steps = steps
        dims = [0] + [v.dim for v in steps]
        self.block_sizes = tuple(b - a for a, b in zip(dims, dims[1:]))

    @classmethod
    def trivial(cls, field: Field, n: int) -> "Flag":
        return cls([Subspace.full(field, n)])

    @property
    def field(self) -> Field:
        return self.steps[0].field

    @property
    def length(self) -> int:
        return len(self.steps)

    def is_preserved_by(self, mats) -> bool:
        return all(v.is_invariant_under(mats) for v in self.steps[:-1])

    def refines(self, other: "Flag") -> bool:
        """True when every step of `other` occurs among this flag's steps."""
        mine = set(self.steps)
        return all(v in mine for v in other.steps)

    def __eq__(self, other):
        return isinstance(other, Flag) and self.steps == other.steps

    def __hash__(self):
        return hash(self.steps)

    def __repr__(self):
        dims = [v.dim for v in self.steps]
        return f"Flag(dims={dims})"


def _canonical_weights(weights: tuple[int, ...]) -> tuple[int, ...]:
    """Center to sum zero and divide out the common factor.

    Central shifts of a cocharacter act trivially by conjugation, so this
    normal form is what length measures are computed from.
    """
    n = len(weights)
    s = sum(weights)
    scaled = [n * w - s for w in weights]
    g = 0
    for x in scaled:
        g = gcd(g, abs(x))
    if g > 1:
        scaled = [x // g for x in scaled]
    return tuple(scaled)


class Cocharacter:
    """A cocharacter of GL_n given by an adapted basis and integer weights.

    `basis_change` has the adapted basis as its columns; `weights[i]` is the
    exponent carried by column i and must be non-increasing.  `canonical`
    holds the centered, gcd-reduced weight vector used by length measures.
    """

    __slots__ = ("field", "n", "basis_change", "basis_change_inv", "weights", "canonical")

    def __init__(self, basis_change: Matrix, weights):
        weights = tuple(int(w) for w in weights)
        n = basis_change.nrows
        if basis_change.ncols != n or len(weights) != n:
            raise DimensionMismatch("adapted basis and weight vector sizes disagree")
        if any(a < b for a, b in zip(weights, weights[1:])):
            raise InvalidInput("weights must be non-increasing")
        inv = basis_change.inverse()
        if inv is None:
            raise InvalidInput("adapted basis matrix is singular")
        self.field = basis_change.field
        self.n = n
        self.basis_change = basis_change
        self.basis_change_inv = inv
        self.weights = weights
        self.canonical = _canonical_weights(weights)

    def is_central(self) -> bool:
        return all(x == 0 for x in self.canonical)

    def norm_sq(self) -> int:
        return sum(x * x for x in self.canonical)

    def conjugate(self, g: Matrix) -> "Cocharacter":
        """The cocharacter g * lambda * g^-1 (adapted basis moved by g)."""
        return Cocharacter(g * self.basis_change, self.weights)

    def flag(self) -> Flag:
        """The flag of weight-level spaces: V_k = span of columns with the
        k largest distinct weights."""
        cols = self.basis_change.transpose().entries
        steps = []
        for i in range(1, self.n + 1):
            if i == self.n or self.weights[i] < self.weights[i - 1]:
                steps.append(Subspace.from_vectors(self.field, self.n, cols[:i]))
        return Flag(steps)

    def __eq__(self, other):
        return (isinstance(other, Cocharacter)
                and self.basis_change == other.basis_change
                and self.weights == other.weights)

    def __hash__(self):
        return hash((self.basis_change, self.weights))

    def __repr__(self):
        return f"Cocharacter(weights={self.weights}, canonical={self.canonical})"


def flag_to_cocharacter(f: Flag) -> Cocharacter:
    """The cocharacter diag(a^r, ..., a^1) in a basis adapted to the flag.

    The adapted basis takes, for each step, the rows of its canonical
    echelon basis whose pivot column is new relative to the previous step;
    pivot sets of nested spaces are themselves nested, so this completes
    each step's basis exactly.
    """
    field = f.field
    n = f.ambient_dim
    r = len(f.steps)
    cols = []
    weights = []
    used_pivots: set[int] = set()
    for i, v in enumerate(f.steps):
        w = r - i
        for row in v.basis.entries:
            pivot = next(j for j, x in enumerate(row) if x)
            if pivot not in used_pivots:
                used_pivots.add(pivot)
                cols.append(row)
                weights.append(w)
    basis_change = Matrix(field, tuple(cols), ncols=n, validate=False).transpose()
    return Cocharacter(basis_change, weights)


def _adapted(m: Matrix, lam: Cocharacter) -> Matrix:
    if m.field is not lam.field or m.nrows != lam.n or m.ncols != lam.n:
        raise DimensionMismatch("matrix does not match the cocharacter's space")
    return lam.basis_change_inv * m * lam.basis_change


def in_P_lambda(m: Matrix, lam: Cocharacter) -> bool:
    """Whether lim_{a->0} lambda(a) m lambda(a)^-1 exists.

    In the adapted basis the (i,j) entry is scaled by a^(w_i - w_j), so
    the limit exists exactly when every entry with w_i < w_j vanishes.
    """
    a = _adapted(m, lam)
    w = lam.weights
    return all(a.entries[i][j] == 0
               for i in range(lam.n) for j in range(lam.n) if w[i] < w[j])


def c_lambda(m, lam: Cocharacter):
    """The limit lim_{a->0} lambda(a) m lambda(a)^-1.

    Accepts a single matrix or a tuple/list of them (mapped entrywise).
    Restricted to P_lambda this is a group homomorphism onto L_lambda.
    """
    if isinstance(m, (tuple, list)):
        return tuple(c_lambda(x, lam) for x in m)
    a = _adapted(m, lam)
    w = lam.weights
    zero = lam.field.zero
    rows = []
    for i in range(lam.n):
        arow = a.entries[i]
        rows.append(tuple(arow[j] if w[i] == w[j] else zero for j in range(lam.n)))
        if any(arow[j] != 0 and w[i] < w[j] for j in range(lam.n)):
            raise LimitDoesNotExist("matrix lies outside P_lambda")
    blocked = Matrix(lam.field, tuple(rows), ncols=lam.n, validate=False)
    return lam.basis_change * blocked * lam.basis_change_inv


def in_L_lambda(m: Matrix, lam: Cocharacter) -> bool:
    return in_P_lambda(m, lam) and c_lambda(m, lam) == m


def in_Ru_P_lambda(m: Matrix, lam: Cocharacter) -> bool:
    return in_P_lambda(m, lam) and c_lambda(m, lam).is_identity()


class ConjugatedLimitMap:
    """The limit map twisted by an element of the unipotent radical.

    Represents h -> u * c_lambda(h) * u^-1; changing the R-Levi inside a
    fixed R-parabolic changes limits by exactly such a conjugation.
    """

    __slots__ = ("cocharacter", "u", "u_inv")

    def __init__(self, cocharacter: Cocharacter, u: Matrix, u_inv: Matrix):
        self.cocharacter = cocharacter
        self.u = u
        self.u_inv = u_inv

    def apply(self, m):
        if isinstance(m, (tuple, list)):
            return tuple(self.apply(x) for x in m)
        return self.u * c_lambda(m, self.cocharacter) * self.u_inv


def levi_conjugate(lam: Cocharacter, u: Matrix) -> ConjugatedLimitMap:
    """Limit map onto the R-Levi moved by u in R_u(P_lambda)."""
    if not in_Ru_P_lambda(u, lam):
        raise NotInUnipotentRadical("twisting element is not in R_u(P_lambda)")
    u_inv = u.inverse()
    if u_inv is None:
        raise NotInUnipotentRadical("twisting element is singular")
    return ConjugatedLimitMap(lam, u, u_inv)


def diagonal_blocks(m: Matrix, block_sizes) -> list[Matrix]:
    """Cut a square matrix into its diagonal blocks of the given sizes."""
    if sum(block_sizes) != m.nrows or m.nrows != m.ncols:
        raise DimensionMismatch("block sizes do not tile the matrix")
    out = []
    start = 0
    for size in block_sizes:
        out.append(Matrix(m.field,
                          tuple(row[start:start + size]
                                for row in m.entries[start:start + size]),
                          ncols=size, validate=False))
        start += size
    return out


def block_diagonal(field: Field, blocks) -> Matrix:
    """Assemble square blocks into one block-diagonal matrix."""
    n = sum(b.nrows for b in blocks)
    zero = field.zero
    rows = []
    start = 0
    for b in blocks:
        if b.nrows != b.ncols:
            raise DimensionMismatch("blocks must be square")
        for row in b.entries:
            rows.append((zero,) * start + tuple(row) + (zero,) * (n - start - b.ncols))
        start += b.nrows
    return Matrix(field, tuple(rows), ncols=n, validate=False)
