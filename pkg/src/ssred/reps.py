"""Module-theoretic layer: enveloping algebras, irreducibility testing,
composition series, semisimplicity certificates, and module isomorphism.

Irreducibility is decided MeatAxe-style: pick an element a of the
enveloping algebra, factor its characteristic polynomial, and spin kernel
vectors of f(a) for irreducible factors f.  Proper spins are submodules;
when the nullity of f(a) equals deg f, one full primal spin plus one full
spin in the dual module is a proof of irreducibility (Norton's
criterion), and over a finite field the same conclusion follows from
spinning every kernel line of any nonzero singular f(a).  Small finite
modules fall back to spinning every line of the space, which is always
conclusive.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from sympy import GF as _sympy_GF
from sympy import Poly as _SymPoly
from sympy import QQ as _SYMPY_QQ
from sympy import Rational as _SymRational
from sympy import Symbol as _SymSymbol

from .errors import (
    DimensionMismatch,
    GeneratorCountMismatch,
    InternalInvariantViolation,
    InvalidInput,
    UndecidedIrreducibility,
)
from .exact import (
    EchelonBasis,
    Field,
    Matrix,
    Subspace,
    charpoly,
    poly_eval_matrix,
    projective_vectors,
    right_kernel,
    solve_conjugating,
    solve_linear,
    spin,
)
from .flags import Flag

_X = _SymSymbol("x")

# spinning every line of GF(q)^n stays cheap up to this many lines
LINE_ENUMERATION_CAP = 2**14
NORTON_TRIALS = 200
NORTON_WORD_LENGTH = 8
RATIONAL_DIM_CAP = 8


class Representation:
    """A finite list of invertible n x n matrices over one field.

    The generated subgroup of GL_n is the object under study; generator
    order matters only for isomorphism alignment.
    """

    __slots__ = ("field", "n", "generators", "name")

    def __init__(self, generators, name: str | None = None):
        generators = tuple(generators)
        if not generators:
            raise InvalidInput("a representation needs at least one generator")
        first = generators[0]
        field = first.field
        n = first.nrows
        for i, g in enumerate(generators):
            if g.field is not field:
                raise DimensionMismatch("generators over different fields")
            if g.nrows != n or g.ncols != n:
                raise DimensionMismatch("generators of different sizes")
            if g.det() == 0:
                raise InvalidInput(f"generator {i} is singular")
        self.field = field
        self.n = n
        self.generators = generators
        self.name = name

    def transposed(self) -> "Representation":
        return Representation([g.transpose() for g in self.generators], name=self.name)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"Representation({self.field!r}, n={self.n}, gens={len(self.generators)}{label})"


class GenericTuple:
    """Generators followed by their inverses, with a basis of the algebra
    they span multiplicatively."""

    __slots__ = ("entries", "algebra_basis", "algebra_dim")

    def __init__(self, entries, algebra_basis):
        self.entries = tuple(entries)
        self.algebra_basis = tuple(algebra_basis)
        self.algebra_dim = len(self.algebra_basis)


def _flatten(m: Matrix) -> tuple:
    return tuple(x for row in m.entries for x in row)


def _unflatten(field: Field, n: int, v) -> Matrix:
    return Matrix(field, tuple(tuple(v[i * n:(i + 1) * n]) for i in range(n)),
                  ncols=n, validate=False)


def enveloping_basis(rep: Representation) -> GenericTuple:
    """Close span{I, generators, inverses} under left multiplication.

    Every word in the entries then lies in the span, so the result is a
    basis of the full enveloping algebra of the group.
    """
    field = rep.field
    n = rep.n
    inverses = []
    for g in rep.generators:
        gi = g.inverse()
        if gi is None:
            raise InternalInvariantViolation("validated generator became singular")
        inverses.append(gi)
    entries = tuple(rep.generators) + tuple(inverses)
    acc = EchelonBasis(field, n * n)
    queue = []
    for m in (Matrix.identity(field, n),) + entries:
        if acc.add(_flatten(m)):
            queue.append(m)
    i = 0
    while i < len(queue):
        m = queue[i]
        i += 1
        for e in entries:
            prod = e * m
            if acc.add(_flatten(prod)):
                queue.append(prod)
    basis = [_unflatten(field, n, row) for row in acc.rows]
    return GenericTuple(entries, basis)


def factor_poly(coeffs, field: Field) -> list[tuple[tuple, int]]:
    """Factor a nonzero polynomial (ascending coefficients) over the field.

    Returns [(monic ascending coefficient tuple, multiplicity)], sorted by
    degree then coefficients, so the output is deterministic.
    """
    if field.p is not None:
        desc = [int(c) for c in reversed(coeffs)]
        poly = _SymPoly(desc, _X, domain=_sympy_GF(field.p, symmetric=False))
    else:
        desc = [_SymRational(c.numerator, c.denominator) for c in reversed(coeffs)]
        poly = _SymPoly(desc, _X, domain=_SYMPY_QQ)
    out = []
    for fac, mult in poly.factor_list()[1]:
        raw = list(reversed(fac.all_coeffs()))
        if field.p is not None:
            asc = [int(c) % field.p for c in raw]
            lead = asc[-1]
            if lead != 1:
                inv = field.inv(lead)
                asc = [(c * inv) % field.p for c in asc]
        else:
            asc = [Fraction(int(_SymRational(c).p), int(_SymRational(c).q)) for c in raw]
            lead = asc[-1]
            if lead != 1:
                asc = [c / lead for c in asc]
        out.append((tuple(asc), mult))
    out.sort(key=lambda fm: (len(fm[0]), fm[0]))
    return out


class IrreducibleWitness:
    """Re-verifiable evidence that a module has no proper submodule.

    kind is one of:
      dimension      the module is one-dimensional
      cyclic         an algebra element has irreducible charpoly of full degree
      norton_pair    f(a) has nullity deg f; one kernel vector spins to the
                     full space and one dual kernel vector spins to the
                     full dual space
      norton_kernel  every kernel line of a nonzero singular f(a) spins
                     full, plus the dual vector check (finite fields)
      all_lines      every line of the space spins full (finite fields)
    """

    __slots__ = ("kind", "element", "factor", "vectors", "dual_vector")

    def __init__(self, kind, element=None, factor=None, vectors=(), dual_vector=None):
        self.kind = kind
        self.element = element
        self.factor = tuple(factor) if factor is not None else None
        self.vectors = tuple(tuple(v) for v in vectors)
        self.dual_vector = tuple(dual_vector) if dual_vector is not None else None

    def _spins_full(self, rep, vectors, dual=False) -> bool:
        gens = [g.transpose() for g in rep.generators] if dual else rep.generators
        return all(spin(rep.field, rep.n, [v], gens).dim == rep.n for v in vectors)

    def verify(self, rep: Representation) -> bool:
        field = rep.field
        n = rep.n
        if self.kind == "dimension":
            return n == 1
        if self.kind == "all_lines":
            if field.p is None or field.p**n > LINE_ENUMERATION_CAP:
                return False
            return self._spins_full(rep, projective_vectors(field, n))
        if self.element is None or self.factor is None:
            return False
        if not _in_algebra_span(rep, self.element):
            return False
        facs = factor_poly(self.factor, field)
        if facs != [(self.factor, 1)]:
            return False
        deg = len(self.factor) - 1
        if self.kind == "cyclic":
            return deg == n and charpoly(self.element) == list(self.factor)
        cp = charpoly(self.element)
        rem = _poly_mod(cp, list(self.factor), field)
        if any(c != 0 for c in rem):
            return False
        b = poly_eval_matrix(self.factor, self.element)
        if b.is_zero():
            return False
        kernel = right_kernel(b)
        if not kernel:
            return False
        ker_space = Subspace.from_vectors(field, n, kernel)
        if not all(ker_space.contains_vector(v) for v in self.vectors):
            return False
        if self.dual_vector is None:
            return False
        dual_kernel = Subspace.from_vectors(field, n, right_kernel(b.transpose()))
        if not dual_kernel.contains_vector(self.dual_vector):
            return False
        if self.kind == "norton_pair":
            if len(kernel) != deg or len(self.vectors) != 1:
                return False
        elif self.kind == "norton_kernel":
            if field.p is None:
                return False
            lines = (field.p**len(kernel) - 1) // (field.p - 1)
            if len(self.vectors) != lines:
                return False
        else:
            return False
        return (self._spins_full(rep, self.vectors)
                and self._spins_full(rep, [self.dual_vector], dual=True))

    def __repr__(self):
        return f"IrreducibleWitness({self.kind!r})"


def _poly_mod(num, den, field: Field) -> list:
    """Remainder of polynomial division (ascending coefficient lists)."""
    num = list(num)
    dd = len(den) - 1
    lead_inv = field.inv(den[-1])
    while len(num) - 1 >= dd and any(c != 0 for c in num):
        if num[-1] == 0:
            num.pop()
            continue
        shift = len(num) - 1 - dd
        q = field.mul(num[-1], lead_inv)
        for i, c in enumerate(den):
            num[shift + i] = field.sub(num[shift + i], field.mul(q, c))
        num.pop()
    return num


def _in_algebra_span(rep: Representation, m: Matrix) -> bool:
    gt = enveloping_basis(rep)
    acc = EchelonBasis(rep.field, rep.n * rep.n)
    for b in gt.algebra_basis:
        acc.add(_flatten(b))
    return acc.contains(_flatten(m))


def _dual_perp(field: Field, dual_space: Subspace) -> Subspace:
    """The subspace annihilated by every functional in dual_space."""
    return Subspace.from_vectors(field, dual_space.ambient_dim,
                                 right_kernel(dual_space.basis))


def _examine_element(rep: Representation, a: Matrix):
    """Run the kernel-spin analysis for one algebra element.

    Returns ("submodule", Subspace), ("witness", IrreducibleWitness), or
    None when this element is inconclusive.
    """
    field = rep.field
    n = rep.n
    gens = rep.generators
    dual_gens = [g.transpose() for g in gens]
    cp = charpoly(a)
    for factor, _mult in factor_poly(cp, field):
        deg = len(factor) - 1
        if deg == n:
            return "witness", IrreducibleWitness("cyclic", element=a, factor=factor)
        b = poly_eval_matrix(factor, a)
        if b.is_zero():
            continue
        kernel = right_kernel(b)
        if not kernel:
            continue
        for v in kernel:
            w = spin(field, n, [v], gens)
            if 0 < w.dim < n:
                return "submodule", w
        if len(kernel) == deg:
            dual_kernel = right_kernel(b.transpose())
            if not dual_kernel:
                raise InternalInvariantViolation("singular matrix with nonsingular transpose")
            dual_spin = spin(field, n, [dual_kernel[0]], dual_gens)
            if dual_spin.dim < n:
                return "submodule", _dual_perp(field, dual_spin)
            return "witness", IrreducibleWitness(
                "norton_pair", element=a, factor=factor,
                vectors=[kernel[0]], dual_vector=dual_kernel[0])
        if field.p is not None:
            lines = (field.p**len(kernel) - 1) // (field.p - 1)
            if lines <= LINE_ENUMERATION_CAP:
                seen = []
                for coeffs in projective_vectors(field, len(kernel)):
                    vec = [field.zero] * n
                    for c, kv in zip(coeffs, kernel):
                        if c:
                            vec = [field.add(x, field.mul(c, y)) for x, y in zip(vec, kv)]
                    vec = tuple(vec)
                    w = spin(field, n, [vec], gens)
                    if 0 < w.dim < n:
                        return "submodule", w
                    seen.append(vec)
                dual_kernel = right_kernel(b.transpose())
                dual_spin = spin(field, n, [dual_kernel[0]], dual_gens)
                if dual_spin.dim < n:
                    return "submodule", _dual_perp(field, dual_spin)
                return "witness", IrreducibleWitness(
                    "norton_kernel", element=a, factor=factor,
                    vectors=seen, dual_vector=dual_kernel[0])
    return None


def _deterministic_elements(gt: GenericTuple, field: Field, n: int):
    ident = Matrix.identity(field, n)
    for b in gt.algebra_basis:
        yield b
    for e in gt.entries:
        yield e - ident
    for a, b in itertools.combinations(gt.entries, 2):
        yield a - b


def find_submodule(rep: Representation, rng: random.Random | None = None):
    """A proper nonzero invariant subspace, or a witness that none exists.

    Over finite fields this is always conclusive when p^n stays under the
    line-enumeration cap; over the rationals the deterministic layers may
    give up with UndecidedIrreducibility (documented cap: n <= 8).
    """
    field = rep.field
    n = rep.n
    if n == 1:
        return IrreducibleWitness("dimension")
    gt = enveloping_basis(rep)
    for a in _deterministic_elements(gt, field, n):
        if a.is_zero():
            continue
        res = _examine_element(rep, a)
        if res is not None:
            return res[1]
    if field.p is not None:
        rng = rng or random.Random(0)
        p = field.p
        for _ in range(NORTON_TRIALS):
            terms = []
            for _ in range(rng.randrange(1, 4)):
                word = Matrix.identity(field, n)
                for _ in range(rng.randrange(1, NORTON_WORD_LENGTH + 1)):
                    word = word * rng.choice(gt.entries)
                terms.append(word.scale(rng.randrange(1, p)))
            a = terms[0]
            for t in terms[1:]:
                a = a + t
            if a.is_zero():
                continue
            res = _examine_element(rep, a)
            if res is not None:
                return res[1]
        if p**n <= LINE_ENUMERATION_CAP:
            for v in projective_vectors(field, n):
                w = spin(field, n, [v], rep.generators)
                if w.dim < n:
                    return w
            return IrreducibleWitness("all_lines")
        raise UndecidedIrreducibility(
            f"no conclusive element found and {p}^{n} lines exceed the enumeration cap")
    # rationals: pairwise combinations of algebra basis elements, then give up
    basis = gt.algebra_basis[:12]
    for a, b in itertools.combinations(basis, 2):
        for cand in (a + b, a - b):
            if cand.is_zero():
                continue
            res = _examine_element(rep, cand)
            if res is not None:
                return res[1]
    raise UndecidedIrreducibility(
        f"rational module of dimension {n} resisted the deterministic element "
        f"search (decision guaranteed only for n <= {RATIONAL_DIM_CAP})")


def _reduce_mod(w: Subspace, v) -> list:
    field = w.field
    p = field.p
    residual = list(v)
    for row in w.basis.entries:
        pc = next(j for j, x in enumerate(row) if x)
        c = residual[pc]
        if c:
            if p is None:
                residual = [a - c * b for a, b in zip(residual, row)]
            else:
                residual = [(a - c * b) % p for a, b in zip(residual, row)]
    return residual


def restrict_to_subspace(gens, w: Subspace) -> list[Matrix]:
    """Matrices of the generator actions on an invariant subspace, in the
    coordinates of its echelon basis."""
    field = w.field
    out = []
    for g in gens:
        cols = []
        for row in w.basis.entries:
            coords = w.coordinates(g.apply(row))
            if coords is None:
                raise InternalInvariantViolation("subspace is not invariant")
            cols.append(coords)
        rows = tuple(tuple(cols[j][i] for j in range(w.dim)) for i in range(w.dim))
        out.append(Matrix(field, rows, ncols=w.dim, validate=False))
    return out


def quotient_mod_subspace(gens, w: Subspace) -> tuple[list[Matrix], list[int]]:
    """Generator actions on the quotient space, using the standard basis
    vectors at non-pivot columns as coset representatives.

    Returns (matrices, list of the representing column indices).
    """
    field = w.field
    n = w.ambient_dim
    pivots = {next(j for j, x in enumerate(row) if x) for row in w.basis.entries}
    free = [j for j in range(n) if j not in pivots]
    out = []
    for g in gens:
        cols = []
        for j in free:
            e = tuple(field.one if t == j else field.zero for t in range(n))
            u = _reduce_mod(w, g.apply(e))
            cols.append([u[t] for t in free])
        rows = tuple(tuple(cols[jj][ii] for jj in range(len(free))) for ii in range(len(free)))
        out.append(Matrix(field, rows, ncols=len(free), validate=False))
    return out, free


def lift_from_subspace(w: Subspace, s: Subspace) -> Subspace:
    """Ambient subspace corresponding to s expressed in w's coordinates."""
    field = w.field
    vectors = []
    for srow in s.basis.entries:
        vec = [field.zero] * w.ambient_dim
        for c, wrow in zip(srow, w.basis.entries):
            if c:
                vec = [field.add(x, field.mul(c, y)) for x, y in zip(vec, wrow)]
        vectors.append(tuple(vec))
    return Subspace.from_vectors(field, w.ambient_dim, vectors)


def preimage_of_quotient(w: Subspace, free: list[int], sbar: Subspace) -> Subspace:
    """Ambient preimage of a subspace of the quotient by w."""
    field = w.field
    n = w.ambient_dim
    vectors = list(w.basis.entries)
    for srow in sbar.basis.entries:
        vec = [field.zero] * n
        for c, j in zip(srow, free):
            vec[j] = c
        vectors.append(tuple(vec))
    return Subspace.from_vectors(field, n, vectors)


class CompositionSeries:
    """A full invariant flag with irreducible successive quotients."""

    __slots__ = ("flag", "factors", "witnesses")

    def __init__(self, flag: Flag, factors, witnesses):
        factors = tuple(factors)
        witnesses = tuple(witnesses)
        if len(factors) != len(flag.steps) or len(witnesses) != len(factors):
            raise InternalInvariantViolation("series pieces out of step with its flag")
        if tuple(f.n for f in factors) != flag.block_sizes:
            raise InternalInvariantViolation("factor dimensions disagree with the flag")
        self.flag = flag
        self.factors = factors
        self.witnesses = witnesses

    @property
    def length(self) -> int:
        return len(self.factors)

    def __repr__(self):
        return f"CompositionSeries(blocks={self.flag.block_sizes})"


def _discover_submodule(rep: Representation, order, rng):
    """Lowest-dimensional proper spin of the permuted standard basis
    vectors, falling back to the full submodule search."""
    field = rep.field
    n = rep.n
    best = None
    for idx in order:
        e = tuple(field.one if t == idx else field.zero for t in range(n))
        w = spin(field, n, [e], rep.generators)
        if 0 < w.dim < n and (best is None or w.dim < best.dim):
            best = w
    if best is not None:
        return best
    return find_submodule(rep, rng=rng)


def _series_rec(rep: Representation, rng, shuffled: bool):
    order = list(range(rep.n))
    if shuffled:
        rng.shuffle(order)
    found = _discover_submodule(rep, order, rng)
    if isinstance(found, IrreducibleWitness):
        return [], [rep], [found]
    w = found
    sub_rep = Representation(restrict_to_subspace(rep.generators, w))
    quo_mats, free = quotient_mod_subspace(rep.generators, w)
    quo_rep = Representation(quo_mats)
    chain1, factors1, wits1 = _series_rec(sub_rep, rng, shuffled)
    chain2, factors2, wits2 = _series_rec(quo_rep, rng, shuffled)
    chain = ([lift_from_subspace(w, s) for s in chain1]
             + [w]
             + [preimage_of_quotient(w, free, s) for s in chain2])
    return chain, factors1 + factors2, wits1 + wits2


def composition_series(rep: Representation, seed: int = 0) -> CompositionSeries:
    """A composition series of k^n under the generators.

    The seed permutes the spin-seed order at every level, so different
    seeds can return genuinely different series when the module admits
    them; seed 0 keeps the standard order.
    """
    rng = random.Random(seed)
    chain, factors, witnesses = _series_rec(rep, rng, shuffled=seed != 0)
    full = Subspace.full(rep.field, rep.n)
    flag = Flag(chain + [full])
    if not flag.is_preserved_by(rep.generators):
        raise InternalInvariantViolation("composition flag is not invariant")
    return CompositionSeries(flag, factors, witnesses)


class SemisimpleCertificate:
    """Outcome of the semisimplicity test.

    Either a direct sum decomposition into irreducible invariant summands
    (with witnesses), or an invariant subspace with no invariant
    complement.
    """

    __slots__ = ("semisimple", "summands", "factors", "witnesses", "obstruction")

    def __init__(self, semisimple, summands=None, factors=None, witnesses=None,
                 obstruction=None):
        self.semisimple = semisimple
        self.summands = tuple(summands) if summands is not None else None
        self.factors = tuple(factors) if factors is not None else None
        self.witnesses = tuple(witnesses) if witnesses is not None else None
        self.obstruction = obstruction

    def __bool__(self):
        return self.semisimple

    def verify(self, rep: Representation) -> bool:
        if self.semisimple:
            total = 0
            acc = EchelonBasis(rep.field, rep.n)
            for s in self.summands:
                if not s.is_invariant_under(rep.generators):
                    return False
                total += s.dim
                for row in s.basis.entries:
                    acc.add(row)
            if total != rep.n or acc.dim != rep.n:
                return False
            return all(wit.verify(fac) for wit, fac in zip(self.witnesses, self.factors))
        return (self.obstruction is not None
                and 0 < self.obstruction.dim < rep.n
                and self.obstruction.is_invariant_under(rep.generators)
                and _invariant_projection(rep.generators, self.obstruction) is None)


def _invariant_projection(gens, w: Subspace) -> Matrix | None:
    """Solve for a projection onto w commuting with all generators.

    The constraints are linear: pi g = g pi, pi fixes w pointwise, and
    every column of pi lies in w.  A solution exists iff w has an
    invariant complement (namely ker pi).
    """
    field = w.field
    n = w.ambient_dim
    nn = n * n
    rows = []
    rhs = []
    for g in gens:
        ge = g.entries
        for i in range(n):
            for j in range(n):
                row = [field.zero] * nn
                for c in range(n):
                    row[i * n + c] = field.add(row[i * n + c], ge[c][j])
                    row[c * n + j] = field.sub(row[c * n + j], ge[i][c])
                rows.append(tuple(row))
                rhs.append(field.zero)
    for wrow in w.basis.entries:
        for i in range(n):
            row = [field.zero] * nn
            for c in range(n):
                row[i * n + c] = wrow[c]
            rows.append(tuple(row))
            rhs.append(wrow[i])
    for phi in right_kernel(w.basis):
        for j in range(n):
            row = [field.zero] * nn
            for i in range(n):
                row[i * n + j] = phi[i]
            rows.append(tuple(row))
            rhs.append(field.zero)
    sol = solve_linear(Matrix(field, tuple(rows), ncols=nn, validate=False), rhs)
    if sol is None:
        return None
    return _unflatten(field, n, sol)


def is_semisimple(rep: Representation, rng: random.Random | None = None) -> SemisimpleCertificate:
    """Complete reducibility test with a re-verifiable certificate."""
    rng = rng or random.Random(0)
    found = _discover_submodule(rep, range(rep.n), rng)
    if isinstance(found, IrreducibleWitness):
        return SemisimpleCertificate(True, summands=[Subspace.full(rep.field, rep.n)],
                                     factors=[rep], witnesses=[found])
    w = found
    pi = _invariant_projection(rep.generators, w)
    if pi is None:
        return SemisimpleCertificate(False, obstruction=w)
    complement = Subspace.from_vectors(rep.field, rep.n, right_kernel(pi))
    if complement.dim + w.dim != rep.n or not complement.is_invariant_under(rep.generators):
        raise InternalInvariantViolation("projection kernel is not a complement")
    out_summands, out_factors, out_wits = [], [], []
    for part in (w, complement):
        part_rep = Representation(restrict_to_subspace(rep.generators, part))
        sub = is_semisimple(part_rep, rng)
        if not sub.semisimple:
            return SemisimpleCertificate(False,
                                         obstruction=lift_from_subspace(part, sub.obstruction))
        for s, f, wit in zip(sub.summands, sub.factors, sub.witnesses):
            out_summands.append(lift_from_subspace(part, s))
            out_factors.append(f)
            out_wits.append(wit)
    return SemisimpleCertificate(True, summands=out_summands, factors=out_factors,
                                 witnesses=out_wits)


def module_iso(a: Representation, b: Representation, seed: int = 0) -> Matrix | None:
    """An invertible g with g a_i g^-1 = b_i for aligned generators, if any."""
    if a.field is not b.field:
        raise DimensionMismatch("modules over different fields")
    if len(a.generators) != len(b.generators):
        raise GeneratorCountMismatch(
            f"{len(a.generators)} generators against {len(b.generators)}")
    if a.n != b.n:
        return None
    return solve_conjugating(a.generators, b.generators, seed=seed)


class IsoClassMultiset:
    """Composition factors grouped by isomorphism, with multiplicities."""

    __slots__ = ("classes",)

    def __init__(self, classes):
        self.classes = tuple((rep, mult) for rep, mult in classes)

    def matches(self, other: "IsoClassMultiset") -> bool:
        """Whether the two multisets pair off isomorphically."""
        if len(self.classes) != len(other.classes):
            return False
        used = set()
        for rep, mult in self.classes:
            hit = None
            for i, (orep, omult) in enumerate(other.classes):
                if i in used or omult != mult:
                    continue
                if module_iso(rep, orep) is not None:
                    hit = i
                    break
            if hit is None:
                return False
            used.add(hit)
        return True

    def __repr__(self):
        parts = ", ".join(f"dim {rep.n} x{mult}" for rep, mult in self.classes)
        return f"IsoClassMultiset({parts})"


def iso_class_multiset(series: CompositionSeries) -> IsoClassMultiset:
    """Group the series factors by module isomorphism (first occurrence
    is the class representative)."""
    classes: list[list] = []
    for fac in series.factors:
        for entry in classes:
            if entry[0].n == fac.n and module_iso(entry[0], fac) is not None:
                entry[1] += 1
                break
        else:
            classes.append([fac, 1])
    return IsoClassMultiset([(rep, mult) for rep, mult in classes])
