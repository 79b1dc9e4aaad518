import random
from fractions import Fraction

import pytest

from ssred.exact import (
    EchelonBasis,
    Field,
    Matrix,
    Subspace,
    all_vectors,
    charpoly,
    poly_eval_matrix,
    projective_vectors,
    rref,
    right_kernel,
    solve_conjugating,
    solve_linear,
    spin,
)
from ssred.errors import DimensionMismatch, InvalidInput

F2 = Field.prime(2)
F3 = Field.prime(3)
QQ = Field.rational()


def mat(field, rows):
    return Matrix(field, rows)


def random_matrix(rng, field, n):
    return Matrix(field, [[rng.randrange(field.p) for _ in range(n)] for _ in range(n)])


def random_invertible(rng, field, n):
    while True:
        m = random_matrix(rng, field, n)
        if m.det() != 0:
            return m


def test_field_interning_and_validation():
    assert Field.prime(5) is Field.prime(5)
    assert Field.rational() is Field.rational()
    assert Field.prime(3) is not Field.rational()
    with pytest.raises(InvalidInput):
        Field.prime(4)
    with pytest.raises(InvalidInput):
        Field.prime(2**31 + 11)


def test_field_arithmetic_small():
    assert F3.add(2, 2) == 1
    assert F3.inv(2) == 2
    assert F2.neg(1) == 1
    assert QQ.inv(Fraction(3, 7)) == Fraction(7, 3)


def test_matrix_mul_identity_and_shapes():
    a = mat(F3, [[1, 2], [0, 1]])
    assert a * Matrix.identity(F3, 2) == a
    assert Matrix.identity(F3, 2) * a == a
    with pytest.raises(DimensionMismatch):
        a * mat(F3, [[1, 0, 0]])


def test_matrix_inverse_and_det():
    a = mat(F3, [[0, 2], [1, 0]])
    ai = a.inverse()
    assert ai is not None
    assert a * ai == Matrix.identity(F3, 2)
    assert a.det() == F3.neg(2)
    singular = mat(F2, [[1, 1], [1, 1]])
    assert singular.inverse() is None
    assert singular.det() == 0


def test_rref_frozen_examples():
    red, rank, pivots = rref(Matrix.identity(F2, 3))
    assert red == Matrix.identity(F2, 3)
    assert rank == 3 and pivots == [0, 1, 2]

    red, rank, pivots = rref(mat(F2, [[1, 1], [1, 1]]))
    assert red == mat(F2, [[1, 1], [0, 0]])
    assert rank == 1 and pivots == [0]

    red, rank, pivots = rref(mat(QQ, [[2, 4], [1, 3]]))
    assert red == Matrix.identity(QQ, 2)
    assert rank == 2


def test_rref_is_idempotent_randomized():
    rng = random.Random(7)
    for _ in range(200):
        field = rng.choice([F2, F3])
        n = rng.randrange(1, 5)
        m = Matrix(field, [[rng.randrange(field.p) for _ in range(n + 1)] for _ in range(n)])
        red, rank, pivots = rref(m)
        again, rank2, pivots2 = rref(red)
        assert again == red
        assert (rank, pivots) == (rank2, pivots2)


def test_right_kernel_matches_definition():
    rng = random.Random(11)
    for _ in range(100):
        field = rng.choice([F2, F3])
        rows = rng.randrange(1, 4)
        cols = rng.randrange(1, 5)
        m = Matrix(field, [[rng.randrange(field.p) for _ in range(cols)] for _ in range(rows)])
        basis = right_kernel(m)
        _, rank, _ = rref(m)
        assert len(basis) == cols - rank
        for v in basis:
            assert all(x == 0 for x in m.apply(v))


def test_solve_linear():
    a = mat(F3, [[1, 2], [0, 1]])
    x = solve_linear(a, (0, 1))
    assert x is not None and a.apply(x) == (0, 1)
    inconsistent = mat(F2, [[1, 1], [1, 1]])
    assert solve_linear(inconsistent, (0, 1)) is None


def test_subspace_basics():
    v = Subspace.from_vectors(F2, 2, [(1, 1), (1, 1)])
    assert v.dim == 1
    assert v.contains_vector((1, 1))
    assert not v.contains_vector((1, 0))
    assert Subspace.full(F2, 2).contains(v)
    assert v.contains(Subspace.zero(F2, 2))
    assert v.coordinates((1, 1)) == (1,)
    assert v.coordinates((0, 1)) is None


def test_subspace_sum_intersection_dimension_formula():
    rng = random.Random(23)
    for _ in range(120):
        field = rng.choice([F2, F3])
        n = rng.randrange(1, 5)
        u = Subspace.from_vectors(field, n,
                                  [tuple(rng.randrange(field.p) for _ in range(n))
                                   for _ in range(rng.randrange(0, n + 1))])
        w = Subspace.from_vectors(field, n,
                                  [tuple(rng.randrange(field.p) for _ in range(n))
                                   for _ in range(rng.randrange(0, n + 1))])
        s = u.sum(w)
        i = u.intersection(w)
        assert s.dim + i.dim == u.dim + w.dim
        assert u.contains(i) and w.contains(i)
        assert s.contains(u) and s.contains(w)


def test_spin_transvection():
    t = mat(F2, [[1, 1], [0, 1]])
    line = spin(F2, 2, [(1, 0)], [t])
    assert line.dim == 1 and line.contains_vector((1, 0))
    everything = spin(F2, 2, [(0, 1)], [t])
    assert everything.dim == 2


def test_spin_result_is_invariant_randomized():
    rng = random.Random(31)
    for _ in range(150):
        field = rng.choice([F2, F3])
        n = rng.randrange(1, 5)
        ops = [random_matrix(rng, field, n) for _ in range(rng.randrange(1, 3))]
        seed = tuple(rng.randrange(field.p) for _ in range(n))
        w = spin(field, n, [seed], ops)
        assert w.contains_vector(seed)
        assert w.is_invariant_under(ops)
        # minimality: spinning any member again stays inside
        for row in w.basis.entries:
            assert spin(field, n, [row], ops).dim <= w.dim


def test_charpoly_frozen():
    rot = mat(F3, [[0, 2], [1, 0]])
    # det(xI - rot) = x^2 - 2 = x^2 + 1 over GF(3)
    assert charpoly(rot) == [1, 0, 1]
    jordan = mat(QQ, [[1, 1], [0, 1]])
    assert charpoly(jordan) == [Fraction(1), Fraction(-2), Fraction(1)]


def test_charpoly_cayley_hamilton_randomized():
    rng = random.Random(43)
    for _ in range(100):
        field = rng.choice([F2, F3])
        n = rng.randrange(1, 5)
        m = random_matrix(rng, field, n)
        coeffs = charpoly(m)
        assert len(coeffs) == n + 1 and coeffs[-1] == field.one
        assert poly_eval_matrix(coeffs, m).is_zero()


def test_charpoly_trace_det_coefficients():
    rng = random.Random(47)
    for _ in range(60):
        m = random_matrix(rng, F3, 3)
        coeffs = charpoly(m)
        assert coeffs[2] == F3.neg(m.trace())
        assert coeffs[0] == F3.neg(m.det())


def test_charpoly_rational_bignum():
    big = Fraction(10**30, 7)
    m = mat(QQ, [[big, 1], [0, big]])
    coeffs = charpoly(m)
    assert coeffs == [big * big, -2 * big, Fraction(1)]


def test_vector_enumeration():
    assert len(list(all_vectors(F3, 2))) == 9
    lines2 = list(projective_vectors(F2, 2))
    assert lines2 == [(1, 0), (1, 1), (0, 1)]
    lines3 = list(projective_vectors(F3, 2))
    assert len(lines3) == 4
    with pytest.raises(InvalidInput):
        list(all_vectors(QQ, 2))


def test_solve_conjugating_identity_shortcut():
    a = mat(F3, [[1, 1], [0, 1]])
    g = solve_conjugating([a], [a])
    assert g == Matrix.identity(F3, 2)


def test_solve_conjugating_transvections_frozen():
    lower = mat(F2, [[1, 0], [1, 1]])
    upper = mat(F2, [[1, 1], [0, 1]])
    g = solve_conjugating([upper], [lower])
    assert g == mat(F2, [[0, 1], [1, 0]])

    # independent brute force over every invertible 2x2 matrix mod 2
    found = []
    for a, b, c, d in all_vectors(F2, 4):
        cand = mat(F2, [[a, b], [c, d]])
        if cand.det() != 0 and cand * upper == lower * cand:
            found.append(cand)
    assert g in found


def test_solve_conjugating_certified_absence():
    ident = Matrix.identity(F2, 2)
    upper = mat(F2, [[1, 1], [0, 1]])
    assert solve_conjugating([ident], [upper]) is None
    # conjugation preserves order, so order-2 and order-3 elements never meet
    a = mat(F3, [[1, 1], [0, 1]])
    b = mat(F3, [[2, 0], [0, 2]])
    assert solve_conjugating([a], [b]) is None


def test_solve_conjugating_randomized_roundtrip():
    rng = random.Random(61)
    for _ in range(40):
        field = rng.choice([F2, F3])
        n = rng.randrange(2, 4)
        mats = [random_matrix(rng, field, n) for _ in range(rng.randrange(1, 3))]
        g = random_invertible(rng, field, n)
        gi = g.inverse()
        twisted = [g * m * gi for m in mats]
        h = solve_conjugating(mats, twisted, seed=rng.randrange(1 << 30))
        assert h is not None
        hi = h.inverse()
        for m, t in zip(mats, twisted):
            assert h * m * hi == t


def test_solve_conjugating_rational():
    a = mat(QQ, [[1, 1], [0, 1]])
    b = mat(QQ, [[1, 0], [1, 1]])
    g = solve_conjugating([a], [b])
    assert g is not None
    gi = g.inverse()
    assert g * a * gi == b
    # trace separates these, so absence is certified via the grid
    c = mat(QQ, [[2, 0], [0, 3]])
    d = mat(QQ, [[2, 0], [0, 4]])
    assert solve_conjugating([c], [d]) is None


def test_echelon_basis_incremental():
    acc = EchelonBasis(F3, 3)
    assert acc.add((1, 2, 0))
    assert not acc.add((2, 1, 0))
    assert acc.add((0, 0, 1))
    assert acc.dim == 2
    assert acc.contains((1, 2, 2))
    assert not acc.contains((0, 1, 0))
