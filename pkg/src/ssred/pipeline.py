"""The semisimplification pipeline.

semisimplify drives a composition series into a cocharacter lambda and
takes the limit of the generators under conjugation by lambda(a) as
a -> 0; the result generates a completely reducible group, and any two
such limits are conjugate over the ground field (witnessed by an
explicit matrix).  The module also covers Levi descent for
block-diagonal inputs, joint semisimplification of a normal subgroup
along the ambient group's flag, and a search for the optimal
destabilizing flag under an exact Kempf-style length measure.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import (
    AlgebraNotStable,
    DimensionMismatch,
    InternalInvariantViolation,
    InvalidInput,
    NotBlockDiagonal,
    NotNormal,
    PreconditionNotDestabilizable,
    ResourceBoundExceeded,
    SearchSpaceExceeded,
    UndecidedIrreducibility,
)
from .exact import EchelonBasis, Matrix, Subspace, projective_vectors, right_kernel, spin
from .flags import (
    Cocharacter,
    Flag,
    c_lambda,
    diagonal_blocks,
    flag_to_cocharacter,
    in_P_lambda,
)
from .reps import (
    IrreducibleWitness,
    Representation,
    SemisimpleCertificate,
    composition_series,
    enveloping_basis,
    find_submodule,
    is_semisimple,
    module_iso,
)

GROUP_CLOSURE_CAP = 2**21
SUBSPACE_LATTICE_CAP = 2**14
FLAG_CANDIDATE_CAP = 2**16


def is_gcr_over_k(rep: Representation) -> SemisimpleCertificate:
    """Complete reducibility of the generated subgroup of GL_n.

    For subgroups of GL_n this is equivalent to semisimplicity of the
    natural module, so the certificate is passed through unchanged.
    """
    return is_semisimple(rep)


class SsResult:
    """A semisimplification: flag, cocharacter, and the limit generators."""

    __slots__ = ("input", "flag", "cocharacter", "ss_generators", "certificate",
                 "l_irreducible")

    def __init__(self, input_rep, flag, cocharacter, ss_generators, certificate,
                 l_irreducible):
        self.input = input_rep
        self.flag = flag
        self.cocharacter = cocharacter
        self.ss_generators = tuple(ss_generators)
        self.certificate = certificate
        self.l_irreducible = l_irreducible

    def ss_representation(self) -> Representation:
        return Representation(self.ss_generators, name=self.input.name)

    def verify(self) -> bool:
        lam = self.cocharacter
        for g, s in zip(self.input.generators, self.ss_generators):
            if not in_P_lambda(g, lam) or c_lambda(g, lam) != s:
                return False
        if lam.flag() != self.flag:
            return False
        return self.certificate.semisimple and self.certificate.verify(
            self.ss_representation())

    def __repr__(self):
        return (f"SsResult(blocks={self.flag.block_sizes}, "
                f"l_irreducible={self.l_irreducible})")


def _block_irreducibility(flag: Flag, cocharacter, ss_generators) -> bool:
    """Whether every diagonal-block action of the limit is irreducible."""
    adapted = [cocharacter.basis_change_inv * g * cocharacter.basis_change
               for g in ss_generators]
    for i in range(len(flag.block_sizes)):
        blocks = [diagonal_blocks(a, flag.block_sizes)[i] for a in adapted]
        found = find_submodule(Representation(blocks))
        if not isinstance(found, IrreducibleWitness):
            return False
    return True


def semisimplify(rep: Representation, seed: int = 0) -> SsResult:
    """The k-semisimplification of the generated subgroup.

    Semisimple input is its own semisimplification (trivial flag,
    generators unchanged).  Otherwise the flag of a composition series
    determines the cocharacter and the generators are replaced by their
    limits, which always generate a completely reducible group; the seed
    varies the series when the module admits several.
    """
    cert = is_semisimple(rep)
    if cert.semisimple:
        flag = Flag.trivial(rep.field, rep.n)
        lam = flag_to_cocharacter(flag)
        return SsResult(rep, flag, lam, rep.generators, cert,
                        l_irreducible=len(cert.summands) == 1)
    series = composition_series(rep, seed=seed)
    lam = flag_to_cocharacter(series.flag)
    ss_gens = [c_lambda(g, lam) for g in rep.generators]
    ss_cert = is_semisimple(Representation(ss_gens))
    if not ss_cert.semisimple:
        raise InternalInvariantViolation("limit along a composition flag is not semisimple")
    return SsResult(rep, series.flag, lam, ss_gens, ss_cert, l_irreducible=True)


class ConjugacyCertificate:
    """An explicit matrix conjugating one semisimplification to another."""

    __slots__ = ("g", "lhs", "rhs")

    def __init__(self, g: Matrix, lhs: SsResult, rhs: SsResult):
        self.g = g
        self.lhs = lhs
        self.rhs = rhs

    def verify(self) -> bool:
        gi = self.g.inverse()
        if gi is None:
            return False
        return all(self.g * a * gi == b
                   for a, b in zip(self.lhs.ss_generators, self.rhs.ss_generators))

    def __repr__(self):
        return f"ConjugacyCertificate(g={self.g!r})"


def conjugacy_certificate(a: SsResult, b: SsResult, seed: int = 0) -> ConjugacyCertificate:
    """Conjugate two semisimplifications of the same input to each other.

    Existence is a theorem, so a failed search (other than an explicit
    resource bound over the rationals) signals a bug.
    """
    if a.input.generators != b.input.generators:
        raise InvalidInput("the two results come from different inputs")
    g = module_iso(a.ss_representation(), b.ss_representation(), seed=seed)
    if g is None:
        raise InternalInvariantViolation(
            "semisimplifications of one input failed to be conjugate")
    return ConjugacyCertificate(g, a, b)


class LeviDescentReport:
    """Complete reducibility of a block-diagonal group, globally and
    blockwise; the two answers agree by Levi descent/ascent."""

    __slots__ = ("full_gcr", "block_gcr", "agrees", "full_certificate",
                 "block_certificates")

    def __init__(self, full_certificate, block_certificates):
        self.full_certificate = full_certificate
        self.block_certificates = tuple(block_certificates)
        self.full_gcr = full_certificate.semisimple
        self.block_gcr = tuple(c.semisimple for c in self.block_certificates)
        self.agrees = self.full_gcr == all(self.block_gcr)

    def __repr__(self):
        return f"LeviDescentReport(full={self.full_gcr}, blocks={self.block_gcr})"


def levi_descent(rep: Representation, block_sizes) -> LeviDescentReport:
    """Compare G-complete reducibility with blockwise complete
    reducibility for generators in block-diagonal shape."""
    block_sizes = tuple(int(b) for b in block_sizes)
    if any(b < 1 for b in block_sizes) or sum(block_sizes) != rep.n:
        raise InvalidInput("block sizes must be positive and sum to n")
    bounds = list(itertools.accumulate((0,) + block_sizes))
    for g in rep.generators:
        for i in range(rep.n):
            for j in range(rep.n):
                inside = any(lo <= i < hi and lo <= j < hi
                             for lo, hi in zip(bounds, bounds[1:]))
                if not inside and g.entries[i][j] != 0:
                    raise NotBlockDiagonal(
                        f"entry ({i},{j}) falls outside the diagonal blocks")
    block_reps = []
    for idx in range(len(block_sizes)):
        gens = [diagonal_blocks(g, block_sizes)[idx] for g in rep.generators]
        block_reps.append(Representation(gens))
    return LeviDescentReport(is_semisimple(rep), [is_semisimple(r) for r in block_reps])


def _group_closure(mats, cap: int = GROUP_CLOSURE_CAP) -> set[Matrix]:
    """All products of the given invertible matrices and their inverses."""
    gens = []
    for m in mats:
        mi = m.inverse()
        if mi is None:
            raise InvalidInput("group closure of a singular matrix")
        gens.append(m)
        gens.append(mi)
    ident = Matrix.identity(mats[0].field, mats[0].nrows)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > cap:
                        raise ResourceBoundExceeded(
                            f"group closure exceeded {cap} elements")
        frontier = nxt
    return seen


class CliffordResult:
    """Joint semisimplification of a group and a normal subgroup along
    one flag."""

    __slots__ = ("ambient", "normal")

    def __init__(self, ambient: SsResult, normal: SsResult):
        self.ambient = ambient
        self.normal = normal

    def __repr__(self):
        return f"CliffordResult(blocks={self.ambient.flag.block_sizes})"


def clifford_joint_ss(m: Representation, h: Representation, seed: int = 0) -> CliffordResult:
    """Semisimplify m and a normal subgroup h along the same cocharacter.

    Over a finite field normality (and containment of h in m's group) is
    verified by enumeration; over the rationals the necessary condition
    that conjugation by m's generators stabilizes h's enveloping algebra
    is checked, and normality is otherwise the caller's responsibility.
    Both limits are verified semisimple, which the theory guarantees.
    """
    if m.field is not h.field or m.n != h.n:
        raise DimensionMismatch("group and subgroup live in different spaces")
    if m.field.p is not None:
        m_set = _group_closure(m.generators)
        h_set = _group_closure(h.generators)
        if not all(x in m_set for x in h.generators):
            raise NotNormal("subgroup generators fall outside the ambient group")
        for g in m.generators:
            gi = g.inverse()
            for x in h_set:
                if g * x * gi not in h_set:
                    raise NotNormal("conjugation by an ambient generator leaves the subgroup")
    else:
        gt_h = enveloping_basis(h)
        span = EchelonBasis(h.field, h.n * h.n)
        for b in gt_h.algebra_basis:
            span.add(tuple(x for row in b.entries for x in row))
        for g in m.generators:
            gi = g.inverse()
            for b in gt_h.algebra_basis:
                moved = g * b * gi
                if not span.contains(tuple(x for row in moved.entries for x in row)):
                    raise AlgebraNotStable(
                        "ambient generator does not stabilize the subgroup's algebra")
    ambient = semisimplify(m, seed=seed)
    lam = ambient.cocharacter
    for g in h.generators:
        if not in_P_lambda(g, lam):
            raise NotNormal("subgroup does not preserve the ambient composition flag")
    h_gens = [c_lambda(g, lam) for g in h.generators]
    h_cert = is_semisimple(Representation(h_gens))
    if not h_cert.semisimple:
        raise InternalInvariantViolation(
            "limit of the normal subgroup along the joint flag is not semisimple")
    l_irr = _block_irreducibility(ambient.flag, lam, h_gens)
    normal = SsResult(h, ambient.flag, lam, h_gens, h_cert, l_irreducible=l_irr)
    return CliffordResult(ambient, normal)


def _invariant_lattice(rep: Representation) -> list[Subspace]:
    """All generator-invariant subspaces over a small finite field, as
    sums of cyclic invariant subspaces; a discovered sublattice over the
    rationals.

    Every invariant subspace is the sum of the spins of its vectors, so
    over F_q with q^n under the cap the closure of the cyclic subspaces
    under pairwise sum is the complete lattice.
    """
    field = rep.field
    n = rep.n
    seeds = []
    if field.p is not None:
        if field.p**n > SUBSPACE_LATTICE_CAP:
            raise SearchSpaceExceeded(
                f"{field.p}^{n} vectors exceed the invariant-lattice cap")
        seeds.extend(projective_vectors(field, n))
    else:
        gt = enveloping_basis(rep)
        ident = Matrix.identity(field, n)
        elements = list(gt.algebra_basis)
        elements += [e - ident for e in gt.entries]
        elements += [a - b for a, b in itertools.combinations(gt.entries, 2)]
        for elt in elements:
            if not elt.is_zero():
                seeds.extend(right_kernel(elt))
    found: dict = {}
    for v in seeds:
        w = spin(field, n, [v], rep.generators)
        if 0 < w.dim:
            found[w.basis.entries] = w
    if field.p is None:
        try:
            series = composition_series(rep)
        except UndecidedIrreducibility:
            series = None
        if series is not None:
            for step in series.flag.steps[:-1]:
                found[step.basis.entries] = step
    worklist = list(found.values())
    while worklist:
        cur = worklist.pop()
        for other in list(found.values()):
            for combined in ((cur.sum(other),) if field.p is not None
                             else (cur.sum(other), cur.intersection(other))):
                if combined.dim == 0 or combined.dim == n:
                    continue
                key = combined.basis.entries
                if key not in found:
                    found[key] = combined
                    worklist.append(combined)
                    if len(found) > FLAG_CANDIDATE_CAP:
                        raise SearchSpaceExceeded("invariant lattice exceeded the cap")
    proper = [w for w in found.values() if 0 < w.dim < n]
    proper.sort(key=lambda w: (w.dim, w.basis.entries))
    return proper


def _chains(proper: list[Subspace], cap: int):
    """All strictly increasing chains of proper invariant subspaces."""
    out = []

    def extend(chain):
        out.append(chain)
        if len(out) > cap:
            raise SearchSpaceExceeded("flag enumeration exceeded the candidate cap")
        last = chain[-1]
        for w in proper:
            if w.dim > last.dim and w.contains(last):
                extend(chain + [w])

    for w in proper:
        extend([w])
    return out


class FlagCandidate:
    """One (flag, weight class) candidate with its exact squared measure."""

    __slots__ = ("flag", "weights", "w_min", "measure", "limit_generators")

    def __init__(self, flag, weights, w_min, measure, limit_generators):
        self.flag = flag
        self.weights = weights
        self.w_min = w_min
        self.measure = measure
        self.limit_generators = limit_generators

    def as_dict(self):
        return {
            "dims": [v.dim for v in self.flag.steps],
            "weights": list(self.weights),
            "w_min": self.w_min,
            "measure": str(self.measure),
        }


class OptimalFlagReport:
    """Argmax set of the destabilization measure over flags and weights."""

    __slots__ = ("argmax", "measure", "per_flag_data", "search_bound", "findings")

    def __init__(self, argmax, measure, per_flag_data, search_bound, findings):
        self.argmax = tuple(argmax)
        self.measure = measure
        self.per_flag_data = tuple(per_flag_data)
        self.search_bound = search_bound
        self.findings = tuple(findings)

    @property
    def argmax_flags(self):
        return tuple(c.flag for c in self.argmax)

    def __repr__(self):
        return (f"OptimalFlagReport(measure={self.measure}, "
                f"argmax={len(self.argmax)}, findings={len(self.findings)})")


def optimal_flag(rep: Representation, max_weight_height: int = 4) -> OptimalFlagReport:
    """Search invariant flags and bounded weight vectors for the fastest
    destabilization of a non-completely-reducible group.

    The squared measure of a candidate cocharacter is w_min^2 / |lambda|^2
    where w_min is the least positive weight carried by a nonzero
    off-Levi entry of any enveloping-algebra basis element, computed from
    the canonical (centered, gcd-reduced) weights.  Candidates whose
    limit stays conjugate to the input are discarded.  Argmax limits are
    expected to be semisimple over perfect fields; violations are
    reported as findings rather than errors.
    """
    if max_weight_height < 1:
        raise InvalidInput("the weight height bound must be at least 1")
    pre = is_semisimple(rep)
    if pre.semisimple:
        raise PreconditionNotDestabilizable("input is already completely reducible")
    field = rep.field
    n = rep.n
    gt = enveloping_basis(rep)
    full = Subspace.full(field, n)
    proper = _invariant_lattice(rep)
    candidates = []
    for chain in _chains(proper, FLAG_CANDIDATE_CAP):
        flag = Flag(chain + [full])
        base = flag_to_cocharacter(flag)
        seen_classes = set()
        r = len(flag.steps)
        for diffs in itertools.product(range(1, max_weight_height + 1), repeat=r - 1):
            if sum(diffs) > max_weight_height:
                continue
            levels = [1]
            for d in reversed(diffs):
                levels.append(levels[-1] + d)
            levels.reverse()
            weights = []
            for size, lv in zip(flag.block_sizes, levels):
                weights.extend([lv] * size)
            lam = Cocharacter(base.basis_change, weights)
            if lam.canonical in seen_classes:
                continue
            seen_classes.add(lam.canonical)
            cw = lam.canonical
            w_min = None
            for elt in gt.algebra_basis:
                adapted = lam.basis_change_inv * elt * lam.basis_change
                for i in range(n):
                    for j in range(n):
                        d = cw[i] - cw[j]
                        if d > 0 and adapted.entries[i][j] != 0:
                            if w_min is None or d < w_min:
                                w_min = d
            if w_min is None:
                continue
            limit = c_lambda(rep.generators, lam)
            if module_iso(rep, Representation(limit)) is not None:
                continue
            measure = Fraction(w_min * w_min, lam.norm_sq())
            candidates.append(FlagCandidate(flag, cw, w_min, measure, limit))
    if not candidates:
        raise InternalInvariantViolation(
            "a non-completely-reducible input admitted no destabilizing candidate")
    candidates.sort(key=lambda c: (-c.measure,
                                   [v.dim for v in c.flag.steps],
                                   [v.basis.entries for v in c.flag.steps],
                                   c.weights))
    top = candidates[0].measure
    argmax = [c for c in candidates if c.measure == top]
    findings = []
    for c in argmax:
        cert = is_semisimple(Representation(c.limit_generators))
        if not cert.semisimple:
            findings.append({
                "kind": "non_semisimple_argmax_limit",
                "dims": [v.dim for v in c.flag.steps],
                "weights": list(c.weights),
                "measure": str(c.measure),
            })
    return OptimalFlagReport(argmax, top, candidates, max_weight_height, findings)
