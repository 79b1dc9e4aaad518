"""Brute-force ground truth over small finite fields.

Everything here decides questions by exhaustive enumeration: the full
general linear group, the full subspace lattice, every flag, and orbits
of generator tuples under simultaneous conjugation.  None of it consults
the module-theoretic machinery used by the main pipeline, so agreement
between the two is meaningful evidence of correctness.

All enumerations are capped; exceeding a cap raises ResourceBoundExceeded
rather than grinding on.  The orbit cache honours the SSRED_MAX_MEMORY_MB
environment variable.
"""

import itertools
import os

from .errors import InvalidInput, ResourceBoundExceeded
from .exact import EchelonBasis, Field, Matrix, Subspace, all_vectors
from .flags import Cocharacter, Flag, c_lambda, flag_to_cocharacter, in_P_lambda
from .reps import Representation

GROUP_ORDER_CAP = 2**21
SUBSPACE_CAP = 2**14
CLOSURE_CAP = 2**21
_BYTES_PER_CACHE_ENTRY = 200


def group_order(q: int, n: int) -> int:
    """Order of GL_n(F_q) by the standard product formula."""
    return _prod(q**n - q**i for i in range(n))


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def _require_finite(field: Field) -> None:
    if field.p is None:
        raise InvalidInput("the brute-force oracle only works over finite fields")


class GroupTable:
    """Exhaustive listing of GL_n(F_q) with precomputed inverses."""

    __slots__ = ("field", "n", "elements", "inverses")

    def __init__(self, field: Field, n: int, max_order: int = GROUP_ORDER_CAP):
        _require_finite(field)
        order = group_order(field.p, n)
        if order > max_order:
            raise ResourceBoundExceeded(
                f"|GL_{n}(F_{field.p})| = {order} exceeds the table cap {max_order}")
        elements = _enumerate_invertible(field, n)
        if len(elements) != order:
            raise ResourceBoundExceeded(
                "group enumeration does not match the order formula")
        self.field = field
        self.n = n
        self.elements = tuple(elements)
        self.inverses = tuple(m.inverse() for m in elements)

    @property
    def order(self) -> int:
        return len(self.elements)


def _enumerate_invertible(field: Field, n: int) -> list:
    nonzero = [v for v in all_vectors(field, n) if any(x != field.zero for x in v)]
    out = []

    def rec(rows):
        if len(rows) == n:
            out.append(Matrix(field, rows))
            return
        basis = EchelonBasis(field, n)
        for r in rows:
            basis.add(r)
        for v in nonzero:
            if not basis.contains(v):
                rec(rows + [v])

    rec([])
    return out


_TABLES: dict = {}
_SUBSPACES: dict = {}
_FLAGS: dict = {}
_INDEXES: dict = {}


def get_table(field: Field, n: int) -> GroupTable:
    key = (field, n)
    if key not in _TABLES:
        _TABLES[key] = GroupTable(field, n)
    return _TABLES[key]


def all_subspaces(field: Field, n: int) -> tuple:
    """Every subspace of F_q^n, zero and full included, via RREF shapes."""
    _require_finite(field)
    key = (field, n)
    if key in _SUBSPACES:
        return _SUBSPACES[key]
    if field.p**n > SUBSPACE_CAP:
        raise ResourceBoundExceeded(
            f"subspace lattice of F_{field.p}^{n} exceeds the cap {SUBSPACE_CAP}")
    scalars = list(range(field.p))
    out = [Subspace.zero(field, n)]
    for d in range(1, n + 1):
        for pivots in itertools.combinations(range(n), d):
            free = [(i, c) for i in range(d)
                    for c in range(pivots[i] + 1, n) if c not in pivots]
            for values in itertools.product(scalars, repeat=len(free)):
                rows = [[0] * n for _ in range(d)]
                for i, p in enumerate(pivots):
                    rows[i][p] = 1
                for (i, c), x in zip(free, values):
                    rows[i][c] = x
                out.append(Subspace.from_vectors(field, n, [tuple(r) for r in rows]))
    result = tuple(out)
    _SUBSPACES[key] = result
    return result


def enumerate_flags(field: Field, n: int) -> tuple:
    """Every flag in F_q^n, the trivial flag [k^n] included."""
    key = (field, n)
    if key in _FLAGS:
        return _FLAGS[key]
    proper = sorted(
        (s for s in all_subspaces(field, n) if 0 < s.dim < n),
        key=lambda s: (s.dim, s.basis.entries))
    full = Subspace.full(field, n)
    flags = [Flag([full])]

    def rec(chain, start):
        for i in range(start, len(proper)):
            s = proper[i]
            if chain and not (s.dim > chain[-1].dim and s.contains(chain[-1])):
                continue
            flags.append(Flag(chain + [s, full]))
            rec(chain + [s], i + 1)

    rec([], 0)
    result = tuple(flags)
    _FLAGS[key] = result
    return result


def _cache_entry_limit() -> int:
    raw = os.environ.get("SSRED_MAX_MEMORY_MB", "512")
    try:
        mb = int(raw)
    except ValueError:
        raise InvalidInput(f"SSRED_MAX_MEMORY_MB must be an integer, got {raw!r}")
    if mb < 0:
        raise InvalidInput("SSRED_MAX_MEMORY_MB must be non-negative")
    return mb * (2**20) // _BYTES_PER_CACHE_ENTRY


class OrbitIndex:
    """Orbits of generator tuples under simultaneous conjugation.

    An orbit id is the minimum of the flat integer encodings of the
    orbit's members, so ids are stable across runs and processes.  Every
    member encoding seen is cached; the cache size is bounded by the
    SSRED_MAX_MEMORY_MB budget.
    """

    __slots__ = ("table", "_cache", "_max_entries")

    def __init__(self, table: GroupTable, max_entries: int | None = None):
        self.table = table
        self._cache = {}
        self._max_entries = _cache_entry_limit() if max_entries is None else max_entries

    @staticmethod
    def encode(mats) -> tuple:
        return tuple(x for m in mats for row in m.entries for x in row)

    def orbit_members(self, mats) -> frozenset:
        mats = tuple(mats)
        members = set()
        for g, gi in zip(self.table.elements, self.table.inverses):
            members.add(self.encode(g * m * gi for m in mats))
        return frozenset(members)

    def orbit_id(self, mats) -> tuple:
        mats = tuple(mats)
        key = self.encode(mats)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        members = self.orbit_members(mats)
        oid = min(members)
        if len(self._cache) + len(members) > self._max_entries:
            raise ResourceBoundExceeded(
                "orbit cache would exceed the SSRED_MAX_MEMORY_MB budget")
        for e in members:
            self._cache[e] = oid
        return oid


def get_index(field: Field, n: int) -> OrbitIndex:
    key = (field, n)
    if key not in _INDEXES:
        _INDEXES[key] = OrbitIndex(get_table(field, n))
    return _INDEXES[key]


def _as_tuple(x) -> tuple:
    mats = tuple(x.generators) if isinstance(x, Representation) else tuple(x)
    if not mats:
        raise InvalidInput("need at least one matrix")
    _require_finite(mats[0].field)
    return mats


def generic_tuple(rep: Representation) -> tuple:
    """Generators followed by their inverses: the tuple fed to the oracle."""
    _require_finite(rep.field)
    return rep.generators + tuple(m.inverse() for m in rep.generators)


def preserved_flags(x) -> list:
    """All flags every matrix in the tuple preserves, the trivial flag included."""
    mats = _as_tuple(x)
    return [f for f in enumerate_flags(mats[0].field, mats[0].nrows)
            if f.is_preserved_by(mats)]


def limit_tuple(x, flag: Flag) -> tuple:
    """Degenerate the matrix tuple along the flag's cocharacter."""
    lam = flag_to_cocharacter(flag)
    return c_lambda(_as_tuple(x), lam)


def is_cochar_closed(x, index: OrbitIndex | None = None) -> bool:
    """Whether no flag degeneration leaves the conjugation orbit.

    This is the geometric characterization of complete reducibility: the
    orbit of the matrix tuple is closed exactly when every cocharacter
    limit stays inside it, and limits only depend on flags.
    """
    mats = _as_tuple(x)
    if index is None:
        index = get_index(mats[0].field, mats[0].nrows)
    home = index.orbit_id(mats)
    for flag in preserved_flags(mats):
        if index.orbit_id(limit_tuple(mats, flag)) != home:
            return False
    return True


def oracle_gcr(rep: Representation, index: OrbitIndex | None = None) -> bool:
    """Ground-truth complete-reducibility test via orbit closedness.

    Builds the generic tuple (generators plus inverses) and checks that
    its conjugation orbit is cocharacter-closed.
    """
    return is_cochar_closed(generic_tuple(rep), index)


def accessible_closed_orbits(x, index: OrbitIndex | None = None) -> frozenset:
    """Orbit ids of closed orbits reachable by one flag degeneration.

    The theory predicts this set is always a singleton: the orbit of the
    semisimplification.
    """
    mats = _as_tuple(x)
    if index is None:
        index = get_index(mats[0].field, mats[0].nrows)
    ids = set()
    for flag in preserved_flags(mats):
        limit = limit_tuple(mats, flag)
        if is_cochar_closed(limit, index):
            ids.add(index.orbit_id(limit))
    return frozenset(ids)


def invariant_subspaces(rep: Representation) -> list:
    """All subspaces invariant under every generator, zero and full included."""
    _require_finite(rep.field)
    return [s for s in all_subspaces(rep.field, rep.n)
            if s.is_invariant_under(rep.generators)]


def oracle_irreducible(rep: Representation) -> bool:
    """Irreducibility by exhausting the subspace lattice."""
    return all(s.dim in (0, rep.n) for s in invariant_subspaces(rep))


def subgroup_closure(field: Field, mats, cap: int = CLOSURE_CAP) -> frozenset:
    """The subgroup generated by invertible matrices, as a frozen set."""
    _require_finite(field)
    gens = [m if isinstance(m, Matrix) else Matrix(field, m) for m in mats]
    seen = {Matrix.identity(field, gens[0].nrows if gens else 1)}
    frontier = list(seen)
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
                            f"subgroup closure exceeds the cap {cap}")
        frontier = nxt
    return frozenset(seen)


def normalizer_elements(rep: Representation) -> list:
    """All g in GL_n(F_q) with g H g^-1 = H, by exhaustion."""
    _require_finite(rep.field)
    table = get_table(rep.field, rep.n)
    h_set = subgroup_closure(rep.field, rep.generators)
    out = []
    for g, gi in zip(table.elements, table.inverses):
        if all(g * h * gi in h_set for h in rep.generators):
            out.append(g)
    return out


def centralizer_elements(rep: Representation) -> list:
    """All g in GL_n(F_q) commuting with every generator, by exhaustion."""
    _require_finite(rep.field)
    table = get_table(rep.field, rep.n)
    return [g for g in table.elements
            if all(g * m == m * g for m in rep.generators)]


def cocharacter_limits_match_flag_limits(rep: Representation,
                                         height: int = 3) -> bool:
    """Runtime check that flags see every cocharacter limit.

    Enumerates all cocharacters with adapted basis in GL_n(F_q) and
    weights bounded by `height`, takes the limits that exist, and compares
    the resulting orbit id set with the one produced by flag degenerations
    alone.  Only sensible for very small fields and dimensions.
    """
    _require_finite(rep.field)
    if height < 1:
        raise InvalidInput("height must be at least 1")
    table = get_table(rep.field, rep.n)
    index = get_index(rep.field, rep.n)
    flag_side = {index.orbit_id(limit_tuple(rep, f)) for f in preserved_flags(rep)}
    cochar_side = set()
    weight_range = range(height, -height - 1, -1)
    for weights in itertools.product(weight_range, repeat=rep.n):
        if any(a < b for a, b in zip(weights, weights[1:])):
            continue
        for g in table.elements:
            lam = Cocharacter(g, weights)
            if all(in_P_lambda(m, lam) for m in rep.generators):
                cochar_side.add(index.orbit_id(c_lambda(rep.generators, lam)))
    return cochar_side == flag_side
