"""Bar-resolution chains over finite groups and the coset-explicit transfer.

Chains live in the free abelian group on basis tuples 1 (x) (1, g_1, ...,
g_n) of the bar complex with coefficients already tensored down to Z.  A
GroupSpec packages the group operations, a finite-index subgroup membership
test, and right coset representatives x_0, ..., x_{m-1} (x_0 the identity)
for H\\G.  Writing x_i g = h(i, g) x_{pi(g)(i)} with h(i, g) in H, the
transfer to the subgroup acts on basis tuples by

    T_n(1 (x) (1, g_1, ..., g_n)) = sum_i 1 (x) (1, h(i, g_1), ..., h(i, g_n)),

a chain map whose homology class does not depend on the representative
choice; the latter is checked here by solving d(x) = difference over the
integers on a brute-force basis one degree up.

Permutations compose as a right action: mul(a, b) applies a first, so
pi(g g') = mul(pi(g), pi(g')) in this encoding.  All coset indices are
0-based.
"""

from __future__ import annotations

from itertools import permutations as iter_permutations
from itertools import product as iter_product
from typing import Callable, Optional, Sequence

from .arith import RingParams
from .errors import NonUnitError, ParameterError, SizeGuardError
from .matforms import OMatrix

__all__ = [
    "BarChain",
    "GroupSpec",
    "coset_data",
    "bar_differential",
    "transfer_T",
    "check_chain_map",
    "section_s",
    "t_tilde",
    "factorization_check",
    "is_boundary",
    "verify_reps",
    "perm_identity",
    "perm_mul",
    "perm_inv",
    "perm_is_even",
    "perm_closure",
    "symmetric_group",
    "perm_group_spec",
    "matrix_group_spec",
]


class BarChain:
    """Integer formal sum of degree-n bar basis tuples."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 0:
            raise ParameterError("chain degree must be >= 0")
        self.n = n
        self.terms: dict[tuple, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, c in items:
                key = tuple(key)
                if len(key) != n:
                    raise ParameterError("tuple arity must equal the degree")
                if c:
                    nc = self.terms.get(key, 0) + c
                    if nc:
                        self.terms[key] = nc
                    elif key in self.terms:
                        del self.terms[key]

    @staticmethod
    def basis(key) -> "BarChain":
        key = tuple(key)
        return BarChain(len(key), {key: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def scale(self, c: int) -> "BarChain":
        return BarChain(self.n, {k: c * v for k, v in self.terms.items()})

    def __add__(self, other: "BarChain") -> "BarChain":
        if self.n != other.n:
            raise ParameterError("cannot add chains of different degree")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BarChain(self.n, out)

    def __neg__(self) -> "BarChain":
        return self.scale(-1)

    def __sub__(self, other: "BarChain") -> "BarChain":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BarChain):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return f"BarChain(n={self.n}, 0)"
        return f"BarChain(n={self.n}, {len(self.terms)} terms)"


class GroupSpec:
    """Group-with-subgroup data: operation oracles plus coset reps.

    reps[0] must lie in the subgroup (constructors use the identity).
    coset_key, when given, maps an element to a hashable invariant that
    distinguishes the right cosets H\\G; it replaces the linear scan in
    coset_data with a dictionary lookup, with identical results.
    """

    def __init__(
        self,
        kind: str,
        identity,
        mul: Callable,
        inv: Callable,
        in_subgroup: Callable,
        reps: Sequence,
        coset_key: Optional[Callable] = None,
    ):
        self.kind = kind
        self.identity = identity
        self.mul = mul
        self.inv = inv
        self.in_subgroup = in_subgroup
        self.reps = tuple(reps)
        if not self.reps:
            raise ParameterError("at least one coset representative required")
        if not in_subgroup(self.reps[0]):
            raise ParameterError("reps[0] must belong to the subgroup")
        self.coset_key = coset_key
        self._rep_index = (
            {coset_key(r): i for i, r in enumerate(self.reps)}
            if coset_key is not None
            else None
        )
        if self._rep_index is not None and len(self._rep_index) != len(self.reps):
            raise ParameterError("coset_key does not separate the reps")
        self._rep_invs: list = [None] * len(self.reps)

    @property
    def index(self) -> int:
        return len(self.reps)

    def rep_inv(self, j: int):
        if self._rep_invs[j] is None:
            self._rep_invs[j] = self.inv(self.reps[j])
        return self._rep_invs[j]


def _rep_of(spec: GroupSpec, y):
    """(h, j) with y = h x_j, h in the subgroup."""
    if spec._rep_index is not None:
        j = spec._rep_index.get(spec.coset_key(y))
        if j is None:
            raise ParameterError("no coset representative matches")
        h = spec.mul(y, spec.rep_inv(j))
        if not spec.in_subgroup(h):
            raise ParameterError("invalid coset representatives")
        return h, j
    for j in range(len(spec.reps)):
        h = spec.mul(y, spec.rep_inv(j))
        if spec.in_subgroup(h):
            return h, j
    raise ParameterError("no coset representative matches")


def coset_data(spec: GroupSpec, i: int, g):
    """The unique (h, j) with x_i g = h x_j and h in the subgroup."""
    return _rep_of(spec, spec.mul(spec.reps[i], g))


def verify_reps(spec: GroupSpec, elements: Sequence):
    """Exhaustive check that the reps hit every right coset exactly once."""
    rep_invs = [spec.rep_inv(j) for j in range(len(spec.reps))]
    for y in elements:
        hits = sum(
            1 for ri in rep_invs if spec.in_subgroup(spec.mul(y, ri))
        )
        if hits != 1:
            raise ParameterError(
                f"element lies in {hits} right cosets of the reps"
            )


def bar_differential(spec: GroupSpec, c: BarChain) -> BarChain:
    """Alternating face sum; the 0-th face renormalizes the basis tuple
    (g_1, ..., g_n) to (1, g_1^{-1} g_2, ..., g_1^{-1} g_n)."""
    if c.n < 1:
        raise ParameterError("the differential needs degree >= 1")
    out: dict[tuple, int] = {}
    for key, coeff in c.terms.items():
        inv1 = spec.inv(key[0])
        for j in range(c.n + 1):
            if j == 0:
                fk = tuple(spec.mul(inv1, g) for g in key[1:])
            else:
                fk = key[: j - 1] + key[j:]
            s = coeff if j % 2 == 0 else -coeff
            out[fk] = out.get(fk, 0) + s
    return BarChain(c.n - 1, out)


def transfer_T(spec: GroupSpec, c: BarChain) -> BarChain:
    """Coset-sum transfer into the subgroup, term by term."""
    out: dict[tuple, int] = {}
    for key, coeff in c.terms.items():
        for i in range(len(spec.reps)):
            new = tuple(coset_data(spec, i, g)[0] for g in key)
            out[new] = out.get(new, 0) + coeff
    return BarChain(c.n, out)


def check_chain_map(spec: GroupSpec, c: BarChain) -> bool:
    """Exact equality d(T(c)) = T(d(c))."""
    lhs = bar_differential(spec, transfer_T(spec, c))
    rhs = transfer_T(spec, bar_differential(spec, c))
    return lhs == rhs


def t_tilde(spec: GroupSpec, key):
    """Homogeneous coset lifts of a based tuple: for each i the tuple
    (x_i, x_i g_1, ..., x_i g_n)."""
    key = tuple(key)
    return [
        (i, (r,) + tuple(spec.mul(r, g) for g in key))
        for i, r in enumerate(spec.reps)
    ]


def section_s(spec: GroupSpec, homog):
    """Entrywise subgroup parts: (h_0, ..., h_n) for (h_0 x_{i_0}, ...)."""
    return tuple(_rep_of(spec, y)[0] for y in homog)


def factorization_check(spec: GroupSpec, c: BarChain) -> bool:
    """The transfer factors through the section: applying section_s to
    every homogeneous lift reproduces the transfer terms exactly."""
    for key in c.terms:
        for i, homog in t_tilde(spec, key):
            via_s = section_s(spec, homog)
            direct = (spec.identity,) + tuple(
                coset_data(spec, i, g)[0] for g in key
            )
            if via_s != direct:
                return False
    return True


# ---------------------------------------------------------------------------
# integer boundary solving (small brute-force basis)


def _lattice_contains(cols, b) -> bool:
    """Decide whether b lies in the integer column span of cols."""
    m = len(b)
    cols = [list(c) for c in cols]
    b = list(b)
    active = [c for c in cols if any(c)]
    for row in range(m):
        while True:
            nz = [c for c in active if c[row]]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda c: abs(c[row]))
            base = nz[0]
            for c in nz[1:]:
                q = c[row] // base[row]
                if q:
                    for t in range(row, m):
                        c[t] -= q * base[t]
            active = [c for c in active if any(c[row:])]
        piv = next((c for c in active if c[row]), None)
        if piv is None:
            if b[row]:
                return False
            continue
        if b[row] % piv[row]:
            return False
        q = b[row] // piv[row]
        if q:
            for t in range(row, m):
                b[t] -= q * piv[t]
        active.remove(piv)
    return not any(b)


def is_boundary(spec: GroupSpec, elements: Sequence, c: BarChain) -> bool:
    """Brute-force test: c = d(x) for some integer chain x one degree up,
    with x drawn from all tuples over the given elements."""
    if c.is_zero():
        return True
    col_terms = []
    for t in iter_product(elements, repeat=c.n + 1):
        d = bar_differential(spec, BarChain.basis(t))
        if not d.is_zero():
            col_terms.append(d.terms)
    rows: list[tuple] = []
    row_index: dict[tuple, int] = {}
    for terms in col_terms:
        for k in terms:
            if k not in row_index:
                row_index[k] = len(rows)
                rows.append(k)
    for k in c.terms:
        if k not in row_index:
            row_index[k] = len(rows)
            rows.append(k)
    cols = [[terms.get(k, 0) for k in rows] for terms in col_terms]
    b = [c.terms.get(k, 0) for k in rows]
    return _lattice_contains(cols, b)


# ---------------------------------------------------------------------------
# permutation groups


def perm_identity(n: int) -> tuple:
    return tuple(range(n))


def perm_mul(a, b) -> tuple:
    """Right-action composition: apply a first, then b."""
    return tuple(b[k] for k in a)


def perm_inv(a) -> tuple:
    out = [0] * len(a)
    for k, v in enumerate(a):
        out[v] = k
    return tuple(out)


def perm_is_even(a) -> bool:
    inv = sum(
        1
        for i in range(len(a))
        for j in range(i + 1, len(a))
        if a[i] > a[j]
    )
    return inv % 2 == 0


def perm_closure(gens: Sequence) -> tuple:
    """BFS closure of a generating set under the pinned composition."""
    n = len(gens[0])
    seen = {perm_identity(n)}
    frontier = [perm_identity(n)]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = perm_mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen))


def symmetric_group(n: int) -> tuple:
    return tuple(iter_permutations(range(n)))


def perm_group_spec(
    elements: Sequence,
    in_subgroup: Callable,
    reps: Optional[Sequence] = None,
) -> GroupSpec:
    """Permutation GroupSpec; reps default to a greedy scan with the
    identity first."""
    n = len(elements[0])
    ident = perm_identity(n)
    if reps is None:
        reps = [ident]
        for y in sorted(elements):
            if all(
                not in_subgroup(perm_mul(y, perm_inv(r))) for r in reps
            ):
                reps.append(y)
    spec = GroupSpec(
        "permutation", ident, perm_mul, perm_inv, in_subgroup, reps
    )
    verify_reps(spec, elements)
    return spec


# ---------------------------------------------------------------------------
# matrix groups mod p^M


def matrix_group_spec(
    params: RingParams, N: int, e: int, max_index: int = 10**6
) -> GroupSpec:
    """Invertible N x N matrices over O/p^M with the congruence subgroup
    1 mod p^e; representatives enumerate the invertible matrices at level
    e, lifted coefficientwise, identity first.
    """
    if e < 1 or e > params.M:
        raise ParameterError("need 1 <= e <= M")
    pe = params.p**e
    scan = pe ** (params.d * N * N)
    if scan > 2 * 10**7:
        raise SizeGuardError(
            f"level-{e} enumeration needs {scan} candidates"
        )
    ident = OMatrix.identity(params, N)
    reps = [ident]
    for entries in iter_product(
        iter_product(range(pe), repeat=params.d), repeat=N * N
    ):
        mat = OMatrix(
            params,
            tuple(
                tuple(
                    params.from_coeffs(entries[i * N + j])
                    for j in range(N)
                )
                for i in range(N)
            ),
        )
        try:
            mat.inverse()
        except NonUnitError:
            continue
        if mat == ident:
            continue
        reps.append(mat)
        if len(reps) > max_index:
            raise SizeGuardError(
                f"coset count exceeds the guard ({max_index})"
            )

    def key(g: OMatrix):
        return tuple(
            c % pe for row in g.rows for x in row for c in x.coeffs
        )

    return GroupSpec(
        "matrix-mod-p^M",
        ident,
        lambda a, b: a * b,
        lambda a: a.inverse(),
        lambda g: g.is_one_mod(e),
        reps,
        coset_key=key,
    )
