"""Truncated power series of matrix-valued differential forms.

Working space: the free algebra on commuting scalar variables x_0..x_{2s-1}
and anticommuting symbols dx_i, with N x N matrix coefficients over O/p^M.
Series are truncated at a total x-degree cap D; all p-powers are absorbed
into the stored coefficients, and coefficients are integral by construction.

No quotient by the simplex relations (sum x_i = 1, sum dx_i = 0) is ever
taken: the weight functional :func:`phi` annihilates that ideal exactly, a
property the test suite checks against the exact simplex calculus.

Storage is one dense coefficient block per differential word: comps[S] is an
integer array of shape (P, N, N, d) over the monomial table for (2s, D),
where P counts the monomials of total degree <= D (graded order).  A sparse
(a, S) -> matrix view is available through :meth:`FormSeries.terms`.  The
multiplication kernels are vectorised over precomputed monomial-pair tables;
for moduli too large for int64 products the same code runs on object arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional

import numpy as np

from .arith import QpElem, RingElem, RingParams
from .errors import CongruenceError, NonUnitError, ParameterError

__all__ = [
    "FormKey",
    "OMatrix",
    "FormSeries",
    "form_wedge",
    "form_d",
    "phi",
    "phi_exact",
    "mat_inverse_one_plus",
    "merge_sign",
    "monomial_table",
    "pair_mul",
    "const_mul",
    "shift_mul",
    "require_one_mod",
]


class FormKey(NamedTuple):
    """Monomial key: exponent tuple a (length 2s) and dx index word S."""

    a: tuple[int, ...]
    S: tuple[int, ...]


# ---------------------------------------------------------------------------
# matrices over O/p^M


@dataclass(frozen=True)
class OMatrix:
    """Immutable N x N matrix over a fixed RingParams."""

    params: RingParams
    rows: tuple[tuple[RingElem, ...], ...]

    @property
    def N(self) -> int:
        return len(self.rows)

    def __post_init__(self):
        n = len(self.rows)
        for row in self.rows:
            if len(row) != n:
                raise ParameterError("matrix must be square")
            for x in row:
                if x.params != self.params:
                    raise ParameterError("entry parameters mismatch")

    @staticmethod
    def identity(params: RingParams, N: int) -> "OMatrix":
        one, zero = params.one(), params.zero()
        return OMatrix(
            params,
            tuple(
                tuple(one if i == j else zero for j in range(N))
                for i in range(N)
            ),
        )

    @staticmethod
    def from_ints(params: RingParams, entries) -> "OMatrix":
        """Entries given as ints (d = 1) or coefficient lists."""
        rows = []
        for row in entries:
            r = []
            for x in row:
                if isinstance(x, (list, tuple)):
                    r.append(params.from_coeffs(x))
                else:
                    r.append(params.from_int(int(x)))
            rows.append(tuple(r))
        return OMatrix(params, tuple(rows))

    def _check(self, other: "OMatrix"):
        if self.params != other.params or self.N != other.N:
            raise ParameterError("matrix shape or parameters mismatch")

    def __add__(self, other: "OMatrix") -> "OMatrix":
        self._check(other)
        return OMatrix(
            self.params,
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            ),
        )

    def __sub__(self, other: "OMatrix") -> "OMatrix":
        self._check(other)
        return OMatrix(
            self.params,
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            ),
        )

    def __neg__(self) -> "OMatrix":
        return OMatrix(
            self.params, tuple(tuple(-a for a in row) for row in self.rows)
        )

    def __mul__(self, other: "OMatrix") -> "OMatrix":
        self._check(other)
        N = self.N
        rows = []
        for i in range(N):
            row = []
            for j in range(N):
                acc = self.params.zero()
                for k in range(N):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            rows.append(tuple(row))
        return OMatrix(self.params, tuple(rows))

    def scalar(self, c) -> "OMatrix":
        """Scale by an int or RingElem."""
        return OMatrix(
            self.params, tuple(tuple(a * c for a in row) for row in self.rows)
        )

    def trace(self) -> RingElem:
        acc = self.params.zero()
        for i in range(self.N):
            acc = acc + self.rows[i][i]
        return acc

    def is_identity(self) -> bool:
        return self == OMatrix.identity(self.params, self.N)

    def is_one_mod(self, e: int) -> bool:
        """Congruence g = 1 mod p^e."""
        q = self.params.p**e
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                want = 1 if i == j else 0
                if x.coeffs[0] % q != want or any(
                    c % q for c in x.coeffs[1:]
                ):
                    return False
        return True

    def inverse(self) -> "OMatrix":
        """Gauss-Jordan over the local ring; pivots must be units."""
        N = self.N
        a = [list(row) for row in self.rows]
        b = [list(row) for row in OMatrix.identity(self.params, N).rows]
        for col in range(N):
            piv = None
            for r in range(col, N):
                if a[r][col].is_unit():
                    piv = r
                    break
            if piv is None:
                raise NonUnitError("matrix is not invertible mod p")
            a[col], a[piv] = a[piv], a[col]
            b[col], b[piv] = b[piv], b[col]
            inv = a[col][col].inverse()
            a[col] = [x * inv for x in a[col]]
            b[col] = [x * inv for x in b[col]]
            for r in range(N):
                if r != col and not a[r][col].is_zero():
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                    b[r] = [x - f * y for x, y in zip(b[r], b[col])]
        return OMatrix(self.params, tuple(tuple(row) for row in b))

    def to_array(self, dtype=object) -> np.ndarray:
        d = self.params.d
        out = np.zeros((self.N, self.N, d), dtype=dtype)
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                for l, c in enumerate(x.coeffs):
                    out[i, j, l] = c
        return out

    @staticmethod
    def from_array(params: RingParams, arr: np.ndarray) -> "OMatrix":
        N = arr.shape[0]
        return OMatrix(
            params,
            tuple(
                tuple(
                    params.from_coeffs([int(c) for c in arr[i, j]])
                    for j in range(N)
                )
                for i in range(N)
            ),
        )

    def frobenius(self) -> "OMatrix":
        return OMatrix(
            self.params,
            tuple(tuple(x.frobenius() for x in row) for row in self.rows),
        )


def mat_inverse_one_plus(X: OMatrix, e: int) -> OMatrix:
    """Inverse of 1 + p^e X by the alternating geometric series.

    Terms beyond i >= ceil(M / e) vanish mod p^M.
    """
    if e < 1:
        raise ParameterError("need e >= 1")
    params = X.params
    N = X.N
    pe = params.p**e
    steps = -(-params.M // e)
    acc = OMatrix.identity(params, N)
    power = OMatrix.identity(params, N)
    for i in range(1, steps + 1):
        power = power * X.scalar(pe)
        acc = acc + power.scalar((-1) ** i)
    return acc


# ---------------------------------------------------------------------------
# monomial tables (pure combinatorics, cached per (nvars, D))


class MonomialTable:
    """All exponent tuples of total degree <= D in nvars variables, graded."""

    def __init__(self, nvars: int, D: int):
        self.nvars, self.D = nvars, D
        exps = []
        cur = []

        def gen(i: int, left: int):
            if i == nvars - 1:
                exps.append(tuple(cur) + (left,))
                return
            for v in range(left + 1):
                cur.append(v)
                gen(i + 1, left - v)
                cur.pop()

        for total in range(D + 1):
            gen(0, total)
        self.monomials: list[tuple[int, ...]] = exps
        self.count = len(exps)
        self.exps = np.array(exps, dtype=np.int32).reshape(self.count, nvars)
        self.degree = self.exps.sum(axis=1).astype(np.int32)
        self.deg_start = np.searchsorted(self.degree, np.arange(D + 2))
        base = D + 1
        self.base = base
        powers = np.array([base**j for j in range(nvars)], dtype=np.int64)
        self.keys = (self.exps.astype(np.int64) * powers).sum(axis=1)
        self._order = np.argsort(self.keys, kind="stable")
        self._sorted_keys = self.keys[self._order]
        self.index = {m: i for i, m in enumerate(exps)}
        fact = np.empty(self.count, dtype=object)
        for i, mono in enumerate(exps):
            f = 1
            for x in mono:
                f *= math.factorial(x)
            fact[i] = f
        self.fact_prod = fact
        self._pairs = None
        self._shift_up: dict[int, tuple[np.ndarray, np.ndarray]] = {}
        self._shift_down: dict[int, tuple[np.ndarray, np.ndarray, np.ndarray]] = {}

    def lookup(self, keys: np.ndarray) -> np.ndarray:
        return self._order[np.searchsorted(self._sorted_keys, keys)]

    def pair_table(self):
        """All (i, j) with deg_i + deg_j <= D, sorted by product monomial.

        Returns (pi, pj, upos, starts, max_segment): gathering i from the
        left factor and j from the right and segment-summing by starts lands
        the products on the monomials upos.
        """
        if self._pairs is None:
            pis, pjs = [], []
            for i in range(self.count):
                nmax = int(self.deg_start[self.D - int(self.degree[i]) + 1])
                pis.append(np.full(nmax, i, dtype=np.int32))
                pjs.append(np.arange(nmax, dtype=np.int32))
            pi = np.concatenate(pis)
            pj = np.concatenate(pjs)
            kv = self.keys[pi] + self.keys[pj]
            pos = self.lookup(kv)
            o = np.argsort(pos, kind="stable")
            pi, pj, pos = pi[o], pj[o], pos[o]
            upos, starts = np.unique(pos, return_index=True)
            seg = np.diff(np.append(starts, len(pos)))
            self._pairs = (pi, pj, upos.astype(np.int64),
                           starts.astype(np.int64), int(seg.max()))
        return self._pairs

    def shift_up(self, u: int):
        """Indices realising multiplication by x_u on degrees < D."""
        if u not in self._shift_up:
            src = np.arange(int(self.deg_start[self.D]), dtype=np.int64)
            dst = self.lookup(self.keys[src] + self.base**u)
            self._shift_up[u] = (src, dst)
        return self._shift_up[u]

    def shift_down(self, u: int):
        """(src, dst, mult): sends a to a - e_u with multiplier a_u."""
        if u not in self._shift_down:
            src = np.flatnonzero(self.exps[:, u] > 0).astype(np.int64)
            dst = self.lookup(self.keys[src] - self.base**u)
            mult = self.exps[src, u].astype(np.int64)
            self._shift_down[u] = (src, dst, mult)
        return self._shift_down[u]


_TABLES: dict[tuple[int, int], MonomialTable] = {}


def monomial_table(nvars: int, D: int) -> MonomialTable:
    key = (nvars, D)
    if key not in _TABLES:
        _TABLES[key] = MonomialTable(nvars, D)
    return _TABLES[key]


# ---------------------------------------------------------------------------
# ring kernel data (per RingParams)


class _RingKernel:
    def __init__(self, params: RingParams):
        self.m = params.pM
        self.d = params.d
        # reduction rows t^k -> coefficients, exact signed ints
        self.rows = [list(r) for r in params.reduction_rows]
        self.rmax = max(1, max(abs(c) for r in self.rows for c in r))

    def dtype_for(self, N: int, seg_bound: int):
        prod_bound = N * self.d * self.d * self.rmax * (self.m - 1) ** 2
        seg = seg_bound * (self.m - 1)
        if prod_bound < 2**62 and seg < 2**62:
            return np.int64
        return object


_KERNELS: dict = {}


def _kernel(params: RingParams) -> _RingKernel:
    if params not in _KERNELS:
        _KERNELS[params] = _RingKernel(params)
    return _KERNELS[params]


def _ring_mul_nd(X: np.ndarray, Y: np.ndarray, ker: _RingKernel) -> np.ndarray:
    """Elementwise product over the last (coefficient) axis, unreduced."""
    d = ker.d
    if d == 1:
        return X * Y
    out = np.zeros(np.broadcast(X, Y).shape, dtype=X.dtype)
    for i in range(d):
        for j in range(d):
            c = X[..., i] * Y[..., j]
            row = ker.rows[i + j]
            for l in range(d):
                if row[l]:
                    out[..., l] += c * row[l]
    return out


def _mat_block_mul(X, Y, ker: _RingKernel, trace: bool):
    """Batched matrix product (C,N,N,d)x(C,N,N,d), reduced mod p^M.

    With trace=True only the trace (C,d) of the product is formed.
    """
    C, N = X.shape[0], X.shape[1]
    if trace:
        out = np.zeros((C, ker.d), dtype=X.dtype)
        for i in range(N):
            for k in range(N):
                out += _ring_mul_nd(X[:, i, k], Y[:, k, i], ker)
    else:
        out = np.zeros((C, N, N, ker.d), dtype=X.dtype)
        for i in range(N):
            for k in range(N):
                xk = X[:, i, k]
                for j in range(N):
                    out[:, i, j] += _ring_mul_nd(xk, Y[:, k, j], ker)
    return out % ker.m


def pair_mul(A, B, table: MonomialTable, params: RingParams,
             trace: bool = False):
    """Truncated polynomial product of matrix series blocks.

    A, B: (P, N, N, d).  Returns (P, N, N, d), or the trace (P, d) of the
    product when trace is set.  Exact mod p^M; degrees beyond D drop out.
    """
    ker = _kernel(params)
    pi, pj, upos, starts, _ = table.pair_table()
    P = table.count
    N, d = A.shape[1], A.shape[3]
    out = np.zeros((P, d) if trace else (P, N, N, d), dtype=A.dtype)
    CH = max(1 << 14, (1 << 21) // max(1, N * N * d))
    npairs = len(pi)
    for lo in range(0, npairs, CH):
        hi = min(lo + CH, npairs)
        Z = _mat_block_mul(A[pi[lo:hi]], B[pj[lo:hi]], ker, trace)
        sl = int(np.searchsorted(starts, lo, side="right")) - 1
        sh = int(np.searchsorted(starts, hi, side="left"))
        bnd = np.clip(starts[sl:sh] - lo, 0, None)
        seg = np.add.reduceat(Z, bnd, axis=0)
        np.add.at(out, upos[sl:sh], seg)
    return out % ker.m


def const_mul(A, E, params: RingParams, side: str = "right"):
    """Product with a constant matrix E (N,N,d): A*E or E*A per monomial."""
    ker = _kernel(params)
    N, d = A.shape[1], A.shape[3]
    out = np.zeros_like(A)
    for i in range(N):
        for k in range(N):
            for j in range(N):
                if side == "right":
                    out[:, i, j] += _ring_mul_nd(A[:, i, k], E[None, k, j], ker)
                else:
                    out[:, i, j] += _ring_mul_nd(E[None, i, k], A[:, k, j], ker)
    return out % ker.m


def shift_mul(A, u: int, table: MonomialTable):
    """Multiply a series block by the variable x_u (degree cap drops tails)."""
    src, dst = table.shift_up(u)
    out = np.zeros_like(A)
    out[dst] = A[src]
    return out


def merge_sign(S1: Iterable[int], S2: Iterable[int]) -> int:
    """Sign of sorting dx_{S1} ^ dx_{S2} into increasing order."""
    s = sum(1 for x in S1 for y in S2 if y < x)
    return -1 if s % 2 else 1


# ---------------------------------------------------------------------------
# form series


class FormSeries:
    """Truncated matrix form series; see the module docstring.

    Fields: params, s, N, D, optional congruence level e, and comps mapping
    each dx word S (sorted tuple) to a (P, N, N, d) coefficient block.
    """

    def __init__(self, params: RingParams, s: int, N: int, D: int,
                 comps: Optional[dict] = None, e: Optional[int] = None):
        if s < 1 or N < 1 or D < 0:
            raise ParameterError("need s >= 1, N >= 1, D >= 0")
        self.params = params
        self.s = s
        self.N = N
        self.D = D
        self.e = e
        self.nvars = 2 * s
        self.table = monomial_table(self.nvars, D)
        self.comps: dict[tuple[int, ...], np.ndarray] = comps or {}

    # -- constructors ---------------------------------------------------

    def dtype(self):
        return _kernel(self.params).dtype_for(self.N, self.table.count)

    def _zeros(self) -> np.ndarray:
        return np.zeros(
            (self.table.count, self.N, self.N, self.params.d),
            dtype=self.dtype(),
        )

    @staticmethod
    def zero(params: RingParams, s: int, N: int, D: int,
             e: Optional[int] = None) -> "FormSeries":
        return FormSeries(params, s, N, D, {}, e)

    @staticmethod
    def from_terms(params: RingParams, s: int, N: int, D: int,
                   terms: dict, e: Optional[int] = None) -> "FormSeries":
        """Build from a sparse {(a, S) -> OMatrix} map."""
        f = FormSeries(params, s, N, D, {}, e)
        for (a, S), mat in terms.items():
            a, S = tuple(a), tuple(S)
            if len(a) != f.nvars or any(x < 0 for x in a):
                raise ParameterError("exponent tuple must have 2s entries")
            if sum(a) > D:
                raise ParameterError("monomial degree exceeds the cap D")
            if list(S) != sorted(set(S)) or (
                S and (S[0] < 0 or S[-1] >= f.nvars)
            ):
                raise ParameterError("S must be increasing within range")
            if mat.params != params or mat.N != N:
                raise ParameterError("coefficient matrix mismatch")
            block = f.comps.get(S)
            if block is None:
                block = f._zeros()
                f.comps[S] = block
            idx = f.table.index[a]
            block[idx] = (block[idx] + mat.to_array()) % params.pM
        f._prune()
        return f

    def _prune(self):
        dead = [S for S, b in self.comps.items() if not np.any(b)]
        for S in dead:
            del self.comps[S]

    def copy(self) -> "FormSeries":
        return FormSeries(
            self.params, self.s, self.N, self.D,
            {S: b.copy() for S, b in self.comps.items()}, self.e,
        )

    # -- views ------------------------------------------------------------

    def terms(self) -> dict[FormKey, OMatrix]:
        out = {}
        for S in sorted(self.comps):
            block = self.comps[S]
            for idx in np.flatnonzero(block.reshape(self.table.count, -1)
                                      .any(axis=1)):
                a = self.table.monomials[int(idx)]
                out[FormKey(a, S)] = OMatrix.from_array(
                    self.params, block[int(idx)]
                )
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormSeries):
            return NotImplemented
        if (self.params, self.s, self.N, self.D) != (
            other.params, other.s, other.N, other.D
        ):
            return False
        keys = set(self.comps) | set(other.comps)
        for S in keys:
            a = self.comps.get(S)
            b = other.comps.get(S)
            if a is None:
                if np.any(b):
                    return False
            elif b is None:
                if np.any(a):
                    return False
            elif not np.array_equal(a, b):
                return False
        return True

    def _check(self, other: "FormSeries"):
        if (self.params, self.s, self.N, self.D) != (
            other.params, other.s, other.N, other.D
        ):
            raise ParameterError("form series parameters mismatch")

    # -- linear structure ---------------------------------------------

    def __add__(self, other: "FormSeries") -> "FormSeries":
        self._check(other)
        out = {S: b.copy() for S, b in self.comps.items()}
        m = self.params.pM
        for S, b in other.comps.items():
            out[S] = (out[S] + b) % m if S in out else b.copy()
        f = FormSeries(self.params, self.s, self.N, self.D, out, self.e)
        f._prune()
        return f

    def __neg__(self) -> "FormSeries":
        m = self.params.pM
        return FormSeries(
            self.params, self.s, self.N, self.D,
            {S: (-b) % m for S, b in self.comps.items()}, self.e,
        )

    def __sub__(self, other: "FormSeries") -> "FormSeries":
        return self + (-other)

    def scale_int(self, c: int) -> "FormSeries":
        m = self.params.pM
        f = FormSeries(
            self.params, self.s, self.N, self.D,
            {S: (b * (c % m)) % m for S, b in self.comps.items()}, self.e,
        )
        f._prune()
        return f

    # -- graded products -------------------------------------------------

    def wedge(self, other: "FormSeries") -> "FormSeries":
        """Graded product; overlapping dx words die, signs from merging."""
        self._check(other)
        out: dict[tuple[int, ...], np.ndarray] = {}
        m = self.params.pM
        for S1 in sorted(self.comps):
            A = self.comps[S1]
            s1 = set(S1)
            for S2 in sorted(other.comps):
                if s1 & set(S2):
                    continue
                B = other.comps[S2]
                sign = merge_sign(S1, S2)
                merged = tuple(sorted(S1 + S2))
                # constant factors skip the pair table
                if not np.any(B[1:]):
                    prod = const_mul(A, B[0], self.params, side="right")
                elif not np.any(A[1:]):
                    prod = const_mul(B, A[0], self.params, side="left")
                else:
                    prod = pair_mul(A, B, self.table, self.params)
                if sign < 0:
                    prod = (-prod) % m
                if merged in out:
                    out[merged] = (out[merged] + prod) % m
                else:
                    out[merged] = prod
        f = FormSeries(self.params, self.s, self.N, self.D, out, self.e)
        f._prune()
        return f

    def d(self) -> "FormSeries":
        """Exterior derivative with Leibniz signs from sorting dx_j in."""
        out: dict[tuple[int, ...], np.ndarray] = {}
        m = self.params.pM
        for S in sorted(self.comps):
            A = self.comps[S]
            for j in range(self.nvars):
                if j in S:
                    continue
                src, dst, mult = self.table.shift_down(j)
                sign = (-1) ** sum(1 for k in S if k < j)
                merged = tuple(sorted(S + (j,)))
                block = out.get(merged)
                if block is None:
                    block = np.zeros_like(A)
                    out[merged] = block
                contrib = A[src] * (sign * mult)[:, None, None, None]
                np.add.at(block, dst, contrib)
        for S in out:
            out[S] %= m
        f = FormSeries(self.params, self.s, self.N, self.D, out, self.e)
        f._prune()
        return f


def form_wedge(f: FormSeries, g: FormSeries) -> FormSeries:
    return f.wedge(g)


def form_d(f: FormSeries) -> FormSeries:
    return f.d()


# ---------------------------------------------------------------------------
# the weight functional


def _phi_components(f: FormSeries):
    """Yield (u, degree, weighted coefficient sums) for phi's summation.

    For each dx word S of full degree 2s-1 with omitted index u and each
    total degree block, the traces are weighted by a! and summed; division
    by (|a| + 2s - 1)! and the sign (-1)^u are left to the caller.
    """
    table = f.table
    m = f.params.pM
    full = set(range(f.nvars))
    for S in sorted(f.comps):
        if len(S) != 2 * f.s - 1:
            raise ParameterError("phi needs pure differential degree 2s-1")
        u = (full - set(S)).pop()
        block = f.comps[S]
        tr = block[:, 0, 0, :].copy()
        for i in range(1, f.N):
            tr = tr + block[:, i, i, :]
        fact = table.fact_prod
        for deg in range(f.D + 1):
            lo, hi = int(table.deg_start[deg]), int(table.deg_start[deg + 1])
            if not np.any(tr[lo:hi]):
                continue
            w = tr[lo:hi].astype(object) * fact[lo:hi, None]
            yield u, deg, w.sum(axis=0)


def phi(f: FormSeries) -> QpElem:
    """Weight functional: sum over monomials of
    (-1)^u Trace(coefficient) a! / (|a| + 2s - 1)!.

    The p-powers of the original series are already inside the stored
    coefficients; factorial ratios enter as exact rationals.
    """
    params = f.params
    total = QpElem.zero(params, None)
    for u, deg, wsum in _phi_components(f):
        coeffs = tuple(int(c) % params.pM for c in wsum)
        val = QpElem.from_ring(RingElem(params, coeffs))
        ratio = Fraction((-1) ** u, math.factorial(deg + 2 * f.s - 1))
        total = total + val.mul_rational(ratio)
    return total


def phi_exact(f: FormSeries) -> tuple[Fraction, ...]:
    """phi evaluated exactly over the integer representatives.

    Returns one Fraction per coefficient coordinate of O; useful to certify
    identities that hold exactly for integral inputs.
    """
    out = [Fraction(0)] * f.params.d
    for u, deg, wsum in _phi_components(f):
        ratio = Fraction((-1) ** u, math.factorial(deg + 2 * f.s - 1))
        for l in range(f.params.d):
            out[l] += ratio * int(wsum[l])
    return tuple(out)


# ---------------------------------------------------------------------------
# congruence helper shared by the cocycle layer


def require_one_mod(mat: OMatrix, e: int):
    if e < 1 or e > mat.params.M:
        raise ParameterError("congruence level e must satisfy 1 <= e <= M")
    if not mat.is_one_mod(e):
        raise CongruenceError(f"matrix is not congruent to 1 mod p^{e}")
