"""Finite-precision arithmetic in unramified p-adic coefficient rings.

A :class:`RingParams` fixes a prime ``p``, a relative precision ``M``, and an
unramified extension of degree ``d`` presented as ``Z_p[t]/(modulus)`` with a
monic integer ``modulus`` that is irreducible mod ``p``.  Elements of the
quotient ``O/p^M`` are :class:`RingElem`; field elements with tracked
valuation and precision are :class:`QpElem`.

The module also provides the combinatorial valuation bounds used to truncate
power series (:func:`factorial_valuation`, :func:`term_valuation_bound`,
:func:`truncation_degree`), the Iwasawa-style logarithm on one-units
(:func:`padic_log`) and its extension to all units (:func:`extend_log`), and
the lifted Frobenius automorphism (:func:`frobenius`).

Valuations are normalised so that ``v(p) = 1``; in the unramified case the
valuation of a polynomial representative is the minimum of the coefficient
valuations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import (
    ConvergenceError,
    NonUnitError,
    ParameterError,
    PrecisionError,
)

__all__ = [
    "RingParams",
    "RingElem",
    "QpElem",
    "digit_sum",
    "factorial_valuation",
    "term_valuation_bound",
    "truncation_degree",
    "padic_log",
    "extend_log",
    "frobenius",
    "teichmuller",
    "rational_to_qp",
    "int_valuation",
]


# ---------------------------------------------------------------------------
# small integer helpers


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def int_valuation(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def digit_sum(l: int, p: int) -> int:
    """Sum of the base-p digits of l >= 0."""
    s = 0
    while l:
        s += l % p
        l //= p
    return s


def factorial_valuation(l: int, p: int) -> int:
    """v_p(l!) computed as sum of floor(l / p^i).

    Agrees with the digit-sum form (l - digit_sum(l, p)) / (p - 1).
    """
    if l < 0:
        raise ValueError("factorial of negative integer")
    v = 0
    q = p
    while q <= l:
        v += l // q
        q *= p
    return v


def _ilog(p: int, n: int) -> int:
    """floor(log_p(n)) for n >= 1, exact."""
    e, q = 0, p
    while q <= n:
        e += 1
        q *= p
    return e


# ---------------------------------------------------------------------------
# F_p[t] helpers (only used to certify the modulus)


def _fp_polmul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _fp_polmod(a: list[int], f: list[int], p: int) -> list[int]:
    # f monic
    a = a[:]
    while len(a) >= len(f):
        c = a[-1] % p
        if c:
            off = len(a) - len(f)
            for j, y in enumerate(f):
                a[off + j] = (a[off + j] - c * y) % p
        a.pop()
    if not a:
        a = [0]
    return a


def _fp_polgcd(a: list[int], b: list[int], p: int) -> list[int]:
    def is_zero(x):
        return all(c % p == 0 for c in x)

    while not is_zero(b):
        lead = b[-1] % p
        inv = pow(lead, p - 2, p)
        bm = [(c * inv) % p for c in b]
        a, b = b, _fp_polmod(a, bm, p)
        while len(b) > 1 and b[-1] % p == 0:
            b.pop()
    while len(a) > 1 and a[-1] % p == 0:
        a.pop()
    return a


def _fp_powmod_x(q: int, f: list[int], p: int) -> list[int]:
    """x^q mod (f, p) by square-and-multiply."""
    result = [0, 1] if len(f) > 2 else _fp_polmod([0, 1], f, p)
    result = _fp_polmod(result, f, p)
    base = result[:]
    out = [1]
    e = q
    while e:
        if e & 1:
            out = _fp_polmod(_fp_polmul(out, base, p), f, p)
        base = _fp_polmod(_fp_polmul(base, base, p), f, p)
        e >>= 1
    return out


def _is_irreducible_mod_p(modulus: Sequence[int], p: int) -> bool:
    """Irreducibility of a monic degree-d polynomial over F_p.

    f is reducible iff it shares a root with some F_{p^k}, k <= d/2, i.e.
    gcd(x^{p^k} - x, f) != 1 for some such k.
    """
    f = [c % p for c in modulus]
    d = len(f) - 1
    for k in range(1, d // 2 + 1):
        g = _fp_powmod_x(p**k, f, p)
        g = g + [0] * (2 - len(g))
        g = g[:]
        g[1] = (g[1] - 1) % p
        while len(g) > 1 and g[-1] == 0:
            g.pop()
        gcd = _fp_polgcd(f, g, p)
        if len(gcd) > 1:
            return False
    return True


# ---------------------------------------------------------------------------
# ring parameters


class RingParams:
    """Parameters of the coefficient ring O/p^M for an unramified O.

    p: prime; M: relative precision in digits; d: extension degree;
    modulus: monic integer polynomial of degree d, little-endian coefficient
    tuple including the leading 1, irreducible mod p.  For d == 1 the modulus
    is implicit.
    """

    def __init__(
        self,
        p: int,
        M: int,
        d: int = 1,
        modulus: Optional[Sequence[int]] = None,
    ):
        if not _is_prime(p):
            raise ParameterError(f"p = {p} is not prime")
        if M < 1:
            raise ParameterError("M must be >= 1")
        if d < 1:
            raise ParameterError("d must be >= 1")
        if d == 1:
            modulus = (0, 1)
        elif modulus is None:
            raise ParameterError("degree d >= 2 requires an explicit modulus")
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != d + 1 or modulus[-1] != 1:
            raise ParameterError("modulus must be monic of degree d")
        if d >= 2 and not _is_irreducible_mod_p(modulus, p):
            raise ParameterError("modulus is reducible mod p")
        self.p = p
        self.M = M
        self.d = d
        self.modulus = modulus
        self.pM = p**M
        # rows: coefficients of t^k reduced mod modulus, k = 0 .. 2d-2,
        # exact integers (monic reduction introduces no denominators)
        self.reduction_rows = self._reduction_rows()
        self._frob_matrix: Optional[tuple[tuple[int, ...], ...]] = None

    def _reduction_rows(self) -> tuple[tuple[int, ...], ...]:
        d = self.d
        rows = []
        for k in range(d):
            rows.append(tuple(1 if j == k else 0 for j in range(d)))
        for k in range(d, 2 * d - 1):
            prev = rows[k - 1]
            shifted = [0] + list(prev)
            top = shifted.pop()
            row = [shifted[j] - top * self.modulus[j] for j in range(d)]
            rows.append(tuple(row))
        return tuple(rows)

    def _key(self):
        return (self.p, self.M, self.d, self.modulus)

    def __eq__(self, other):
        return isinstance(other, RingParams) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.d == 1:
            return f"RingParams(p={self.p}, M={self.M})"
        return (
            f"RingParams(p={self.p}, M={self.M}, d={self.d}, "
            f"modulus={self.modulus})"
        )

    def with_precision(self, M: int) -> "RingParams":
        return RingParams(self.p, M, self.d, self.modulus if self.d > 1 else None)

    def one(self) -> "RingElem":
        return RingElem(self, (1,) + (0,) * (self.d - 1))

    def zero(self) -> "RingElem":
        return RingElem(self, (0,) * self.d)

    def from_int(self, n: int) -> "RingElem":
        return RingElem(self, (n % self.pM,) + (0,) * (self.d - 1))

    def generator(self) -> "RingElem":
        if self.d == 1:
            return self.zero()
        return RingElem(self, tuple(1 if j == 1 else 0 for j in range(self.d)))

    def from_coeffs(self, coeffs: Sequence[int]) -> "RingElem":
        cs = [int(c) % self.pM for c in coeffs]
        if len(cs) > self.d:
            raise ParameterError("too many coefficients for degree d")
        cs += [0] * (self.d - len(cs))
        return RingElem(self, tuple(cs))

    def frobenius_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Columns are the images of the basis 1, t, ..., t^{d-1}."""
        if self.d == 1:
            raise ParameterError("Frobenius is trivial for d = 1")
        if self._frob_matrix is None:
            root = _frobenius_root(self)
            cols = []
            acc = self.one()
            for _ in range(self.d):
                cols.append(acc.coeffs)
                acc = acc * root
            # store column-major: matrix[j] = image of t^j
            self._frob_matrix = tuple(cols)
        return self._frob_matrix


# ---------------------------------------------------------------------------
# ring elements


@dataclass(frozen=True)
class RingElem:
    """Element of O/p^M stored as d little-endian coefficients in [0, p^M)."""

    params: RingParams
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.params.d:
            raise ParameterError("coefficient count must equal d")

    def _check(self, other: "RingElem"):
        if self.params != other.params:
            raise ParameterError("mismatched ring parameters")

    def __add__(self, other: "RingElem") -> "RingElem":
        self._check(other)
        m = self.params.pM
        return RingElem(
            self.params,
            tuple((a + b) % m for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __sub__(self, other: "RingElem") -> "RingElem":
        self._check(other)
        m = self.params.pM
        return RingElem(
            self.params,
            tuple((a - b) % m for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __neg__(self) -> "RingElem":
        m = self.params.pM
        return RingElem(self.params, tuple((-a) % m for a in self.coeffs))

    def __mul__(self, other: Union["RingElem", int]) -> "RingElem":
        if isinstance(other, int):
            m = self.params.pM
            return RingElem(
                self.params, tuple((a * other) % m for a in self.coeffs)
            )
        self._check(other)
        d = self.params.d
        m = self.params.pM
        if d == 1:
            return RingElem(self.params, ((self.coeffs[0] * other.coeffs[0]) % m,))
        conv = [0] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    conv[i + j] += a * b
        rows = self.params.reduction_rows
        out = [0] * d
        for k, c in enumerate(conv):
            if c:
                row = rows[k]
                for j in range(d):
                    out[j] += c * row[j]
        return RingElem(self.params, tuple(c % m for c in out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RingElem":
        if n < 0:
            return self.inverse() ** (-n)
        out = self.params.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def valuation(self) -> int:
        """min coefficient valuation; returns M for the zero residue."""
        p, M = self.params.p, self.params.M
        best = M
        for c in self.coeffs:
            if c:
                v = int_valuation(c, p)
                if v < best:
                    best = v
                    if best == 0:
                        break
        return best

    def is_unit(self) -> bool:
        return any(c % self.params.p for c in self.coeffs)

    def divide_p_power(self, a: int) -> "RingElem":
        """Exact division by p^a; the caller tracks the precision loss."""
        if a == 0:
            return self
        q = self.params.p**a
        if any(c % q for c in self.coeffs):
            raise PrecisionError("coefficients not divisible by p^a")
        return RingElem(self.params, tuple(c // q for c in self.coeffs))

    def reduce_mod_ppow(self, k: int) -> "RingElem":
        """Canonical representative mod p^k (0 <= k <= M), zero-extended."""
        q = self.params.p ** max(0, min(k, self.params.M))
        return RingElem(self.params, tuple(c % q for c in self.coeffs))

    def inverse(self) -> "RingElem":
        """Unit inverse: mod-p inverse by extended Euclid, then Hensel."""
        if not self.is_unit():
            raise NonUnitError("element is not a unit")
        p = self.params.p
        d = self.params.d
        if d == 1:
            x0 = pow(self.coeffs[0] % p, p - 2, p)
            inv = RingElem(self.params, (x0,))
        else:
            inv = RingElem(self.params, _fp_inverse(self.coeffs, self.params))
        # Newton: x -> x (2 - a x), doubles correct digits each step
        two = self.params.from_int(2)
        k = 1
        while k < self.params.M:
            inv = inv * (two - self * inv)
            k *= 2
        return inv

    def frobenius(self) -> "RingElem":
        mat = self.params.frobenius_matrix()
        d, m = self.params.d, self.params.pM
        out = [0] * d
        for j, c in enumerate(self.coeffs):
            if c:
                col = mat[j]
                for i in range(d):
                    out[i] += c * col[i]
        return RingElem(self.params, tuple(c % m for c in out))

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __repr__(self):
        if self.params.d == 1:
            return f"RingElem({self.coeffs[0]} mod {self.params.p}^{self.params.M})"
        return f"RingElem({list(self.coeffs)} mod {self.params.p}^{self.params.M})"


def _fp_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    """Polynomial division over F_p; b must be nonzero."""
    b = [c % p for c in b]
    while len(b) > 1 and b[-1] == 0:
        b.pop()
    inv = pow(b[-1], p - 2, p)
    r = [c % p for c in a]
    q = [0] * max(1, len(r) - len(b) + 1)
    for off in range(len(r) - len(b), -1, -1):
        c = (r[off + len(b) - 1] * inv) % p
        if c:
            q[off] = c
            for j in range(len(b)):
                r[off + j] = (r[off + j] - c * b[j]) % p
    r = r[: len(b) - 1] or [0]
    while len(r) > 1 and r[-1] == 0:
        r.pop()
    return q, r


def _fp_inverse(coeffs: Sequence[int], params: RingParams) -> tuple[int, ...]:
    """Inverse mod (p, modulus) by extended Euclid in F_p[t]."""
    p, d = params.p, params.d
    r0, s0 = [c % p for c in params.modulus], [0]
    r1, s1 = [c % p for c in coeffs], [1]
    while any(r1):
        q, r = _fp_divmod(r0, r1, p)
        qs = _fp_polmul(q, s1, p)
        s = [0] * max(len(s0), len(qs))
        for i, c in enumerate(s0):
            s[i] = c % p
        for i, c in enumerate(qs):
            s[i] = (s[i] - c) % p
        r0, s0, r1, s1 = r1, s1, r, s
    while len(r0) > 1 and r0[-1] == 0:
        r0.pop()
    if len(r0) != 1 or r0[0] % p == 0:
        raise NonUnitError("element is not invertible mod p")
    c = pow(r0[0], p - 2, p)
    out = [(x * c) % p for x in s0]
    out = out[:d] + [0] * max(0, d - len(out))
    return tuple(out)


def _frobenius_root(params: RingParams) -> RingElem:
    """Hensel lift of the root of the modulus congruent to t^p mod p."""
    f = params.modulus
    d = params.d
    one = params.one()

    def poly_eval(coeffs, x):
        acc = params.zero()
        for c in reversed(coeffs):
            acc = acc * x + params.from_int(c)
        return acc

    fprime = tuple(k * f[k] for k in range(1, d + 1))
    r = params.generator() ** params.p
    steps = max(1, math.ceil(math.log2(params.M))) + 2
    for _ in range(steps):
        fr = poly_eval(f, r)
        if fr.is_zero():
            break
        r = r - fr * poly_eval(fprime, r).inverse()
    if not poly_eval(f, r).is_zero():
        raise ParameterError("Frobenius root lift failed to converge")
    return r


def frobenius(x: Union[RingElem, "QpElem"]) -> Union[RingElem, "QpElem"]:
    """Lifted Frobenius automorphism; errors out for d = 1 (trivial)."""
    params = x.params
    if params.d == 1:
        raise ParameterError("Frobenius is trivial for d = 1")
    if isinstance(x, RingElem):
        return x.frobenius()
    if x.unit is None:
        return x
    return QpElem(params, x.v, x.unit.frobenius().reduce_mod_ppow(x.prec), x.prec, None)


def teichmuller(c: RingElem) -> RingElem:
    """The (p^d - 1)-st root of unity congruent to the unit c mod p."""
    if not c.is_unit():
        raise NonUnitError("Teichmuller lift needs a unit")
    q = c.params.p**c.params.d
    x = c
    for _ in range(c.params.M + 1):
        x = x**q
    return x


# ---------------------------------------------------------------------------
# valued elements


@dataclass(frozen=True)
class QpElem:
    """p-adic number with tracked valuation and precision.

    Nonzero: value = p^v * unit, unit a unit of O/p^M canonical mod p^prec,
    known to relative precision prec (absolute precision v + prec).

    Zero: unit is None; floor is an absolute-precision bound (value = 0 mod
    p^floor), with floor None meaning exactly zero.
    """

    params: RingParams
    v: int
    unit: Optional[RingElem]
    prec: Optional[int]
    floor: Optional[int] = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(params: RingParams, floor: Optional[int] = None) -> "QpElem":
        return QpElem(params, 0, None, None, floor)

    @staticmethod
    def from_ring(x: RingElem) -> "QpElem":
        """Interpret a residue known to absolute precision M."""
        M = x.params.M
        w = x.valuation()
        if w >= M:
            return QpElem.zero(x.params, M)
        unit = x.divide_p_power(w).reduce_mod_ppow(M - w)
        return QpElem(x.params, w, unit, M - w, None)

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return self.unit is None

    def abs_prec(self) -> Union[int, float]:
        if self.unit is None:
            return math.inf if self.floor is None else self.floor
        return self.v + self.prec

    def val_floor(self) -> Union[int, float]:
        """Exact valuation if visible, else the certified lower bound."""
        if self.unit is None:
            return math.inf if self.floor is None else self.floor
        return self.v

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "QpElem"):
        if self.params != other.params:
            raise ParameterError("mismatched ring parameters")

    def __add__(self, other: "QpElem") -> "QpElem":
        self._check(other)
        a, b = self, other
        if a.unit is None and b.unit is None:
            if a.floor is None:
                return b
            if b.floor is None:
                return a
            return QpElem.zero(a.params, min(a.floor, b.floor))
        if a.unit is None:
            a, b = b, a
        if b.unit is None:  # a nonzero, b a zero with floor
            if b.floor is None:
                return a
            if a.v >= b.floor:
                return QpElem.zero(a.params, b.floor)
            prec = min(a.prec, b.floor - a.v)
            return QpElem(a.params, a.v, a.unit.reduce_mod_ppow(prec), prec, None)
        M = a.params.M
        vm = min(a.v, b.v)
        absp = min(a.v + a.prec, b.v + b.prec)
        pa = a.params.p ** (a.v - vm)
        pb = b.params.p ** (b.v - vm)
        s = a.unit * pa + b.unit * pb
        w = s.valuation()
        if w >= absp - vm:
            return QpElem.zero(a.params, absp)
        unit = s.divide_p_power(w)
        v = vm + w
        prec = min(absp - v, M)
        return QpElem(a.params, v, unit.reduce_mod_ppow(prec), prec, None)

    def __neg__(self) -> "QpElem":
        if self.unit is None:
            return self
        return QpElem(
            self.params,
            self.v,
            (-self.unit).reduce_mod_ppow(self.prec),
            self.prec,
            None,
        )

    def __sub__(self, other: "QpElem") -> "QpElem":
        return self + (-other)

    def __mul__(self, other: "QpElem") -> "QpElem":
        self._check(other)
        a, b = self, other
        if a.unit is None or b.unit is None:
            if (a.unit is None and a.floor is None) or (
                b.unit is None and b.floor is None
            ):
                return QpElem.zero(a.params, None)
            if a.unit is None and b.unit is None:
                return QpElem.zero(a.params, a.floor + b.floor)
            z, nz = (a, b) if a.unit is None else (b, a)
            return QpElem.zero(a.params, z.floor + nz.v)
        prec = min(a.prec, b.prec)
        unit = (a.unit * b.unit).reduce_mod_ppow(prec)
        return QpElem(a.params, a.v + b.v, unit, prec, None)

    def inverse(self) -> "QpElem":
        if self.unit is None:
            raise NonUnitError("cannot invert (a bound on) zero")
        inv = self.unit.inverse().reduce_mod_ppow(self.prec)
        return QpElem(self.params, -self.v, inv, self.prec, None)

    def mul_rational(self, q: Union[Fraction, int]) -> "QpElem":
        """Multiply by an exact rational (exact unit scaling plus a shift)."""
        q = Fraction(q)
        if q == 0:
            return QpElem.zero(self.params, None)
        if self.unit is None:
            if self.floor is None:
                return self
            p = self.params.p
            shift = int_valuation(q.numerator, p) - int_valuation(q.denominator, p)
            return QpElem.zero(self.params, self.floor + shift)
        p = self.params.p
        vn = int_valuation(q.numerator, p)
        vd = int_valuation(q.denominator, p)
        n = q.numerator // p**vn
        dd = q.denominator // p**vd
        unit = self.unit * self.params.from_int(n)
        unit = unit * self.params.from_int(dd).inverse()
        return QpElem(
            self.params,
            self.v + vn - vd,
            unit.reduce_mod_ppow(self.prec),
            self.prec,
            None,
        )

    # -- precision management ------------------------------------------

    def reduce_abs(self, k: int) -> "QpElem":
        """Forget everything beyond absolute precision k."""
        if self.unit is None:
            f = k if self.floor is None else min(self.floor, k)
            return QpElem.zero(self.params, f)
        if self.v >= k:
            return QpElem.zero(self.params, k)
        prec = min(self.prec, k - self.v)
        return QpElem(self.params, self.v, self.unit.reduce_mod_ppow(prec), prec, None)

    def equal_mod(self, other: "QpElem", k: int) -> bool:
        return (self - other).val_floor() >= k

    def residue_coeffs(self, k: int) -> tuple[int, ...]:
        """Canonical coefficients of the value mod p^k (requires v >= 0)."""
        if self.unit is None:
            if self.floor is not None and self.floor < k:
                raise PrecisionError("zero bound below requested precision")
            return (0,) * self.params.d
        if self.v < 0:
            raise PrecisionError("negative valuation has no integral residue")
        if self.v + self.prec < k:
            raise PrecisionError("insufficient absolute precision")
        q = self.params.p**k
        shift = self.params.p**self.v
        return tuple((c * shift) % q for c in self.unit.coeffs)

    # -- presentation ---------------------------------------------------

    def __str__(self):
        p = self.params.p
        if self.unit is None:
            if self.floor is None:
                return "0 (exact)"
            return f"0 (mod {p}^{self.floor})"
        if self.params.d == 1:
            u = str(self.unit.coeffs[0])
        else:
            u = "[" + ", ".join(str(c) for c in self.unit.coeffs) + "]"
        return f"{p}^{self.v} * {u} (mod {p}^{self.v + self.prec})"

    def digits(self) -> list[list[int]]:
        """Base-p digits of the unit part, one little-endian list per coord."""
        if self.unit is None:
            return [[] for _ in range(self.params.d)]
        p = self.params.p
        out = []
        for c in self.unit.coeffs:
            ds = []
            x = c
            for _ in range(self.prec):
                ds.append(x % p)
                x //= p
            out.append(ds)
        return out

    def to_json(self) -> dict:
        if self.unit is None:
            return {
                "zero": True,
                "precision_floor": self.floor,
                "repr": str(self),
            }
        return {
            "zero": False,
            "valuation": self.v,
            "unit": self.unit.to_strings(),
            "relative_precision": self.prec,
            "digits": self.digits(),
            "repr": str(self),
        }


# ---------------------------------------------------------------------------
# rational embeddings


def rational_to_qp(q: Union[Fraction, int], params: RingParams) -> QpElem:
    """Exact image of a rational with p-free denominator part made explicit."""
    q = Fraction(q)
    if q == 0:
        return QpElem.zero(params, None)
    p = params.p
    vn = int_valuation(q.numerator, p)
    vd = int_valuation(q.denominator, p)
    n = q.numerator // p**vn
    dd = q.denominator // p**vd
    unit = params.from_int(n) * params.from_int(dd).inverse()
    return QpElem(params, vn - vd, unit, params.M, None)


# ---------------------------------------------------------------------------
# truncation bounds


def term_valuation_bound(deg: int, e: int, s: int, p: int) -> Fraction:
    """Lower bound (e - 1/(p-1)) * deg - (2s-1)/(p-1) for the valuation of a
    degree-deg term after integration against the weight factorials.

    Positive slope requires e >= 1 for odd p and e >= 2 for p = 2.
    """
    if s < 1 or e < 1:
        raise ParameterError("need s >= 1 and e >= 1")
    if p == 2 and e < 2:
        raise ConvergenceError("p = 2 requires e >= 2")
    if e <= Fraction(1, p - 1):
        raise ConvergenceError("series does not converge for these (p, e)")
    return (e - Fraction(1, p - 1)) * deg - Fraction(2 * s - 1, p - 1)


def truncation_degree(target: int, e: int, s: int, p: int) -> int:
    """Smallest D with term_valuation_bound(D) >= target, so every monomial
    of total degree >= D contributes 0 mod p^target."""
    D = 0
    while term_valuation_bound(D, e, s, p) < target:
        D += 1
    return D


# ---------------------------------------------------------------------------
# logarithms


def padic_log(u: RingElem, e: Optional[int] = None) -> QpElem:
    """log on one-units via the alternating series in z = u - 1.

    Requires u = 1 mod p^e with e >= 1 (odd p) or e >= 2 (p = 2).  Dividing
    the i-th term by i costs v_p(i) digits of absolute precision; the
    tracked precision of the result accounts for that, so callers wanting
    the value mod p^k must supply M at least k plus the series loss.
    """
    params = u.params
    p, M = params.p, params.M
    z = u - params.one()
    w = z.valuation()
    emin = 2 if p == 2 else 1
    if e is not None and w < e:
        raise ConvergenceError(f"argument is not 1 mod p^{e}")
    if w < emin:
        raise ConvergenceError(
            f"log series needs argument = 1 mod p^{emin} for p = {p}"
        )
    if z.is_zero():
        return QpElem.zero(params, M)
    total = QpElem.zero(params, None)
    zi = params.one()
    i = 1
    while True:
        zi = zi * z
        term = QpElem.from_ring(zi).mul_rational(Fraction((-1) ** (i + 1), i))
        total = total + term
        i += 1
        if i * w - _ilog(p, i) >= M:
            break
    return total


def extend_log(u: RingElem) -> QpElem:
    """log extended to all units: log(u^k)/k with k = (p^d - 1) p^{e0}.

    Torsion (Teichmuller) parts are killed; the value has absolute precision
    M - e0 where e0 = 1 for odd p and 2 for p = 2.
    """
    params = u.params
    if not u.is_unit():
        raise NonUnitError("extend_log is defined on units only")
    e0 = 2 if params.p == 2 else 1
    k = (params.p**params.d - 1) * params.p**e0
    return padic_log(u**k).mul_rational(Fraction(1, k))
