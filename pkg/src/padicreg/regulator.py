"""Regulator values: pairing bar cycles with the cocycle, the transfer-
normalized map on the full matrix group, and rational-place absolute values.

The pairing feeds each chain term (g_1, ..., g_{2s-1}) to the cocycle with
the identity in slot zero and sums with the integer coefficients.  On the
full group of invertible matrices the regulator transfers the chain to the
level-e congruence subgroup, pairs there, and divides by the subgroup
index; the division is compensated by evaluating at a bumped internal
target so the advertised precision survives.

Absolute values follow the Q_p-valued convention on rationals: at a prime
l != p the value is l^{-v_l(x)}, at p it is the unit part of x, at the
real place the sign.  Their product over all places is exactly 1 and the
extended-log sum vanishes; product_formula_check certifies both.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import factorial
from typing import Optional

from .arith import (
    QpElem,
    RingParams,
    extend_log,
    int_valuation,
    rational_to_qp,
)
from .cocycle import EvalSettings, cocycle_eval
from .errors import (
    ConvergenceError,
    ParameterError,
    SizeGuardError,
)
from .homology import BarChain, bar_differential, matrix_group_spec, transfer_T
from .matforms import OMatrix

__all__ = [
    "RegulatorConfig",
    "PlaceValue",
    "ProductFormulaReport",
    "gl_order",
    "index",
    "pair",
    "R_NF",
    "normalization_constant",
    "hat_R",
    "abs_value_Q",
    "product_formula_check",
]


@dataclass(frozen=True)
class RegulatorConfig:
    """Parameters of one regulator computation.

    The base ring is unramified, so the ramification index is pinned to 1;
    index() alone admits it symbolically.  modulus gives the defining
    polynomial coefficients when d > 1.
    """

    p: int
    M: int
    d: int = 1
    e: int = 1
    s: int = 1
    N: int = 1
    target: int = 1
    modulus: Optional[tuple] = None
    method: str = "auto"

    def __post_init__(self):
        if self.s < 1:
            raise ParameterError("s must be >= 1")
        if self.N < 1:
            raise ParameterError("N must be >= 1")
        if self.p == 2 and self.e < 2:
            raise ConvergenceError("p = 2 requires congruence level e >= 2")
        if not 1 <= self.e <= self.M:
            raise ParameterError("need 1 <= e <= M")

    def ring_params(self) -> RingParams:
        if self.modulus is not None:
            return RingParams(self.p, self.M, self.d, tuple(self.modulus))
        return RingParams(self.p, self.M, self.d)

    def settings(self, extra_target: int = 0) -> EvalSettings:
        return EvalSettings(
            e=self.e,
            s=self.s,
            target=self.target + extra_target,
            method=self.method,
        )


def gl_order(N: int, q):
    """Order of the general linear group over the q-element field."""
    out = 1
    for i in range(N):
        out = out * (q**N - q**i)
    return out


def index(N: int, p: int, d: int, e: int, eps=1):
    """Index of the level-e congruence subgroup in the invertible N x N
    matrices; the ramification index eps may be symbolic."""
    return gl_order(N, p**d) * p ** (N * N * d * (e * eps - 1))


class _MatOps:
    """Group-operation oracle for bar differentials on matrix tuples."""

    mul = staticmethod(lambda a, b: a * b)
    inv = staticmethod(lambda a: a.inverse())


def pair(config: RegulatorConfig, c: BarChain, *, check_cycle: bool = True) -> QpElem:
    """Pair a degree-(2s-1) cycle of congruent matrices with the cocycle."""
    if c.n != 2 * config.s - 1:
        raise ParameterError("chain degree must be 2s - 1")
    if check_cycle and not bar_differential(_MatOps, c).is_zero():
        raise ParameterError(
            "chain is not a cycle (pass check_cycle=False to force)"
        )
    params = config.ring_params()
    settings = config.settings()
    ident = OMatrix.identity(params, config.N)
    acc = QpElem.zero(params, config.target)
    for key, coeff in c.terms.items():
        val = cocycle_eval((ident,) + tuple(key), settings)
        acc = acc + val.mul_rational(Fraction(coeff))
    return acc.reduce_abs(config.target)


def R_NF(
    config: RegulatorConfig,
    c: BarChain,
    *,
    check_cycle: bool = True,
    max_index: int = 10**6,
) -> QpElem:
    """Regulator on chains over the full matrix group: transfer to the
    congruence subgroup, pair, divide by the index."""
    idx = index(config.N, config.p, config.d, config.e, 1)
    if idx > max_index:
        raise SizeGuardError(
            f"coset index {idx} exceeds the guard ({max_index})"
        )
    if c.n != 2 * config.s - 1:
        raise ParameterError("chain degree must be 2s - 1")
    if check_cycle and not bar_differential(_MatOps, c).is_zero():
        raise ParameterError(
            "chain is not a cycle (pass check_cycle=False to force)"
        )
    params = config.ring_params()
    spec = matrix_group_spec(params, config.N, config.e, max_index=max_index)
    if spec.index != idx:
        raise ParameterError(
            "enumerated coset count disagrees with the index formula"
        )
    transferred = transfer_T(spec, c)
    # dividing by the index costs v_p(idx) digits; evaluate that much deeper
    bump = int_valuation(idx, config.p)
    bumped = replace(config, target=config.target + bump)
    val = pair(bumped, transferred, check_cycle=False)
    return val.mul_rational(Fraction(1, idx)).reduce_abs(config.target)


def normalization_constant(s: int) -> Fraction:
    """(-1)^s (s-1)! / ((2s-2)! (2s-1)!)."""
    if s < 1:
        raise ParameterError("s must be >= 1")
    return Fraction(
        (-1) ** s * factorial(s - 1),
        factorial(2 * s - 2) * factorial(2 * s - 1),
    )


def hat_R(config: RegulatorConfig, value: QpElem) -> QpElem:
    """Normalized regulator: multiply by the exact rational constant."""
    return value.mul_rational(normalization_constant(config.s))


# ---------------------------------------------------------------------------
# Q_p-valued absolute values on the rationals


@dataclass(frozen=True)
class PlaceValue:
    place: object  # a rational prime, or "inf"
    value: object  # QpElem at a finite place; +1 or -1 at infinity


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1 if f == 2 else 2
    return True


def _frac_valuation(x: Fraction, ell: int) -> int:
    return int_valuation(x.numerator, ell) - int_valuation(x.denominator, ell)


def _place_rational(x: Fraction, ell: int, p: int) -> Fraction:
    """Exact rational value of the absolute value at a finite place."""
    v = _frac_valuation(x, ell)
    if ell == p:
        return x / Fraction(p) ** v
    return Fraction(ell) ** (-v)


def abs_value_Q(x, place, p: int, M: int = 16) -> PlaceValue:
    """Q_p-valued absolute value of a nonzero rational at one place."""
    x = Fraction(x)
    if x == 0:
        raise ParameterError("absolute value of 0 is undefined")
    if place == "inf":
        return PlaceValue("inf", 1 if x > 0 else -1)
    ell = int(place)
    if not _is_prime(ell):
        raise ParameterError("finite places are rational primes")
    params = RingParams(p, M)
    return PlaceValue(ell, rational_to_qp(_place_rational(x, ell, p), params))


def _prime_support(n: int) -> list:
    n = abs(n)
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class ProductFormulaReport:
    product: Fraction  # over the finite support, p, and infinity
    finite_product: Fraction
    sign: int
    exact: bool  # product == 1
    defect_valuation: Optional[int]  # None when exact
    log_sum: QpElem
    log_sum_valuation: object  # int, or math.inf for an exact zero


def product_formula_check(x, p: int, target: int) -> ProductFormulaReport:
    """Certify the product formula for one rational: the exact product of
    the place values is 1 and their extended logs sum to 0 mod p^target."""
    x = Fraction(x)
    if x == 0:
        raise ParameterError("the product formula needs x != 0")
    if target < 1:
        raise ParameterError("target must be >= 1")
    e0 = 2 if p == 2 else 1
    params = RingParams(p, target + e0 + 1)
    places = sorted(
        set(_prime_support(x.numerator) + _prime_support(x.denominator))
        | {p}
    )
    sign = 1 if x > 0 else -1
    finite = Fraction(1)
    log_sum = QpElem.zero(params, None)
    for ell in places:
        r = _place_rational(x, ell, p)
        finite *= r
        log_sum = log_sum + extend_log(rational_to_qp(r, params).unit)
    log_sum = log_sum + extend_log(params.from_int(sign))
    product = finite * sign
    exact = product == 1
    defect = None if exact else _frac_valuation(product - 1, p)
    return ProductFormulaReport(
        product=product,
        finite_product=finite,
        sign=sign,
        exact=exact,
        defect_valuation=defect,
        log_sum=log_sum,
        log_sum_valuation=log_sum.val_floor(),
    )
