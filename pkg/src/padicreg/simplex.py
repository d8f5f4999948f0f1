"""Exact rational calculus of polynomial differential forms on simplices.

The standard n-simplex is the set of (x_0, ..., x_n) with x_j >= 0 and
sum x_j = 1.  A :class:`RationalForm` is a finite sum of monomial forms
``c * x^a dx_S`` with exact :class:`fractions.Fraction` coefficients, stored
sparsely and keyed by the exponent tuple ``a`` (length n+1) and the strictly
increasing index tuple ``S``.

Two independent evaluation routes are provided for top-degree integrals:

* :func:`integrate_monomial` -- the closed form
  ``(-1)^v * a_0! ... a_n! / (|a| + n)!`` for ``x^a dx_0 ^ ... ^ dx_v-hat
  ^ ... ^ dx_n``;
* :func:`iterated_integral_oracle` -- literal nested one-variable
  integration after eliminating one coordinate through ``x_i = 1 - sum of
  the others``, which knows nothing about the closed form.

Everything here is exact; no p-adics enter.  The module also supplies the
face restrictions and the exterior derivative needed to state Stokes'
identity on the simplex (:func:`stokes_check`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

__all__ = [
    "RationalForm",
    "integrate_monomial",
    "iterated_integral_oracle",
    "face_restrict",
    "exterior_derivative",
    "integrate_top",
    "stokes_check",
]

Key = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass
class RationalForm:
    """Sparse polynomial differential form on the n-simplex.

    terms maps (a, S) -> coefficient; zero coefficients are never stored.
    """

    n: int
    terms: dict[Key, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (a, S), c in self.terms.items():
            a, S = tuple(a), tuple(S)
            if len(a) != self.n + 1:
                raise ValueError("exponent tuple must have n+1 entries")
            if any(x < 0 for x in a):
                raise ValueError("negative exponent")
            if list(S) != sorted(set(S)) or (S and (S[0] < 0 or S[-1] > self.n)):
                raise ValueError("S must be a strictly increasing index tuple")
            c = Fraction(c)
            if c:
                clean[(a, S)] = c
        self.terms = clean

    @staticmethod
    def monomial(n: int, a, S, coeff=1) -> "RationalForm":
        return RationalForm(n, {(tuple(a), tuple(S)): Fraction(coeff)})

    def __add__(self, other: "RationalForm") -> "RationalForm":
        if self.n != other.n:
            raise ValueError("mismatched simplex dimensions")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return RationalForm(self.n, out)

    def scale(self, c) -> "RationalForm":
        c = Fraction(c)
        return RationalForm(self.n, {k: c * v for k, v in self.terms.items()})

    def __sub__(self, other: "RationalForm") -> "RationalForm":
        return self + other.scale(-1)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalForm)
            and self.n == other.n
            and self.terms == other.terms
        )

    def is_zero(self) -> bool:
        return not self.terms


# ---------------------------------------------------------------------------
# closed-form route


def integrate_monomial(a, v: int, n: int) -> Fraction:
    """Integral over the n-simplex of x^a dx_0 ^ ... dx_v-hat ... ^ dx_n.

    Closed form: (-1)^v * a_0! ... a_n! / (|a| + n)!.
    """
    a = tuple(a)
    if len(a) != n + 1 or any(x < 0 for x in a):
        raise ValueError("need n+1 nonnegative exponents")
    if not 0 <= v <= n:
        raise ValueError("omitted index out of range")
    num = 1
    for x in a:
        num *= math.factorial(x)
    return Fraction((-1) ** v * num, math.factorial(sum(a) + n))


def integrate_top(form: RationalForm) -> Fraction:
    """Integrate a top-degree form (every S omits exactly one index)."""
    total = Fraction(0)
    full = set(range(form.n + 1))
    for (a, S), c in form.terms.items():
        missing = full.difference(S)
        if len(missing) != 1:
            raise ValueError("form is not of top differential degree")
        total += c * integrate_monomial(a, missing.pop(), form.n)
    return total


# ---------------------------------------------------------------------------
# iterated-integral route (independent oracle)

Poly = dict[tuple[int, ...], Fraction]


def _poly_mul(f: Poly, g: Poly) -> Poly:
    out: Poly = {}
    for ea, ca in f.items():
        for eb, cb in g.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            c = out.get(key, Fraction(0)) + ca * cb
            if c:
                out[key] = c
            elif key in out:
                del out[key]
    return out


def _poly_pow(f: Poly, k: int, nslots: int) -> Poly:
    out: Poly = {(0,) * nslots: Fraction(1)}
    for _ in range(k):
        out = _poly_mul(out, f)
    return out


def iterated_integral_oracle(a, i: int, n: int) -> Fraction:
    """Integral of |x^a| over the n-simplex by literal nested integration.

    Coordinate x_i is eliminated via x_i = 1 - sum of the others; the
    remaining coordinates are integrated in increasing index order, the
    innermost first, with upper limits rho(j) = 1 - sum of the still-free
    higher coordinates.  Returns the unsigned value a!/( |a| + n )!; the
    orientation sign is the business of the closed form.
    """
    a = tuple(a)
    if len(a) != n + 1 or any(x < 0 for x in a):
        raise ValueError("need n+1 nonnegative exponents")
    if not 0 <= i <= n:
        raise ValueError("eliminated index out of range")
    nslots = n + 1
    mono = list(a)
    mono[i] = 0
    poly: Poly = {tuple(mono): Fraction(1)}
    if a[i]:
        # (1 - sum_{j != i} x_j)^{a_i}
        lin: Poly = {(0,) * nslots: Fraction(1)}
        for j in range(nslots):
            if j != i:
                e = [0] * nslots
                e[j] = 1
                lin[tuple(e)] = Fraction(-1)
        poly = _poly_mul(poly, _poly_pow(lin, a[i], nslots))
    for j in range(nslots):
        if j == i:
            continue
        # antiderivative in x_j, evaluated from 0 to rho(j)
        rho: Poly = {(0,) * nslots: Fraction(1)}
        for k in range(j + 1, nslots):
            if k != i:
                e = [0] * nslots
                e[k] = 1
                rho[tuple(e)] = Fraction(-1)
        out: Poly = {}
        for exps, c in poly.items():
            m = exps[j]
            rest = list(exps)
            rest[j] = 0
            upper = _poly_pow(rho, m + 1, nslots)
            piece = _poly_mul({tuple(rest): c / (m + 1)}, upper)
            for k2, c2 in piece.items():
                acc = out.get(k2, Fraction(0)) + c2
                if acc:
                    out[k2] = acc
                elif k2 in out:
                    del out[k2]
        poly = out
    if not poly:
        return Fraction(0)
    assert list(poly) == [(0,) * nslots], "integration left free variables"
    return poly[(0,) * nslots]


# ---------------------------------------------------------------------------
# boundary calculus


def face_restrict(form: RationalForm, i: int) -> RationalForm:
    """Pull back to the face x_i = 0, reindexing coordinates above i."""
    if not 0 <= i <= form.n:
        raise ValueError("face index out of range")
    out: dict[Key, Fraction] = {}
    for (a, S), c in form.terms.items():
        if a[i] > 0 or i in S:
            continue
        na = a[:i] + a[i + 1:]
        nS = tuple(j if j < i else j - 1 for j in S)
        out[(na, nS)] = out.get((na, nS), Fraction(0)) + c
    return RationalForm(form.n - 1, out)


def exterior_derivative(form: RationalForm) -> RationalForm:
    """d(c x^a dx_S) = sum_j a_j c x^{a - e_j} dx_j ^ dx_S, signs from
    sorting dx_j into position."""
    out: dict[Key, Fraction] = {}
    for (a, S), c in form.terms.items():
        for j in range(form.n + 1):
            if a[j] == 0 or j in S:
                continue
            below = sum(1 for k in S if k < j)
            na = tuple(x - 1 if k == j else x for k, x in enumerate(a))
            nS = tuple(sorted(S + (j,)))
            coeff = c * a[j] * (-1) ** below
            key = (na, nS)
            acc = out.get(key, Fraction(0)) + coeff
            if acc:
                out[key] = acc
            elif key in out:
                del out[key]
    return RationalForm(form.n, out)


def stokes_check(form: RationalForm) -> tuple[Fraction, Fraction]:
    """Both sides of Stokes on the n-simplex for an (n-1)-degree form:
    sum_i (-1)^i * integral of the i-th face restriction versus the
    integral of the exterior derivative.  Equal iff Stokes holds.
    """
    for (_, S) in form.terms:
        if len(S) != form.n - 1:
            raise ValueError("stokes_check expects differential degree n-1")
    lhs = Fraction(0)
    for i in range(form.n + 1):
        lhs += (-1) ** i * integrate_top(face_restrict(form, i))
    rhs = integrate_top(exterior_derivative(form))
    return lhs, rhs
