"""Evaluation of the power-series cocycles on tuples of congruence matrices.

Given 2s matrices g_0, ..., g_{2s-1} over O/p^M, each congruent to 1 mod
p^e, the cocycle value is the simplex weight functional applied to the
(2s-1)-st wedge power of

    omega = nu^{-1} d(nu),    nu = sum_u g_u x_u,

expanded as a truncated series in the barycentric variables.  Writing
E_u = g_u - 1 (entries divisible by p^e, powers of p kept inside the
stored coefficients), the expansion uses

    nu^{-1} = sum_k (-1)^k C^k,   C = sum_u E_u x_u,
    d(nu)   = sum_u E_u dx_u,

where the constant part of d(nu) is dropped because the weight functional
annihilates sum_u dx_u exactly.  Series are cut at the degree where the
coefficient valuations provably exceed the requested precision, so every
returned digit is certified; the result is reduced to exactly that many
digits.

Defect evaluators return the (ideally zero) violation of the identities
the cocycle satisfies: the simplicial coboundary, two-sided translation
invariance, and compatibility with the coefficient automorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from .arith import (
    QpElem,
    RingParams,
    factorial_valuation,
    frobenius,
    truncation_degree,
)
from .errors import ConvergenceError, ParameterError, PrecisionError
from .matforms import (
    FormSeries,
    OMatrix,
    const_mul,
    monomial_table,
    pair_mul,
    phi,
    require_one_mod,
    shift_mul,
)

__all__ = [
    "EvalSettings",
    "validate_tuple",
    "cocycle_eval",
    "cocycle_defect",
    "invariance_defect",
    "conjugation_defect",
    "galois_defect",
]


@dataclass(frozen=True)
class EvalSettings:
    """Parameters an evaluation depends on besides the matrices.

    target: certified number of p-adic digits of the result.
    degree_cap: optional series cap override, >= the derived degree; used
        to confirm that enlarging the cap does not move certified digits.
    method: "wedge" forms the full matrix wedge power, "trace" uses the
        cyclic-trace shortcut available for s = 2, "auto" picks.
    """

    e: int
    s: int
    target: int
    degree_cap: Optional[int] = None
    method: str = "auto"

    def __post_init__(self):
        if self.s < 1:
            raise ParameterError("need s >= 1")
        if self.e < 1:
            raise ParameterError("need e >= 1")
        if self.target < 1:
            raise ParameterError("need target >= 1")
        if self.method not in ("auto", "wedge", "trace"):
            raise ParameterError("method must be auto, wedge or trace")
        if self.method == "trace" and self.s != 2:
            raise ParameterError("the trace shortcut applies to s = 2 only")

    def degree(self, p: int) -> int:
        """Inclusive series degree cap for prime p."""
        D = truncation_degree(self.target, self.e, self.s, p)
        if self.degree_cap is not None:
            if self.degree_cap < D:
                raise ParameterError(
                    f"degree cap {self.degree_cap} is below the "
                    f"certified minimum {D}"
                )
            return self.degree_cap
        return D

    def work_precision(self, p: int) -> int:
        """Working modulus exponent: target digits plus the worst
        factorial denominator over the kept degrees."""
        D = self.degree(p)
        return self.target + factorial_valuation(D + 2 * self.s - 1, p)


def validate_tuple(gs: Sequence[OMatrix], e: int, s: int):
    """Check a cocycle argument tuple: 2s matrices over one ring, all
    congruent to 1 mod p^e, with e >= 2 when p = 2."""
    if len(gs) != 2 * s:
        raise ParameterError(f"expected {2 * s} matrices, got {len(gs)}")
    params = gs[0].params
    if params.p == 2 and e < 2:
        raise ConvergenceError("p = 2 requires congruence level e >= 2")
    N = gs[0].N
    for g in gs:
        if g.params != params or g.N != N:
            raise ParameterError("matrices must share ring and size")
        require_one_mod(g, e)
    return params, N


def _nu_inverse(E, table, params, dtype):
    """Geometric series sum_k (-1)^k C^k, C = sum_u E_u x_u, via the
    contraction Q <- 1 - C Q; degree-k terms are exact after k steps."""
    P, nvars = table.count, len(E)
    N = E[0].shape[0]
    m = params.pM
    one = np.zeros((P, N, N, params.d), dtype=dtype)
    for i in range(N):
        one[0, i, i, 0] = 1
    Q = one.copy()
    for _ in range(table.D):
        acc = one.copy()
        for u in range(nvars):
            acc = acc - shift_mul(const_mul(Q, E[u], params, side="left"),
                                  u, table)
        Q = acc % m
    return Q


def _omega_components(gs, table, params, dtype):
    """The series G_u with omega = sum_u G_u dx_u, G_u = nu^{-1} E_u."""
    N = gs[0].N
    I = OMatrix.identity(params, N)
    E = [(g - I).to_array(dtype) for g in gs]
    Q = _nu_inverse(E, table, params, dtype)
    return [const_mul(Q, Eu, params, side="right") for Eu in E]


def _eval_wedge(gs, s, D, params) -> QpElem:
    table = monomial_table(2 * s, D)
    dtype = FormSeries.zero(params, s, gs[0].N, D).dtype()
    G = _omega_components(gs, table, params, dtype)
    omega = FormSeries(params, s, gs[0].N, D,
                       {(u,): G[u] for u in range(2 * s)})
    power = omega
    for _ in range(2 * s - 2):
        power = power.wedge(omega)
    return phi(power)


def _eval_trace_s2(gs, D, params) -> QpElem:
    """s = 2 shortcut: the trace of the cubed form collapses, by cyclic
    invariance over the commutative coefficient ring, to

        Tr(omega^3)_{i<j<k} = 3 (Tr(G_i G_j G_k) - Tr(G_i G_k G_j)).

    Re-association is exact under the degree cap, so this matches the
    iterated wedge bit for bit; the test suite pins that equality.
    """
    table = monomial_table(4, D)
    m = params.pM
    dtype = FormSeries.zero(params, 2, gs[0].N, D).dtype()
    G = _omega_components(gs, table, params, dtype)
    prods = {
        (a, b): pair_mul(G[a], G[b], table, params)
        for a, b in combinations(range(4), 2)
    }
    comps = {}
    for S in combinations(range(4), 3):
        i, j, k = S
        t1 = pair_mul(prods[(i, j)], G[k], table, params, trace=True)
        t2 = pair_mul(prods[(i, k)], G[j], table, params, trace=True)
        tr = (3 * (t1 - t2)) % m
        comps[S] = tr.reshape(table.count, 1, 1, params.d)
    carrier = FormSeries(params, 2, 1, D, comps)
    return phi(carrier)


def cocycle_eval(gs: Sequence[OMatrix], settings: EvalSettings) -> QpElem:
    """Value of the degree-(2s-1) cocycle on (g_0, ..., g_{2s-1}),
    certified and reduced to exactly `target` digits."""
    params, _ = validate_tuple(gs, settings.e, settings.s)
    D = settings.degree(params.p)
    mw = settings.work_precision(params.p)
    if params.M < mw:
        raise PrecisionError(
            f"target {settings.target} at degree {D} needs working "
            f"precision M >= {mw}, got {params.M}"
        )
    method = settings.method
    if method == "auto":
        method = "trace" if settings.s == 2 else "wedge"
    if method == "trace":
        val = _eval_trace_s2(gs, D, params)
    else:
        val = _eval_wedge(gs, settings.s, D, params)
    if val.abs_prec() < settings.target:
        raise PrecisionError(
            "evaluation lost more precision than the working modulus "
            "allows; this indicates an internal bookkeeping error"
        )
    return val.reduce_abs(settings.target)


def cocycle_defect(gs: Sequence[OMatrix], settings: EvalSettings) -> QpElem:
    """Simplicial coboundary on a (2s+1)-tuple: the alternating sum of
    the cocycle over the 2s+1 omit-one faces.  Zero to `target` digits
    exactly when the cocycle identity holds there."""
    if len(gs) != 2 * settings.s + 1:
        raise ParameterError(
            f"the coboundary takes {2 * settings.s + 1} matrices"
        )
    total = QpElem.zero(gs[0].params, None)
    for i in range(len(gs)):
        face = tuple(gs[:i]) + tuple(gs[i + 1:])
        v = cocycle_eval(face, settings)
        total = total + (-v if i % 2 else v)
    return total


def invariance_defect(
    gs: Sequence[OMatrix],
    y1: OMatrix,
    y2: OMatrix,
    settings: EvalSettings,
) -> QpElem:
    """Difference of the cocycle on (y1 g_u y2)_u and on (g_u)_u.

    The transformed tuple must again satisfy the congruence; two-sided
    translation fixes the value because nu^{-1} d(nu) only changes by a
    conjugation under it.
    """
    moved = tuple(y1 * g * y2 for g in gs)
    return cocycle_eval(moved, settings) - cocycle_eval(gs, settings)


def conjugation_defect(
    gs: Sequence[OMatrix], y: OMatrix, settings: EvalSettings
) -> QpElem:
    """Invariance defect for g_u -> y g_u y^{-1}, y any invertible matrix."""
    return invariance_defect(gs, y, y.inverse(), settings)


def galois_defect(gs: Sequence[OMatrix], settings: EvalSettings) -> QpElem:
    """Compatibility with the coefficient automorphism: the cocycle of
    the entrywise-transformed tuple minus the transformed value."""
    moved = tuple(g.frobenius() for g in gs)
    return cocycle_eval(moved, settings) - frobenius(
        cocycle_eval(gs, settings)
    )
