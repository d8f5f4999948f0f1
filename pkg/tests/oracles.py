"""Independent oracles used to freeze expected values.

Everything here works in exact rational arithmetic and deliberately avoids
the package's own code paths: inverses come from the extended Euclidean
algorithm on integers, logarithms from an explicit Fraction-valued series,
and residues from direct modular reduction of reduced fractions.
"""

from fractions import Fraction


def egcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return a, 1, 0
    g, x, y = egcd(b, a % b)
    return g, y, x - (a // b) * y


def inverse_mod(a: int, m: int) -> int:
    g, x, _ = egcd(a % m, m)
    assert g == 1, "not invertible"
    return x % m


def int_val(n: int, p: int) -> int:
    assert n != 0
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def frac_val(q: Fraction, p: int) -> int:
    return int_val(q.numerator, p) - int_val(q.denominator, p)


def frac_residue(q: Fraction, p: int, k: int) -> int:
    """q mod p^k for a p-integral rational, canonical in [0, p^k)."""
    m = p**k
    num, den = q.numerator, q.denominator
    assert den % p != 0, "not p-integral"
    return (num % m) * inverse_mod(den, m) % m


def log_series(q: Fraction, p: int, abs_target: int) -> Fraction:
    """Partial sum of log(q) = sum (-1)^(i+1) (q-1)^i / i, exact Fractions.

    Summed far enough that the dropped tail has valuation >= abs_target, so
    the residue of the result mod p^abs_target is the true logarithm.
    """
    z = q - 1
    w = frac_val(z, p)
    assert w >= (2 if p == 2 else 1), "log series diverges"
    total = Fraction(0)
    term = Fraction(1)
    i = 1
    while True:
        term *= z
        total += Fraction((-1) ** (i + 1), 1) * term / i
        i += 1
        # v(z^i / i) >= i*w - log_p(i); stop when safely past the target
        ilog = 0
        pk = p
        while pk <= i:
            ilog += 1
            pk *= p
        if i * w - ilog >= abs_target + 2:
            break
    return total


def log_residue(q: Fraction, p: int, k: int) -> int:
    """Residue mod p^k of log(q) for a one-unit rational q."""
    return frac_residue(log_series(q, p, k + 1), p, k)


def simple_factorial_valuation(l: int, p: int) -> int:
    """v_p(l!) by literally factoring l!."""
    v = 0
    for i in range(2, l + 1):
        while i % p == 0:
            v += 1
            i //= p
    return v
