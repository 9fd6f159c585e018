"""Exact signs of cyclotomic units under the real embeddings of Q(zeta_p + zeta_p^-1).

The generating units are eps_a = (zeta^a - zeta^-a)/(zeta - zeta^-1) for
2 <= a <= (p-1)/2, and the real embeddings are indexed by b in [1, (p-1)/2]
via zeta -> zeta^b.  Under sigma_b the unit evaluates to
sin(2*pi*a*b/p) / sin(2*pi*b/p), so its sign is a product of two sine signs
and is decided by integer reduction mod p alone.  `cyclotomic_unit_approx`
is the floating-point cross-check for the integer sign rule.
"""

from __future__ import annotations

import mpmath

from .errors import DomainError
from .primes import check_odd_prime


def sin_sign(m: int, p: int) -> int:
    """Sign of sin(2*pi*m/p) for an odd prime p: +1, -1, or 0 when p | m."""
    check_odd_prime(p)
    m %= p
    if m == 0:
        return 0
    # p odd, so m != p/2 exactly; 0 < m < p/2 gives a positive sine.
    return 1 if 2 * m < p else -1


def _check_unit_args(a: int, b: int, p: int) -> None:
    check_odd_prime(p)
    half = (p - 1) // 2
    if not 2 <= a <= half:
        raise DomainError(f"unit index a={a} outside [2, {half}] for p={p}")
    if not 1 <= b <= half:
        raise DomainError(f"embedding index b={b} outside [1, {half}] for p={p}")


def cyclotomic_unit_sign(a: int, b: int, p: int) -> int:
    """Exact sign (+1 or -1) of eps_a under the embedding zeta -> zeta^b."""
    _check_unit_args(a, b, p)
    # Never 0: p divides neither a*b nor b on the allowed ranges.
    return sin_sign(a * b, p) * sin_sign(b, p)


def cyclotomic_unit_approx(a: int, b: int, p: int, precision: int = 64) -> mpmath.mpf:
    """sin(2*pi*a*b/p)/sin(2*pi*b/p) evaluated at `precision` bits."""
    _check_unit_args(a, b, p)
    if precision < 16:
        raise DomainError(f"precision must be at least 16 bits, got {precision}")
    with mpmath.workprec(precision):
        # Reduce mod p before evaluating: sin(2*pi*m/p) depends on m mod p only.
        num = mpmath.sinpi(mpmath.mpf(2 * (a * b % p)) / p)
        den = mpmath.sinpi(mpmath.mpf(2 * (b % p)) / p)
        return num / den
