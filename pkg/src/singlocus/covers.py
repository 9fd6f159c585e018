"""Eigenspace dimensions of cyclic degree-p covers from signature data.

For a cover C -> C/<sigma> with quotient genus gamma and local rotation
numbers a_1, ..., a_r at the branch points, the eigenspace dimensions on
holomorphic differentials are

    n_0 = gamma,    n_j = gamma - 1 + sum_k <-a_k * j / p>   (j = 1..p-1)

with <x> the fractional part.  The sign convention (-a_k rather than +a_k)
is pinned by the block structure of the genus-620 golden example; the
opposite choice produces the reversed blocks and fails that test.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .catalog import ComponentData, EigenTuple, make_component
from .errors import ConsistencyError, DomainError
from .primes import check_odd_prime
from .signatures import UnitSignatureReport


@dataclass(frozen=True)
class CoverSignature:
    """Cyclic cover data (gamma; p; a_1, ..., a_r)."""

    gamma: int
    p: int
    rotations: tuple[int, ...] = ()

    def __post_init__(self):
        check_odd_prime(self.p)
        object.__setattr__(self, "rotations", tuple(self.rotations))
        if not isinstance(self.gamma, int) or self.gamma < 0:
            raise DomainError(f"quotient genus must be a non-negative integer, got {self.gamma!r}")
        for a in self.rotations:
            if not isinstance(a, int) or not 1 <= a <= self.p - 1:
                raise DomainError(f"rotation number {a!r} outside [1, {self.p - 1}]")
        total = sum(self.rotations)
        if total % self.p != 0:
            raise DomainError(
                f"rotation numbers sum to {total}, not 0 mod {self.p}: monodromy does not close up"
            )

    @property
    def r(self) -> int:
        return len(self.rotations)


def riemann_hurwitz_genus(s: CoverSignature) -> int:
    """Genus of the cover: 2g - 2 = p(2*gamma - 2) + r(p - 1)."""
    rhs = s.p * (2 * s.gamma - 2) + s.r * (s.p - 1)
    if rhs % 2 != 0:
        raise DomainError(f"2g - 2 = {rhs} is odd; invalid cover data")
    g = (rhs + 2) // 2
    if g < 0:
        raise DomainError(f"cover data gives negative genus {g}")
    return g


def eigen_dims(s: CoverSignature) -> EigenTuple:
    """Eigenspace dimensions (n_0, ..., n_(p-1)) of the deck action."""
    # n_j + n_(p-j) = 2*gamma - 2 + r for j != 0; if that constant is < 1 the
    # deck transformation acts trivially on differentials (unramified genus-1
    # quotient, or a rational quotient with r <= 2) and there is no tuple.
    c = 2 * s.gamma - 2 + s.r
    if c < 1:
        raise DomainError(
            f"cover (gamma={s.gamma}, r={s.r}) has trivial tangent action (c = {c})"
        )
    dims = [s.gamma]
    for j in range(1, s.p):
        total = sum((-a * j) % s.p for a in s.rotations)
        if total % s.p != 0:
            raise ConsistencyError(f"fractional parts at j={j} sum to {total}/{s.p}, not an integer")
        n_j = s.gamma - 1 + total // s.p
        if n_j < 0:
            raise ConsistencyError(f"computed n_{j} = {n_j} < 0")
        dims.append(n_j)
    t = EigenTuple(p=s.p, dims=tuple(dims))
    if t.genus != riemann_hurwitz_genus(s):
        raise ConsistencyError("eigenspace dimensions do not sum to the cover genus")
    return t


class SuperellipticCover(NamedTuple):
    signature: CoverSignature
    genus: int


def superelliptic_signature(p: int, n: int) -> SuperellipticCover:
    """Cover data of y^p = f(x), deg f = n squarefree: rotation 1 at each root
    of f, plus p - (n mod p) at infinity when p does not divide n."""
    check_odd_prime(p)
    if not isinstance(n, int) or n < 3:
        raise DomainError(f"polynomial degree must be an integer >= 3, got {n!r}")
    if n % p == 0:
        rotations = (1,) * n
        genus = (p - 1) * (n - 2) // 2
    else:
        rotations = (1,) * n + (p - n % p,)
        genus = (p - 1) * (n - 1) // 2
    sig = CoverSignature(gamma=0, p=p, rotations=rotations)
    if riemann_hurwitz_genus(sig) != genus:
        raise ConsistencyError("superelliptic genus formula disagrees with Riemann-Hurwitz")
    return SuperellipticCover(signature=sig, genus=genus)


def component_of_cover(s: CoverSignature,
                       u_report: Optional[UnitSignatureReport] = None) -> ComponentData:
    """ComponentData of the singular-locus component containing the cover's Jacobian."""
    return make_component(eigen_dims(s), u_report)
