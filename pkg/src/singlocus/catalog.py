"""Numerical fingerprints of singular-locus components of the moduli of ppavs.

A component is described by an odd prime p and the eigenspace dimensions
(n_0, ..., n_(p-1)) of the order-p automorphism on the tangent space.  The
catalog enumerates admissible tuples for a given genus, computes the component
dimension n_0(n_0+1)/2 + sum n_i n_(p-i), and classifies the count of
principal polarizations on a very general member ("very general" = the locus
with endomorphism ring of minimal rank).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional

from .errors import DomainError
from .primes import check_odd_prime
from .signatures import UnitSignatureReport, compute_u

# Reasons why the polarization count is not determined by the classification
# theorem: the component is a point, the automorphism has no "moving" pairs of
# conjugate eigenvalues, or every nontrivial eigenvalue occurs exactly once
# (quaternionic / self-product endomorphism degenerations).
ZERO_DIMENSIONAL = "ZeroDimensional"
CROSS_TERM_ZERO = "CrossTermZero"
ALL_EIGEN_ONE = "AllEigenOne"
_REASONS = (ZERO_DIMENSIONAL, CROSS_TERM_ZERO, ALL_EIGEN_ONE)


@dataclass(frozen=True)
class PiClass:
    """Principal-polarization count of a very general member, when known."""

    known: Optional[int] = None
    unknown_reason: Optional[str] = None

    def __post_init__(self):
        if (self.known is None) == (self.unknown_reason is None):
            raise DomainError("PiClass needs exactly one of known / unknown_reason")
        if self.known is not None and self.known < 1:
            raise DomainError(f"known polarization count must be positive, got {self.known}")
        if self.unknown_reason is not None and self.unknown_reason not in _REASONS:
            raise DomainError(f"unrecognized reason tag {self.unknown_reason!r}")

    @property
    def is_known(self) -> bool:
        return self.known is not None


@dataclass(frozen=True)
class EigenTuple:
    """Eigenspace dimensions (n_0, ..., n_(p-1)) of the order-p tangent action."""

    p: int
    dims: tuple[int, ...]

    def __post_init__(self):
        check_odd_prime(self.p)
        object.__setattr__(self, "dims", tuple(self.dims))
        if len(self.dims) != self.p:
            raise DomainError(f"need {self.p} entries, got {len(self.dims)}")
        if any(not isinstance(n, int) or n < 0 for n in self.dims):
            raise DomainError("eigenspace dimensions must be non-negative integers")
        c = self.dims[1] + self.dims[-1]
        for i in range(1, self.p):
            if self.dims[i] + self.dims[self.p - i] != c:
                raise DomainError(
                    f"n_{i} + n_{self.p - i} = {self.dims[i] + self.dims[self.p - i]} "
                    f"differs from c = {c}"
                )
        if c < 1:
            raise DomainError("c = 0: the tangent action is trivial, order is not p")

    @property
    def b(self) -> int:
        return self.dims[0]

    @property
    def c(self) -> int:
        return self.dims[1] + self.dims[-1]

    @property
    def genus(self) -> int:
        return sum(self.dims)

    @property
    def cross_term(self) -> int:
        half = (self.p - 1) // 2
        return sum(self.dims[i] * self.dims[self.p - i] for i in range(1, half + 1))


@dataclass(frozen=True)
class ComponentData:
    """A component's numerical fingerprint; eigen is None only for p = 2 rows."""

    p: int
    eigen: Optional[EigenTuple]
    b: Optional[int]
    c: Optional[int]
    genus: Optional[int]
    dim: Optional[int]
    pi: PiClass

    @classmethod
    def two_torsion_summary(cls, genus: Optional[int] = None) -> "ComponentData":
        # Involution components: pi = 1 always; the odd-p dimension formula
        # does not apply, so dim is reported as n/a.
        return cls(p=2, eigen=None, b=None, c=None, genus=genus, dim=None,
                   pi=PiClass(known=1))


def dimension(t: EigenTuple) -> int:
    """Component dimension n_0(n_0+1)/2 + sum_(i=1)^((p-1)/2) n_i n_(p-i)."""
    return t.b * (t.b + 1) // 2 + t.cross_term


def _classify(p: int, eigen: Optional[EigenTuple], dim: Optional[int],
              u_report: UnitSignatureReport) -> PiClass:
    if p == 2:
        return PiClass(known=1)
    if u_report.p != p:
        raise DomainError(f"signature report is for p={u_report.p}, component has p={p}")
    assert eigen is not None and dim is not None
    if dim == 0:
        return PiClass(unknown_reason=ZERO_DIMENSIONAL)
    if eigen.cross_term == 0:
        return PiClass(unknown_reason=CROSS_TERM_ZERO)
    # The classification needs n_i != 1 for some i in [1, p-1].
    if all(n == 1 for n in eigen.dims[1:]):
        return PiClass(unknown_reason=ALL_EIGEN_ONE)
    return PiClass(known=u_report.u)


def classify_pi(data: ComponentData, u_report: UnitSignatureReport) -> PiClass:
    """Polarization count of a very general member, or the reason it is open."""
    return _classify(data.p, data.eigen, data.dim, u_report)


def make_component(eigen: EigenTuple, u_report: Optional[UnitSignatureReport] = None) -> ComponentData:
    """Assemble ComponentData (dimension and pi classification) from a tuple."""
    if u_report is None:
        u_report = compute_u(eigen.p)
    dim = dimension(eigen)
    pi = _classify(eigen.p, eigen, dim, u_report)
    return ComponentData(p=eigen.p, eigen=eigen, b=eigen.b, c=eigen.c,
                         genus=eigen.genus, dim=dim, pi=pi)


def canonical_tuple(p: int, dims: tuple[int, ...]) -> tuple[int, ...]:
    """Largest tuple in the orbit of n_i -> n_(k*i mod p), k coprime to p.

    The reindexing corresponds to replacing the automorphism by a power, so
    tuples in one orbit describe the same component data.
    """
    return max(tuple(dims[(k * i) % p] for i in range(p)) for k in range(1, p))


def enumeration_size(g: int, p: int) -> int:
    """Number of raw (non-canonicalized) tuples for genus g and prime p."""
    check_odd_prime(p)
    if g < 1:
        raise DomainError(f"genus must be at least 1, got {g}")
    half = (p - 1) // 2
    total = 0
    c = 1
    while g - c * half >= 0:
        total += (c + 1) ** half
        c += 1
    return total


def enumerate_components(g: int, p: int, canonicalize: bool = True) -> list[ComponentData]:
    """All admissible tuples for genus g, in descending lexicographic order.

    Emits numerical candidates only; no claim that a component with the given
    data is non-empty.  With canonicalize, one representative per orbit of the
    reindexing n_i -> n_(k*i mod p) is kept (the lexicographically largest).
    """
    check_odd_prime(p)
    if g < 1:
        raise DomainError(f"genus must be at least 1, got {g}")
    half = (p - 1) // 2
    u_report = compute_u(p)
    tuples: set[tuple[int, ...]] = set()
    c = 1
    while True:
        n0 = g - c * half
        if n0 < 0:
            break
        # Free choice of n_i in [0, c] for i in [1, half]; n_(p-i) = c - n_i.
        for firsts in product(range(c + 1), repeat=half):
            back = tuple(c - firsts[p - i - 1] for i in range(half + 1, p))
            dims = (n0,) + firsts + back
            tuples.add(canonical_tuple(p, dims) if canonicalize else dims)
        c += 1
    out = []
    for dims in sorted(tuples, reverse=True):
        out.append(make_component(EigenTuple(p=p, dims=dims), u_report))
    return out


def fixed_point_count(p: int, dim_y: int) -> int:
    """p^c with c = 2*dim_y/(p-1): fixed points of the order-p action on Y."""
    check_odd_prime(p)
    if not isinstance(dim_y, int) or dim_y < 1:
        raise DomainError(f"dim_y must be a positive integer, got {dim_y!r}")
    if (2 * dim_y) % (p - 1) != 0:
        raise DomainError(f"(p-1) = {p - 1} does not divide 2*dim_y = {2 * dim_y}")
    return p ** (2 * dim_y // (p - 1))
