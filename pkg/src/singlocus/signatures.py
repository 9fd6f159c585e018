"""GF(2) signature matrix of cyclotomic units and the invariant u(p) = |U_p^+ / U_p^2|.

Signs are encoded over GF(2) with negative -> 1, so multiplicativity of signs
becomes row addition and -1 contributes the all-ones row.  The quotient of
totally positive units by squares then has order 2^((p-1)/2 - rank).

The rank is taken over the cyclotomic units only.  That makes the reported u
an unconditional upper bound for |U_p^+ / U_p^2|, and the exact value whenever
the class number of Q(zeta_p + zeta_p^-1) is odd; `assumption_flag` marks this
hypothesis on every odd-prime report.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .cyclotomic import cyclotomic_unit_sign
from .errors import DomainError
from .primes import check_odd_prime, is_prime, primes_up_to


@dataclass(frozen=True)
class SignMatrix:
    """Sign data of {-1, eps_2, ..., eps_((p-1)/2)} under all real embeddings.

    Rows are int bitmasks; bit (b-1) is set iff the unit is negative under
    the embedding zeta -> zeta^b.  Row 0 is the all-ones row for -1.
    """

    p: int
    rows: tuple[int, ...]
    row_labels: tuple[str, ...]

    @property
    def n_cols(self) -> int:
        return (self.p - 1) // 2

    def as_lists(self) -> list[list[int]]:
        """Rows as explicit 0/1 lists, column b-1 = embedding b."""
        w = self.n_cols
        return [[(r >> j) & 1 for j in range(w)] for r in self.rows]


@dataclass(frozen=True)
class UnitSignatureReport:
    p: int
    rank: int
    u: int
    # True when u relies on the class number h+ of Q(zeta_p + zeta_p^-1)
    # being odd; unconditionally u is an upper bound for |U_p^+ / U_p^2|.
    assumption_flag: bool


def build_sign_matrix(p: int) -> SignMatrix:
    check_odd_prime(p)
    half = (p - 1) // 2
    rows = [(1 << half) - 1]  # -1 is negative under every real embedding
    labels = ["-1"]
    for a in range(2, half + 1):
        mask = 0
        for b in range(1, half + 1):
            # Inlined cyclotomic_unit_sign: sin(2*pi*b/p) > 0 for b <= (p-1)/2,
            # so the sign is that of sin(2*pi*a*b/p), negative iff ab mod p > p/2.
            if 2 * (a * b % p) > p:
                mask |= 1 << (b - 1)
        rows.append(mask)
        labels.append(f"eps_{a}")
    return SignMatrix(p=p, rows=tuple(rows), row_labels=tuple(labels))


def _rank_packed(rows: list[int], n_cols: int) -> int:
    work = rows[:]
    rank = 0
    row_idx = 0
    for col in range(n_cols):
        pivot = None
        for r in range(row_idx, len(work)):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            continue
        work[row_idx], work[pivot] = work[pivot], work[row_idx]
        for r in range(len(work)):
            if r != row_idx and ((work[r] >> col) & 1):
                work[r] ^= work[row_idx]
        rank += 1
        row_idx += 1
        if row_idx == len(work):
            break
    return rank


def f2_rank(matrix: Union[SignMatrix, Sequence[Sequence[int]]]) -> int:
    """Rank over GF(2); accepts a SignMatrix or a rectangular 0/1 row list."""
    if isinstance(matrix, SignMatrix):
        return _rank_packed(list(matrix.rows), matrix.n_cols)
    rows = list(matrix)
    if not rows:
        return 0
    widths = {len(row) for row in rows}
    if len(widths) != 1:
        raise DomainError(f"ragged GF(2) matrix: row lengths {sorted(widths)}")
    n_cols = widths.pop()
    packed = []
    for row in rows:
        mask = 0
        for j, v in enumerate(row):
            if v not in (0, 1):
                raise DomainError(f"GF(2) entry must be 0 or 1, got {v!r}")
            mask |= v << j
        packed.append(mask)
    return _rank_packed(packed, n_cols)


def compute_u(p: int) -> UnitSignatureReport:
    """Signature report for a prime p; p = 2 is the trivial convention case."""
    if not is_prime(p):
        raise DomainError(f"expected a prime, got {p!r}")
    if p == 2:
        # U = {+-1}, U+ = U^2 = {1}: nothing to compute.
        return UnitSignatureReport(p=2, rank=0, u=1, assumption_flag=False)
    half = (p - 1) // 2
    rank = f2_rank(build_sign_matrix(p))
    return UnitSignatureReport(p=p, rank=rank, u=1 << (half - rank), assumption_flag=True)


def u_table(max_prime: int) -> list[UnitSignatureReport]:
    """One report per prime p <= max_prime, ascending."""
    if max_prime < 2:
        raise DomainError(f"max_prime must be at least 2, got {max_prime}")
    return [compute_u(p) for p in primes_up_to(max_prime)]
