"""Degree bookkeeping for automorphic cohomology classes.

The first half computes, for a rank-n group and a divisor b of n, how far
from the middle dimension pq a class pulled up from a proper parabolic
datum can land. N(b, n, p) is the closed form of that defect; the brute
force companion maximizes over all integer vectors directly and also
reports whether every reachable value has the same parity.

The second half tags representations by which general vanishing or
nonvanishing theorems cover them (answering either a growth question, Q1,
or a question about degrees, Q2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import DomainError, NotADivisor, SignatureMismatch
from .reps import CohRep

CONDITIONAL_NOTE = (
    "assumes every automorphic representation with cohomology comes from "
    "a parameter attached to a rational Levi subgroup (unproved)"
)


def N(b: int, n: int, p: int) -> int:
    """Largest defect sum over b equal groups of columns, closed form."""
    if b < 1 or n < 1:
        raise DomainError(f"need b, n >= 1, got b={b} n={n}")
    if n % b:
        raise NotADivisor(f"{b} does not divide {n}")
    if p < 0 or p > n:
        raise DomainError(f"need 0 <= p <= n, got p={p}")
    a = n // b
    x = p // b
    return b * x * x + (b - 2 * p) * x + (a - 1) * p


def lemC_bruteforce(a: int, b: int, p: int):
    """Maximize sum x_i (a - x_i) over 0 <= x_i <= a with sum x_i = p.

    Returns (maximum, parity_uniform) where the flag records whether every
    achievable value of the sum has the same parity.
    """
    if a < 0 or b < 1:
        raise DomainError(f"need a >= 0 and b >= 1, got a={a} b={b}")
    if p < 0 or p > a * b:
        raise DomainError(f"need 0 <= p <= a*b, got p={p}")

    values = set()

    def walk(slots: int, remaining: int, acc: int) -> None:
        if remaining > slots * a:
            return
        if slots == 0:
            values.add(acc)
            return
        for x in range(min(a, remaining) + 1):
            walk(slots - 1, remaining - x, acc + x * (a - x))

    walk(b, p, 0)
    parities = {v % 2 for v in values}
    return max(values), len(parities) == 1


@dataclass(frozen=True)
class DegreeSet:
    """Degrees reachable below and above the middle dimension pq."""

    degrees: tuple
    center: int

    @property
    def parity(self) -> int:
        return self.center % 2

    @property
    def is_parity_uniform(self) -> bool:
        return all(d % 2 == self.parity for d in self.degrees)


def degree_support(n: int, p: int, q: int) -> DegreeSet:
    """Union over divisors b > 1 of n of the bands [pq - N(b), pq + N(b)].

    Each band steps by 2 from its own endpoints. Bands for different
    divisors can have different endpoint parities, so the union need not be
    parity-uniform; the DegreeSet keeps the middle dimension around so
    callers can check symmetry or parity themselves.
    """
    if p + q != n:
        raise SignatureMismatch(f"p + q = {p + q} does not match n = {n}")
    if not 1 <= p <= q:
        raise DomainError(f"need 1 <= p <= q, got p={p} q={q}")
    center = p * q
    support = set()
    for b in range(2, n + 1):
        if n % b:
            continue
        width = N(b, n, p)
        support.update(range(center - width, center + width + 1, 2))
    return DegreeSet(tuple(sorted(support)), center)


@dataclass(frozen=True)
class CoverageTag:
    tag: str  # "Q1", "Q2" or "none"
    source: Optional[str]  # "LiGen", "ttt", "relth" or None


_NONE = CoverageTag("none", None)


def _flat_rows(lam, p: int) -> Optional[int]:
    """The value r when lam is (r, ..., r) with exactly p rows, else None.

    The empty partition counts as r = 0.
    """
    if not lam:
        return 0
    if len(lam) == p and lam[0] == lam[-1]:
        return lam[0]
    return None


def li_coverage(rep: CohRep) -> CoverageTag:
    """Coverage by the general nonvanishing results of Li.

    Unitary: one rectangle whose perimeter exceeds that of the box answers
    the degree question. Orthogonal and quaternionic: a single large
    central block answers the growth question.
    """
    fam = rep.family
    p, q = fam.p, fam.q
    if fam.kind == "U":
        rects = rep.skew.rectangles
        if len(rects) == 1 and 2 * (rects[0][0] + rects[0][1]) > p + q:
            return CoverageTag("Q2", "LiGen")
        return _NONE
    if fam.kind == "O":
        if (p + q) % 2 == 0:
            p0, q0 = rep.orth.center
            if not rep.orth.pairs and p0 and q0 and 2 * (p0 + q0) > p + q + 2:
                return CoverageTag("Q1", "LiGen")
            return _NONE
        r = _flat_rows(rep.lam, p)
        if r is not None and 4 * r < p + q - 2:
            return CoverageTag("Q1", "LiGen")
        return _NONE
    # Sp
    rects = rep.skew.rectangles
    if (
        rep.flag == 0
        and len(rects) == 1
        and 2 * (rects[0][0] + rects[0][1]) >= p + q
    ):
        return CoverageTag("Q1", "LiGen")
    return _NONE


def relth_coverage(rep: CohRep) -> CoverageTag:
    """Coverage by relative theta transfer and by the tensor tricks.

    Growth answers take precedence over degree answers, and within the
    degree answers the transfer result is checked before the tensor ones.
    """
    fam = rep.family
    p, q = fam.p, fam.q
    r = _flat_rows(rep.lam, p)
    c = _flat_rows(rep.mu, p) if fam.kind != "O" else None

    if fam.kind == "O" and p >= 2 and r is not None:
        if 2 * r <= min(q - 2, p + q - 5):
            return CoverageTag("Q1", "relth")
    if fam.kind == "Sp" and rep.flag == 0 and rep.lam == () and c is not None:
        return CoverageTag("Q1", "relth")
    if fam.kind == "U" and p >= 2 and r is not None and c is not None:
        if c >= r + 2:
            return CoverageTag("Q2", "relth")
    if p >= 2:
        if fam.kind == "U" and r is not None and c is not None:
            if r + c == q and 2 * r <= q:
                return CoverageTag("Q2", "ttt")
        if fam.kind == "O" and r is not None and 2 * r <= q:
            return CoverageTag("Q2", "ttt")
        if fam.kind == "Sp" and rep.flag == 0 and rep.lam == ():
            if c is not None and (q - c) % 2 == 0:
                return CoverageTag("Q2", "ttt")
    return _NONE
