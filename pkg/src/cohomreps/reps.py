"""Cohomological representations of U(p,q), O(p,q) and Sp(p,q).

A representation A(lam, mu) of the unitary or quaternionic family is indexed
by a nested pair of partitions whose skew shape splits into rectangles; the
orthogonal family uses a single self-complementary lam. The quaternionic
family additionally carries a binary flag selecting which of two Levi types
realizes the pair; the flag is forced to 1 unless the bottom row of the box
lies entirely inside the skew shape.

Each representation knows its lowest cohomological degree R and the module
(l cap p) on which cohomology is an invariant-theory problem. Poincare
series come in two independent implementations: a closed product of Gaussian
binomials (with an exact invariants computation for the real central block
of the orthogonal family), and a direct evaluation through exterior powers
and Weyl integration that never looks at the factorization.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .characters import (
    Character,
    CompactGroupSpec,
    factor_rank,
    invariant_poincare,
    standard_weights,
)
from .errors import DomainError, NotOrthogonal, WrongFamily
from .partitions import (
    OrthogonalDecomposition,
    SkewDecomposition,
    canonical,
    complement,
    enumerate_partitions_in_box,
    format_partition,
    is_compatible,
    orthogonal_decomposition,
    rectangle_decomposition,
)
from .polynomials import ONE, IntPoly, gaussian_binomial

FAMILIES = ("U", "O", "Sp")


@dataclass(frozen=True, order=True)
class Family:
    kind: str
    p: int
    q: int

    def __post_init__(self):
        if self.kind not in FAMILIES:
            raise WrongFamily(f"unknown family {self.kind!r}")
        if self.p < 1 or self.q < 1:
            raise DomainError(f"signature ({self.p},{self.q}) must be positive")


def r_G(family: Family) -> int:
    """Smallest nonzero lowest degree the family can produce, by signature."""
    base = min(family.p, family.q)
    return 2 * base if family.kind == "Sp" else base


@dataclass(frozen=True)
class CohRep:
    family: Family
    lam: tuple
    mu: tuple
    flag: Optional[int]
    skew: SkewDecomposition
    orth: Optional[OrthogonalDecomposition]
    R: int
    sign_multiplicity: Optional[str]

    def __repr__(self) -> str:
        return f"CohRep({text_form(self)})"


def _padded_last(lam: tuple, p: int) -> int:
    return lam[p - 1] if len(lam) >= p else 0


def make_rep(family: Family, lam, mu=None, flag=None) -> CohRep:
    """Build and validate a representation of the given family."""
    p, q = family.p, family.q
    lam = canonical(lam)

    if family.kind == "O":
        if flag is not None:
            raise WrongFamily("the flag parameter belongs to the Sp family")
        orth = orthogonal_decomposition(lam, p, q)
        comp = complement(lam, p, q)
        if mu is not None and canonical(mu) != comp:
            raise NotOrthogonal(
                "for the orthogonal family the second partition is the "
                f"complement {comp} of the first"
            )
        return CohRep(
            family=family,
            lam=lam,
            mu=comp,
            flag=None,
            skew=orth.skew,
            orth=orth,
            R=sum(lam),
            sign_multiplicity="unresolved",
        )

    if mu is None:
        raise DomainError(f"family {family.kind} needs both partitions")
    mu = canonical(mu)
    skew = rectangle_decomposition(lam, mu, p, q)
    areas = sum(a * b for a, b in skew.rectangles)
    comp_weight = p * q - sum(mu)  # size of the complement of mu

    if family.kind == "U":
        if flag is not None:
            raise WrongFamily("the flag parameter belongs to the Sp family")
        R = p * q - areas
        assert R == sum(lam) + comp_weight
        return CohRep(family, lam, mu, None, skew, None, R, None)

    # Sp family
    if flag not in (0, 1):
        raise DomainError("the Sp family needs flag 0 or 1")
    admits_zero = _padded_last(lam, p) == 0 and _padded_last(mu, p) > 0
    if flag == 0 and not admits_zero:
        raise DomainError(
            "flag 0 requires the bottom box row to lie inside the skew "
            "shape; this pair only admits flag 1"
        )
    if flag == 1:
        R = 2 * p * q - areas
        assert R == p * q + sum(lam) + comp_weight
    else:
        a, b = skew.rectangles[-1]
        R = 2 * p * q - 2 * a * b - (areas - a * b)
        assert R == p * q - a * b + sum(lam) + comp_weight
    return CohRep(family, lam, mu, flag, skew, None, R, None)


def trivial_rep(family: Family) -> CohRep:
    p, q = family.p, family.q
    if family.kind == "O":
        return make_rep(family, ())
    full = (q,) * p
    return make_rep(family, (), full, flag=0 if family.kind == "Sp" else None)


@lru_cache(maxsize=None)
def _enumerate_cached(kind: str, p: int, q: int):
    fam = Family(kind, p, q)
    parts = list(enumerate_partitions_in_box(p, q))
    reps = []
    if kind == "O":
        for lam in parts:
            try:
                reps.append(make_rep(fam, lam))
            except NotOrthogonal:
                pass
        return tuple(reps)
    for lam in parts:
        for mu in parts:
            if not is_compatible(lam, mu, p, q):
                continue
            if kind == "U":
                reps.append(make_rep(fam, lam, mu))
            else:
                if _padded_last(lam, p) == 0 and _padded_last(mu, p) > 0:
                    reps.append(make_rep(fam, lam, mu, flag=0))
                reps.append(make_rep(fam, lam, mu, flag=1))
    return tuple(reps)


def enumerate_reps(family: Family):
    """All representations of the family, ordered by (lam, mu, flag)."""
    return _enumerate_cached(family.kind, family.p, family.q)


def degree_R(rep: CohRep) -> int:
    return rep.R


def hodge_type(rep: CohRep):
    """Bidegree (R_plus, R_minus) splitting R; unitary family only."""
    if rep.family.kind != "U":
        raise WrongFamily("Hodge bidegrees exist only for the unitary family")
    p, q = rep.family.p, rep.family.q
    return (sum(rep.lam), p * q - sum(rep.mu))


# ---------------------------------------------------------------------------
# The (l cap p) module. Each block tag describes one Levi factor pair and
# the piece of p it acts on:
#   ("her", a, b)   U(a) x U(b) on E (x) F* + E* (x) F, dimension 2ab
#   ("quat", a, b)  Sp(a) x Sp(b) on the full tensor of standards, dim 4ab
#   ("real", a, b)  SO(a) x SO(b) on the tensor of standards, dim ab
# ---------------------------------------------------------------------------


def _block_tags(rep: CohRep):
    kind = rep.family.kind
    if kind == "O":
        tags = [("her", a, b) for a, b in rep.orth.pairs]
        p0, q0 = rep.orth.center
        if p0 and q0:
            tags.append(("real", p0, q0))
        return tuple(tags)
    rects = rep.skew.rectangles
    if kind == "Sp" and rep.flag == 0:
        tags = [("her", a, b) for a, b in rects[:-1]]
        a, b = rects[-1]
        tags.append(("quat", a, b))
        return tuple(tags)
    return tuple(("her", a, b) for a, b in rects)


_FACTOR_KIND = {"her": "U", "quat": "Sp", "real": "SO"}


def _group_and_module(tags):
    factors = []
    for style, a, b in tags:
        kind = _FACTOR_KIND[style]
        factors.extend([(kind, a), (kind, b)])
    group = CompactGroupSpec(tuple(factors))
    rank = group.rank
    weights = []
    offset = 0
    for style, a, b in tags:
        fa = (_FACTOR_KIND[style], a)
        fb = (_FACTOR_KIND[style], b)
        ra, rb = factor_rank(fa), factor_rank(fb)
        if style == "her":
            for i in range(a):
                for j in range(b):
                    for s in (1, -1):
                        w = [0] * rank
                        w[offset + i] = s
                        w[offset + a + j] = -s
                        weights.append(tuple(w))
        else:
            for sa in standard_weights(fa):
                for sb in standard_weights(fb):
                    w = [0] * rank
                    w[offset : offset + ra] = sa
                    w[offset + ra : offset + ra + rb] = sb
                    weights.append(tuple(w))
        offset += ra + rb
    return group, Character.from_weights(rank, weights)


def lp_character(rep: CohRep):
    """The compact Levi factor and the character of its module inside p."""
    group, chi = _group_and_module(_block_tags(rep))
    expected = 0
    for style, a, b in _block_tags(rep):
        expected += {"her": 2, "quat": 4, "real": 1}[style] * a * b
    assert chi.dimension() == expected
    return group, chi


@lru_cache(maxsize=None)
def _real_center_poincare(p0: int, q0: int) -> IntPoly:
    group, chi = _group_and_module((("real", p0, q0),))
    return invariant_poincare(group, chi)


def poincare_closed(rep: CohRep) -> IntPoly:
    """Poincare polynomial of the cohomology, as a product over blocks.

    Hermitian blocks contribute a Gaussian binomial in t^2, quaternionic
    blocks one in t^4, and the real central block of the orthogonal family
    is handled by the exact invariants engine (cached per block size). The
    result carries the overall t^R shift, so degrees are absolute.
    """
    poly = ONE
    for style, a, b in _block_tags(rep):
        if style == "her":
            poly = poly * gaussian_binomial(a + b, a).inflate(2)
        elif style == "quat":
            poly = poly * gaussian_binomial(a + b, a).inflate(4)
        else:
            poly = poly * _real_center_poincare(a, b)
    return poly.shift(rep.R)


@lru_cache(maxsize=None)
def _oracle_poincare(tags) -> IntPoly:
    group, chi = _group_and_module(tags)
    return invariant_poincare(group, chi)


def poincare_oracle(rep: CohRep) -> IntPoly:
    """Same polynomial as poincare_closed, computed without factorizing.

    The whole module is fed to the exterior-power and Weyl-integration
    machinery at once. Results are cached by the multiset of blocks, which
    determines the module up to reordering coordinates.
    """
    return _oracle_poincare(tuple(sorted(_block_tags(rep)))).shift(rep.R)


def full_cohomology(rep: CohRep):
    """Nonzero cohomology as ((degree, dimension), ...), degrees absolute."""
    poly = _oracle_poincare(tuple(sorted(_block_tags(rep))))
    return tuple(
        (rep.R + j, c) for j, c in enumerate(poly.coeffs) if c
    )


def text_form(rep: CohRep) -> str:
    fam = rep.family
    head = f"{fam.kind}({fam.p},{fam.q})"
    if fam.kind == "O":
        return f"{head} A[{format_partition(rep.lam)}]"
    body = f"A[{format_partition(rep.lam)}|{format_partition(rep.mu)}]"
    if fam.kind == "Sp":
        return f"{head} {body}_{rep.flag}"
    return f"{head} {body}"
