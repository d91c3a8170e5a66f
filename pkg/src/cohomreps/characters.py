"""Exact character arithmetic for products of compact classical groups.

A character of a rank-n torus is a finite integer combination of weights,
stored as a sparse dict mapping each exponent tuple to its multiplicity.
Everything in this module is exact: no floats, no truncation, and any
division that must come out exact is checked.

The group side is a product of factors U(n), SO(n), Sp(n). The invariant
multiplicity of a character is extracted with the Weyl integration formula
in its purely algebraic form

    mult_triv(chi) = CT(chi * D) / |W|,

where D = prod over all roots alpha of (1 - x^alpha) and CT takes the
coefficient of x^0. D factors over the group factors and is cached per
factor, so CT(chi * D) is evaluated as a lazy dot product: for each weight m
of chi, look up the coefficient of -m in each factor's denominator. The full
product of denominators across factors is never expanded.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .errors import InexactDivision, SignatureMismatch
from .polynomials import IntPoly

Weight = tuple  # tuple of ints
Factor = tuple  # (kind, n) with kind in {"U", "SO", "Sp"}

_KINDS = ("U", "SO", "Sp")


class Character:
    """Sparse virtual character of a rank-n torus."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms=None):
        if rank < 0:
            raise ValueError("rank must be nonnegative")
        clean = {}
        for w, c in (terms or {}).items():
            w = tuple(int(x) for x in w)
            if len(w) != rank:
                raise SignatureMismatch(
                    f"weight {w} has length {len(w)}, expected rank {rank}"
                )
            c = int(c)
            if c:
                clean[w] = clean.get(w, 0) + c
        self.rank = rank
        self.terms = {w: c for w, c in clean.items() if c}

    @classmethod
    def zero(cls, rank: int) -> "Character":
        return cls(rank, {})

    @classmethod
    def one(cls, rank: int) -> "Character":
        return cls(rank, {(0,) * rank: 1})

    @classmethod
    def from_weights(cls, rank: int, weights) -> "Character":
        terms = {}
        for w in weights:
            w = tuple(int(x) for x in w)
            terms[w] = terms.get(w, 0) + 1
        return cls(rank, terms)

    def dimension(self) -> int:
        """Value at the identity, i.e. the sum of all multiplicities."""
        return sum(self.terms.values())

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.rank, 0)

    def _check(self, other: "Character") -> None:
        if self.rank != other.rank:
            raise SignatureMismatch(
                f"rank mismatch: {self.rank} vs {other.rank}"
            )

    def __add__(self, other: "Character") -> "Character":
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return Character(self.rank, out)

    def __sub__(self, other: "Character") -> "Character":
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) - c
        return Character(self.rank, out)

    def __mul__(self, other: "Character") -> "Character":
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for w1, c1 in a.items():
            for w2, c2 in b.items():
                w = tuple(x + y for x, y in zip(w1, w2))
                out[w] = out.get(w, 0) + c1 * c2
        return Character(self.rank, out)

    def scale(self, k: int) -> "Character":
        return Character(self.rank, {w: k * c for w, c in self.terms.items()})

    def divide_exact(self, k: int) -> "Character":
        out = {}
        for w, c in self.terms.items():
            d, r = divmod(c, k)
            if r:
                raise InexactDivision(
                    f"coefficient {c} of {w} is not divisible by {k}"
                )
            out[w] = d
        return Character(self.rank, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Character)
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        items = sorted(self.terms.items())
        return f"Character(rank={self.rank}, terms={dict(items)!r})"


def adams(chi: Character, i: int) -> Character:
    """The i-th Adams operation: each exponent tuple scaled by i."""
    if i < 1:
        raise ValueError("Adams operations are defined here for i >= 1")
    out = {}
    for w, c in chi.terms.items():
        sw = tuple(i * x for x in w)
        out[sw] = out.get(sw, 0) + c
    return Character(chi.rank, out)


def exterior_powers(chi: Character, kmax: int):
    """[e_0, e_1, ..., e_kmax] via the Newton recursion.

    k * e_k = sum over i in 1..k of (-1)^(i-1) * e_(k-i) * psi_i(chi).
    For an actual (nonvirtual) character every division is exact; the check
    is kept as an internal consistency tripwire. Powers past the dimension
    of chi come out as zero on their own.
    """
    powers = [Character.one(chi.rank)]
    psi = [adams(chi, i) for i in range(1, kmax + 1)]
    for k in range(1, kmax + 1):
        acc = Character.zero(chi.rank)
        for i in range(1, k + 1):
            term = powers[k - i] * psi[i - 1]
            acc = acc + term if i % 2 else acc - term
        powers.append(acc.divide_exact(k))
    return powers


def _exterior_series_genuine(chi: Character):
    """Exterior powers of a genuine character, one weight at a time.

    Multiplying out prod over weights of (1 + t x^w) never cancels
    anything, so this beats the Newton recursion by a wide margin on big
    modules. Only valid when every multiplicity is nonnegative.
    """
    rank = chi.rank
    series = [{(0,) * rank: 1}]
    for w, mult in sorted(chi.terms.items()):
        for _ in range(mult):
            series.append({})
            for k in range(len(series) - 1, 0, -1):
                target = series[k]
                for v, c in series[k - 1].items():
                    sv = tuple(a + b for a, b in zip(v, w))
                    target[sv] = target.get(sv, 0) + c
    return [Character(rank, level) for level in series]


def _check_factor(factor: Factor) -> Factor:
    kind, n = factor
    if kind not in _KINDS or int(n) < 0:
        raise ValueError(f"bad group factor {factor!r}")
    return (kind, int(n))


def factor_rank(factor: Factor) -> int:
    kind, n = _check_factor(factor)
    return n if kind != "SO" else n // 2


def factor_weyl_order(factor: Factor) -> int:
    kind, n = _check_factor(factor)
    if kind == "U":
        return factorial(n)
    if kind == "Sp":
        return 2**n * factorial(n)
    k = n // 2
    if n % 2 or k == 0:
        return 2**k * factorial(k)
    return 2 ** (k - 1) * factorial(k)


def factor_roots(factor: Factor):
    """All roots (positive and negative) in factor-local coordinates."""
    kind, n = _check_factor(factor)
    rank = factor_rank(factor)

    def e(i, c=1):
        v = [0] * rank
        v[i] = c
        return tuple(v)

    def pm_pairs():
        out = []
        for i in range(rank):
            for j in range(i + 1, rank):
                for si in (1, -1):
                    for sj in (1, -1):
                        v = [0] * rank
                        v[i], v[j] = si, sj
                        out.append(tuple(v))
        return out

    if kind == "U":
        roots = []
        for i in range(n):
            for j in range(n):
                if i != j:
                    v = [0] * n
                    v[i], v[j] = 1, -1
                    roots.append(tuple(v))
        return roots
    if kind == "Sp":
        return pm_pairs() + [e(i, 2 * s) for i in range(rank) for s in (1, -1)]
    # SO(n)
    roots = pm_pairs()
    if n % 2:
        roots += [e(i, s) for i in range(rank) for s in (1, -1)]
    return roots


def standard_weights(factor: Factor):
    """Weights of the defining representation, factor-local coordinates."""
    kind, n = _check_factor(factor)
    rank = factor_rank(factor)

    def e(i, c=1):
        v = [0] * rank
        v[i] = c
        return tuple(v)

    if kind == "U":
        return [e(i) for i in range(n)]
    if kind == "Sp":
        return [e(i, s) for i in range(rank) for s in (1, -1)]
    weights = [e(i, s) for i in range(rank) for s in (1, -1)]
    if n % 2:
        weights.append((0,) * rank)
    return weights


@lru_cache(maxsize=None)
def _factor_denominator(factor: Factor):
    """Coefficients of prod over all roots of (1 - x^alpha), as a dict."""
    rank = factor_rank(factor)
    terms = {(0,) * rank: 1}
    for alpha in factor_roots(factor):
        nxt = dict(terms)
        for w, c in terms.items():
            shifted = tuple(x + y for x, y in zip(w, alpha))
            nxt[shifted] = nxt.get(shifted, 0) - c
        terms = {w: c for w, c in nxt.items() if c}
    return terms


@dataclass(frozen=True)
class CompactGroupSpec:
    """An ordered product of compact factors acting through one big torus."""

    factors: tuple

    def __post_init__(self):
        for f in self.factors:
            _check_factor(f)

    @property
    def rank(self) -> int:
        return sum(factor_rank(f) for f in self.factors)

    @property
    def weyl_order(self) -> int:
        order = 1
        for f in self.factors:
            order *= factor_weyl_order(f)
        return order

    @property
    def slices(self):
        out = []
        start = 0
        for f in self.factors:
            r = factor_rank(f)
            out.append((start, start + r))
            start += r
        return tuple(out)


def trivial_multiplicity(chi: Character, group: CompactGroupSpec) -> int:
    """Multiplicity of the trivial representation in chi.

    Raises InexactDivision when chi is not a genuine invariant-theoretic
    input (for instance a non Weyl-invariant sum of weights).
    """
    if chi.rank != group.rank:
        raise SignatureMismatch(
            f"character rank {chi.rank} does not match group rank {group.rank}"
        )
    denoms = [_factor_denominator(f) for f in group.factors]
    slices = group.slices
    total = 0
    for w, c in chi.terms.items():
        prod = c
        for dd, (a, b) in zip(denoms, slices):
            neg = tuple(-x for x in w[a:b])
            coeff = dd.get(neg, 0)
            if not coeff:
                prod = 0
                break
            prod *= coeff
        total += prod
    mult, rem = divmod(total, group.weyl_order)
    if rem:
        raise InexactDivision(
            f"constant term {total} is not divisible by the Weyl group "
            f"order {group.weyl_order}"
        )
    return mult


def invariant_poincare(group: CompactGroupSpec, chi: Character) -> IntPoly:
    """Generating polynomial of invariants in the exterior algebra of chi.

    Coefficient of t^j is the trivial multiplicity in the j-th exterior
    power. Cost grows quickly with the dimension of chi; a warning is
    emitted past dimension 20.
    """
    dim = chi.dimension()
    if dim > 20:
        warnings.warn(
            f"invariant Poincare series of a dimension-{dim} module; "
            "this exact computation may take a while",
            stacklevel=2,
        )
    if all(c > 0 for c in chi.terms.values()):
        powers = _exterior_series_genuine(chi)
    else:
        powers = exterior_powers(chi, dim)
    return IntPoly([trivial_multiplicity(e, group) for e in powers])
