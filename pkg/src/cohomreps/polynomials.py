"""Dense integer polynomials in one variable t, plus Gaussian binomials."""

from __future__ import annotations

from functools import lru_cache


class IntPoly:
    """Immutable polynomial with int coefficients, index = degree."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "_c", tuple(c))

    @property
    def coeffs(self):
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        return IntPoly(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if not self._c or not other._c:
            return IntPoly()
        out = [0] * (len(self._c) + len(other._c) - 1)
        for i, x in enumerate(self._c):
            if x:
                for j, y in enumerate(other._c):
                    out[i + j] += x * y
        return IntPoly(out)

    def shift(self, k: int) -> "IntPoly":
        """Multiply by t**k."""
        if k < 0:
            raise ValueError("negative shift")
        if not self._c:
            return self
        return IntPoly((0,) * k + self._c)

    def inflate(self, k: int) -> "IntPoly":
        """Substitute t -> t**k."""
        if k < 1:
            raise ValueError("inflation factor must be positive")
        out = [0] * (len(self._c) * k)
        for i, x in enumerate(self._c):
            out[i * k] = x
        return IntPoly(out)

    def __call__(self, x: int) -> int:
        val = 0
        for c in reversed(self._c):
            val = val * x + c
        return val

    def is_palindromic(self) -> bool:
        c = self._c
        return c == c[::-1]

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for i, c in enumerate(self._c):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                parts.append(f"{head}t^{i}" if i > 1 else f"{head}t")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"IntPoly({list(self._c)!r})"


ZERO = IntPoly()
ONE = IntPoly((1,))


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int) -> IntPoly:
    """The q-binomial coefficient as a polynomial in t.

    Computed through the Pascal recurrence [n,k] = [n-1,k-1] + t^k [n-1,k],
    which keeps everything in integer arithmetic.
    """
    if k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return gaussian_binomial(n - 1, k - 1) + gaussian_binomial(n - 1, k).shift(k)
