"""Exact sparse Laurent polynomials in one variable t with integer coefficients."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Tuple


class IntLaurent:
    """Integer Laurent polynomial in t, stored sparsely.

    Instances are immutable; zero coefficients are never stored, so equality
    is plain map equality.  Python integers make all arithmetic exact.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        self._c = {e: c for e, c in (coeffs or {}).items() if c != 0}

    @staticmethod
    def zero() -> "IntLaurent":
        return IntLaurent()

    @staticmethod
    def one() -> "IntLaurent":
        return IntLaurent({0: 1})

    @staticmethod
    def term(coeff: int, texp: int = 0) -> "IntLaurent":
        return IntLaurent({texp: coeff})

    def items(self) -> list[Tuple[int, int]]:
        """(exponent, coefficient) pairs sorted by exponent."""
        return sorted(self._c.items())

    def coeff(self, texp: int) -> int:
        return self._c.get(texp, 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        if not isinstance(other, IntLaurent):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "IntLaurent") -> "IntLaurent":
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return IntLaurent(c)

    def __neg__(self) -> "IntLaurent":
        return IntLaurent({e: -v for e, v in self._c.items()})

    def __sub__(self, other: "IntLaurent") -> "IntLaurent":
        return self + (-other)

    def __mul__(self, other) -> "IntLaurent":
        if isinstance(other, int):
            return IntLaurent({e: v * other for e, v in self._c.items()})
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return IntLaurent(c)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntLaurent":
        if k < 0:
            raise ValueError("negative powers of a polynomial are not defined")
        out = IntLaurent.one()
        for _ in range(k):
            out = out * self
        return out

    def shifted(self, texp: int) -> "IntLaurent":
        """Multiply by t**texp."""
        return IntLaurent({e + texp: v for e, v in self._c.items()})

    def bar(self) -> "IntLaurent":
        """Substitute t -> t**-1."""
        return IntLaurent({-e: v for e, v in self._c.items()})

    def eval_at(self, t0: int) -> int:
        """Evaluate at an integer t0 != 0 (negative exponents must divide exactly)."""
        total = 0
        for e, v in self._c.items():
            if e >= 0:
                total += v * t0**e
            else:
                num, rem = divmod(v, t0 ** (-e))
                if rem:
                    raise ValueError(f"evaluation at t={t0} is not integral")
                total += num
        return total

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, v in self.items():
            if e == 0:
                parts.append(f"{v}")
            else:
                mono = "t" if e == 1 else f"t^{e}"
                if v == 1:
                    parts.append(mono)
                elif v == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{v}{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"IntLaurent({dict(self.items())!r})"


ZERO = IntLaurent.zero()
ONE = IntLaurent.one()


def from_pairs(pairs: Iterable[Tuple[int, int]]) -> IntLaurent:
    c: dict[int, int] = {}
    for e, v in pairs:
        c[e] = c.get(e, 0) + v
    return IntLaurent(c)


@lru_cache(maxsize=None)
def t_binomial(n: int, r: int) -> IntLaurent:
    """Balanced Gaussian binomial coefficient, symmetric under t <-> t**-1.

    Built from the Pascal recurrence [n,r] = t^-r [n-1,r] + t^(n-r) [n-1,r-1];
    [n,0] = [n,n] = 1, and the value is 0 outside 0 <= r <= n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if r < 0 or r > n:
        return ZERO
    if r == 0 or r == n:
        return ONE
    return t_binomial(n - 1, r).shifted(-r) + t_binomial(n - 1, r - 1).shifted(n - r)
