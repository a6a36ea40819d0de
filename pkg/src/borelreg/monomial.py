"""Exponent-vector monomials over a fixed polynomial ring K[x_1, ..., x_n]."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Tuple

Exps = Tuple[int, ...]

# Exponents must fit a signed 32-bit integer.
MAX_EXPONENT = 2**31 - 1


class RingMismatchError(ValueError):
    """Two operands live in different ring contexts."""


class ExponentOverflowError(OverflowError):
    """An exponent left the supported integer width."""


@dataclass(frozen=True)
class RingContext:
    """Variable count and names; variable 1 is the smallest-index variable."""

    n: int
    names: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"ring needs at least one variable, got n={self.n!r}")
        names = tuple(self.names) if self.names else tuple(f"x{i + 1}" for i in range(self.n))
        if len(names) != self.n:
            raise ValueError(f"expected {self.n} variable names, got {len(names)}")
        if len(set(names)) != self.n:
            raise ValueError(f"variable names must be distinct: {names}")
        object.__setattr__(self, "names", names)

    def sub(self, m: int) -> "RingContext":
        """The ring on the first ``m`` variables, keeping their names."""
        return RingContext(m, self.names[:m])

    def one(self) -> "Monomial":
        return Monomial(self, (0,) * self.n)

    def var(self, j: int, e: int = 1) -> "Monomial":
        """The pure power x_j^e (``j`` is 1-based)."""
        if not 1 <= j <= self.n:
            raise IndexError(f"variable index {j} outside 1..{self.n}")
        exps = [0] * self.n
        exps[j - 1] = e
        return Monomial(self, tuple(exps))


def check_exps(exps: Exps) -> Exps:
    for e in exps:
        if e > MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")
    return exps


def order_key(exps: Exps):
    """Canonical order: total degree first, then lex with x_1 most significant
    (higher x_1 exponent sorts first)."""
    return (sum(exps), tuple(-e for e in exps))


def exps_divides(a: Exps, b: Exps) -> bool:
    return all(x <= y for x, y in zip(a, b))


def exps_lcm(a: Exps, b: Exps) -> Exps:
    return tuple(x if x > y else y for x, y in zip(a, b))


def exps_quotient(a: Exps, b: Exps) -> Exps:
    return tuple(x - y if x > y else 0 for x, y in zip(a, b))


def exps_max_var(a: Exps) -> Optional[int]:
    for j in range(len(a), 0, -1):
        if a[j - 1]:
            return j
    return None


@dataclass(frozen=True)
class Monomial:
    ring: RingContext
    exps: Exps

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exps)
        if len(exps) != self.ring.n:
            raise ValueError(f"monomial needs {self.ring.n} exponents, got {len(exps)}")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exps", check_exps(exps))

    def _same_ring(self, other: "Monomial") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(j + 1 for j, e in enumerate(self.exps) if e)

    def is_one(self) -> bool:
        return not any(self.exps)

    def is_pure_power(self) -> bool:
        return len(self.support) == 1

    def divides(self, other: "Monomial") -> bool:
        self._same_ring(other)
        return exps_divides(self.exps, other.exps)

    def lcm(self, other: "Monomial") -> "Monomial":
        self._same_ring(other)
        return Monomial(self.ring, exps_lcm(self.exps, other.exps))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._same_ring(other)
        return Monomial(self.ring, tuple(min(x, y) for x, y in zip(self.exps, other.exps)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._same_ring(other)
        return Monomial(self.ring, tuple(x + y for x, y in zip(self.exps, other.exps)))

    product = __mul__

    def __pow__(self, q: int) -> "Monomial":
        if q < 0:
            raise ValueError("negative power of a monomial")
        return Monomial(self.ring, tuple(q * e for e in self.exps))

    power = __pow__

    def quotient_by_gcd(self, other: "Monomial") -> "Monomial":
        """``self / gcd(self, other)``: the colon kernel."""
        self._same_ring(other)
        return Monomial(self.ring, exps_quotient(self.exps, other.exps))

    def max_var_index(self) -> Optional[int]:
        """Largest (1-based) index of a variable that divides the monomial."""
        return exps_max_var(self.exps)

    def __lt__(self, other: "Monomial") -> bool:
        self._same_ring(other)
        return order_key(self.exps) < order_key(other.exps)

    def __str__(self) -> str:
        return format_exps(self.exps, self.ring.names)


def format_exps(exps: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def monomials_of_degree(n: int, d: int) -> Iterable[Exps]:
    """All exponent vectors in ``n`` variables of total degree ``d``."""
    if n == 1:
        yield (d,)
        return
    for e in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - e):
            yield (e,) + rest


def monomials_up_to_degree(n: int, d: int) -> Iterable[Exps]:
    for k in range(d + 1):
        yield from monomials_of_degree(n, k)
