"""Monomial ideals stored as their canonical minimal generating set G(I)."""

from __future__ import annotations

from typing import Iterable, List, Sequence, Tuple, Union

from .monomial import (
    Exps,
    Monomial,
    RingContext,
    RingMismatchError,
    check_exps,
    exps_divides,
    exps_lcm,
    exps_max_var,
    exps_quotient,
    format_exps,
    order_key,
)

MonomialLike = Union[Monomial, Sequence[int]]


def minimalize(exps: Iterable[Exps]) -> Tuple[Exps, ...]:
    """Minimal antichain of a set of exponent vectors, in canonical order."""
    kept: List[Exps] = []
    # A divisor has degree <= its multiple, so scanning in degree order means
    # only already-kept vectors can divide the current one.
    for e in sorted(set(exps), key=order_key):
        if not any(exps_divides(k, e) for k in kept):
            kept.append(e)
    return tuple(kept)


def _exps_in(gens: Sequence[Exps], u: Exps) -> bool:
    return any(exps_divides(g, u) for g in gens)


class MonomialIdeal:
    """A monomial ideal of ``K[x_1..x_n]``.

    ``gens`` is the sorted antichain of minimal generators; an empty list is
    the zero ideal and ``[1]`` is the unit ideal. Instances are immutable and
    compare equal iff their generator lists agree.
    """

    __slots__ = ("ring", "_gens", "_hash")

    def __init__(self, ring: RingContext, gens: Iterable[MonomialLike] = ()):
        raw = []
        for g in gens:
            if isinstance(g, Monomial):
                if g.ring != ring:
                    raise RingMismatchError(f"generator {g} not in {ring}")
                raw.append(g.exps)
            else:
                e = tuple(int(x) for x in g)
                if len(e) != ring.n or any(x < 0 for x in e):
                    raise ValueError(f"bad exponent vector {e} for ring with n={ring.n}")
                raw.append(check_exps(e))
        self.ring = ring
        self._gens = minimalize(raw)
        self._hash = None

    @classmethod
    def _make(cls, ring: RingContext, gens: Tuple[Exps, ...]) -> "MonomialIdeal":
        # Trusted constructor: ``gens`` is already minimal and sorted.
        obj = cls.__new__(cls)
        obj.ring = ring
        obj._gens = gens
        obj._hash = None
        return obj

    @classmethod
    def from_generators(cls, ring: RingContext, raw: Iterable[MonomialLike]) -> "MonomialIdeal":
        return cls(ring, raw)

    @classmethod
    def zero(cls, ring: RingContext) -> "MonomialIdeal":
        return cls._make(ring, ())

    @classmethod
    def unit(cls, ring: RingContext) -> "MonomialIdeal":
        return cls._make(ring, ((0,) * ring.n,))

    @classmethod
    def prime(cls, ring: RingContext, support: Iterable[int]) -> "MonomialIdeal":
        """The monomial prime generated by the listed (1-based) variables."""
        return cls(ring, [ring.var(j).exps for j in support])

    # -- accessors ---------------------------------------------------------

    @property
    def exps(self) -> Tuple[Exps, ...]:
        return self._gens

    @property
    def gens(self) -> List[Monomial]:
        return [Monomial(self.ring, g) for g in self._gens]

    def __len__(self) -> int:
        return len(self._gens)

    def is_zero(self) -> bool:
        return not self._gens

    def is_unit(self) -> bool:
        return len(self._gens) == 1 and not any(self._gens[0])

    def is_proper(self) -> bool:
        return not self.is_zero() and not self.is_unit()

    def max_var_index(self):
        """Largest variable index occurring in G(I); ``None`` for 0 and S."""
        idx = [exps_max_var(g) for g in self._gens]
        idx = [j for j in idx if j is not None]
        return max(idx) if idx else None

    def lcm_exps(self) -> Exps:
        out = (0,) * self.ring.n
        for g in self._gens:
            out = exps_lcm(out, g)
        return out

    def _check(self, other: "MonomialIdeal") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    # -- membership and comparison ----------------------------------------

    def contains(self, u: MonomialLike) -> bool:
        if isinstance(u, Monomial):
            if u.ring != self.ring:
                raise RingMismatchError(f"{u} not in {self.ring}")
            u = u.exps
        return _exps_in(self._gens, tuple(u))

    __contains__ = contains

    def is_subset(self, other: "MonomialIdeal") -> bool:
        self._check(other)
        return all(_exps_in(other._gens, g) for g in self._gens)

    __le__ = is_subset

    def __lt__(self, other: "MonomialIdeal") -> bool:
        return self.is_subset(other) and self != other

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring == other.ring and self._gens == other._gens

    equals = __eq__

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, self._gens))
        return self._hash

    # -- lattice and arithmetic -------------------------------------------

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        if self.is_unit():
            return other
        if other.is_unit():
            return self
        return MonomialIdeal._make(
            self.ring, minimalize(exps_lcm(g, h) for g in self._gens for h in other._gens)
        )

    __and__ = intersect

    def add(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal._make(self.ring, minimalize(self._gens + other._gens))

    __add__ = add

    def multiply(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        prods = (check_exps(tuple(a + b for a, b in zip(g, h)))
                 for g in self._gens for h in other._gens)
        return MonomialIdeal._make(self.ring, minimalize(prods))

    __mul__ = multiply

    def power(self, q: int) -> "MonomialIdeal":
        """Ordinary power I^q, minimalizing after every multiplication."""
        if q < 0:
            raise ValueError("ideal power needs q >= 0")
        out = MonomialIdeal.unit(self.ring)
        for _ in range(q):
            out = out.multiply(self)
        return out

    __pow__ = power
    ordinary_power = power

    def bracket_power(self, q: int) -> "MonomialIdeal":
        """I^[q], generated by the q-th powers of the minimal generators."""
        if q < 0:
            raise ValueError("bracket power needs q >= 0")
        if q == 0:
            return MonomialIdeal.unit(self.ring) if self._gens else self
        # Scaling preserves divisibility both ways, so the result is still minimal.
        return MonomialIdeal._make(
            self.ring, tuple(check_exps(tuple(q * e for e in g)) for g in self._gens)
        )

    # -- colon and saturation ---------------------------------------------

    def colon(self, u: MonomialLike) -> "MonomialIdeal":
        """(I : u) for a monomial u, generated by g / gcd(g, u)."""
        if isinstance(u, Monomial):
            if u.ring != self.ring:
                raise RingMismatchError(f"{u} not in {self.ring}")
            u = u.exps
        u = tuple(u)
        return MonomialIdeal._make(self.ring, minimalize(exps_quotient(g, u) for g in self._gens))

    colon_monomial = colon

    def saturate_variable(self, j: int) -> "MonomialIdeal":
        """(I : x_j^inf): drop the j-th exponent of every generator."""
        self._var_index(j)
        k = j - 1
        return MonomialIdeal._make(
            self.ring, minimalize(g[:k] + (0,) + g[k + 1:] for g in self._gens)
        )

    def colon_prefix_prime(self, j: int) -> "MonomialIdeal":
        """(I : (x_1, ..., x_j)) as the intersection of the colons by each x_t."""
        self._var_index(j)
        out = MonomialIdeal.unit(self.ring)
        for t in range(1, j + 1):
            out = out.intersect(self.colon(self.ring.var(t)))
        return out

    def saturate_prefix(self, j: int) -> "MonomialIdeal":
        """(I : (x_1, ..., x_j)^inf) as the fixpoint of repeated colons."""
        self._var_index(j)
        cur = self
        while True:
            nxt = cur.colon_prefix_prime(j)
            if nxt == cur:
                return cur
            cur = nxt

    def saturate(self) -> "MonomialIdeal":
        """(I : m^inf) for the maximal ideal m, as the intersection of all
        variable saturations."""
        out = MonomialIdeal.unit(self.ring)
        for t in range(1, self.ring.n + 1):
            out = out.intersect(self.saturate_variable(t))
        return out

    def _var_index(self, j: int) -> None:
        if not 1 <= j <= self.ring.n:
            raise IndexError(f"variable index {j} outside 1..{self.ring.n}")

    # -- change of ring ---------------------------------------------------

    def restrict(self, m: int) -> "MonomialIdeal":
        """Re-read the generators in K[x_1..x_m]; they must not use x_{m+1}.."""
        if not 1 <= m <= self.ring.n:
            raise ValueError(f"cannot restrict to {m} variables")
        for g in self._gens:
            if any(g[m:]):
                raise ValueError(
                    f"generator {format_exps(g, self.ring.names)} uses a variable beyond x_{m}"
                )
        return MonomialIdeal._make(self.ring.sub(m), tuple(g[:m] for g in self._gens))

    restrict_to_subring = restrict

    def extend(self, ring: RingContext) -> "MonomialIdeal":
        """Extend to a ring with at least as many variables (padding zeros)."""
        if ring.n < self.ring.n or ring.names[: self.ring.n] != self.ring.names:
            raise RingMismatchError(f"{ring} does not extend {self.ring}")
        pad = (0,) * (ring.n - self.ring.n)
        return MonomialIdeal._make(ring, tuple(g + pad for g in self._gens))

    def permute(self, perm: Sequence[int]) -> "MonomialIdeal":
        """Relabel variables: new variable i is old variable ``perm[i-1]``."""
        if sorted(perm) != list(range(1, self.ring.n + 1)):
            raise ValueError(f"{perm} is not a permutation of 1..{self.ring.n}")
        return MonomialIdeal(self.ring, [tuple(g[p - 1] for p in perm) for g in self._gens])

    # -- text -------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return ", ".join(format_exps(g, self.ring.names) for g in self._gens)

    def __repr__(self) -> str:
        return f"MonomialIdeal(n={self.ring.n}, [{self}])"


def intersect_all(ring: RingContext, ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    out = MonomialIdeal.unit(ring)
    for ideal in ideals:
        out = out.intersect(ideal)
    return out
