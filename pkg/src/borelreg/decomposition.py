"""Irredundant irreducible and primary decompositions of monomial ideals."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Tuple, Union

from .ideal import MonomialIdeal, intersect_all, minimalize
from .monomial import Exps, RingContext


@dataclass(frozen=True)
class IrreducibleComponent:
    """The ideal (x_i^{a_i} : i in support); ``exps[i-1] == 0`` means x_i is absent."""

    ring: RingContext
    exps: Exps

    def __post_init__(self):
        if len(self.exps) != self.ring.n or any(e < 0 for e in self.exps):
            raise ValueError(f"bad pure-power vector {self.exps}")
        if not any(self.exps):
            raise ValueError("an irreducible component needs a non-empty support")

    @classmethod
    def from_powers(cls, ring: RingContext, pure_powers: Dict[int, int]) -> "IrreducibleComponent":
        exps = [0] * ring.n
        for j, a in pure_powers.items():
            if a < 1:
                raise ValueError("pure-power exponents must be positive")
            exps[j - 1] = a
        return cls(ring, tuple(exps))

    @property
    def pure_powers(self) -> Dict[int, int]:
        return {j + 1: a for j, a in enumerate(self.exps) if a}

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(j + 1 for j, a in enumerate(self.exps) if a)

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.ring, [self.ring.var(j, a).exps for j, a in self.pure_powers.items()])

    def regularity(self) -> int:
        """sum(a_i) - r + 1: one plus the top degree of K[x_supp]/C."""
        return sum(self.exps) - len(self.support) + 1

    def is_subset(self, other: "IrreducibleComponent") -> bool:
        return _irr_subset(self.exps, other.exps)

    def bracket_power(self, q: int) -> "IrreducibleComponent":
        return IrreducibleComponent(self.ring, tuple(q * a for a in self.exps))


def _irr_subset(c: Exps, d: Exps) -> bool:
    # Each x_k^{c_k} must lie in d, i.e. d has x_k with a smaller-or-equal exponent.
    return all(ck == 0 or (0 < dk <= ck) for ck, dk in zip(c, d))


def _is_pure(g: Exps) -> bool:
    return sum(1 for e in g if e) == 1


def _split_leaves(gens: Tuple[Exps, ...], memo: Dict[Tuple[Exps, ...], FrozenSet[Exps]]) -> FrozenSet[Exps]:
    """Irreducible leaves of the splitting tree (not yet pruned)."""
    hit = memo.get(gens)
    if hit is not None:
        return hit
    if any(not any(g) for g in gens):
        out: FrozenSet[Exps] = frozenset()  # unit ideal: contributes nothing
    else:
        u = next((g for g in gens if not _is_pure(g)), None)
        if u is None:
            comp = [0] * len(gens[0])
            for g in gens:
                k = next(i for i, e in enumerate(g) if e)
                comp[k] = g[k]
            out = frozenset([tuple(comp)])
        else:
            # u = x_k^{u_k} * rest with k the highest variable of u; both
            # factors are coprime, so J + (u) = (J + (x_k^{u_k})) ∩ (J + (rest)).
            k = max(i for i, e in enumerate(u) if e)
            left = tuple(u[k] if i == k else 0 for i in range(len(u)))
            right = u[:k] + (0,) + u[k + 1:]
            others = tuple(g for g in gens if g != u)
            out = _split_leaves(minimalize(others + (left,)), memo) | _split_leaves(
                minimalize(others + (right,)), memo
            )
    memo[gens] = out
    return out


def _prune_irreducibles(leaves) -> List[Exps]:
    """Keep the inclusion-minimal components; ordered by support then exponents."""
    leaves = sorted(set(leaves), key=lambda c: (tuple(a == 0 for a in c), c))
    kept = [c for c in leaves if not any(d != c and _irr_subset(d, c) for d in leaves)]
    return kept


def irreducible_decomposition(ideal: MonomialIdeal) -> List[IrreducibleComponent]:
    """Irredundant irreducible decomposition by recursive generator splitting."""
    if not ideal.is_proper():
        raise ValueError("irreducible decomposition needs a proper nonzero ideal")
    leaves = _split_leaves(ideal.exps, {})
    return [IrreducibleComponent(ideal.ring, c) for c in _prune_irreducibles(leaves)]


def associated_primes(ideal: MonomialIdeal) -> List[Tuple[int, ...]]:
    """Supports (1-based variable indices) of the associated primes of S/I."""
    sups = {c.support for c in irreducible_decomposition(ideal)}
    return sorted(sups, key=lambda s: (len(s), s))


def radical_support(ideal: MonomialIdeal) -> Tuple[int, ...]:
    sup = set()
    for g in ideal.exps:
        sup.update(j + 1 for j, e in enumerate(g) if e)
    return tuple(sorted(sup))


def is_primary(ideal: MonomialIdeal) -> bool:
    """A proper nonzero monomial ideal is primary iff every variable that
    occurs in a generator also occurs as a pure-power generator."""
    if not ideal.is_proper():
        return False
    pure = {next(j for j, e in enumerate(g) if e) + 1 for g in ideal.exps if _is_pure(g)}
    return set(radical_support(ideal)) <= pure


@dataclass(frozen=True)
class PrimaryComponent:
    ideal: MonomialIdeal
    radical: Tuple[int, ...]

    @classmethod
    def of(cls, ideal: MonomialIdeal) -> "PrimaryComponent":
        if not is_primary(ideal):
            raise ValueError(f"({ideal}) is not primary")
        return cls(ideal, radical_support(ideal))


def _drop_redundant(ring: RingContext, comps: List[PrimaryComponent]) -> List[PrimaryComponent]:
    # Largest components (fewest constraints) are tested for removal first.
    order = sorted(range(len(comps)), key=lambda i: (len(comps[i].radical), comps[i].radical, comps[i].ideal.exps))
    alive = set(range(len(comps)))
    for i in order:
        rest = intersect_all(ring, (comps[k].ideal for k in alive if k != i))
        if len(alive) > 1 and rest.is_subset(comps[i].ideal):
            alive.discard(i)
    return [comps[i] for i in range(len(comps)) if i in alive]


def primary_decomposition(ideal: MonomialIdeal) -> List[PrimaryComponent]:
    """Group the irreducible components by radical and intersect each group.

    Components are ordered by decreasing radical, so for a Borel-type ideal
    the radicals are the nested prefixes (x_1..x_{n_0}) ⊋ (x_1..x_{n_1}) ⊋ ...
    """
    groups: Dict[Tuple[int, ...], MonomialIdeal] = {}
    for c in irreducible_decomposition(ideal):
        prev = groups.get(c.support)
        groups[c.support] = c.ideal() if prev is None else prev.intersect(c.ideal())
    comps = [PrimaryComponent(q, sup) for sup, q in groups.items()]
    comps.sort(key=lambda pc: (-len(pc.radical), pc.radical))
    return _drop_redundant(ideal.ring, comps)


primary_decomposition_canonical = primary_decomposition


@dataclass(frozen=True)
class DecompositionVerdict:
    intersection_ok: bool
    primary_ok: bool
    irredundant_ok: bool

    @property
    def ok(self) -> bool:
        return self.intersection_ok and self.primary_ok and self.irredundant_ok


def _as_ideal(c: Union[MonomialIdeal, PrimaryComponent]) -> MonomialIdeal:
    return c.ideal if isinstance(c, PrimaryComponent) else c


def verify_decomposition(
    ideal: MonomialIdeal, components: Sequence[Union[MonomialIdeal, PrimaryComponent]]
) -> DecompositionVerdict:
    """Check that ``components`` intersect to ``ideal``, are each primary, and
    that none of them can be dropped."""
    qs = [_as_ideal(c) for c in components]
    for q in qs:
        if q.ring != ideal.ring:
            raise ValueError("component ring differs from the ideal's ring")
    meet = intersect_all(ideal.ring, qs)
    irredundant = all(
        not intersect_all(ideal.ring, qs[:i] + qs[i + 1:]).is_subset(qs[i]) for i in range(len(qs))
    ) if len(qs) > 1 else bool(qs)
    return DecompositionVerdict(
        intersection_ok=bool(qs) and meet == ideal,
        primary_ok=bool(qs) and all(is_primary(q) for q in qs),
        irredundant_ok=irredundant,
    )


def chained_power_components(
    components: Sequence[Union[MonomialIdeal, PrimaryComponent]], q: int, last_exponent: int
) -> List[MonomialIdeal]:
    """Candidate components Q_1^q, Q_k (Q_1 ∩ ... ∩ Q_k)^(q-1) for 1 < k < r and
    Q_r (Q_1 ∩ ... ∩ Q_r)^last_exponent, for probing a claimed decomposition
    of I^q with :func:`verify_decomposition`."""
    qs = [_as_ideal(c) for c in components]
    if not qs:
        raise ValueError("no components")
    out = [qs[0].power(q)]
    meet = qs[0]
    for k in range(1, len(qs)):
        meet = meet.intersect(qs[k])
        e = last_exponent if k == len(qs) - 1 else q - 1
        out.append(qs[k].multiply(meet.power(e)))
    return out
