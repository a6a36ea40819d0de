"""Borel-type ideals: recognition, sequential chains and regularity.

Two independent routes compute the Castelnuovo-Mumford regularity of a
Borel-type ideal:

* :func:`regularity_seq` walks the sequential chain I = I_0 ⊂ I_1 ⊂ ... ⊂ S,
  with I_{i+1} = (I_i : x_{n_i}^inf), and returns 1 + max_i s(J_i^sat / J_i);
* :func:`regularity_irr` reads it off the irredundant irreducible
  decomposition as max(sum(a) - r + 1) over the components.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .decomposition import (
    PrimaryComponent,
    associated_primes,
    irreducible_decomposition,
    primary_decomposition,
    verify_decomposition,
)
from .ideal import MonomialIdeal, intersect_all, minimalize
from .monomial import Exps, RingContext

logger = logging.getLogger(__name__)

#: Upper bound on q, so bracket-scaled exponents stay small.
Q_CAP = 16
#: Box volume above which the enumeration route of s(J^sat/J) is skipped.
BOX_LIMIT = 30_000_000


class NotBorelTypeError(ValueError):
    pass


class CrossCheckError(RuntimeError):
    """Two independent computations of the same quantity disagreed."""


class InvalidDecompositionError(ValueError):
    pass


def _require_nonzero(ideal: MonomialIdeal) -> None:
    if ideal.is_zero():
        raise ValueError("Borel-type predicates are undefined for the zero ideal")


def is_borel_type(ideal: MonomialIdeal) -> bool:
    """(I : x_i^inf) ⊆ (I : x_j^inf) for all j < i."""
    _require_nonzero(ideal)
    sats = [ideal.saturate_variable(j) for j in range(1, ideal.ring.n + 1)]
    return all(sats[i].is_subset(sats[j]) for i in range(len(sats)) for j in range(i))


def is_borel_type_star(ideal: MonomialIdeal) -> bool:
    """(I : x_j^inf) = (I : (x_1, ..., x_j)^inf) for all j."""
    _require_nonzero(ideal)
    return all(
        ideal.saturate_variable(j) == ideal.saturate_prefix(j) for j in range(1, ideal.ring.n + 1)
    )


def is_borel_type_ass(ideal: MonomialIdeal) -> bool:
    """Every associated prime is (x_1, ..., x_m) for some m."""
    _require_nonzero(ideal)
    if ideal.is_unit():
        return True
    return all(sup == tuple(range(1, len(sup) + 1)) for sup in associated_primes(ideal))


# -- sequential chain -----------------------------------------------------


@dataclass(frozen=True)
class ChainLink:
    ideal: MonomialIdeal
    cut_index: int

    def restricted(self) -> MonomialIdeal:
        """J_i: the generators of I_i read in K[x_1..x_{n_i}]."""
        return self.ideal.restrict(self.cut_index)


@dataclass(frozen=True)
class SequentialChain:
    links: Tuple[ChainLink, ...]
    terminal: MonomialIdeal

    def __len__(self) -> int:
        return len(self.links)

    def __iter__(self):
        return iter(self.links)

    @property
    def ideals(self) -> List[MonomialIdeal]:
        return [link.ideal for link in self.links] + [self.terminal]

    @property
    def cut_indices(self) -> List[int]:
        return [link.cut_index for link in self.links]


def sequential_chain(ideal: MonomialIdeal, check: bool = True) -> SequentialChain:
    if not ideal.is_proper():
        raise ValueError("the sequential chain needs a proper nonzero ideal")
    if check and not is_borel_type(ideal):
        raise NotBorelTypeError(f"({ideal}) is not of Borel type; try reorder_to_borel")
    links = []
    cur = ideal
    while not cur.is_unit():
        cut = cur.max_var_index()
        nxt = cur.saturate_variable(cut)
        if nxt == cur:
            # Cannot happen for minimal generators; kept as a guard.
            logger.warning("duplicate chain link skipped at x_%d for (%s)", cut, cur)
            break
        links.append(ChainLink(cur, cut))
        cur = nxt
    return SequentialChain(tuple(links), cur)


# -- top degree of J^sat / J ----------------------------------------------


def _top_standard(gens: Tuple[Exps, ...], memo: Dict) -> Optional[int]:
    """Largest degree of a monomial outside an m-primary ideal (``None`` if
    the ideal is the unit ideal).

    Slices along the last variable: x^w * x_n^e lies outside K iff x^w lies
    outside K_e = (generators with x_n-exponent <= e, x_n dropped). K_e only
    changes where some generator's x_n-exponent starts, so each constant run
    of e contributes its largest e.
    """
    hit = memo.get(gens, memo)
    if hit is not memo:
        return hit
    if any(not any(g) for g in gens):
        out = None
    elif len(gens[0]) == 1:
        out = gens[0][0] - 1
    else:
        cuts = sorted({g[-1] for g in gens})
        if cuts[0] != 0:
            raise ValueError("ideal is not primary to the maximal ideal")
        out = None
        for lo, hi in zip(cuts, cuts[1:]):
            sub = minimalize(g[:-1] for g in gens if g[-1] <= lo)
            t = _top_standard(sub, memo)
            if t is not None and (out is None or hi - 1 + t > out):
                out = hi - 1 + t
    memo[gens] = out
    return out


def top_standard_degree(ideal: MonomialIdeal) -> Optional[int]:
    """s(S/K) for an m-primary monomial ideal K."""
    if ideal.is_zero():
        raise ValueError("S/0 is not artinian")
    n = ideal.ring.n
    pure = {next(i for i, e in enumerate(g) if e) for g in ideal.exps if sum(1 for e in g if e) == 1}
    if not ideal.is_unit() and len(pure) < n:
        raise ValueError("ideal is not primary to the maximal ideal")
    return _top_standard(ideal.exps, {})


def _s_by_generators(J: MonomialIdeal, sat: MonomialIdeal) -> Optional[int]:
    # For each g in G(J^sat): j_g = min{j : m^j g ⊆ J} = 1 + s(S/(J : g)), and
    # the monomials g*w of J^sat \ J top out at deg(g) + j_g - 1.
    best = None
    memo: Dict = {}
    for g in sat.exps:
        if J.contains(g):
            continue
        t = _top_standard(J.colon(g).exps, memo)
        cand = sum(g) + t
        if best is None or cand > best:
            best = cand
    return best


def _membership_grid(gens: Sequence[Exps], dims: Tuple[int, ...]) -> np.ndarray:
    grid = np.zeros(dims, dtype=bool)
    for g in gens:
        if all(e < d for e, d in zip(g, dims)):
            grid[g] = True
    for axis in range(len(dims)):
        np.logical_or.accumulate(grid, axis=axis, out=grid)
    return grid


def _s_by_box(J: MonomialIdeal, sat: MonomialIdeal) -> Optional[int]:
    # Every monomial of J^sat \ J has x_t-exponent below the largest x_t-exponent
    # in G(J); otherwise multiplying by x_t could never bring it into J.
    dims = tuple(J.lcm_exps())
    if 0 in dims:
        return None
    diff = _membership_grid(sat.exps, dims) & ~_membership_grid(J.exps, dims)
    if not diff.any():
        return None
    deg = sum(
        np.arange(d, dtype=np.int64).reshape([d if a == t else 1 for a in range(len(dims))])
        for t, d in enumerate(dims)
    )
    return int(np.broadcast_to(deg, dims)[diff].max())


def sat_quotient_top_degree(J: MonomialIdeal, method: str = "both") -> Optional[int]:
    """s(J^sat / J): the top degree of a monomial in J^sat \\ J.

    ``method`` is ``"generators"`` (per-generator annihilation degree),
    ``"box"`` (enumeration under the generator exponent box) or ``"both"``,
    which runs the two and raises :class:`CrossCheckError` if they differ.
    Returns ``None`` when J is saturated (the quotient is zero).
    """
    if not J.is_proper():
        raise ValueError("J must be proper and nonzero")
    sat = J.saturate()
    if method == "generators":
        return _s_by_generators(J, sat)
    volume = int(np.prod(J.lcm_exps(), dtype=np.float64))
    if method == "box":
        if volume > BOX_LIMIT:
            raise ValueError(f"exponent box of {volume} cells exceeds {BOX_LIMIT}")
        return _s_by_box(J, sat)
    if method != "both":
        raise ValueError(f"unknown method {method!r}")
    a = _s_by_generators(J, sat)
    if volume > BOX_LIMIT:
        logger.info("box route skipped for a %d-cell box", volume)
        return a
    b = _s_by_box(J, sat)
    if a != b:
        raise CrossCheckError(f"s(J^sat/J) for ({J}): generator route {a}, box route {b}")
    return a


# -- regularity -----------------------------------------------------------


def chain_s_values(ideal: MonomialIdeal, method: str = "both") -> List[Optional[int]]:
    """s(J_i^sat / J_i) for every link of the sequential chain."""
    return [sat_quotient_top_degree(link.restricted(), method) for link in sequential_chain(ideal)]


def regularity_seq(ideal: MonomialIdeal, method: str = "both") -> int:
    s = [v for v in chain_s_values(ideal, method) if v is not None]
    if not s:
        raise ValueError(f"every chain quotient of ({ideal}) is zero")
    return max(s) + 1


def regularity_irr(ideal: MonomialIdeal) -> int:
    if not is_borel_type(ideal):
        raise NotBorelTypeError(f"({ideal}) is not of Borel type")
    return max(c.regularity() for c in irreducible_decomposition(ideal))


def bracket_regularity_from_components(ideal: MonomialIdeal, q: int) -> int:
    """reg(I^[q]) as max(q * sum(a) - r + 1) over the irreducible components of I."""
    return max(
        q * sum(c.exps) - len(c.support) + 1 for c in irreducible_decomposition(ideal)
    )


def symbolic_power(
    ideal: MonomialIdeal, q: int, decomposition: Optional[Sequence] = None
) -> MonomialIdeal:
    """I^(q) = ∩ Q_i^q over a primary decomposition (canonical by default)."""
    if q < 1:
        raise ValueError("symbolic power needs q >= 1")
    comps = _resolve_decomposition(ideal, decomposition)
    return intersect_all(ideal.ring, (c.ideal.power(q) for c in comps))


def _resolve_decomposition(ideal: MonomialIdeal, decomposition) -> List[PrimaryComponent]:
    if decomposition is None:
        return primary_decomposition(ideal)
    comps = [c if isinstance(c, PrimaryComponent) else PrimaryComponent.of(c) for c in decomposition]
    verdict = verify_decomposition(ideal, comps)
    if not verdict.ok:
        raise InvalidDecompositionError(f"not an irredundant primary decomposition: {verdict}")
    return comps


@dataclass(frozen=True)
class RegularityReport:
    ideal_id: str
    n: int
    q: int
    reg_i: int
    reg_power: int
    reg_symbolic: int
    reg_bracket: int
    s_values: Tuple[Optional[int], ...] = ()
    decomposition: Tuple[PrimaryComponent, ...] = field(default=(), compare=False)

    @property
    def thm23(self) -> bool:
        return self.reg_symbolic <= self.q * self.reg_i

    @property
    def thm25(self) -> bool:
        return self.reg_bracket >= self.q * self.reg_i

    @property
    def prop210(self) -> bool:
        return self.reg_bracket <= self.q * self.reg_i + (self.q - 1) * (self.n - 1)

    @property
    def mir_power(self) -> bool:
        return self.reg_power <= self.q * self.reg_i

    @property
    def all_hold(self) -> bool:
        return self.thm23 and self.thm25 and self.prop210 and self.mir_power


def _checked_regularity(ideal: MonomialIdeal, label: str, cross_check: bool) -> int:
    r = regularity_seq(ideal)
    if cross_check:
        r2 = regularity_irr(ideal)
        if r != r2:
            raise CrossCheckError(f"reg of {label} ({ideal}): chain {r}, components {r2}")
    return r


def regularity_bundle(
    ideal: MonomialIdeal,
    q: int,
    decomposition: Optional[Sequence] = None,
    ideal_id: str = "",
    cross_check: bool = True,
) -> RegularityReport:
    """reg of I, I^q, I^(q), I^[q] and the four bound verdicts."""
    if not 1 <= q <= Q_CAP:
        raise ValueError(f"q must lie in 1..{Q_CAP}")
    comps = _resolve_decomposition(ideal, decomposition)
    return RegularityReport(
        ideal_id=ideal_id or str(ideal),
        n=ideal.ring.n,
        q=q,
        reg_i=_checked_regularity(ideal, "I", cross_check),
        reg_power=_checked_regularity(ideal.power(q), "I^q", cross_check),
        reg_symbolic=_checked_regularity(symbolic_power(ideal, q, comps), "I^(q)", cross_check),
        reg_bracket=_checked_regularity(ideal.bracket_power(q), "I^[q]", cross_check),
        s_values=tuple(chain_s_values(ideal)),
        decomposition=tuple(comps),
    )


# -- relabelling ----------------------------------------------------------


def reorder_to_borel(ideal: MonomialIdeal) -> Optional[Tuple[Tuple[int, ...], MonomialIdeal]]:
    """If Ass(S/I) is totally ordered by inclusion, a permutation ``perm``
    (new x_i is old x_{perm[i-1]}) and the relabelled Borel-type ideal."""
    if not ideal.is_proper():
        raise ValueError("reordering needs a proper nonzero ideal")
    sups = [set(s) for s in associated_primes(ideal)]
    if any(not a <= b for a, b in zip(sups, sups[1:])):
        return None
    order: List[int] = []
    for s in sups:
        order.extend(sorted(s - set(order)))
    order.extend(j for j in range(1, ideal.ring.n + 1) if j not in order)
    perm = tuple(order)
    relabelled = ideal.permute(perm)
    if not is_borel_type(relabelled):
        raise CrossCheckError(f"relabelled ideal ({relabelled}) is not of Borel type")
    return perm, relabelled


# -- random inputs --------------------------------------------------------


def random_borel_ideal(
    seed,
    n: int,
    max_components: int = 4,
    max_exponent: int = 6,
    max_irreducibles: int = 2,
) -> MonomialIdeal:
    """Intersection of random irreducible ideals over a strictly decreasing
    sequence of prefix supports; Borel type by construction."""
    if min(n, max_components, max_exponent, max_irreducibles) < 1:
        raise ValueError("random_borel_ideal parameters must be positive")
    rng = random.Random(seed)
    ring = RingContext(n)
    k = rng.randint(1, min(max_components, n))
    sizes = sorted(rng.sample(range(1, n + 1), k), reverse=True)
    comps = []
    for m in sizes:
        for _ in range(rng.randint(1, max_irreducibles)):
            exps = [rng.randint(1, max_exponent) for _ in range(m)] + [0] * (n - m)
            comps.append(MonomialIdeal(ring, [ring.var(j + 1, a).exps for j, a in enumerate(exps) if a]))
    return intersect_all(ring, comps)


def random_monomial_ideal(seed, n: int, max_gens: int = 5, max_exponent: int = 4) -> MonomialIdeal:
    """A proper nonzero monomial ideal with random generators."""
    rng = random.Random(seed)
    ring = RingContext(n)
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        g = [rng.randint(0, max_exponent) if rng.random() < 0.6 else 0 for _ in range(n)]
        if not any(g):
            g[rng.randrange(n)] = rng.randint(1, max_exponent)
        gens.append(tuple(g))
    return MonomialIdeal(ring, gens)
