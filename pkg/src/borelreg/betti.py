"""Graded Betti numbers of monomial ideals from upper Koszul simplicial complexes.

beta_{i,b}(I) = dim H~_{i-1}(K^b(I); Q) where K^b(I) is the complex of
squarefree F with x^(b-F) in I. This is deliberately slow and exact; it is
the referee for the combinatorial regularity formulas in :mod:`borelreg.borel`.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .ideal import MonomialIdeal
from .monomial import Monomial

VERTEX_CAP = 12
MAX_VARS = 6
MAX_EXPONENT = 12


class CapExceededError(ValueError):
    pass


Face = FrozenSet[int]


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex on vertices 0..vertex_count-1, stored by its facets.

    ``facets == ()`` is the void complex; ``(frozenset(),)`` is {∅}.
    """

    vertex_count: int
    facets: Tuple[Face, ...]

    def __post_init__(self):
        if self.vertex_count > VERTEX_CAP:
            raise CapExceededError(f"{self.vertex_count} vertices exceeds cap {VERTEX_CAP}")
        facets = {frozenset(f) for f in self.facets}
        for f in facets:
            if any(v < 0 or v >= self.vertex_count for v in f):
                raise ValueError(f"face {sorted(f)} uses a vertex outside 0..{self.vertex_count - 1}")
        maximal = [f for f in facets if not any(f < g for g in facets)]
        object.__setattr__(self, "facets", tuple(sorted(maximal, key=lambda f: (len(f), sorted(f)))))

    @classmethod
    def from_faces(cls, vertex_count: int, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Build from an explicit face list, which must be closed under subsets."""
        faces = {frozenset(f) for f in faces}
        for f in faces:
            for v in f:
                if f - {v} not in faces:
                    raise ValueError(f"face set is not closed: {sorted(f)} lacks {sorted(f - {v})}")
        return cls(vertex_count, tuple(faces))

    def is_void(self) -> bool:
        return not self.facets

    def faces(self, dim: int) -> List[Tuple[int, ...]]:
        """Faces of the given dimension (``dim = -1`` is the empty face)."""
        out = set()
        for f in self.facets:
            if len(f) >= dim + 1:
                out.update(itertools.combinations(sorted(f), dim + 1))
        return sorted(out)

    @property
    def dimension(self) -> int:
        return max((len(f) - 1 for f in self.facets), default=-2)


def integer_rank(rows: List[List[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in rows if any(r)]
    if not a:
        return 0
    m, n = len(a), len(a[0])
    rank, prev = 0, 1
    for col in range(n):
        pivot = next((r for r in range(rank, m) if a[r][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, m):
            f = a[r][col]
            a[r] = [(p * a[r][c] - f * a[rank][c]) // prev for c in range(n)]
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def _boundary_rank(cx: SimplicialComplex, dim: int) -> int:
    # rank of d_dim : C_dim -> C_{dim-1}; d_0 is the augmentation onto the empty face.
    if dim < 0:
        return 0
    lower = {f: i for i, f in enumerate(cx.faces(dim - 1))}
    upper = cx.faces(dim)
    if not lower or not upper:
        return 0
    rows = [[0] * len(upper) for _ in lower]
    for j, f in enumerate(upper):
        for k in range(len(f)):
            rows[lower[f[:k] + f[k + 1:]]][j] = -1 if k % 2 else 1
    return integer_rank(rows)


def reduced_homology_rank(cx: SimplicialComplex, dim: int) -> int:
    """dim of the reduced homology H~_dim(cx; Q)."""
    if dim < -1:
        raise ValueError("reduced homology starts in dimension -1")
    if cx.is_void():
        return 0
    chains = len(cx.faces(dim))
    return chains - _boundary_rank(cx, dim) - _boundary_rank(cx, dim + 1)


def upper_koszul_complex(ideal: MonomialIdeal, b) -> SimplicialComplex:
    """K^b(I) = {F ⊆ supp(b) squarefree : x^(b - F) in I}; vertex t is x_{t+1}."""
    b = tuple(b.exps if isinstance(b, Monomial) else b)
    box = ideal.lcm_exps()
    if len(b) != ideal.ring.n or any(e < 0 or e > top for e, top in zip(b, box)):
        raise ValueError(f"multidegree {b} lies outside the lcm box {box}")
    sup = [t for t, e in enumerate(b) if e]
    faces = []
    for k in range(len(sup) + 1):
        for f in itertools.combinations(sup, k):
            u = list(b)
            for t in f:
                u[t] -= 1
            if ideal.contains(tuple(u)):
                faces.append(frozenset(f))
    return SimplicialComplex(ideal.ring.n, tuple(faces))


@dataclass
class BettiTable:
    """beta_{i,j}(I) keyed by (homological index i, total degree j)."""

    entries: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, key: Tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def regularity(self) -> int:
        if not self.entries:
            raise ValueError("the zero ideal has no regularity")
        return max(j - i for (i, j) in self.entries)

    def total(self, i: int) -> int:
        return sum(v for (k, _), v in self.entries.items() if k == i)


def multigraded_betti_numbers(ideal: MonomialIdeal, caps: bool = True) -> Dict[Tuple[Tuple[int, ...], int], int]:
    """Nonzero beta_{i,b}(I) keyed by (b, i)."""
    if ideal.is_zero():
        return {}
    n = ideal.ring.n
    if caps and (n > MAX_VARS or max(ideal.lcm_exps()) > MAX_EXPONENT):
        raise CapExceededError(f"oracle caps are n <= {MAX_VARS}, exponents <= {MAX_EXPONENT}")
    # Betti multidegrees are lcms of generators, so every coordinate of b is
    # 0 or an exponent that some generator carries in that variable.
    axes = [sorted({0} | {g[t] for g in ideal.exps}) for t in range(n)]
    out = {}
    for b in itertools.product(*axes):
        if not ideal.contains(b):
            continue
        cx = upper_koszul_complex(ideal, b)
        for d in range(-1, cx.dimension + 1):
            r = reduced_homology_rank(cx, d)
            if r:
                out[(b, d + 1)] = r
    return out


def betti_numbers(ideal: MonomialIdeal, caps: bool = True) -> BettiTable:
    table: Dict[Tuple[int, int], int] = defaultdict(int)
    for (b, i), v in multigraded_betti_numbers(ideal, caps).items():
        table[(i, sum(b))] += v
    return BettiTable(dict(table))


def regularity_oracle(ideal: MonomialIdeal, caps: bool = True) -> int:
    """max{j - i : beta_{i,j}(I) != 0}."""
    return betti_numbers(ideal, caps).regularity()
