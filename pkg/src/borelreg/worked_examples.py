"""Golden fixtures: three small ideals whose regularity data is known by hand."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List

from .borel import chain_s_values, regularity_irr, regularity_seq, sequential_chain, symbolic_power
from .decomposition import associated_primes
from .ideal import MonomialIdeal
from .monomial import RingContext
from .text import parse_ideal

XY = RingContext(2, ("x", "y"))
XYZ = RingContext(3, ("x", "y", "z"))


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        if self.ok:
            return f"PASS {self.name}"
        return f"FAIL {self.name}" + (f" ({self.detail})" if self.detail else "")


def _eq(name: str, got, want) -> Check:
    return Check(name, got == want, f"got {got}, expected {want}")


# (x^2, xy) = (x) ∩ (x^2, y) in K[x, y]
def two_generator_ideal() -> MonomialIdeal:
    return parse_ideal(XY, "x^2, x*y")


# Q = (x^10, x^6y^3, x^2y^7, y^8); I = (Q, z^2) ∩ (Q + (x^4y^6)) in K[x, y, z]
def staircase_q() -> MonomialIdeal:
    return parse_ideal(XYZ, "x^10, x^6*y^3, x^2*y^7, y^8")


def staircase_q_prime() -> MonomialIdeal:
    return staircase_q() + parse_ideal(XYZ, "x^4*y^6")


def staircase_ideal() -> MonomialIdeal:
    return parse_ideal(XYZ, "x^10, x^6*y^3, x^2*y^7, y^8, x^4*y^6*z^2")


def staircase_decomposition() -> List[MonomialIdeal]:
    return [staircase_q() + parse_ideal(XYZ, "z^2"), staircase_q_prime()]


def staircase_q_squared() -> MonomialIdeal:
    # x^6*y^11 = (x^6*y^3)(y^8) is a minimal generator and easy to overlook.
    return parse_ideal(
        XYZ, "x^20, x^16*y^3, x^12*y^6, x^10*y^8, x^8*y^10, x^6*y^11, x^4*y^14, x^2*y^15, y^16"
    )


def checks_two_generator(qmax: int = 5) -> List[Check]:
    I = two_generator_ideal()
    out = [
        _eq("(x^2,xy): chain", [str(J) for J in sequential_chain(I).ideals], ["x^2, x*y", "x", "1"]),
        _eq("(x^2,xy): reg", regularity_seq(I), 2),
        _eq("(x^2,xy): reg via components", regularity_irr(I), 2),
        _eq("(x^2,xy): s(J_0^sat/J_0)", chain_s_values(I)[0], 1),
    ]
    for q in range(1, qmax + 1):
        out += [
            _eq(f"(x^2,xy) q={q}: reg I^q", regularity_seq(I.power(q)), 2 * q),
            _eq(f"(x^2,xy) q={q}: reg I^(q)", regularity_seq(symbolic_power(I, q)), 2 * q),
            _eq(f"(x^2,xy) q={q}: reg I^[q]", regularity_seq(I.bracket_power(q)), 3 * q - 1),
            _eq(f"(x^2,xy) q={q}: s-values of I^[q]", chain_s_values(I.bracket_power(q)), [3 * q - 2, q - 1]),
        ]
    return out


def checks_staircase() -> List[Check]:
    I = staircase_ideal()
    sym = symbolic_power(I, 2, staircase_decomposition())
    return [
        _eq("staircase: reg I", regularity_seq(I), 13),
        _eq("staircase: Ass(S/I)", associated_primes(I), [(1, 2), (1, 2, 3)]),
        _eq("staircase: Q'^2 = Q^2", staircase_q_prime().power(2), staircase_q().power(2)),
        _eq("staircase: I^(2) = Q^2", str(sym), str(staircase_q_squared())),
        _eq("staircase: reg I^(2)", regularity_seq(sym), 22),
        _eq("staircase: Ass(S/I^(2))", associated_primes(sym), [(1, 2)]),
    ]


def pure_power_ideal(a) -> MonomialIdeal:
    ring = RingContext(len(a))
    return MonomialIdeal(ring, [ring.var(j + 1, e).exps for j, e in enumerate(a)])


def checks_pure_powers(max_vars: int = 3, max_exp: int = 4, qmax: int = 3) -> List[Check]:
    """reg of (x_1^{a_1}, ..., x_m^{a_m}) and of its powers, a_1 >= ... >= a_m."""
    bad = []
    count = 0
    for m in range(1, max_vars + 1):
        for a in itertools.product(range(max_exp, 0, -1), repeat=m):
            if list(a) != sorted(a, reverse=True):
                continue
            Q = pure_power_ideal(a)
            reg_q = regularity_seq(Q)
            if reg_q != sum(a) - m + 1:
                bad.append(f"reg{a}={reg_q}")
            for q in range(1, qmax + 1):
                count += 1
                reg_pow = regularity_seq(Q.power(q))
                if reg_pow != q * a[0] + sum(a[1:]) - m + 1:
                    bad.append(f"reg{a}^{q}={reg_pow}")
                # Q^1 = Q, so the equality criterion is only informative for q >= 2.
                if q >= 2 and (reg_pow == q * reg_q) != all(x == 1 for x in a[1:]):
                    bad.append(f"equality{a}^{q}")
    return [Check(f"pure powers: {count} cases", not bad, ", ".join(bad[:5]))]


def run_all() -> List[Check]:
    return checks_two_generator() + checks_staircase() + checks_pure_powers()
