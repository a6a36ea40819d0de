"""Test the chained candidate decomposition of I^q under both exponent readings.

The candidate is Q_1^q ∩ Q_2 (Q_1 ∩ Q_2)^(q-1) ∩ ... ∩ Q_r (Q_1 ∩ ... ∩ Q_r)^e
where the last exponent e is read either as q - 1 or as q.

    python scripts/power_decomposition_probe.py --q 2 --count 50
"""

import argparse
import sys

from borelreg.borel import random_borel_ideal
from borelreg.decomposition import chained_power_components, primary_decomposition, verify_decomposition
from borelreg.ideal import intersect_all
from borelreg.sweep import trial_seeds
from borelreg.worked_examples import two_generator_ideal


READINGS = [(order, last) for order in ("radicals decreasing", "radicals increasing") for last in ("q-1", "q")]


def probe(ideal, q):
    comps = primary_decomposition(ideal)
    power = ideal.power(q)
    out = {}
    for order, last in READINGS:
        ordered = comps if order == "radicals decreasing" else comps[::-1]
        cand = chained_power_components(ordered, q, q - 1 if last == "q-1" else q)
        out[(order, last)] = (intersect_all(ideal.ring, cand) == power, verify_decomposition(power, cand))
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, default=2)
    ap.add_argument("--count", type=int, default=50)
    ap.add_argument("--seed", type=int, default=3)
    args = ap.parse_args(argv)

    I = two_generator_ideal()
    for (order, last), (equal, verdict) in probe(I, args.q).items():
        print(f"(x^2,xy), {order}, last exponent {last}: equals I^q: {equal}; {verdict}")

    hits = dict.fromkeys(READINGS, 0)
    multi = 0
    for i, seed in enumerate(trial_seeds(args.seed, args.count)):
        J = random_borel_ideal(seed, 2 + i % 3)
        if len(primary_decomposition(J)) < 2:
            continue
        multi += 1
        for label, (equal, _) in probe(J, args.q).items():
            hits[label] += equal
    print(f"random ideals with >= 2 primary components: {multi}")
    for (order, last), n in hits.items():
        print(f"  {order}, last exponent {last}: intersection equals I^q in {n}/{multi}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
