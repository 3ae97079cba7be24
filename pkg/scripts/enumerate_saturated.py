"""Enumerate saturated monoids with bounded generator coefficients, run the
tangent-space oracle on each and write the weights as a JSON fixture.

    python3 scripts/enumerate_saturated.py --out tests/data/oracle_weights.json
"""

import argparse
import itertools
import json
import logging
import time

from wonderful.monoids import GeneratorMonoid, is_saturated
from wonderful.oracle import tangent_space
from wonderful.rootsystem import InputError, build_diagram

log = logging.getLogger("enumerate_saturated")

# largest generator coefficient per diagram
BOUNDS = {"A1": 6, "A1xA1": 3, "A2": 3, "B2": 3, "G2": 2, "A3": 2, "B3": 2, "C3": 2,
          "A2xA1": 2, "A1xA1xA1": 2}


def saturated_monoids(spec: str, cmax: int, vmax: int):
    d = build_diagram(spec)
    weights = [w for w in itertools.product(range(cmax + 1), repeat=d.rank) if any(w)]
    for s in range(1, d.rank + 1):
        for gens in itertools.combinations(weights, s):
            try:
                m = GeneratorMonoid(d, gens)
            except InputError:
                continue
            if sum(d.weyl_dimension(g) for g in gens) > vmax or not is_saturated(m):
                continue
            yield m


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="tests/data/oracle_weights.json")
    ap.add_argument("--vmax", type=int, default=300)
    ap.add_argument("--only", nargs="*", help="restrict to these diagrams")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    rows = []
    for spec, cmax in BOUNDS.items():
        if args.only and spec not in args.only:
            continue
        t0 = time.time()
        n0 = len(rows)
        for m in saturated_monoids(spec, cmax, args.vmax):
            rep = tangent_space(m, check_homogeneous=False)
            rows.append({"diagram": spec, "generators": [list(g) for g in m.generators],
                         "weights": sorted(list(w.weight) for w in rep.weights),
                         "multiplicities": [w.multiplicity for w in rep.weights]})
        log.info("%-9s %4d monoids  %.1fs", spec, len(rows) - n0, time.time() - t0)
    with open(args.out, "w") as fh:
        json.dump(rows, fh, indent=0)
    log.info("wrote %d entries to %s", len(rows), args.out)


if __name__ == "__main__":
    main()
