"""Report where the smoothness and cocycle checks fail on a corpus.

    python3 scripts/findings.py                 # default corpus
    python3 scripts/findings.py --corpus c.json --json findings.json
"""

import argparse
import json
import logging

from wonderful.corpus import default_corpus, load_corpus
from wonderful.oracle import obstruction, orbit_data, tangent_space, verify_cocycle_basis
from wonderful.rootsystem import root_str

log = logging.getLogger("findings")


def examine(m):
    od = orbit_data(m)
    tan = tangent_space(m, od)
    obs = obstruction(m, od)
    coc = verify_cocycle_basis(m, od, tan, obs)
    d = m.diagram
    bad_phi = [c.to_json(d) for c in coc.checks
               if c.nonzero and c.invariant_degree and not c.is_cocycle]
    return {
        "monoid": m.to_json(),
        "tangent": sorted(list(w) for w in tan.weight_set()),
        "h1": {root_str(k): v for k, v in sorted(obs.h1_dims.items())},
        "kernel": {root_str(k): v for k, v in sorted(obs.kernel_dims.items()) if v},
        "lie_h1": {root_str(k): v for k, v in sorted(obs.h1_lie_dims.items())},
        "smooth": obs.smooth,
        "non_cocycles": bad_phi,
        "spans_h1": coc.spans,
        "rules_agree": all(coc.rules_agree.values()),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--corpus", help="JSON list of monoids; default corpus if omitted")
    ap.add_argument("--json", help="write the full report here")
    ap.add_argument("-v", "--verbose", action="store_true")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(message)s")

    entries = load_corpus(args.corpus) if args.corpus else default_corpus()
    rows = []
    for e in entries:
        log.info("%s", e.monoid)
        rows.append(examine(e.monoid))

    nonsmooth = [r for r in rows if not r["smooth"]]
    noncoc = [r for r in rows if r["non_cocycles"]]
    print(f"{len(rows)} monoids; {len(nonsmooth)} with nonzero obstruction kernel; "
          f"{len(noncoc)} with non-cocycle maps")
    for r in nonsmooth:
        print(f"  kernel  {r['monoid']}  H1={r['h1']}  ker={r['kernel']}")
    for r in noncoc:
        hits = sorted({(c["alpha"], tuple(c["gamma"]), c["r"]) for c in r["non_cocycles"]})
        print(f"  cocycle {r['monoid']}  (alpha, gamma, r)={hits}")
    print(f"span check holds on {sum(r['spans_h1'] for r in rows)}/{len(rows)}; "
          f"r-rules agree on {sum(r['rules_agree'] for r in rows)}/{len(rows)}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=1)


if __name__ == "__main__":
    main()
