"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--json out.json]

Each case runs once per implementation to check that results agree, then is
timed ``--repeat`` times; the best time is reported.
"""

from __future__ import annotations

import argparse
import json
import time

from nichols_forge import kernels
from nichols_forge.derivations import WITNESS_WORDS, derivation_chain, parse_letters, word_element
from nichols_forge.fixtures import builtin
from nichols_forge.ncalg import hilbert_of


def gb_case(name: str, D: int = 13):
    q = builtin(name)

    def run(impl):
        return hilbert_of(q, D, impl=impl)[0].dims
    return f"groebner {name} D={D}", run


def chain_case():
    q = builtin("O2_4_chi")
    word, chain = WITNESS_WORDS[4]
    e = word_element(parse_letters(word, q))
    letters = parse_letters(chain, q)

    def run(impl):
        # derivation_chain uses the selected module; swap it in for the run
        saved = kernels.delta
        kernels.delta = impl.delta
        try:
            return derivation_chain(q, letters, e)
        finally:
            kernels.delta = saved
    return "derivation chain n=4", run


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", help="also write the results here")
    args = ap.parse_args(argv)
    impls = kernels.available()
    if "cython" not in impls:
        print("compiled kernels not built; timing the fallback only")
    cases = [gb_case("O2_3_minus"), gb_case("O2_4_minus"), gb_case("O2_4_chi"),
             gb_case("O4_4_minus"), gb_case("O2_5_minus", 8), chain_case()]
    rows = []
    for label, run in cases:
        outputs = {name: run(mod) for name, mod in impls.items()}
        agree = len({repr(v) for v in outputs.values()}) == 1
        times = {name: best_of(lambda m=mod: run(m), args.repeat) for name, mod in impls.items()}
        rows.append({"case": label, "agree": agree, "seconds": times})
    print(f"{'case':30} {'python':>10} {'cython':>10} {'speedup':>8}  agree")
    for r in rows:
        py = r["seconds"]["python"]
        cy = r["seconds"].get("cython")
        speed = f"{py / cy:7.2f}x" if cy else "     n/a"
        cy_s = f"{cy:10.4f}" if cy else "       n/a"
        print(f"{r['case']:30} {py:10.4f} {cy_s} {speed}  {r['agree']}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)
    return 0 if all(r["agree"] for r in rows) else 1


if __name__ == "__main__":
    raise SystemExit(main())
