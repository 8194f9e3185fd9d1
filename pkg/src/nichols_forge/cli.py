"""Command-line entry point.

Every subcommand prints one JSON report on stdout::

    {"command": ..., "inputs": ..., "results": ..., "timing": ..., "version": ...}

Exit status is 0 on success, 1 when a check fails and 2 on usage errors or
malformed input (in which case only a message on stderr is printed).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from importlib import metadata
from math import factorial
from pathlib import Path

from . import kernels
from .cocycle import (Cocycle, CocycleError, braid_equation_failures, braiding, check_cocycle,
                      constant_cocycle, pairing_identity_failures)
from .fixtures import BUILTIN_NAMES, builtin
from .rack import Rack, RackError, check_rack_axioms, is_faithful, is_indecomposable
from .scalars import parse_scalar, scalar_to_str

log = logging.getLogger("nichols_forge")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# racks larger than this need --long-running for the Groebner engine and chains
DESK_RACK_SIZE = 6


class UsageError(Exception):
    pass


def version() -> str:
    try:
        return metadata.version("artifact")
    except metadata.PackageNotFoundError:
        return "0+unknown"


def _js(v):
    """JSON-friendly exact scalar: ints stay ints, the rest become strings."""
    if isinstance(v, (tuple, list)):
        return [_js(x) for x in v]
    if isinstance(v, bool) or v is None:
        return v
    s = scalar_to_str(v) if not hasattr(v, "terms") else str(v)
    try:
        return int(s)
    except ValueError:
        return s


# inputs

def _read_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except ValueError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


def load_rack(args, inputs: dict) -> Rack:
    if args.builtin:
        inputs["builtin"] = args.builtin
        return _builtin(args.builtin).rack
    if args.rack:
        inputs["rack"] = str(Path(args.rack).resolve())
        try:
            return Rack.from_json(_read_json(args.rack))
        except RackError as exc:
            raise UsageError(str(exc)) from exc
    if args.cocycle:
        return load_cocycle(args, inputs).rack
    raise UsageError("give --builtin or --rack")


def load_cocycle(args, inputs: dict) -> Cocycle:
    if args.builtin:
        inputs["builtin"] = args.builtin
        return _builtin(args.builtin)
    rack = None
    if args.rack:
        inputs["rack"] = str(Path(args.rack).resolve())
        try:
            rack = Rack.from_json(_read_json(args.rack))
        except RackError as exc:
            raise UsageError(str(exc)) from exc
    if args.cocycle:
        inputs["cocycle"] = str(Path(args.cocycle).resolve())
        data = _read_json(args.cocycle)
        if rack is None and "rack" not in data:
            raise UsageError("cocycle file has no rack; pass --rack")
        try:
            return Cocycle.from_json(data, rack)
        except (CocycleError, RackError) as exc:
            raise UsageError(str(exc)) from exc
    if rack is not None:
        inputs["cocycle"] = "constant -1"
        return constant_cocycle(rack, -1)
    raise UsageError("give --builtin, or --rack and/or --cocycle")


def _builtin(name: str) -> Cocycle:
    try:
        return builtin(name)
    except KeyError:
        raise UsageError(f"unknown builtin {name!r}; choose from {', '.join(BUILTIN_NAMES)}") from None


def _gate(args, size: int, what: str) -> None:
    if size > DESK_RACK_SIZE and not args.long_running:
        raise UsageError(f"{what} on a rack of size {size} needs --long-running")


def _params(args):
    if args.params:
        from .lifting import parse_params
        try:
            return parse_params(args.params)
        except ValueError as exc:
            raise UsageError(f"bad --params: {exc}") from exc
    if args.lam is not None:
        return (_scalar(args.lam),)
    return ()


def _scalar(text):
    try:
        return parse_scalar(text).simplify()
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad scalar {text!r}: {exc}") from exc


# subcommands

def cmd_rack(args, inputs):
    r = load_rack(args, inputs)
    ax = check_rack_axioms(r, limit=20)
    res = {"size": r.size, "labels": list(r.labels), "axioms": ax.to_json()}
    if ax.valid:
        res["faithful"] = is_faithful(r)
        res["indecomposable"] = is_indecomposable(r)
    return res, ax.valid


def cmd_cocycle_check(args, inputs):
    q = load_cocycle(args, inputs)
    rep = check_cocycle(q, limit=20)
    res = {"cocycle": rep.to_json()}
    ok = rep.valid
    if ok:
        braid = braid_equation_failures(braiding(q), limit=20)
        pairing = pairing_identity_failures(q)[:20]
        res["braid_equation_failures"] = [list(t) for t in braid]
        res["pairing_identity_failures"] = [list(t) for t in pairing]
        ok = not braid and not pairing
    res["valid"] = ok
    return res, ok


def cmd_relations(args, inputs):
    from . import linalg
    from .quadratic import classify_all, kernel_oracle, quadratic_basis
    q = load_cocycle(args, inputs)
    labels = q.rack.labels
    rels = quadratic_basis(q)
    ker = kernel_oracle(q)
    size = q.rack.size
    vecs = [r.vector(size) for r in rels]
    r_rel = linalg.rank(vecs)
    span_equal = (r_rel == len(rels) == ker.dimension
                  and linalg.rank(vecs + ker.basis) == ker.dimension)
    res = {
        "classes": len(classify_all(q)),
        "admissible": len(rels),
        "relations": [r.label(q.rack) for r in rels],
        "class_sequences": [[labels[x] for x in r.cls.sequence] for r in rels],
        "kernel_dimension": ker.dimension,
        "span_equals_kernel": span_equal,
    }
    return res, span_equal


def cmd_hilbert(args, inputs):
    from .cache import cached_hilbert
    from .ncalg import relations_as_polys
    q = load_cocycle(args, inputs)
    _gate(args, q.rack.size, "the Groebner engine")
    inputs.update({"max_degree": args.max_degree, "threads": args.threads})
    h, basis_size, hit = cached_hilbert(relations_as_polys(q), args.max_degree, q.rack.size, args.threads)
    res = h.to_json()
    res.update({"terminated": h.terminated, "basis_size": basis_size, "cache_hit": hit,
                "kernels": kernels.IMPLEMENTATION})
    return res, True


def cmd_bound(args, inputs):
    from .cache import cached_hilbert
    from .ncalg import relations_as_polys
    q = load_cocycle(args, inputs)
    _gate(args, q.rack.size, "the Groebner engine")
    order = args.group_order
    if order is None:
        if q.rack.elements is None:
            raise UsageError("--group-order is required for racks without a permutation carrier")
        order = factorial(q.rack.elements[0].n)
    inputs.update({"max_degree": args.max_degree, "group_order": order, "threads": args.threads})
    h, _, _ = cached_hilbert(relations_as_polys(q), args.max_degree, q.rack.size, args.threads)
    res = {"hilbert": h.to_json(), "terminated": h.terminated, "group_order": order}
    if not h.terminated:
        res["bound"] = None
        res["error"] = f"Hilbert function does not vanish by degree {args.max_degree}"
        return res, False
    res["bound"] = h.total * order
    return res, True


def cmd_derive(args, inputs):
    from .derivations import (DEFAULT_BUDGET, WITNESS_WORDS, ChainLengthError, TermBudgetExceeded,
                              derivation_chain, find_nonzero_certificate, parse_letters, word_element)
    q = load_cocycle(args, inputs)
    word, chain = args.word, args.chain
    if args.witness:
        if args.witness not in WITNESS_WORDS:
            raise UsageError(f"no witness for n={args.witness}")
        word, chain = WITNESS_WORDS[args.witness]
        inputs["witness"] = args.witness
    if not word:
        raise UsageError("give --word or --witness")
    if q.rack.size > DESK_RACK_SIZE or len(word.replace(" ", "")) > 12:
        _gate(args, max(q.rack.size, DESK_RACK_SIZE + 1), "long derivation chains")
    if args.long_running and args.memory_cap:
        _cap_memory(args.memory_cap)
    budget = args.budget or DEFAULT_BUDGET
    try:
        letters = parse_letters(word, q)
        e = word_element(letters)
        inputs.update({"word": word, "budget": budget})
        if chain:
            inputs["chain"] = chain
            scalar = derivation_chain(q, parse_letters(chain, q), e, budget=budget)
            return {"scalar": _js(scalar), "nonzero": bool(scalar)}, bool(scalar)
        found = find_nonzero_certificate(q, e, budget)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc.args[0] if exc.args else exc)) from exc
    except ChainLengthError as exc:
        raise UsageError(str(exc)) from exc
    except (TermBudgetExceeded, MemoryError) as exc:
        return {"scalar": None, "nonzero": None, "inconclusive": True,
                "reason": str(exc) or type(exc).__name__}, False
    inv = {v: k for k, v in _letter_names(q).items()}
    res = {"found": found.found, "explored_terms": found.explored,
           "chain": "".join(inv[i] for i in found.chain) if found.found else None,
           "scalar": _js(found.scalar), "nonzero": found.found}
    if not found.found:
        res["inconclusive"] = True
    return res, found.found


def _letter_names(q: Cocycle) -> dict:
    from .derivations import TRANSPOSITION_LETTERS
    out = {}
    for ch, lab in TRANSPOSITION_LETTERS.items():
        try:
            out[ch] = q.rack.index(lab)
        except (KeyError, ValueError):
            pass
    return out


def _cap_memory(megabytes: int) -> None:
    try:
        import resource
    except ImportError:
        return
    limit = megabytes * 1024 * 1024
    resource.setrlimit(resource.RLIMIT_AS, (limit, limit))


def cmd_ql(args, inputs):
    from .lifting import LiftingError, family, presentation, validate_ql_datum
    params = _params(args)
    inputs.update({"family": args.family, "n": args.n, "params": _js(params)})
    if args.action == "canon":
        return _canon(args.family, params), True
    try:
        d = family(args.family, args.n, params)
    except LiftingError as exc:
        raise UsageError(str(exc)) from exc
    rep = validate_ql_datum(d)
    if args.action == "validate":
        return rep.to_json(), rep.ok
    if not rep.ok:
        return {"datum": rep.to_json()}, False
    return presentation(d).to_json(), True


def _canon(name, params):
    from .lifting import LiftingError, canonical_parameter
    key = name.lower()
    if key in ("qchi", "q_chi"):
        if len(params) != 1:
            raise UsageError("family Qchi takes one parameter (--lambda)")
        value = canonical_parameter(name, params[0])
    else:
        if len(params) != 2:
            raise UsageError(f"family {name} takes two parameters (--params lambda,gamma)")
        try:
            value = canonical_parameter(name, params)
        except LiftingError as exc:
            raise UsageError(str(exc)) from exc
    return {"canonical": _js(value)}


def cmd_canon(args, inputs):
    params = _params(args)
    inputs.update({"family": args.family, "params": _js(params)})
    return _canon(args.family, params), True


def cmd_verify_rep(args, inputs):
    from .lifting import LiftingError
    from .representations import (RepresentationError, build, check_lifting_conditions,
                                  is_irreducible, verify_presentation)
    lam = _scalar(args.lam) if args.lam is not None else None
    inputs.update({"family": args.family, "n": args.n, "lambda": _js(lam)})
    try:
        m = build(args.family, args.n, lam)
    except (RepresentationError, LiftingError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    rep = verify_presentation(m)
    points = {}
    ok = rep.ok
    for pt in ((1, 0), (0, 1), (1, 1)):
        cond = check_lifting_conditions(m, *pt)
        entry = cond.to_json()
        entry["irreducible"] = is_irreducible(m, *pt)
        points[f"{pt[0]},{pt[1]}"] = entry
        ok = ok and cond.ok_skew
    res = {"module": m.name, "dimension": m.dimension, "presentation": rep.to_json(),
           "conditions": points}
    return res, ok


COMMANDS = {
    "rack": cmd_rack,
    "cocycle-check": cmd_cocycle_check,
    "relations": cmd_relations,
    "hilbert": cmd_hilbert,
    "derive": cmd_derive,
    "ql": cmd_ql,
    "verify-rep": cmd_verify_rep,
    "bound": cmd_bound,
    "canon": cmd_canon,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nichols-forge",
                                description="Nichols algebras over racks: exact computations with JSON reports.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def fixture(sp):
        sp.add_argument("--builtin", choices=BUILTIN_NAMES)
        sp.add_argument("--rack", help="rack JSON file")
        sp.add_argument("--cocycle", help="cocycle JSON file")

    def engine(sp):
        sp.add_argument("--max-degree", type=int, default=13)
        sp.add_argument("--threads", type=int, default=1)
        sp.add_argument("--long-running", action="store_true")

    fixture(sub.add_parser("rack", help="check the rack axioms"))
    fixture(sub.add_parser("cocycle-check", help="cocycle condition, braid equation, pairing"))
    fixture(sub.add_parser("relations", help="quadratic relations against ker(c + id)"))
    sp = sub.add_parser("hilbert", help="Hilbert function of the quadratic algebra")
    fixture(sp)
    engine(sp)
    sp = sub.add_parser("bound", help="dimension bound dim(quadratic algebra) * |G|")
    fixture(sp)
    engine(sp)
    sp.add_argument("--group-order", type=int)
    sp = sub.add_parser("derive", help="evaluate or search derivation chains")
    fixture(sp)
    sp.add_argument("--word", help='letters a..m, e.g. "abacabacdedf"')
    sp.add_argument("--chain", help="derivations, written left to right, applied right to left")
    sp.add_argument("--witness", type=int, help="use the stored witness word and chain for n")
    sp.add_argument("--budget", type=int, help="term cap")
    sp.add_argument("--memory-cap", type=int, default=4096, help="MiB, with --long-running")
    sp.add_argument("--long-running", action="store_true")
    sp = sub.add_parser("ql", help="quadratic lifting data of the named families")
    sp.add_argument("action", choices=("validate", "present", "canon"))
    _family_args(sp)
    sp = sub.add_parser("verify-rep", help="check a representation module")
    _family_args(sp)
    sp = sub.add_parser("canon", help="canonical parameter of a family")
    _family_args(sp)
    return p


def _family_args(sp):
    sp.add_argument("--family", required=True, help="Qminus, Qchi or D")
    sp.add_argument("--n", type=int, default=4)
    sp.add_argument("--params", help="comma separated, e.g. 2,3")
    sp.add_argument("--lambda", dest="lam")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return EXIT_USAGE
    inputs: dict = {}
    start = time.perf_counter()
    try:
        results, ok = COMMANDS[args.command](args, inputs)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = {
        "command": args.command if args.command != "ql" else f"ql {args.action}",
        "inputs": inputs,
        "results": results,
        "timing": {"seconds": round(time.perf_counter() - start, 6)},
        "version": version(),
    }
    print(json.dumps(report, indent=2))
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
