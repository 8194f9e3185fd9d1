"""Built-in (rack, cocycle) pairs."""

from __future__ import annotations

from functools import lru_cache

from .cocycle import Cocycle, chi_cocycle, constant_cocycle
from .perm import Perm, transposition
from .rack import Rack, conjugacy_class_rack

BUILTIN_NAMES = (
    "O2_3_minus",
    "O2_4_minus",
    "O2_4_chi",
    "O4_4_minus",
    "O2_5_minus",
    "O2_5_chi",
)


@lru_cache(maxsize=None)
def transpositions(n: int) -> Rack:
    return conjugacy_class_rack(n, transposition(n, 1, 2))


@lru_cache(maxsize=None)
def four_cycles() -> Rack:
    return conjugacy_class_rack(4, Perm.from_cycles(4, [(1, 2, 3, 4)]))


@lru_cache(maxsize=None)
def builtin(name: str) -> Cocycle:
    """Resolve ``O2_4_chi`` style names to a cocycle (which carries its rack)."""
    try:
        kind, n, cocycle = name.split("_")
        n = int(n)
    except ValueError:
        raise KeyError(f"unknown builtin {name!r}; choose from {', '.join(BUILTIN_NAMES)}") from None
    if kind == "O2":
        rack = transpositions(n)
    elif kind == "O4" and n == 4:
        rack = four_cycles()
    else:
        raise KeyError(f"unknown builtin {name!r}")
    if cocycle == "minus":
        return constant_cocycle(rack, -1)
    if cocycle == "chi" and kind == "O2":
        return chi_cocycle(n)
    raise KeyError(f"unknown builtin {name!r}")


def group_degree(q: Cocycle) -> int:
    if q.rack.elements is None:
        raise ValueError("rack has no permutation carrier")
    return q.rack.elements[0].n
