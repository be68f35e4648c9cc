"""The category of Latin hypercubes of a fixed dimension, in normal
form: homomorphism checking and automorphism groups of the defining
operations."""
from __future__ import annotations

import itertools
import math

from .core import CeilingError, LatinOp, ValidationError

DEFAULT_AUTO_CEILING = 8


def is_homomorphism(iota, g: LatinOp, f: LatinOp) -> bool:
    """True iff iota(g(y_1..y_d)) = f(iota(y_1)..iota(y_d)) for all inputs.

    iota is a total map [0, g.n) -> [0, f.n) given as a sequence.
    """
    if g.d != f.d:
        raise ValidationError(f"degree mismatch: {g.d} != {f.d}")
    iota = tuple(iota)
    if len(iota) != g.n:
        raise ValidationError(f"map has {len(iota)} entries, expected {g.n}")
    for v in iota:
        if not isinstance(v, int) or not 0 <= v < f.n:
            raise ValidationError(f"map value {v!r} out of range [0, {f.n})")
    for args in g.arg_tuples():
        if iota[g(*args)] != f(*(iota[y] for y in args)):
            return False
    return True


def automorphisms(f: LatinOp, ceiling: int = DEFAULT_AUTO_CEILING) -> list:
    """All carrier bijections iota with iota o f = f o iota^(x d).

    Returned in lexicographic one-line-notation order; the result is a
    subgroup of the symmetric group (asserted).
    """
    n = f.n
    if n > ceiling:
        raise CeilingError(
            f"carrier order {n} exceeds the automorphism-scan ceiling {ceiling}"
        )
    found = []
    for iota in itertools.permutations(range(n)):
        ok = True
        for args in f.arg_tuples():
            if iota[f(*args)] != f(*(iota[y] for y in args)):
                ok = False
                break
        if ok:
            found.append(iota)
    group = set(found)
    for a in found:
        inv = [0] * n
        for x in range(n):
            inv[a[x]] = x
        if tuple(inv) not in group:
            raise AssertionError("automorphism set not closed under inversion")
        for b in found:
            if tuple(a[b[x]] for x in range(n)) not in group:
                raise AssertionError("automorphism set not closed under composition")
    return found
