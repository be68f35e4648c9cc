import itertools
import random

import pytest

from latinop import (
    CeilingError,
    LatinOp,
    ValidationError,
    automorphisms,
    is_homomorphism,
)
from latinop.enumeration import enumerate_all, random_latin

from oracles import cyclic_table, euler_phi


def add_mod(n):
    return LatinOp(n, 2, cyclic_table(n))


def test_identity_is_homomorphism():
    f = add_mod(4)
    assert is_homomorphism(range(4), f, f)


def test_unit_multiplier_is_homomorphism():
    f = add_mod(4)
    assert is_homomorphism(tuple(3 * x % 4 for x in range(4)), f, f)


def test_translation_is_not_homomorphism():
    f = add_mod(4)
    iota = tuple((x + 1) % 4 for x in range(4))
    assert not is_homomorphism(iota, f, f)
    # witness at (0, 0): iota(0+0) = 1 but iota(0)+iota(0) = 2
    assert iota[f(0, 0)] != f(iota[0], iota[0])


def test_homomorphism_between_different_orders():
    # doubling embeds Z/2 into Z/4
    g = add_mod(2)
    f = add_mod(4)
    assert is_homomorphism((0, 2), g, f)
    assert not is_homomorphism((0, 1), g, f)


def test_homomorphism_validation():
    f = add_mod(3)
    with pytest.raises(ValidationError):
        is_homomorphism((0, 1), f, f)
    with pytest.raises(ValidationError):
        is_homomorphism((0, 1, 7), f, f)
    with pytest.raises(ValidationError):
        is_homomorphism((0, 1, 2), f, LatinOp(3, 1, (0, 1, 2)))


def test_homomorphisms_compose_sampled():
    rng = random.Random(2)
    f = add_mod(4)
    maps = [tuple(k * x % 4 for x in range(4)) for k in (1, 3)]
    for _ in range(20):
        iota = rng.choice(maps)
        kappa = rng.choice(maps)
        assert is_homomorphism(iota, f, f)
        assert is_homomorphism(kappa, f, f)
        composed = tuple(kappa[iota[x]] for x in range(4))
        assert is_homomorphism(composed, f, f)


def test_automorphisms_of_cyclic_tables_are_unit_multipliers():
    for n in range(1, 9):
        autos = automorphisms(add_mod(n))
        assert len(autos) == euler_phi(n)
        expected = sorted(
            tuple(k * x % n for x in range(n))
            for k in range(1, n + 1)
            if __import__("math").gcd(k, n) == 1
        )
        assert autos == expected


def test_identity_always_present_and_lexicographic():
    for n in (2, 3, 4):
        for f in itertools.islice(enumerate_all(n, 2), 20):
            autos = automorphisms(f)
            assert tuple(range(n)) in autos
            assert autos == sorted(autos)


def test_automorphism_group_axioms_sampled():
    for seed in range(30):
        f = random_latin(5, 2, seed=seed)
        autos = automorphisms(f)
        group = set(autos)
        for a in autos:
            inv = [0] * 5
            for x in range(5):
                inv[a[x]] = x
            assert tuple(inv) in group
            for b in autos:
                assert tuple(a[b[x]] for x in range(5)) in group


def test_automorphism_ceiling():
    with pytest.raises(CeilingError):
        automorphisms(add_mod(4), ceiling=3)


def test_degree3_automorphisms():
    f = LatinOp(3, 3, cyclic_table(3, d=3))
    autos = automorphisms(f)
    assert tuple(range(3)) in autos
    for iota in autos:
        assert is_homomorphism(iota, f, f)
