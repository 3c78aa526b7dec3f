"""Polynomial evaluation, essential parts, corner roots, primariness."""

import random
from fractions import Fraction

import pytest

from stmat import Poly, ZERO, ghost, tangible
from stmat.errors import PreconditionError
from stmat.poly import ESSENTIAL, INESSENTIAL, QUASI_ESSENTIAL
from stmat.semiring import sprod, ssum

from conftest import E


def P(*tokens):
    """Poly from degree-0-first tokens."""
    return Poly([E(t) for t in tokens])


F_BASIC = P(2, 2, 0)  # l^2 + 2 l + 2


def test_eval_examples():
    assert F_BASIC.eval(tangible(2)) == ghost(4)
    assert F_BASIC.eval(tangible(5)) == tangible(10)
    assert F_BASIC.eval(ZERO) == tangible(2)
    assert P("-inf", 1, 0).eval(ZERO) == ZERO


def test_eval_matches_monomial_maximum():
    rng = random.Random(3)
    for _ in range(100):
        coeffs = [E(f"{rng.randint(-6, 6)}{'v' if rng.random() < 0.3 else ''}")
                  if rng.random() > 0.2 else ZERO for _ in range(rng.randint(1, 5))]
        coeffs.append(tangible(rng.randint(-6, 6)))
        f = Poly(coeffs)
        a = tangible(Fraction(rng.randint(-12, 12), rng.randint(1, 3)))
        brute = ssum(c * sprod([a] * i) for i, c in enumerate(f.coeffs) if not c.is_zero)
        assert f.eval(a) == brute


def test_essential_classes_examples():
    assert P(0, 0, 0).monomial_classes() == (ESSENTIAL, QUASI_ESSENTIAL, ESSENTIAL)
    assert F_BASIC.monomial_classes() == (ESSENTIAL, ESSENTIAL, ESSENTIAL)
    assert P(0, -5, 0).monomial_classes() == (ESSENTIAL, INESSENTIAL, ESSENTIAL)


def test_essential_part_keeps_function():
    rng = random.Random(4)
    for _ in range(40):
        deg = rng.randint(1, 5)
        coeffs = [E(f"{rng.randint(-6, 6)}{'v' if rng.random() < 0.3 else ''}")
                  if rng.random() > 0.25 else ZERO for _ in range(deg)]
        coeffs.append(E(rng.randint(-6, 6)))
        f = Poly(coeffs)
        es = f.essential_part()
        for _ in range(5):
            a = tangible(Fraction(rng.randint(-20, 20), rng.randint(1, 4)))
            assert f.eval(a) == es.eval(a)


def test_corner_roots_examples():
    assert F_BASIC.corner_roots() == [(Fraction(2), 1), (Fraction(0), 1)]
    assert P("5v", 4, 0).corner_roots() == [(Fraction(4), 1), (Fraction(1), 1)]
    assert P("-inf", "-inf", 0).corner_roots() == [(None, 2)]
    with pytest.raises(PreconditionError):
        P(3).corner_roots()


def test_corner_roots_are_ghost_points():
    # For tangible-coefficient polynomials, f is ghost at tangible x exactly
    # when x is a corner root; between roots the dominant monomial is unique.
    rng = random.Random(5)
    for _ in range(40):
        deg = rng.randint(1, 5)
        coeffs = [tangible(rng.randint(-6, 6)) if rng.random() > 0.25 else ZERO
                  for _ in range(deg)]
        coeffs.append(tangible(rng.randint(-6, 6)))
        f = Poly(coeffs)
        roots = [v for v, _ in f.corner_roots() if v is not None]
        for r in roots:
            assert f.eval(tangible(r)).is_ghost
        probes = set()
        for r1, r2 in zip(roots, roots[1:]):
            probes.add((r1 + r2) / 2)
        if roots:
            probes.add(roots[0] + 1)
            probes.add(roots[-1] - 1)
        for x in probes - set(roots):
            assert f.eval(tangible(x)).is_tangible


def test_is_primary_examples():
    assert P(2, 1, 0).is_primary()
    assert not F_BASIC.is_primary()
    assert P(-3, 0).is_primary()
    with pytest.raises(PreconditionError):
        P(2, 2).is_primary()


def test_unique_corner_root_bound():
    # Monic primary f of degree d with constant term a^d is coefficientwise
    # surpassed by the expansion of (l + a)^d.
    rng = random.Random(6)
    found = 0
    for _ in range(300):
        d = rng.randint(1, 5)
        a = tangible(rng.randint(-3, 3))
        coeffs = [sprod([a] * d)]
        for i in range(1, d):
            if rng.random() < 0.3:
                coeffs.append(ZERO)
            else:
                bound = a.value * (d - i)
                val = bound - abs(rng.randint(0, 4))
                coeffs.append(ghost(val) if rng.random() < 0.4 else tangible(val))
        coeffs.append(tangible(0))
        f = Poly(coeffs)
        if not f.is_primary():
            continue
        found += 1
        linear = Poly([a, tangible(0)])
        assert (linear ** d).ghost_surpasses(f)
    assert found >= 100


def test_poly_ghost_surpasses_examples():
    assert P(2, "1v", 0).ghost_surpasses(P(2, 1, 0))
    assert F_BASIC.ghost_surpasses(F_BASIC)
    assert not P("-inf", 0, 0).ghost_surpasses(P("-inf", 3, 0))


def test_poly_product():
    assert P(2, 0) * P(0, 0) == F_BASIC
    assert P(2, 0) ** 2 == P(4, "2v", 0)


def test_text_and_token_round_trip():
    cases = [F_BASIC, P("5v", 4, 0), P("-inf", "-inf", 0), P(3), Poly([ZERO]),
             P("1/2", "-2/3v", 0), P(0, "0v", 0)]
    for f in cases:
        assert Poly.from_text(f.to_text()) == f
        assert Poly.from_tokens(f.to_tokens()) == f
    assert F_BASIC.to_text() == "l^2 + 2 l + 2"
    assert P("5v", 4, 0).to_text() == "l^2 + 4 l + 5v"
