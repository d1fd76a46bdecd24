import random

import pytest

from superdegen.cyclo import C8_ONE, C8_ZERO, SQRT2, SQRTM2, I_UNIT, ZETA, Cyclo8, cyclo_literal
from superdegen.literals import parse_scalar


def test_defining_constants():
    assert SQRT2 * SQRT2 == 2
    assert SQRTM2 * SQRTM2 == Cyclo8(-2)
    assert I_UNIT * I_UNIT == Cyclo8(-1)
    assert ZETA ** 4 == Cyclo8(-1)
    assert ZETA ** 8 == 1


def test_zeta_inverse():
    # z * z^3 = z^4 = -1, so 1/z = -z^3
    assert ZETA.inverse() == -(ZETA ** 3)
    assert ZETA * ZETA.inverse() == 1


def test_sqrt2_inverse_is_half_sqrt2():
    inv = SQRT2.inverse()
    assert inv == SQRT2 / 2
    assert inv * SQRT2 == 1


def _random_elements(seed, count, zero_ok=True):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        x = Cyclo8(*[rng.randint(-6, 6) for _ in range(4)]) / rng.randint(1, 5)
        if zero_ok or not x.is_zero():
            out.append(x)
    return out


def test_field_axioms_on_random_samples():
    xs = _random_elements(1, 30)
    ys = _random_elements(2, 30)
    zs = _random_elements(3, 30)
    for a, b, c in zip(xs, ys, zs):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
    for a in _random_elements(4, 30, zero_ok=False):
        assert a * a.inverse() == 1
        assert a * C8_ONE == a
        assert a + C8_ZERO == a


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        C8_ONE / C8_ZERO
    with pytest.raises(ZeroDivisionError):
        C8_ZERO.inverse()


def test_literal_round_trip():
    for x in _random_elements(5, 40):
        assert parse_scalar(cyclo_literal(x)) == x
    assert cyclo_literal(C8_ZERO) == "0"
    assert parse_scalar("z-z^3") == SQRT2
    assert parse_scalar("z+z^3") == SQRTM2
