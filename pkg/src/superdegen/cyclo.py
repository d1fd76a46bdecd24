"""Exact arithmetic in the eighth cyclotomic field Q(z), z^4 = -1.

Elements are stored as the unique coefficient vector (a0, a1, a2, a3) over Q
meaning a0 + a1*z + a2*z^2 + a3*z^3.  This field contains every constant the
catalog and the degeneration certificates need: z^2 is a square root of -1,
z - z^3 squares to 2 and z + z^3 squares to -2.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - gmpy2 is optional, Fraction is exact too
    from fractions import Fraction as _Q

_Q0 = _Q(0)
_Q1 = _Q(1)


class Cyclo8:
    __slots__ = ("c",)

    def __init__(self, a0=0, a1=0, a2=0, a3=0):
        self.c = (_Q(a0), _Q(a1), _Q(a2), _Q(a3))

    @classmethod
    def _raw(cls, coeffs) -> "Cyclo8":
        x = object.__new__(cls)
        x.c = coeffs
        return x

    @classmethod
    def from_rational(cls, num, den=1) -> "Cyclo8":
        return cls._raw((_Q(num) / _Q(den), _Q0, _Q0, _Q0))

    def is_zero(self) -> bool:
        a0, a1, a2, a3 = self.c
        return not (a0 or a1 or a2 or a3)

    def is_rational(self) -> bool:
        return not (self.c[1] or self.c[2] or self.c[3])

    def rational_part(self):
        return self.c[0]

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            a0, a1, a2, a3 = self.c
            return a0 == other and not (a1 or a2 or a3)
        if isinstance(other, Cyclo8):
            return self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __neg__(self) -> "Cyclo8":
        a0, a1, a2, a3 = self.c
        return Cyclo8._raw((-a0, -a1, -a2, -a3))

    def __add__(self, other):
        if isinstance(other, int):
            a0, a1, a2, a3 = self.c
            return Cyclo8._raw((a0 + other, a1, a2, a3))
        if isinstance(other, Cyclo8):
            a0, a1, a2, a3 = self.c
            b0, b1, b2, b3 = other.c
            return Cyclo8._raw((a0 + b0, a1 + b1, a2 + b2, a3 + b3))
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Cyclo8)):
            return self + (-other if isinstance(other, Cyclo8) else Cyclo8(-other))
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return Cyclo8(other) - self
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            a0, a1, a2, a3 = self.c
            return Cyclo8._raw((a0 * other, a1 * other, a2 * other, a3 * other))
        if isinstance(other, Cyclo8):
            a0, a1, a2, a3 = self.c
            b0, b1, b2, b3 = other.c
            # reduction by z^4 = -1
            return Cyclo8._raw(
                (
                    a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
                    a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
                    a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
                    a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
                )
            )
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "Cyclo8":
        """Multiplicative inverse, via the product of the three conjugates."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of 0 in Q(z)")
        a0, a1, a2, a3 = self.c
        # Galois conjugates z -> z^3, z^5, z^7
        c3 = Cyclo8._raw((a0, a3, -a2, a1))
        c5 = Cyclo8._raw((a0, -a1, a2, -a3))
        c7 = Cyclo8._raw((a0, -a3, -a2, -a1))
        p = c3 * c5 * c7
        norm = self * p
        n0, n1, n2, n3 = norm.c
        assert not (n1 or n2 or n3), "field norm must be rational"
        inv = _Q1 / n0
        p0, p1, p2, p3 = p.c
        return Cyclo8._raw((p0 * inv, p1 * inv, p2 * inv, p3 * inv))

    def __truediv__(self, other):
        if isinstance(other, int):
            if other == 0:
                raise ZeroDivisionError("division by 0")
            q = _Q1 / _Q(other)
            a0, a1, a2, a3 = self.c
            return Cyclo8._raw((a0 * q, a1 * q, a2 * q, a3 * q))
        if isinstance(other, Cyclo8):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, int):
            return Cyclo8(other) * self.inverse()
        return NotImplemented

    def __pow__(self, n: int) -> "Cyclo8":
        if n < 0:
            return self.inverse() ** (-n)
        out = C8_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __repr__(self):
        return f"Cyclo8({self})"

    def __str__(self):
        return cyclo_literal(self)


def _q_literal(q) -> str:
    num, den = q.numerator, q.denominator
    return str(num) if den == 1 else f"{num}/{den}"


def cyclo_literal(x: Cyclo8) -> str:
    """Render in the exact literal syntax accepted by the parser."""
    parts = []
    for k, a in enumerate(x.c):
        if not a:
            continue
        sym = ("", "z", "z^2", "z^3")[k]
        if k == 0:
            body = _q_literal(a)
        elif a == 1:
            body = sym
        elif a == -1:
            body = "-" + sym
        else:
            body = f"{_q_literal(a)}*{sym}"
        if parts and not body.startswith("-"):
            parts.append("+")
        parts.append(body)
    return "".join(parts) if parts else "0"


C8_ZERO = Cyclo8(0)
C8_ONE = Cyclo8(1)
ZETA = Cyclo8(0, 1)
I_UNIT = ZETA * ZETA  # z^2, a square root of -1
SQRT2 = Cyclo8(0, 1, 0, -1)  # z - z^3
SQRTM2 = Cyclo8(0, 1, 0, 1)  # z + z^3
