#
#    Module `exactgeom`: implements exact arithmetic in the quadratic field Q(sqrt 5) and the planar
#    geometry of the pentagrid basis (`Qr5`, `PointV` and `DirectionV` classes).
#    penrosewang authors (C) 2024.
#
import math
from fractions import Fraction
from functools import cmp_to_key
from math import isqrt
from numbers import Rational
from typing import Any, List, Optional, Sequence, Tuple, Union
from penrosewang.penroseconst import PenroseConst

SQRT5_FLOAT = math.sqrt(5.0)
SIN72_FLOAT = math.sin(2.0 * math.pi / 5.0)


class Qr5:
    """Exact element ``a + b*sqrt(5)`` of the quadratic field Q(sqrt 5), where `a` and `b` are rational
    numbers (`fractions.Fraction`). The class implements the field operations, the exact sign and the exact
    floor function. Floats are never accepted as input, they are available only as output (``float(x)``).

    Args:
        a (Union[int, Fraction, str, Qr5]): rational part (a `Qr5` value is copied, then `b` must be 0)
        b (Union[int, Fraction, str]): coefficient of sqrt(5)

    Raises:
        ValueError: in case of a float or an unknown input type

    Example:
        An example about the use of the class::

            >>> from penrosewang import Qr5, GAMMA
            >>> GAMMA * GAMMA == GAMMA + 1
            True
            >>> Qr5(3, -1).floor()
            0
    """
    __slots__ = ("_Qr5__a", "_Qr5__b", "_Qr5__hash")
    __a: Fraction   # Rational part
    __b: Fraction   # Coefficient of sqrt(5)
    __hash: Optional[int]

    def __init__(self, a: Union[int, Fraction, str, "Qr5"] = 0, b: Union[int, Fraction, str] = 0) -> None:
        if isinstance(a, Qr5):
            self.__a, self.__b = a.__a, a.__b + _to_fraction(b)
        else:
            self.__a = _to_fraction(a)
            self.__b = _to_fraction(b)
        self.__hash = None

    @classmethod
    def _make(cls, a: Fraction, b: Fraction) -> "Qr5":
        """Creates a value from two `Fraction` objects without conversion."""
        obj = object.__new__(cls)
        obj.__a = a
        obj.__b = b
        obj.__hash = None
        return obj

    def get_a(self) -> Fraction:
        """Returns the rational part of the value.

        Returns:
            Fraction: rational part
        """
        return self.__a

    def get_b(self) -> Fraction:
        """Returns the coefficient of sqrt(5).

        Returns:
            Fraction: coefficient of sqrt(5)
        """
        return self.__b

    def conjugate(self) -> "Qr5":
        """Returns the Galois conjugate ``a - b*sqrt(5)``."""
        return Qr5._make(self.__a, -self.__b)

    def norm(self) -> Fraction:
        """Returns the field norm ``a^2 - 5*b^2`` (zero only for the zero element)."""
        return self.__a * self.__a - 5 * self.__b * self.__b

    def is_rational(self) -> bool:
        """Returns `True` if the coefficient of sqrt(5) is zero."""
        return self.__b == 0

    def is_integer(self) -> bool:
        """Returns `True` if the value is a rational integer."""
        return self.__b == 0 and self.__a.denominator == 1

    def sign(self) -> int:
        """Returns the exact sign of the value (-1, 0 or 1).

        Example:
            >>> Qr5(-2, 1).sign()
            1
        """
        a, b = self.__a, self.__b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if (a > 0) == (b > 0):
            return 1 if a > 0 else -1
        # Different signs: the term with the larger square wins.
        if a * a > 5 * b * b:
            return 1 if a > 0 else -1
        return 1 if b > 0 else -1

    def floor(self) -> int:
        """Returns the exact floor of the value. A floating point estimate is used when its distance to the
        nearest integer exceeds the rounding error bound of both terms, otherwise the value is evaluated with
        integer square roots.

        Example:
            >>> GAMMA.floor(), (-ALPHA).floor()
            (1, -1)
        """
        a, b = self.__a, self.__b
        fa, fb = float(a), float(b)
        estimate = fa + fb * SQRT5_FLOAT
        if math.isfinite(estimate):
            # Each conversion and operation adds at most one rounding of its magnitude.
            error = (abs(fa) + 3.0 * abs(fb)) * 2.0 ** -50 + 2.0 ** -1000
            if abs(estimate - round(estimate)) > error:
                return math.floor(estimate)
        den = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
        p = a.numerator * (den // a.denominator)
        q = b.numerator * (den // b.denominator)
        # floor(q*sqrt(5)) from the integer square root of 5*q^2.
        root = isqrt(5 * q * q)
        if q < 0:
            root = -root - 1
        # floor((p + t)/den) == floor((p + floor(t))/den) for integer p and den > 0.
        return (p + root) // den

    def frac(self) -> "Qr5":
        """Returns the fractional part ``x - floor(x)`` in [0, 1)."""
        return Qr5._make(self.__a - self.floor(), self.__b)

    def __float__(self) -> float:
        return float(self.__a) + float(self.__b) * SQRT5_FLOAT

    def __bool__(self) -> bool:
        return self.__a != 0 or self.__b != 0

    def __neg__(self) -> "Qr5":
        return Qr5._make(-self.__a, -self.__b)

    def __pos__(self) -> "Qr5":
        return self

    def __abs__(self) -> "Qr5":
        return -self if self.sign() < 0 else self

    def __add__(self, other: Any) -> "Qr5":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Qr5._make(self.__a + other.__a, self.__b + other.__b)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Qr5":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Qr5._make(self.__a - other.__a, self.__b - other.__b)

    def __rsub__(self, other: Any) -> "Qr5":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other: Any) -> "Qr5":
        if isinstance(other, (int, Fraction)):
            return Qr5._make(self.__a * other, self.__b * other)
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.__a, self.__b, other.__a, other.__b
        return Qr5._make(a * c + 5 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "Qr5":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("Division by zero in Q(sqrt(5)).")
        return self * Qr5._make(other.__a / n, -other.__b / n)

    def __rtruediv__(self, other: Any) -> "Qr5":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int) -> "Qr5":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return ONE / (self ** -exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: Any) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.__a == other.__a and self.__b == other.__b

    def __hash__(self) -> int:
        if self.__hash is None:
            # Rational values hash like the equivalent Fraction and int objects.
            self.__hash = hash(self.__a) if self.__b == 0 else hash((self.__a, self.__b))
        return self.__hash

    def __lt__(self, other: Any) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() < 0

    def __le__(self, other: Any) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() <= 0

    def __gt__(self, other: Any) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() > 0

    def __ge__(self, other: Any) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() >= 0

    def __repr__(self) -> str:
        return f"Qr5({self.__a}, {self.__b})"

    def __str__(self) -> str:
        if self.__b == 0:
            return str(self.__a)
        if self.__a == 0:
            return f"{self.__b}*s5"
        sign = "+" if self.__b > 0 else "-"
        return f"{self.__a}{sign}{abs(self.__b)}*s5"


def _to_fraction(value: Any) -> Fraction:
    """Converts an exact rational input to `Fraction`."""
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)) or isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, float):
        raise ValueError(f"Invalid float value in exact arithmetic ({value}).")
    raise ValueError(f"Invalid exact value ({value!r}).")


def _coerce(value: Any) -> Optional[Qr5]:
    """Converts an operand to `Qr5` or returns `None` if it is not an exact type."""
    if isinstance(value, Qr5):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Qr5._make(Fraction(value), Fraction(0))   # pylint: disable=protected-access
    return None


ZERO = Qr5(0)
ONE = Qr5(1)
SQRT5 = Qr5(0, 1)
GAMMA = Qr5(Fraction(1, 2), Fraction(1, 2))
"""The golden mean (1+sqrt(5))/2."""
ALPHA = Qr5(Fraction(-1, 2), Fraction(1, 2))
"""The inverse golden mean 1/GAMMA = GAMMA - 1."""
COS72 = Qr5(Fraction(-1, 4), Fraction(1, 4))
COS144 = Qr5(Fraction(-1, 4), Fraction(-1, 4))
ETA1 = 2 - GAMMA
ETA2 = GAMMA - 1
ETA3 = 4 - 2 * GAMMA


def qr5_arith(x: Qr5, y: Qr5, op: str) -> Qr5:
    """Executes a field operation.

    Args:
        x (Qr5): left operand
        y (Qr5): right operand
        op (str): one of ``+``, ``-``, ``*``, ``/``

    Returns:
        Qr5: result of the operation

    Raises:
        ValueError: in case of unknown operation
        ZeroDivisionError: in case of division by zero
    """
    if op == "+":
        return x + y
    if op == "-":
        return x - y
    if op == "*":
        return x * y
    if op == "/":
        return x / y
    raise ValueError(f"Invalid operation ({op}).")


def qr5_sign_floor(x: Qr5) -> Tuple[int, int]:
    """Returns the exact sign and floor of a value.

    Example:
        >>> qr5_sign_floor(ETA3)
        (1, 0)
    """
    return x.sign(), x.floor()


def as_qr5(value: Union[int, Fraction, str, Qr5]) -> Qr5:
    """Converts an exact value to `Qr5`."""
    return value if isinstance(value, Qr5) else Qr5(value)


class PointV:
    """Exact point (or vector) ``p*v0 + q*v1`` of the plane, where `v0` and `v1` are the first two unit grid
    vectors and `p`, `q` are `Qr5` values. All five grid vectors `v0..v4` are available in `V`.

    Args:
        p (Qr5): coordinate along v0
        q (Qr5): coordinate along v1
    """
    __slots__ = ("_PointV__p", "_PointV__q", "_PointV__hash")
    __p: Qr5        # Coordinate along v0
    __q: Qr5        # Coordinate along v1
    __hash: Optional[int]

    def __init__(self, p: Union[int, Fraction, str, Qr5] = 0, q: Union[int, Fraction, str, Qr5] = 0) -> None:
        self.__p = as_qr5(p)
        self.__q = as_qr5(q)
        self.__hash = None

    def get_p(self) -> Qr5:
        """Returns the coordinate along v0."""
        return self.__p

    def get_q(self) -> Qr5:
        """Returns the coordinate along v1."""
        return self.__q

    def to_cartesian(self) -> Tuple[float, float]:
        """Returns the Cartesian coordinates of the point (v0 is the x axis).

        Example:
            >>> V[2].to_cartesian()
            (-0.8090169943749475, 0.5877852522924731)
        """
        p = float(self.__p)
        q = float(self.__q)
        return p + q * 0.30901699437494745, q * SIN72_FLOAT

    def rot72(self) -> "PointV":
        """Returns the point rotated by 72 degrees counterclockwise around the origin."""
        return PointV(-self.__q, self.__p + ALPHA * self.__q)

    def is_zero(self) -> bool:
        """Returns `True` for the origin."""
        return not self.__p and not self.__q

    def __add__(self, other: "PointV") -> "PointV":
        if not isinstance(other, PointV):
            return NotImplemented
        return PointV(self.__p + other.__p, self.__q + other.__q)

    def __sub__(self, other: "PointV") -> "PointV":
        if not isinstance(other, PointV):
            return NotImplemented
        return PointV(self.__p - other.__p, self.__q - other.__q)

    def __neg__(self) -> "PointV":
        return PointV(-self.__p, -self.__q)

    def __mul__(self, scalar: Any) -> "PointV":
        if isinstance(scalar, PointV):
            return NotImplemented
        return PointV(self.__p * scalar, self.__q * scalar)

    __rmul__ = __mul__

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, PointV):
            return NotImplemented
        return self.__p == other.__p and self.__q == other.__q

    def __hash__(self) -> int:
        if self.__hash is None:
            self.__hash = hash((self.__p, self.__q))
        return self.__hash

    def sort_key(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        """Returns a deterministic (not geometric) ordering key."""
        return self.__p.get_a(), self.__p.get_b(), self.__q.get_a(), self.__q.get_b()

    def __repr__(self) -> str:
        return f"PointV({self.__p}, {self.__q})"


V: Tuple[PointV, ...] = (
    PointV(1, 0),
    PointV(0, 1),
    PointV(-1, ALPHA),
    PointV(-ALPHA, -ALPHA),
    PointV(ALPHA, -1),
)
"""The five unit grid vectors ``v_j = (cos(2*pi*j/5), sin(2*pi*j/5))``."""

VPRIME: Tuple[PointV, ...] = tuple(v * PenroseConst.EDGE_LENGTH for v in V)
"""The tile edge vectors ``(2/5)*v_j``."""


def dot(x: PointV, y: PointV) -> Qr5:
    """Exact scalar product of two vectors.

    Example:
        >>> dot(V[0], V[2]) == COS144
        True
    """
    xp, xq, yp, yq = x.get_p(), x.get_q(), y.get_p(), y.get_q()
    return xp * yp + (xp * yq + xq * yp) * COS72 + xq * yq


def cross_sign(x: PointV, y: PointV) -> int:
    """Returns the sign of the (z component of the) cross product of two vectors."""
    return (x.get_p() * y.get_q() - x.get_q() * y.get_p()).sign()


def upper_half(x: PointV) -> bool:
    """Returns `True` if the direction angle of a nonzero vector is in [0, 180) degrees."""
    qs = x.get_q().sign()
    if qs != 0:
        return qs > 0
    return x.get_p().sign() > 0


def angle_compare(x: PointV, y: PointV) -> int:
    """Compares two nonzero vectors by direction angle in [0, 360) degrees."""
    hx, hy = upper_half(x), upper_half(y)
    if hx != hy:
        return -1 if hx else 1
    return -cross_sign(x, y)


def sort_by_angle(vectors: Sequence[PointV]) -> List[PointV]:
    """Sorts nonzero vectors counterclockwise by direction angle, starting at angle 0."""
    return sorted(vectors, key=cmp_to_key(angle_compare))


def solve_2x2(m00: Qr5, m01: Qr5, m10: Qr5, m11: Qr5, r0: Qr5, r1: Qr5) -> Tuple[Qr5, Qr5]:
    """Solves the linear system ``[[m00, m01], [m10, m11]] * (x, y) = (r0, r1)`` exactly.

    Raises:
        ValueError: if the system is singular
    """
    det = m00 * m11 - m01 * m10
    if not det:
        raise ValueError("Invalid linear system (determinant is 0).")
    return (r0 * m11 - r1 * m01) / det, (r1 * m00 - r0 * m10) / det


def solve_dots(a: Any, va: PointV, b: Any, vb: PointV) -> PointV:
    """Returns the point `s` where ``va.s == a`` and ``vb.s == b``.

    Raises:
        ValueError: if `va` and `vb` are parallel
    """
    p, q = solve_2x2(dot(va, V[0]), dot(va, V[1]), dot(vb, V[0]), dot(vb, V[1]), as_qr5(a), as_qr5(b))
    return PointV(p, q)


def express_in(target: PointV, x: PointV, y: PointV) -> Tuple[Qr5, Qr5]:
    """Returns the coefficients ``(a, b)`` of ``target == a*x + b*y``.

    Raises:
        ValueError: if `x` and `y` are parallel
    """
    return solve_2x2(x.get_p(), y.get_p(), x.get_q(), y.get_q(), target.get_p(), target.get_q())


def perpendicular(x: PointV) -> PointV:
    """Returns the vector rotated by 90 degrees counterclockwise (scaled by sin(72) to stay in the field)."""
    # x = p*v0 + q*v1, J(v0) = (v1 - c*v0)/sin72, J(v1) = (c*v1 - v0)/sin72 with c = cos72.
    p, q = x.get_p(), x.get_q()
    return PointV(-p * COS72 - q, p + q * COS72)


class DirectionV:
    """Direction of a line given by a nonzero generator vector. Two directions are equal if their generators
    are parallel and they use the same frame. In the ``tiling`` frame the generator is a `PointV`, in the
    ``lattice`` frame the generator's `p` and `q` are the coordinates along the Wang lattice axes e0 and e1.

    Args:
        generator (PointV): nonzero generator vector
        tag (Optional[int]): optional label, e.g. the family of the perpendicular grid vector
        frame (str): ``tiling`` or ``lattice``

    Raises:
        ValueError: in case of zero generator or unknown frame
    """
    __generator: PointV     # Generator vector
    __tag: Optional[int]    # Optional label
    __frame: str            # Frame name

    def __init__(self, generator: PointV, tag: Optional[int] = None, frame: str = PenroseConst.FRAME_TILING) -> None:
        if generator.is_zero():
            raise ValueError("Invalid direction (zero generator).")
        if frame not in (PenroseConst.FRAME_TILING, PenroseConst.FRAME_LATTICE):
            raise ValueError(f"Invalid frame ({frame}).")
        self.__generator = generator
        self.__tag = tag
        self.__frame = frame

    @classmethod
    def perpendicular_to(cls, j: int) -> "DirectionV":
        """Returns the tiling direction perpendicular to the grid vector `v_j`."""
        if j not in range(5):
            raise ValueError(f"Invalid family ({j}).")
        return cls(perpendicular(V[j]), j, PenroseConst.FRAME_TILING)

    @classmethod
    def from_slope(cls, slope: Optional[Qr5], frame: str = PenroseConst.FRAME_LATTICE) -> "DirectionV":
        """Creates a direction from a slope ``dq/dp`` (`None` means a vertical direction)."""
        if slope is None:
            return cls(PointV(0, 1), None, frame)
        return cls(PointV(1, slope), None, frame)

    def get_generator(self) -> PointV:
        """Returns the generator vector."""
        return self.__generator

    def get_tag(self) -> Optional[int]:
        """Returns the optional label."""
        return self.__tag

    def get_frame(self) -> str:
        """Returns the frame name."""
        return self.__frame

    def get_slope(self) -> Optional[Qr5]:
        """Returns the slope ``q/p`` of the generator coordinates, `None` for infinite slope."""
        p, q = self.__generator.get_p(), self.__generator.get_q()
        if not p:
            return None
        return q / p

    def to_cartesian(self) -> Tuple[float, float]:
        """Returns the unit direction vector as floats."""
        if self.__frame == PenroseConst.FRAME_LATTICE:
            x, y = float(self.__generator.get_p()), float(self.__generator.get_q())
        else:
            x, y = self.__generator.to_cartesian()
        length = math.hypot(x, y)
        return x / length, y / length

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, DirectionV):
            return NotImplemented
        return self.__frame == other.__frame and cross_sign(self.__generator, other.__generator) == 0

    def __hash__(self) -> int:
        return hash(self.__frame)

    def __repr__(self) -> str:
        return f"DirectionV(generator={self.__generator}, tag={self.__tag}, frame={self.__frame})"

# End
