#
#    Module `utils`: implements utility functions (exact literal parsing, JSON conversion).
#    penrosewang authors (C) 2024.
#
import re
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple
from penrosewang.penroseconst import PenroseConst
from penrosewang.exactgeom import Qr5, PointV, DirectionV, ALPHA, GAMMA, SQRT5

_TOKEN = re.compile(r"\s*(?:(\d+\.\d*|\.\d+)|(\d+)|(s5|a|g)|([-+*/()·]))")
_SYMBOLS = {"s5": SQRT5, "a": ALPHA, "g": GAMMA}


class _Parser:
    """Recursive descent parser of exact literals."""
    __tokens: List[Tuple[str, str]]
    __pos: int

    def __init__(self, text: str) -> None:
        self.__tokens = []
        self.__pos = 0
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            match = _TOKEN.match(text, pos)
            if not match:
                raise ValueError(f"Invalid character in exact literal ({text[pos:]!r}).")
            decimal, number, symbol, op = match.groups()
            if decimal is not None:
                raise ValueError(f"Invalid float literal ({decimal}), use a fraction.")
            if number is not None:
                self.__tokens.append(("num", number))
            elif symbol is not None:
                self.__tokens.append(("sym", symbol))
            else:
                self.__tokens.append(("op", "*" if op == "·" else op))
            pos = match.end()

    def __peek(self) -> Optional[Tuple[str, str]]:
        return self.__tokens[self.__pos] if self.__pos < len(self.__tokens) else None

    def __take(self) -> Tuple[str, str]:
        token = self.__peek()
        if token is None:
            raise ValueError("Unexpected end of exact literal.")
        self.__pos += 1
        return token

    def parse(self) -> Qr5:
        if not self.__tokens:
            raise ValueError("Empty exact literal.")
        value = self.__expression()
        if self.__peek() is not None:
            raise ValueError(f"Unexpected token in exact literal ({self.__peek()[1]}).")
        return value

    def __expression(self) -> Qr5:
        value = self.__term()
        while self.__peek() in (("op", "+"), ("op", "-")):
            op = self.__take()[1]
            right = self.__term()
            value = value + right if op == "+" else value - right
        return value

    def __term(self) -> Qr5:
        value = self.__factor()
        while True:
            token = self.__peek()
            if token in (("op", "*"), ("op", "/")):
                self.__take()
                right = self.__factor()
                if token[1] == "*":
                    value = value * right
                else:
                    if not right:
                        raise ValueError("Division by zero in exact literal.")
                    value = value / right
            elif token is not None and (token[0] == "sym" or token == ("op", "(")):
                # Implicit product, e.g. 2s5 or 3(1-a).
                value = value * self.__factor()
            else:
                return value

    def __factor(self) -> Qr5:
        kind, text = self.__take()
        if kind == "num":
            return Qr5(int(text))
        if kind == "sym":
            return _SYMBOLS[text]
        if text == "-":
            return -self.__factor()
        if text == "+":
            return self.__factor()
        if text == "(":
            value = self.__expression()
            if self.__take() != ("op", ")"):
                raise ValueError("Missing closing parenthesis in exact literal.")
            return value
        raise ValueError(f"Unexpected token in exact literal ({text}).")


def parse_qr5(text: str) -> Qr5:
    """Parses an exact literal of Q(sqrt 5): integers, `/`, `+`, `-`, `*` (or a middle dot), parentheses and
    the symbols `s5` (sqrt 5), `a` (alpha) and `g` (gamma). Float literals are rejected.

    Args:
        text (str): literal

    Returns:
        Qr5: the value

    Raises:
        ValueError: in case of a malformed literal

    Example:
        An example about the use of the function::

            >>> from penrosewang import parse_qr5, GAMMA
            >>> parse_qr5("1/2 + 1/2*s5") == GAMMA
            True
            >>> parse_qr5("1-a") == 2 - GAMMA
            True
    """
    return _Parser(text).parse()


def parse_qr5_list(text: str, count: Optional[int] = None) -> List[Qr5]:
    """Parses a comma separated list of exact literals.

    Raises:
        ValueError: in case of a malformed literal or a wrong number of values
    """
    values = [parse_qr5(item) for item in text.split(",")]
    if count is not None and len(values) != count:
        raise ValueError(f"Invalid number of values ({len(values)} instead of {count}).")
    return values


def parse_direction(text: str, frame: str = PenroseConst.FRAME_LATTICE) -> DirectionV:
    """Parses a direction: a slope literal, `inf` (vertical), `perp:j` (perpendicular to ``v_j`` in the
    tiling plane) or `vec:p,q` (generator with coordinates in the ``(1, 0), (cos 72, sin 72)`` basis).

    Raises:
        ValueError: in case of a malformed direction
    """
    text = text.strip()
    if frame not in (PenroseConst.FRAME_TILING, PenroseConst.FRAME_LATTICE):
        raise ValueError(f"Invalid frame ({frame}).")
    if text.startswith("perp:"):
        j = text[5:].strip()
        if j not in ("0", "1", "2", "3", "4"):
            raise ValueError(f"Invalid family in direction ({text}).")
        return DirectionV.perpendicular_to(int(j))
    if text.startswith("vec:"):
        p, q = parse_qr5_list(text[4:], 2)
        return DirectionV(PointV(p, q), frame=frame)
    if text == "inf":
        return DirectionV.from_slope(None, frame)
    return DirectionV.from_slope(parse_qr5(text), frame)


def fraction_to_json(x: Fraction) -> str:
    """Returns a fraction in ``p/q`` form."""
    return str(x)


def qr5_to_json(x: Qr5) -> Dict[str, Any]:
    """Returns the JSON form of an exact value: rational part, coefficient of sqrt(5), exact text and float."""
    return {"a": str(x.get_a()), "b": str(x.get_b()), "exact": str(x), "float": float(x)}


def point_to_json(p: PointV) -> Dict[str, Any]:
    """Returns the JSON form of an exact point."""
    x, y = p.to_cartesian()
    return {"p": qr5_to_json(p.get_p()), "q": qr5_to_json(p.get_q()), "xy": [x, y]}


def envelope(command: str, result: Any) -> Dict[str, Any]:
    """Returns a versioned JSON document of a command result."""
    return {"schema": PenroseConst.SCHEMA_VERSION, "command": command, "result": result}


def error_envelope(kind: str, message: str, command: Optional[str] = None) -> Dict[str, Any]:
    """Returns a versioned JSON error document."""
    return {"schema": PenroseConst.SCHEMA_VERSION, "command": command, "error": {"type": kind, "message": message}}

# End
