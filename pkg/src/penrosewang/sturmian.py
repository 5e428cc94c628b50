#
#    Module `sturmian`: implements golden Sturmian words (`SturmianWord`, `CircleInterval`, `SymbolGrid`
#    classes), parameter recovery from finite words and the symbol grid of a pentagrid.
#    penrosewang authors (C) 2024.
#
import logging
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union
import numpy as np
from penrosewang.penroseconst import PenroseConst
from penrosewang.exactgeom import Qr5, ALPHA, ONE, ZERO, as_qr5, dot, V
from penrosewang.pentagrid import PentagridParams, SingularPatchError, F0, F1, count_family_lines

_logger = logging.getLogger(__name__)

_ALPHA_FLOAT = float(ALPHA)
_CUT = ONE - ALPHA
_CUT_FLOAT = float(_CUT)


def _check_variant(variant: str) -> None:
    if variant not in (PenroseConst.VARIANT_PLUS, PenroseConst.VARIANT_MINUS):
        raise ValueError(f"Invalid Sturmian variant ({variant}).")


def coding_bit(x: Qr5, variant: str = PenroseConst.VARIANT_PLUS) -> int:
    """Returns 1 if the point `x` of the circle R/Z is in the coding interval ``[1-alpha, 1)`` (variant ``+``)
    or ``(1-alpha, 1]`` (variant ``-``), 0 otherwise."""
    f = x.frac()
    if variant == PenroseConst.VARIANT_PLUS:
        return int(f >= _CUT)
    return int(f > _CUT or not f)


def sturmian_symbol(u: Any, n: int, variant: str = PenroseConst.VARIANT_PLUS) -> int:
    """Returns the symbol ``z_n`` of the golden Sturmian word of parameter `u`.

    Example:
        >>> sturmian_symbol(0, 1), sturmian_symbol(0, 2)
        (1, 0)
    """
    _check_variant(variant)
    return coding_bit(as_qr5(u) + n * ALPHA, variant)


class SturmianWord:
    """Finite segment of the golden Sturmian word ``z_n = 1 iff {u + n*alpha}`` is in the coding interval.

    Args:
        u (Any): parameter (exact value, reduced into [0, 1))
        variant (str): ``+`` or ``-``
        n_range (range): indices of the segment

    Raises:
        ValueError: in case of invalid variant or empty range
    """
    __u: Qr5                # Parameter
    __variant: str          # Coding interval variant
    __range: range          # Indices
    __symbols: Tuple[int, ...]

    def __init__(self, u: Any, variant: str, n_range: range) -> None:
        _check_variant(variant)
        if len(n_range) == 0 or n_range.step != 1:
            raise ValueError(f"Invalid index range ({n_range}).")
        self.__u = as_qr5(u).frac()
        self.__variant = variant
        self.__range = n_range
        self.__symbols = self.__compute()

    def __compute(self) -> Tuple[int, ...]:
        """Computes the symbols with floats and re-evaluates the ones close to the interval ends exactly."""
        n = np.array(self.__range, dtype=float)
        values = np.mod(float(self.__u) + n * _ALPHA_FLOAT, 1.0)
        bits = (values >= _CUT_FLOAT).astype(int)
        near = (np.abs(values - _CUT_FLOAT) < 1e-9) | (values < 1e-9) | (values > 1.0 - 1e-9)
        # Variants differ only at the exact interval ends.
        for i in np.nonzero(near)[0]:
            bits[i] = coding_bit(self.__u + self.__range[int(i)] * ALPHA, self.__variant)
        return tuple(int(b) for b in bits)

    def get_u(self) -> Qr5:
        """Returns the parameter."""
        return self.__u

    def get_variant(self) -> str:
        """Returns the variant."""
        return self.__variant

    def get_range(self) -> range:
        """Returns the index range."""
        return self.__range

    def get_symbols(self) -> Tuple[int, ...]:
        """Returns the symbols."""
        return self.__symbols

    def as_dict(self) -> Dict[int, int]:
        """Returns the symbols by index."""
        return dict(zip(self.__range, self.__symbols))

    def __getitem__(self, n: int) -> int:
        return self.__symbols[self.__range.index(n)]

    def __len__(self) -> int:
        return len(self.__symbols)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.__symbols)

    def __repr__(self) -> str:
        return f"SturmianWord(u={self.__u}, variant={self.__variant}, range={self.__range}, word={self})"


def sturmian_word(u: Any, variant: str, n_range: range) -> SturmianWord:
    """Returns a segment of the golden Sturmian word (see `SturmianWord`)."""
    return SturmianWord(u, variant, n_range)


def is_balanced(word: Mapping[int, int]) -> bool:
    """Returns `True` if every pair of factors of equal length of the contiguous runs of a word has numbers of
    1s differing by at most one."""
    indices = sorted(word)
    runs: List[List[int]] = []
    for n in indices:
        if runs and runs[-1][-1] + 1 == n:
            runs[-1].append(n)
        else:
            runs.append([n])
    for run in runs:
        prefix = np.concatenate(([0], np.cumsum([word[n] for n in run])))
        for length in range(1, len(run)):
            counts = prefix[length:] - prefix[:-length]
            if counts.max() - counts.min() > 1:
                return False
    return True


class CircleInterval:
    """Arc ``[lo, hi)`` (variant ``+``) or ``(lo, hi]`` (variant ``-``) of the circle R/Z. An arc with
    ``lo == hi`` is the full circle.

    Args:
        lo (Qr5): start point in [0, 1)
        hi (Qr5): end point in [0, 1)
        variant (str): ``+`` or ``-``
    """
    __lo: Qr5           # Start of the arc
    __hi: Qr5           # End of the arc
    __variant: str      # Closed side

    def __init__(self, lo: Any, hi: Any, variant: str = PenroseConst.VARIANT_PLUS) -> None:
        _check_variant(variant)
        self.__lo = as_qr5(lo).frac()
        self.__hi = as_qr5(hi).frac()
        self.__variant = variant

    def get_lo(self) -> Qr5:
        """Returns the start point."""
        return self.__lo

    def get_hi(self) -> Qr5:
        """Returns the end point."""
        return self.__hi

    def get_variant(self) -> str:
        """Returns the variant."""
        return self.__variant

    def get_length(self) -> Qr5:
        """Returns the length of the arc."""
        length = (self.__hi - self.__lo).frac()
        return length if length else ONE

    def get_midpoint(self) -> Qr5:
        """Returns the midpoint of the arc."""
        return (self.__lo + self.get_length() / 2).frac()

    def contains(self, x: Any) -> bool:
        """Returns `True` if the point is in the arc."""
        offset = (as_qr5(x) - self.__lo).frac()
        length = self.get_length()
        if self.__variant == PenroseConst.VARIANT_PLUS:
            return offset < length
        return (not offset and length == ONE) or ZERO < offset <= length

    def rotate(self, t: Any) -> "CircleInterval":
        """Returns the arc rotated by `t`."""
        t = as_qr5(t)
        return CircleInterval(self.__lo + t, self.__hi + t, self.__variant)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, CircleInterval):
            return NotImplemented
        return (self.__lo, self.__hi, self.__variant) == (other.__lo, other.__hi, other.__variant)

    def __hash__(self) -> int:
        return hash((self.__lo, self.__hi, self.__variant))

    def __repr__(self) -> str:
        left, right = ("[", ")") if self.__variant == PenroseConst.VARIANT_PLUS else ("(", "]")
        return f"CircleInterval({left}{self.__lo}, {self.__hi}{right}, length={float(self.get_length()):.6g})"


def _word_mapping(word: Union[SturmianWord, Mapping[int, int], Sequence[int]]) -> Dict[int, int]:
    if isinstance(word, SturmianWord):
        return word.as_dict()
    if isinstance(word, Mapping):
        return {int(k): int(v) for k, v in word.items()}
    return {i: int(v) for i, v in enumerate(word)}


def recover_parameter(word: Union[SturmianWord, Mapping[int, int], Sequence[int]],
                      variant: str = PenroseConst.VARIANT_PLUS) -> CircleInterval:
    """Returns the set of parameters `u` whose golden Sturmian word agrees with a finite word. The set is an
    arc bounded by points ``{-m*alpha}``.

    Args:
        word: symbols by index (a `SturmianWord`, a mapping or a sequence indexed from 0)
        variant (str): ``+`` or ``-``

    Returns:
        CircleInterval: the arc of admissible parameters

    Raises:
        ValueError: in case of empty, non-binary or unbalanced word, or if no parameter is admissible
        RuntimeError: if the admissible set is not connected

    Example:
        >>> recover_parameter(sturmian_word(Fraction(1, 3), "+", range(40))).contains(Fraction(1, 3))
        True
    """
    _check_variant(variant)
    bits = _word_mapping(word)

    # Validate input parameters.
    if not bits:
        raise ValueError("Invalid empty word.")
    if any(b not in (0, 1) for b in bits.values()):
        raise ValueError("Invalid word, it is not binary.")
    if not is_balanced(bits):
        raise ValueError("Invalid word, it is not balanced.")

    indices = sorted(bits)
    points = sorted({(-m * ALPHA).frac() for m in range(indices[0], indices[-1] + 2)})
    gaps = list(zip(points, points[1:] + [points[0] + 1]))
    n = np.array(indices, dtype=float)
    expected = np.array([bits[i] for i in indices])

    admissible = []
    for lo, hi in gaps:
        mid = (lo + hi) / 2
        values = np.mod(float(mid) + n * _ALPHA_FLOAT, 1.0)
        near = (np.abs(values - _CUT_FLOAT) < 1e-9) | (values < 1e-9) | (values > 1.0 - 1e-9)
        if near.any():
            ok = all(coding_bit(mid + i * ALPHA, variant) == bits[i] for i in indices)
        else:
            ok = bool(((values >= _CUT_FLOAT).astype(int) == expected).all())
        admissible.append(ok)

    if not any(admissible):
        raise ValueError("Invalid word, no parameter is admissible.")
    # Merge admissible gaps into arcs (cyclic).
    arcs = []
    count = len(gaps)
    start = next((i for i in range(count) if admissible[i] and not admissible[i - 1]), None)
    if start is None:
        return CircleInterval(ZERO, ZERO, variant)
    i = start
    for _ in range(count):
        if admissible[i] and not admissible[i - 1]:
            arcs.append([i, i])
        elif admissible[i]:
            arcs[-1][1] = i
        i = (i + 1) % count
    if len(arcs) > 1:
        raise RuntimeError(f"Admissible parameters are not connected ({len(arcs)} arcs).")
    first, last = arcs[0]
    result = CircleInterval(gaps[first][0], gaps[last][1], variant)
    _logger.debug("recover_parameter(): %d symbols, %r.", len(indices), result)
    return result


class SymbolGrid:
    """Grid of symbols ``(z, z')`` indexed by ``[n0, n1]``.

    Args:
        n0_range (range): first indices
        n1_range (range): second indices
        z (np.ndarray): ``z`` symbols
        zp (np.ndarray): ``z'`` symbols
    """
    __n0_range: range       # First indices
    __n1_range: range       # Second indices
    __z: np.ndarray         # z symbols
    __zp: np.ndarray        # z' symbols

    def __init__(self, n0_range: range, n1_range: range, z: np.ndarray, zp: np.ndarray) -> None:
        shape = (len(n0_range), len(n1_range))
        if np.shape(z) != shape or np.shape(zp) != shape:
            raise ValueError(f"Invalid symbol grid shape ({np.shape(z)}, {np.shape(zp)} != {shape}).")
        self.__n0_range = n0_range
        self.__n1_range = n1_range
        self.__z = np.asarray(z, dtype=np.int8)
        self.__zp = np.asarray(zp, dtype=np.int8)

    def get_z(self) -> np.ndarray:
        """Returns the ``z`` symbols."""
        return self.__z

    def get_zp(self) -> np.ndarray:
        """Returns the ``z'`` symbols."""
        return self.__zp

    def get_symbol(self, n: Tuple[int, int]) -> Tuple[int, int]:
        """Returns the symbol ``(z, z')`` of an index."""
        i0, i1 = self.__n0_range.index(n[0]), self.__n1_range.index(n[1])
        return int(self.__z[i0, i1]), int(self.__zp[i0, i1])

    def is_rank_one(self) -> bool:
        """Returns `True` if ``z`` depends only on ``n0`` and ``z'`` only on ``n1``."""
        return bool((self.__z == self.__z[:, :1]).all() and (self.__zp == self.__zp[:1, :]).all())

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, SymbolGrid):
            return NotImplemented
        return (self.__n0_range == other.__n0_range and self.__n1_range == other.__n1_range and
                np.array_equal(self.__z, other.__z) and np.array_equal(self.__zp, other.__zp))

    def __repr__(self) -> str:
        return f"SymbolGrid(n0={self.__n0_range}, n1={self.__n1_range})"


def tensor_grid(z_word: SturmianWord, zp_word: SturmianWord) -> SymbolGrid:
    """Returns the symbol grid ``z (x) z'`` of two words (``z`` along ``n0``, ``z'`` along ``n1``)."""
    z = np.array(z_word.get_symbols())
    zp = np.array(zp_word.get_symbols())
    return SymbolGrid(z_word.get_range(), zp_word.get_range(), np.repeat(z[:, None], len(zp), axis=1),
                      np.repeat(zp[None, :], len(z), axis=0))


def _line_counts(u: PentagridParams, n0: np.ndarray, n1: np.ndarray, j: int) -> Tuple[np.ndarray, np.ndarray]:
    """Returns the float counts of family `j` lines through the rhombs and the mask of undecided rhombs."""
    w1, w0 = float(dot(V[j], F1)), float(dot(V[j], F0))
    uf = u.get_u_float()
    base = (n0[:, None] - uf[0]) * w1 + (n1[None, :] - uf[1]) * w0 + uf[j]
    corners = np.stack((base, base + w1, base + w1 + w0, base + w0))
    near = (np.abs(corners - np.rint(corners)) < PenroseConst.FLOAT_GUARD).any(axis=0)
    counts = np.floor(corners.max(axis=0)).astype(np.int64) - np.floor(corners.min(axis=0)).astype(np.int64)
    return counts, near


def read_symbol_grid(u: PentagridParams, n0_range: range, n1_range: range) -> SymbolGrid:
    """Returns the symbols ``(z, z')`` of the grid patches ``R_n``: the number of family 4 and family 2 grid
    lines through the rhomb minus 1.

    Raises:
        SingularPatchError: if a family 2 or family 4 line passes through a corner of a rhomb
        RuntimeError: if a count is not 1 or 2
    """
    n0 = np.array(n0_range, dtype=np.int64)
    n1 = np.array(n1_range, dtype=np.int64)
    symbols = []
    for j in (4, 2):
        counts, near = _line_counts(u, n0, n1, j)
        for i0, i1 in zip(*np.nonzero(near)):
            counts[i0, i1] = count_family_lines(u, (int(n0[i0]), int(n1[i1])), j)
        symbols.append(counts - 1)
    z, zp = symbols
    if not (np.isin(z, (0, 1)).all() and np.isin(zp, (0, 1)).all()):
        raise RuntimeError("Invalid symbol grid, line counts out of range.")
    return SymbolGrid(n0_range, n1_range, z, zp)


def find_singular_patch(u: PentagridParams, n0_range: range, n1_range: range) -> Optional[Tuple[int, int]]:
    """Returns the first rhomb index with a family 2 or family 4 line through a corner, `None` if there is
    none."""
    try:
        read_symbol_grid(u, n0_range, n1_range)
    except SingularPatchError as e:
        return e.n
    return None

# End
