"""Scalar backend shared by every numerical routine.

Arrays are either ordinary ``complex128``/``float64`` numpy arrays or numpy
object arrays holding :mod:`mpmath` numbers.  All routines in the package are
written against the handful of helpers below so that the same code path runs
in binary64 and in extended precision.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterator

import mpmath
import numpy as np

BINARY64 = "binary64"
EXTENDED = "extended"
MIN_EXTENDED_DIGITS = 30
DEFAULT_EXTENDED_DIGITS = 60


@dataclass(frozen=True)
class Precision:
    mode: str = BINARY64
    digits: int = DEFAULT_EXTENDED_DIGITS

    def __post_init__(self) -> None:
        if self.mode not in (BINARY64, EXTENDED):
            raise ValueError(f"unknown precision mode {self.mode!r}")
        if self.mode == EXTENDED and self.digits < MIN_EXTENDED_DIGITS:
            raise ValueError(f"extended precision needs at least {MIN_EXTENDED_DIGITS} digits")

    @property
    def extended(self) -> bool:
        return self.mode == EXTENDED

    @classmethod
    def parse(cls, text: str | None) -> "Precision":
        """Parse ``binary64``, ``extended`` or ``extended:DIGITS``."""
        if text is None or text == BINARY64:
            return cls()
        if text == EXTENDED:
            return cls(EXTENDED)
        if text.startswith(EXTENDED + ":"):
            return cls(EXTENDED, int(text.split(":", 1)[1]))
        raise ValueError(f"unknown precision {text!r}")


@contextmanager
def working_precision(prec: Precision) -> Iterator[Precision]:
    if prec.extended:
        with mpmath.workdps(prec.digits):
            yield prec
    else:
        yield prec


def is_mp_array(x) -> bool:
    return isinstance(x, np.ndarray) and x.dtype == object


def is_mp(x) -> bool:
    return isinstance(x, (mpmath.mpf, mpmath.mpc)) or is_mp_array(x)


def to_mp(x):
    """Convert a scalar or array to mpmath numbers at the current working precision."""
    if isinstance(x, np.ndarray):
        if x.dtype == object:
            return np.array([_mp_scalar(v) for v in x.ravel()], dtype=object).reshape(x.shape)
        return np.array([_mp_scalar(v) for v in x.ravel()], dtype=object).reshape(x.shape)
    return _mp_scalar(x)


def _mp_scalar(v):
    if isinstance(v, (mpmath.mpf, mpmath.mpc)):
        return +v
    if isinstance(v, (complex, np.complexfloating)):
        return mpmath.mpc(v.real, v.imag)
    return mpmath.mpf(v)


def to_float(x):
    """Round mpmath scalars/arrays back to binary64 (complex arrays stay complex)."""
    if isinstance(x, np.ndarray) and x.dtype == object:
        flat = x.ravel()
        if any(isinstance(v, mpmath.mpc) for v in flat):
            return np.array([complex(v) for v in flat]).reshape(x.shape)
        return np.array([float(v) for v in flat]).reshape(x.shape)
    if isinstance(x, mpmath.mpc):
        return complex(x)
    if isinstance(x, mpmath.mpf):
        return float(x)
    return x


def real(x):
    if is_mp_array(x):
        return np.array([mpmath.re(v) for v in x.ravel()], dtype=object).reshape(x.shape)
    if isinstance(x, (mpmath.mpf, mpmath.mpc)):
        return mpmath.re(x)
    return np.real(x)


def imag(x):
    if is_mp_array(x):
        return np.array([mpmath.im(v) for v in x.ravel()], dtype=object).reshape(x.shape)
    if isinstance(x, (mpmath.mpf, mpmath.mpc)):
        return mpmath.im(x)
    return np.imag(x)


def conj(x):
    if isinstance(x, (mpmath.mpf, mpmath.mpc)):
        return mpmath.conj(x)
    return np.conj(x)


def abs2(x):
    """Elementwise squared modulus, real-valued."""
    if is_mp_array(x) or isinstance(x, (mpmath.mpf, mpmath.mpc)):
        return real(x * conj(x))
    return np.real(x * np.conj(x))


def sqrt(x):
    if isinstance(x, (mpmath.mpf, mpmath.mpc)):
        return mpmath.sqrt(x)
    if isinstance(x, complex):
        return complex(np.sqrt(x))
    return math.sqrt(x)


def sum_abs2(x):
    s = abs2(x)
    return s.sum() if isinstance(s, np.ndarray) else s


def trace(m):
    return sum(m[i, i] for i in range(m.shape[0]))


def zero_like(x):
    return mpmath.mpf(0) if is_mp(x) else 0.0


def eps_of(x) -> float:
    """Unit roundoff matching the number type of ``x``."""
    if is_mp(x):
        return float(mpmath.mpf(2) ** (-mpmath.mp.prec))
    return float(np.finfo(float).eps)
