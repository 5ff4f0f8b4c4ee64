"""Truncated multivariate exponential generating functions over exact integers.

An :class:`Egf` in ``k`` variables with caps ``(M1, ..., Mk)`` stores, for every
multi-index ``m`` with ``0 <= m_t <= M_t``, the *counting value* ``f(m)``: the
coefficient of ``x1^m1/m1! ... xk^mk/mk!``. In this normalization the product of
two series is a binomial convolution and exp/log never leave the integers.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

from graphcomp.combinatorics import binomial

__all__ = ["Egf", "CapsMismatchError", "zero", "one", "product"]

MultiIndex = tuple[int, ...]


class CapsMismatchError(ValueError):
    """Binary operation on series with different arity or caps."""


def _strides(caps: MultiIndex) -> MultiIndex:
    strides = [1] * len(caps)
    for t in range(len(caps) - 2, -1, -1):
        strides[t] = strides[t + 1] * (caps[t + 1] + 1)
    return tuple(strides)


@lru_cache(maxsize=4096)
def _splits(m: MultiIndex, strides: MultiIndex) -> tuple[tuple[int, int], ...]:
    """All ``(flat(i), prod_t C(m_t, i_t))`` for ``0 <= i <= m`` componentwise."""
    out = []
    for i in itertools.product(*(range(mt + 1) for mt in m)):
        weight = math.prod(binomial(mt, it) for mt, it in zip(m, i))
        out.append((sum(a * s for a, s in zip(i, strides)), weight))
    return tuple(out)


class Egf:
    """Immutable dense truncated EGF with integer counting-value coefficients."""

    __slots__ = ("caps", "coeffs", "_strides")

    def __init__(self, caps: Sequence[int], coeffs: Iterable[int]):
        caps = tuple(int(c) for c in caps)
        if not caps:
            raise ValueError("arity must be at least 1")
        if any(c < 0 for c in caps):
            raise ValueError(f"caps must be non-negative, got {caps}")
        coeffs = tuple(coeffs)
        if len(coeffs) != math.prod(c + 1 for c in caps):
            raise ValueError(
                f"expected {math.prod(c + 1 for c in caps)} coefficients for caps {caps}, "
                f"got {len(coeffs)}"
            )
        object.__setattr__(self, "caps", caps)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_strides", _strides(caps))

    def __setattr__(self, name, value):
        raise AttributeError("Egf is immutable")

    # -- construction -------------------------------------------------------

    @classmethod
    def zero(cls, caps: Sequence[int]) -> Egf:
        return cls(caps, itertools.repeat(0, math.prod(c + 1 for c in caps)))

    @classmethod
    def one(cls, caps: Sequence[int]) -> Egf:
        n = math.prod(c + 1 for c in caps)
        return cls(caps, itertools.chain((1,), itertools.repeat(0, n - 1)))

    @classmethod
    def from_function(cls, caps: Sequence[int], fn: Callable[..., int]) -> Egf:
        """Series whose counting value at ``m`` is ``fn(*m)``."""
        caps = tuple(caps)
        return cls(caps, (int(fn(*m)) for m in _indices(caps)))

    @classmethod
    def from_indicator(cls, caps: Sequence[int], predicate: Callable[[MultiIndex], bool]) -> Egf:
        """Series with counting value 1 where ``predicate(m)`` holds and 0 elsewhere."""
        caps = tuple(caps)
        return cls(caps, (1 if predicate(m) else 0 for m in _indices(caps)))

    # -- access -------------------------------------------------------------

    @property
    def arity(self) -> int:
        return len(self.caps)

    def indices(self) -> Iterator[MultiIndex]:
        return _indices(self.caps)

    def items(self) -> Iterator[tuple[MultiIndex, int]]:
        return zip(self.indices(), self.coeffs)

    def _flat(self, index: MultiIndex) -> int:
        return sum(a * s for a, s in zip(index, self._strides))

    def coefficient(self, index: Sequence[int]) -> int:
        """Counting value at ``index``; ``IndexError`` outside the caps."""
        index = tuple(index)
        if len(index) != self.arity:
            raise IndexError(f"index {index} has wrong arity for caps {self.caps}")
        if any(not 0 <= a <= c for a, c in zip(index, self.caps)):
            raise IndexError(f"index {index} outside caps {self.caps}")
        return self.coeffs[self._flat(index)]

    __getitem__ = coefficient

    def __eq__(self, other):
        if not isinstance(other, Egf):
            return NotImplemented
        return self.caps == other.caps and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.caps, self.coeffs))

    def __repr__(self):
        nonzero = {m: c for m, c in self.items() if c}
        return f"Egf(caps={self.caps}, nonzero={nonzero})"

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: Egf) -> None:
        if not isinstance(other, Egf):
            raise TypeError(f"expected Egf, got {type(other).__name__}")
        if self.caps != other.caps:
            raise CapsMismatchError(f"caps differ: {self.caps} vs {other.caps}")

    def add(self, other: Egf) -> Egf:
        self._check(other)
        return Egf(self.caps, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c: int) -> Egf:
        return Egf(self.caps, (c * a for a in self.coeffs))

    def mul(self, other: Egf) -> Egf:
        """Binomial convolution: ``h(m) = sum_{i<=m} prod C(m_t,i_t) f(i) g(m-i)``."""
        self._check(other)
        f, g = self.coeffs, other.coeffs
        out = []
        for m in self.indices():
            fm = self._flat(m)
            out.append(sum(w * f[fi] * g[fm - fi] for fi, w in _splits(m, self._strides) if f[fi]))
        return Egf(self.caps, out)

    def exp(self) -> Egf:
        """``exp`` of a series with zero constant term.

        Uses ``d/dx_t exp(f) = (d/dx_t f) exp(f)``: with ``m = m' + e_t``,
        ``h(m) = sum_{i<=m'} C(m',i) f(i + e_t) h(m' - i)``. Entries are filled
        in row-major order, so every right-hand ``h`` is already known.
        """
        if self.coeffs[0] != 0:
            raise ValueError(f"exp requires zero constant term, got {self.coeffs[0]}")
        f, strides = self.coeffs, self._strides
        h = [0] * len(f)
        h[0] = 1
        for m in itertools.islice(self.indices(), 1, None):
            t = next(k for k, a in enumerate(m) if a)
            mp = m[:t] + (m[t] - 1,) + m[t + 1:]
            fmp, st = self._flat(mp), strides[t]
            h[fmp + st] = sum(w * f[fi + st] * h[fmp - fi] for fi, w in _splits(mp, strides))
        return Egf(self.caps, h)

    def log(self) -> Egf:
        """Inverse of :meth:`exp` for a series with constant term 1.

        Same recurrence as :meth:`exp` solved for ``f(m)``; the ``i = m'`` term
        carries ``h(0) = 1`` so no division occurs.
        """
        if self.coeffs[0] != 1:
            raise ValueError(f"log requires constant term 1, got {self.coeffs[0]}")
        h, strides = self.coeffs, self._strides
        f = [0] * len(h)
        for m in itertools.islice(self.indices(), 1, None):
            t = next(k for k, a in enumerate(m) if a)
            mp = m[:t] + (m[t] - 1,) + m[t + 1:]
            fmp, st = self._flat(mp), strides[t]
            acc = h[fmp + st]
            for fi, w in _splits(mp, strides):
                if fi != fmp:
                    acc -= w * f[fi + st] * h[fmp - fi]
            f[fmp + st] = acc
        return Egf(self.caps, f)

    __add__ = add
    __mul__ = mul

    def __neg__(self) -> Egf:
        return self.scale(-1)

    def __sub__(self, other: Egf) -> Egf:
        return self.add(other.scale(-1))


def _indices(caps: MultiIndex) -> Iterator[MultiIndex]:
    return itertools.product(*(range(c + 1) for c in caps))


def zero(arity: int, caps: Sequence[int]) -> Egf:
    if len(caps) != arity:
        raise ValueError(f"caps {tuple(caps)} do not match arity {arity}")
    return Egf.zero(caps)


def one(arity: int, caps: Sequence[int]) -> Egf:
    if len(caps) != arity:
        raise ValueError(f"caps {tuple(caps)} do not match arity {arity}")
    return Egf.one(caps)


def product(fs: Sequence[Egf]) -> Egf:
    """Left fold of :meth:`Egf.mul` over a non-empty list."""
    if not fs:
        raise ValueError("product of an empty list is not defined; pass at least one series")
    acc = fs[0]
    for g in fs[1:]:
        acc = acc.mul(g)
    return acc
