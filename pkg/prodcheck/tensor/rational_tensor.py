"""Dense exact-rational tensors representing multilinear maps.

Axes are ordered (dom..., cod...) and stored row-major in a numpy object
array whose entries are :class:`fractions.Fraction`.
"""
from fractions import Fraction
from math import prod
from typing import Iterator, Optional, Sequence

import numpy as np

from ..exceptions import ShapeMismatch

_to_fraction = np.frompyfunc(Fraction, 1, 1)

ZERO = Fraction(0)
ONE = Fraction(1)


def fraction_array(values, shape: Sequence[int]) -> np.ndarray:
    shape = tuple(shape)
    arr = np.asarray(values, dtype=object)
    if arr.size != prod(shape):
        raise ShapeMismatch(f"{arr.size} entries do not fill shape {shape}")
    if arr.size:
        arr = np.asarray(_to_fraction(arr), dtype=object)
    return arr.reshape(shape)


def zeros(shape: Sequence[int]) -> np.ndarray:
    return np.full(tuple(shape), ZERO, dtype=object)


class RationalTensor:
    __slots__ = ("dom", "cod", "data")

    def __init__(self, dom: Sequence[int], cod: Sequence[int], data=None):
        self.dom = tuple(int(n) for n in dom)
        self.cod = tuple(int(n) for n in cod)
        for n in self.dom + self.cod:
            if n < 0:
                raise ShapeMismatch(f"negative extent in {self.dom} -> {self.cod}")
        shape = self.dom + self.cod
        arr = zeros(shape) if data is None else fraction_array(data, shape)
        arr.flags.writeable = False
        self.data = arr

    @property
    def shape(self) -> tuple[int, ...]:
        return self.dom + self.cod

    @property
    def ndim(self) -> int:
        return len(self.dom) + len(self.cod)

    @property
    def is_scalar(self) -> bool:
        return not self.dom and not self.cod

    def scalar(self) -> Fraction:
        if not self.is_scalar:
            raise ShapeMismatch(f"not a scalar: {self.dom} -> {self.cod}")
        return self.data[()]

    def __getitem__(self, index) -> Fraction:
        return self.data[index]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalTensor):
            return NotImplemented
        if self.dom != other.dom or self.cod != other.cod:
            return False
        return first_difference(self, other) is None

    def __hash__(self):
        return hash((self.dom, self.cod, tuple(self.data.flat)))

    def __repr__(self) -> str:
        return f"RationalTensor(dom={self.dom}, cod={self.cod}, nonzero={len(list(self.nonzero()))})"

    def nonzero(self) -> Iterator[tuple[tuple[int, ...], Fraction]]:
        """Nonzero entries in row-major order."""
        if self.is_scalar:
            if self.data[()] != 0:
                yield (), self.data[()]
            return
        for index in np.argwhere(self.data != 0):
            key = tuple(int(i) for i in index)
            yield key, self.data[key]

    def matrix(self) -> list[list[Fraction]]:
        """Rows indexed by flattened dom, columns by flattened cod."""
        rows, cols = prod(self.dom), prod(self.cod)
        flat = self.data.reshape(rows, cols)
        return [[flat[r, c] for c in range(cols)] for r in range(rows)]


def first_difference(a: RationalTensor, b: RationalTensor) -> Optional[tuple[int, ...]]:
    """Lexicographically first index where ``a`` and ``b`` differ, or None."""
    if a.shape != b.shape:
        raise ShapeMismatch(f"cannot compare {a.dom}->{a.cod} with {b.dom}->{b.cod}")
    if a.is_scalar:
        return None if a.data[()] == b.data[()] else ()
    if a.data.size == 0:
        return None
    diff = np.argwhere(a.data != b.data)
    if len(diff) == 0:
        return None
    return tuple(int(i) for i in diff[0])


def t_zero(dom: Sequence[int], cod: Sequence[int]) -> RationalTensor:
    return RationalTensor(dom, cod)


def t_scalar(value) -> RationalTensor:
    return RationalTensor((), (), [Fraction(value)])


def t_identity(extent: int) -> RationalTensor:
    return t_identity_multi((extent,))


def t_identity_multi(extents: Sequence[int]) -> RationalTensor:
    """Identity on a tensor product of spaces, one axis per factor."""
    extents = tuple(extents)
    n = prod(extents)
    eye = zeros((n, n))
    for k in range(n):
        eye[k, k] = ONE
    return RationalTensor(extents, extents, eye.reshape(extents + extents))


def t_braid(xs: Sequence[int], ys: Sequence[int]) -> RationalTensor:
    """Symmetric braiding of the block ``xs`` past the block ``ys``."""
    xs, ys = tuple(xs), tuple(ys)
    ident = t_identity_multi(xs + ys).data
    k, nx = len(xs) + len(ys), len(xs)
    cod_axes = [k + nx + j for j in range(len(ys))] + [k + j for j in range(nx)]
    data = np.transpose(ident, list(range(k)) + cod_axes)
    return RationalTensor(xs + ys, ys + xs, data)


def t_swap(m: int, n: int) -> RationalTensor:
    return t_braid((m,), (n,))


def t_compose(after: RationalTensor, before: RationalTensor) -> RationalTensor:
    """``after`` ∘ ``before``: contract before's cod axes with after's dom axes."""
    if after.dom != before.cod:
        raise ShapeMismatch(f"compose: after expects {after.dom}, before yields {before.cod}")
    k = len(before.cod)
    if 0 in before.cod or before.data.size == 0 or after.data.size == 0:
        return t_zero(before.dom, after.cod)
    data = np.tensordot(before.data, after.data,
                        axes=(list(range(len(before.dom), before.ndim)), list(range(k))))
    return RationalTensor(before.dom, after.cod, data)


def t_tensor(a: RationalTensor, b: RationalTensor) -> RationalTensor:
    """Outer product with axes reordered to (a.dom, b.dom, a.cod, b.cod)."""
    outer = np.asarray(np.multiply.outer(a.data, b.data), dtype=object)
    na, nad, nbd = a.ndim, len(a.dom), len(b.dom)
    order = (list(range(nad)) + [na + j for j in range(nbd)]
             + list(range(nad, na)) + [na + j for j in range(nbd, b.ndim)])
    data = np.transpose(outer.reshape(a.shape + b.shape), order)
    return RationalTensor(a.dom + b.dom, a.cod + b.cod, data)


def t_add(a: RationalTensor, b: RationalTensor) -> RationalTensor:
    if a.shape != b.shape or a.dom != b.dom:
        raise ShapeMismatch(f"add: {a.dom}->{a.cod} vs {b.dom}->{b.cod}")
    return RationalTensor(a.dom, a.cod, a.data + b.data)


def t_scale(c, a: RationalTensor) -> RationalTensor:
    return RationalTensor(a.dom, a.cod, a.data * Fraction(c))
