"""Operators turning a direct-influence matrix into indirect influences.

Four operators are provided, all reading a matrix ``D`` whose entry
``[a, b]`` is the direct influence of ``b`` on ``a``:

* ``micmac``: ``D^k``, counting paths of length exactly ``k``.
* ``pagerank_limit``: ``lim_k [p*Dbar + (1-p)*E_n]^k`` where ``Dbar``
  replaces zero columns with ``1/n`` and ``E_n`` is the all-``1/n``
  matrix; the teleportation limit, requiring column sums of 0 or 1.
* ``heat_kernel``: ``exp(lambda*(D - I))``, a diffusion-style smoothing.
* ``pwp``: ``(exp(lambda*D) - I) / (exp(lambda) - 1)``, where every chain
  of direct influences, of any length, contributes, weighted by
  ``lambda^k / k!``; the divisor is the *scalar* ``exp(lambda) - 1``.

Each operator accepts an :class:`~tradenet.model.InfluenceMatrix` (returning
one with kind ``indirect`` and the operator's parameters) or a plain square
array (returning an array).  All are pure functions of their inputs and
deterministic for fixed options.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    ColumnStochasticityError,
    ConvergenceError,
    DimensionMismatchError,
    NegativeEntryError,
)
from .model import InfluenceMatrix, MatrixKind

__all__ = [
    "ExpOptions",
    "MethodSpec",
    "matrix_exponential",
    "pwp",
    "micmac",
    "pagerank_limit",
    "column_normalize",
    "heat_kernel",
]

_TAYLOR_TERM_CAP = 128  # unreachable for scaled norm <= 0.5; guards bad tolerances


@dataclass(frozen=True)
class ExpOptions:
    """Numerical controls for the dense matrix exponential."""

    taylor_tolerance: float = 1e-13
    max_scaling_squarings: int = 32

    def __post_init__(self) -> None:
        if not 0 < self.taylor_tolerance <= 1e-6:
            raise ValueError(f"taylor_tolerance must be in (0, 1e-6], got {self.taylor_tolerance}")
        if self.max_scaling_squarings < 0:
            raise ValueError("max_scaling_squarings must be non-negative")


def _square_array(m) -> np.ndarray:
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {a.shape}")
    return a


def _unpack(m) -> tuple[np.ndarray, InfluenceMatrix | None]:
    if isinstance(m, InfluenceMatrix):
        return np.array(m.values), m
    return np.array(_square_array(m)), None


def _pack(source: InfluenceMatrix | None, values: np.ndarray, kind: MatrixKind):
    if source is None:
        return values
    return source.with_values(values, kind)


def matrix_exponential(m, options: ExpOptions | None = None) -> np.ndarray:
    """Dense ``exp(m)`` by scaling and squaring with a truncated power series.

    The matrix is scaled by ``2**s`` so its 1-norm is at most 0.5, the
    series is summed until a term falls below ``taylor_tolerance`` times the
    dominant entry of the partial sum, and the result is squared ``s``
    times.

    Raises
    ------
    DimensionMismatchError
        If ``m`` is not square.
    OverflowError
        If the required scaling exceeds ``max_scaling_squarings`` or the
        result leaves the representable range.
    """
    opts = options if options is not None else ExpOptions()
    a = _square_array(m)
    n = a.shape[0]
    if n == 0:
        return np.identity(0)
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix exponential of a non-finite matrix")

    norm = float(np.abs(a).sum(axis=0).max())
    squarings = 0 if norm <= 0.5 else int(math.ceil(math.log2(norm / 0.5)))
    if squarings > opts.max_scaling_squarings:
        raise OverflowError(
            f"matrix 1-norm {norm:g} needs {squarings} squarings "
            f"(limit {opts.max_scaling_squarings})"
        )

    scaled = a / 2.0**squarings
    result = np.identity(n)
    term = np.identity(n)
    with np.errstate(over="ignore", invalid="ignore"):  # overflow reported below
        for k in range(1, _TAYLOR_TERM_CAP + 1):
            term = term @ scaled / k
            result = result + term
            if np.abs(term).max() <= opts.taylor_tolerance * max(1.0, np.abs(result).max()):
                break
        for _ in range(squarings):
            result = result @ result

    if not np.all(np.isfinite(result)):
        raise OverflowError("matrix exponential overflowed the floating-point range")
    return result


def pwp(direct, lam: float = 1.0, options: ExpOptions | None = None):
    """Indirect influences as ``(exp(lam*D) - I) / (exp(lam) - 1)``.

    The numerator drops the identity from the matrix exponential
    (``exp(x) - 1`` applied to the matrix); the denominator is the scalar
    ``exp(lam) - 1``.  A directed path of any length from ``b`` to ``a``
    makes the output entry ``[a, b]`` positive, and as ``lam -> 0`` the
    output approaches ``D`` itself.
    """
    if lam <= 0:
        raise ValueError(f"lambda must be positive, got {lam}")
    values, source = _unpack(direct)
    numerator = matrix_exponential(lam * values, options) - np.identity(values.shape[0])
    out = numerator / math.expm1(lam)
    return _pack(source, out, MatrixKind.indirect("pwp", **{"lambda": lam}))


def micmac(direct, k: int = 4):
    """Indirect influences as the ``k``-th matrix power: paths of length ``k``."""
    if int(k) != k or k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    values, source = _unpack(direct)
    out = np.linalg.matrix_power(values, int(k))
    return _pack(source, out, MatrixKind.indirect("micmac", k=k))


def column_normalize(direct):
    """Divide every nonzero column by its sum; zero columns stay zero.

    Makes a non-negative matrix admissible for :func:`pagerank_limit`
    (zero columns are handled there by teleportation).
    """
    values, source = _unpack(direct)
    if values.size and values.min() < 0:
        raise NegativeEntryError("column normalization requires non-negative entries")
    sums = values.sum(axis=0)
    out = values.copy()
    nonzero = sums > 0
    out[:, nonzero] = values[:, nonzero] / sums[nonzero]
    kind = source.kind if source is not None else None
    return _pack(source, out, kind)


def pagerank_limit(
    direct,
    p: float = 0.86,
    tolerance: float = 1e-12,
    max_iters: int = 10_000,
):
    """Teleportation limit of the direct matrix: rank-one stationary output.

    Zero columns are replaced by ``1/n``, the mix
    ``p*Dbar + (1-p)*E_n`` is formed, and its stationary distribution is
    found by power iteration on a vector (the limit of the matrix powers is
    the rank-one matrix whose every column is that vector).

    Raises
    ------
    ColumnStochasticityError
        If a column sum is neither 0 nor 1 (within 1e-9); raw trade or
        offer matrices must go through :func:`column_normalize` first.
    ConvergenceError
        If ``max_iters`` is exhausted (does not happen for ``p < 1``).
    """
    if not 0 < p < 1:
        raise ValueError(f"p must lie in (0, 1), got {p}")
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    values, source = _unpack(direct)
    kind = MatrixKind.indirect("pagerank", p=p)
    n = values.shape[0]
    if n == 0:
        return _pack(source, values, kind)
    if values.min() < 0:
        raise NegativeEntryError("pagerank requires non-negative entries")

    sums = values.sum(axis=0)
    zero_cols = np.abs(sums) <= 1e-9
    bad = ~zero_cols & (np.abs(sums - 1.0) > 1e-9)
    if bad.any():
        j = int(np.argmax(bad))
        label = source.labels[j] if source is not None else str(j)
        raise ColumnStochasticityError(
            f"column {label} sums to {sums[j]:.12g}, expected 0 or 1"
        )

    mixed = p * values + (1.0 - p) / n
    mixed[:, zero_cols] = p / n + (1.0 - p) / n

    v = np.full(n, 1.0 / n)
    for _ in range(max_iters):
        w = mixed @ v
        w /= w.sum()
        delta = float(np.abs(w - v).max())
        v = w
        if delta < tolerance:
            break
    else:
        raise ConvergenceError(f"pagerank did not converge in {max_iters} iterations")

    return _pack(source, np.repeat(v[:, None], n, axis=1), kind)


def heat_kernel(direct, lam: float = 1.0, options: ExpOptions | None = None):
    """Indirect influences as ``exp(lam*(D - I))``."""
    if lam <= 0:
        raise ValueError(f"lambda must be positive, got {lam}")
    values, source = _unpack(direct)
    out = matrix_exponential(lam * (values - np.identity(values.shape[0])), options)
    return _pack(source, out, MatrixKind.indirect("heatkernel", **{"lambda": lam}))


@dataclass(frozen=True)
class MethodSpec:
    """An indirect-influence operator choice plus its parameter.

    Exactly the parameter relevant to the method may be set: ``lam`` for
    ``pwp`` and ``heatkernel``, ``k`` for ``micmac``, ``p`` for
    ``pagerank``.  Unset parameters take the conventional defaults
    (``lam=1``, ``k=4``, ``p=0.86``).
    """

    method: str
    lam: float | None = None
    k: int | None = None
    p: float | None = None

    _DEFAULTS = {"pwp": ("lam", 1.0), "heatkernel": ("lam", 1.0), "micmac": ("k", 4), "pagerank": ("p", 0.86)}

    def __post_init__(self) -> None:
        if self.method not in self._DEFAULTS:
            raise ValueError(f"unknown method {self.method!r}")
        relevant, default = self._DEFAULTS[self.method]
        for name in ("lam", "k", "p"):
            value = getattr(self, name)
            if name == relevant:
                if value is None:
                    object.__setattr__(self, name, default)
            elif value is not None:
                shown = "lambda" if name == "lam" else name
                raise ValueError(f"parameter {shown} does not apply to {self.method}")
        if self.lam is not None and self.lam <= 0:
            raise ValueError("lambda must be positive")
        if self.k is not None and (int(self.k) != self.k or self.k < 1):
            raise ValueError("k must be a positive integer")
        if self.p is not None and not 0 < self.p < 1:
            raise ValueError("p must lie in (0, 1)")

    def apply(self, direct, options: ExpOptions | None = None):
        """Run the chosen operator on a direct matrix.

        ``pagerank`` expects an already column-normalized input; compose
        with :func:`column_normalize` for raw weight matrices.
        """
        if self.method == "pwp":
            return pwp(direct, self.lam, options)
        if self.method == "heatkernel":
            return heat_kernel(direct, self.lam, options)
        if self.method == "micmac":
            return micmac(direct, self.k)
        return pagerank_limit(direct, self.p)
