"""Square complex matrices with an exact Gaussian-integer mode.

All the algebraic facts this package verifies (anticommutation,
unitarity, products of generator matrices, the orthogonality conditions
on weight matrices) live over matrices whose entries are Gaussian
integers re + j*im.  Keeping the real and imaginary parts as
arbitrary-precision Python integers makes every one of those checks
bit-exact: there is no tolerance to argue about.  Floating mode
(complex128 precision) exists for everything downstream of a rotated
constellation, where exactness is impossible anyway.

A matrix is immutable after construction.  Binary operations follow the
promotion rule exact*exact -> exact, anything else -> float.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

EXACT = "exact"
FLOAT = "float"

# the only scalars exact mode is closed under
_EXACT_SCALARS = {(1, 0), (-1, 0), (0, 1), (0, -1)}


def _as_int(x) -> int:
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)) and float(x).is_integer():
        return int(x)
    raise ValueError(f"exact mode requires integer entries, got {x!r}")


class GaussianMatrix:
    """An n-by-n complex matrix stored as separate real/imaginary parts.

    ``mode == "exact"`` keeps both parts as Python integers and all
    arithmetic bit-exact; ``mode == "float"`` uses float64 parts.
    """

    __slots__ = ("_re", "_im", "_mode")

    def __init__(self, re, im, mode: str):
        if mode not in (EXACT, FLOAT):
            raise ValueError(f"unknown mode {mode!r}")
        if mode == EXACT:
            re = np.asarray(re, dtype=object)
            im = np.asarray(im, dtype=object)
        else:
            re = np.asarray(re, dtype=np.float64)
            im = np.asarray(im, dtype=np.float64)
        if re.ndim != 2 or re.shape[0] != re.shape[1] or re.shape != im.shape:
            raise ValueError(f"entries must form a square matrix, got {re.shape} / {im.shape}")
        if re.shape[0] < 1:
            raise ValueError("matrix side length must be positive")
        re.setflags(write=False)
        im.setflags(write=False)
        self._re = re
        self._im = im
        self._mode = mode

    # ------------------------------------------------------------------
    # construction

    @classmethod
    def exact(cls, rows: Sequence[Sequence[complex]]) -> GaussianMatrix:
        """Build an exact matrix from nested complex values with integer parts."""
        data = [[complex(v) for v in row] for row in rows]
        re = [[_as_int(v.real) for v in row] for row in data]
        im = [[_as_int(v.imag) for v in row] for row in data]
        return cls(re, im, EXACT)

    @classmethod
    def floating(cls, rows) -> GaussianMatrix:
        """Build a float-mode matrix from anything array-like of complex."""
        z = np.asarray(rows, dtype=np.complex128)
        return cls(z.real, z.imag, FLOAT)

    @classmethod
    def identity(cls, n: int, mode: str = EXACT) -> GaussianMatrix:
        eye = np.eye(n, dtype=np.int64)
        return cls(eye, np.zeros((n, n), dtype=np.int64), mode)

    @classmethod
    def zeros(cls, n: int, mode: str = EXACT) -> GaussianMatrix:
        z = np.zeros((n, n), dtype=np.int64)
        return cls(z, z.copy(), mode)

    # ------------------------------------------------------------------
    # basic queries

    @property
    def n(self) -> int:
        return self._re.shape[0]

    @property
    def mode(self) -> str:
        return self._mode

    @property
    def is_exact(self) -> bool:
        return self._mode == EXACT

    def entry(self, i: int, j: int) -> complex:
        return complex(self._re[i, j], self._im[i, j])

    def to_array(self) -> np.ndarray:
        """The matrix as a complex128 ndarray (lossy for huge exact entries)."""
        return np.asarray(self._re, dtype=np.float64) + 1j * np.asarray(self._im, dtype=np.float64)

    def to_float(self) -> GaussianMatrix:
        if self._mode == FLOAT:
            return self
        return GaussianMatrix(np.asarray(self._re, dtype=np.float64),
                              np.asarray(self._im, dtype=np.float64), FLOAT)

    def __repr__(self) -> str:  # pragma: no cover
        return f"GaussianMatrix(n={self.n}, mode={self._mode!r})"

    # ------------------------------------------------------------------
    # arithmetic

    def _join_mode(self, other: GaussianMatrix) -> str:
        return EXACT if (self.is_exact and other.is_exact) else FLOAT

    def _parts_as(self, mode: str):
        if mode == self._mode:
            return self._re, self._im
        return np.asarray(self._re, dtype=np.float64), np.asarray(self._im, dtype=np.float64)

    def __matmul__(self, other: GaussianMatrix) -> GaussianMatrix:
        if not isinstance(other, GaussianMatrix):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        mode = self._join_mode(other)
        ar, ai = self._parts_as(mode)
        br, bi = other._parts_as(mode)
        # np.dot (not matmul) because object dtype needs it
        re = np.dot(ar, br) - np.dot(ai, bi)
        im = np.dot(ar, bi) + np.dot(ai, br)
        return GaussianMatrix(re, im, mode)

    def __add__(self, other: GaussianMatrix) -> GaussianMatrix:
        if not isinstance(other, GaussianMatrix):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        mode = self._join_mode(other)
        ar, ai = self._parts_as(mode)
        br, bi = other._parts_as(mode)
        return GaussianMatrix(ar + br, ai + bi, mode)

    def __sub__(self, other: GaussianMatrix) -> GaussianMatrix:
        if not isinstance(other, GaussianMatrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> GaussianMatrix:
        return GaussianMatrix(-self._re, -self._im, self._mode)

    def scale(self, c: complex) -> GaussianMatrix:
        """Entrywise multiplication by a scalar.

        Exact mode is closed only under units of the Gaussian integers,
        so there c is restricted to {1, -1, j, -j}; convert with
        :meth:`to_float` before scaling by anything else.
        """
        c = complex(c)
        if self.is_exact:
            if (c.real, c.imag) not in _EXACT_SCALARS:
                raise ValueError(
                    f"exact-mode scalar must be one of 1, -1, j, -j, got {c!r}; "
                    "use .to_float() first")
            cr, ci = int(c.real), int(c.imag)
        else:
            cr, ci = c.real, c.imag
        re = cr * self._re - ci * self._im
        im = cr * self._im + ci * self._re
        return GaussianMatrix(re, im, self._mode)

    def __mul__(self, c: complex) -> GaussianMatrix:
        if isinstance(c, GaussianMatrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def herm(self) -> GaussianMatrix:
        """Conjugate transpose."""
        return GaussianMatrix(self._re.T, -self._im.T, self._mode)

    def trace(self) -> complex:
        return complex(self._re.trace(), self._im.trace())

    def frob_norm(self) -> float:
        return float(np.sqrt(float(np.sum(self._re * self._re) + np.sum(self._im * self._im))))

    def kron(self, other: GaussianMatrix) -> GaussianMatrix:
        """Kronecker product, preserving exactness."""
        mode = self._join_mode(other)
        ar, ai = self._parts_as(mode)
        br, bi = other._parts_as(mode)
        re = np.kron(ar, br) - np.kron(ai, bi)
        im = np.kron(ar, bi) + np.kron(ai, br)
        return GaussianMatrix(re, im, mode)

    # ------------------------------------------------------------------
    # predicates

    def __eq__(self, other) -> bool:
        """Bit-exact equality (entries and nothing else; modes may differ)."""
        if not isinstance(other, GaussianMatrix):
            return NotImplemented
        if self.n != other.n:
            return False
        return bool(np.array_equal(self._re, other._re)
                    and np.array_equal(self._im, other._im))

    def __hash__(self):
        # equality ignores mode (1 == 1.0), so the hash must as well
        return hash((self.n,
                     tuple(float(v) for v in self._re.ravel()),
                     tuple(float(v) for v in self._im.ravel())))

    def allclose(self, other: GaussianMatrix, tol: float = 1e-10) -> bool:
        return (self - other).frob_norm() <= tol

    def is_zero(self, tol: float = 0.0) -> bool:
        if self.is_exact:
            return not (np.any(self._re) or np.any(self._im))
        return self.frob_norm() <= tol

    def is_identity(self, tol: float = 0.0) -> bool:
        if self.is_exact:
            return self == GaussianMatrix.identity(self.n, EXACT)
        return (self - GaussianMatrix.identity(self.n, FLOAT)).frob_norm() <= tol

    def is_unitary(self, tol: float = 1e-10) -> bool:
        return (self.herm() @ self).is_identity(tol if not self.is_exact else 0.0)

    def is_hermitian(self, tol: float = 1e-10) -> bool:
        if self.is_exact:
            return self.herm() == self
        return (self.herm() - self).frob_norm() <= tol

    # ------------------------------------------------------------------
    # JSON interchange: {"n": 4, "mode": "exact", "entries": [[[re, im], ...], ...]}

    def to_json_dict(self) -> dict:
        if self.is_exact:
            entries = [[[int(self._re[i, j]), int(self._im[i, j])] for j in range(self.n)]
                       for i in range(self.n)]
        else:
            entries = [[[float(self._re[i, j]), float(self._im[i, j])] for j in range(self.n)]
                       for i in range(self.n)]
        return {"n": self.n, "mode": self._mode, "entries": entries}

    @classmethod
    def from_json_dict(cls, obj: dict) -> GaussianMatrix:
        n = int(obj["n"])
        mode = obj["mode"]
        entries = obj["entries"]
        if len(entries) != n or any(len(row) != n for row in entries):
            raise ValueError(f"entries are not {n}x{n}")
        if mode == EXACT:
            re = [[_as_int(e[0]) for e in row] for row in entries]
            im = [[_as_int(e[1]) for e in row] for row in entries]
        elif mode == FLOAT:
            re = [[float(e[0]) for e in row] for row in entries]
            im = [[float(e[1]) for e in row] for row in entries]
        else:
            raise ValueError(f"unknown mode {mode!r}")
        return cls(re, im, mode)


def real_rank(matrices: Iterable[GaussianMatrix], rel_tol: float = 1e-9) -> int:
    """Rank over the reals of a set of equally-sized matrices.

    Each matrix is flattened to a real vector of length 2*n*n (real parts
    stacked on imaginary parts).  Singular values below ``rel_tol`` times
    the largest are treated as zero.
    """
    mats = list(matrices)
    if not mats:
        return 0
    n = mats[0].n
    if any(m.n != n for m in mats):
        raise ValueError("all matrices must have the same size")
    rows = np.empty((len(mats), 2 * n * n), dtype=np.float64)
    for i, m in enumerate(mats):
        z = m.to_array()
        rows[i, : n * n] = z.real.ravel()
        rows[i, n * n:] = z.imag.ravel()
    sv = np.linalg.svd(rows, compute_uv=False)
    if sv.size == 0 or sv[0] == 0.0:
        return 0
    return int(np.sum(sv > rel_tol * sv[0]))
