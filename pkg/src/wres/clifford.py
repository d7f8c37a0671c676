"""Complexified Clifford algebra via explicit gamma matrices.

Convention: c(e_i) c(e_j) + c(e_j) c(e_i) = -2 delta_ij.  The generators are
``i`` times the Hermitian Euclidean gamma matrices built from iterated Pauli
tensor products, so every generator is a signed permutation matrix and the
sparse storage stays tiny.
"""
from __future__ import annotations

import functools
from typing import Mapping, Sequence

from .poly import P, Poly, PolyRing, RingMismatchError, poly_ring
from .scalars import I, ONE, GaussianRational, as_gaussian

__all__ = [
    "GammaBasis", "CliffordElement", "build_gamma", "clifford_of_covector",
    "perturbation_A", "trace", "trace_product",
]

Sparse = dict[tuple[int, int], GaussianRational]

_PAULI: dict[str, Sparse] = {
    "1": {(0, 0): ONE, (1, 1): ONE},
    "x": {(0, 1): ONE, (1, 0): ONE},
    "y": {(0, 1): -I, (1, 0): I},
    "z": {(0, 0): ONE, (1, 1): -ONE},
}


def _kron(a: Sparse, b: Sparse, size_b: int) -> Sparse:
    return {(ra * size_b + rb, ca * size_b + cb): x * y
            for (ra, ca), x in a.items() for (rb, cb), y in b.items()}


class GammaBasis:
    """The n generators c(e_1), ..., c(e_n) as sparse complex matrices."""

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 2 or n % 2:
            raise ValueError(f"Clifford basis needs an even dimension >= 2, got {n!r}")
        self.n = n
        self.size = 2 ** (n // 2)
        half = n // 2
        mats = []
        for k in range(half):
            for sigma in "xy":
                factors = ["z"] * k + [sigma] + ["1"] * (half - k - 1)
                m: Sparse = {(0, 0): I}
                for f in factors:
                    m = _kron(m, _PAULI[f], 2)
                mats.append(m)
        self.matrices: tuple[Sparse, ...] = tuple(mats)

    def generator(self, i: int, ring: PolyRing | None = None) -> "CliffordElement":
        """c(e_i) for 1 <= i <= n."""
        ring = ring or poly_ring(self.n)
        m = self.matrices[i - 1]
        return CliffordElement(ring, self.size,
                               {rc: ring.const(v) for rc, v in m.items()})

    def identity(self, ring: PolyRing | None = None) -> "CliffordElement":
        ring = ring or poly_ring(self.n)
        return CliffordElement(ring, self.size,
                               {(r, r): ring.one() for r in range(self.size)})

    def __repr__(self):
        return f"GammaBasis(n={self.n})"


@functools.lru_cache(maxsize=None)
def build_gamma(n: int) -> GammaBasis:
    return GammaBasis(n)


class CliffordElement:
    """Square matrix with Poly entries, stored sparsely by (row, col)."""

    __slots__ = ("ring", "size", "entries")

    def __init__(self, ring: PolyRing, size: int, entries: Mapping[tuple[int, int], Poly]):
        self.ring = ring
        self.size = size
        self.entries = {rc: p for rc, p in entries.items() if p}

    @classmethod
    def zero(cls, ring: PolyRing, size: int) -> "CliffordElement":
        return cls(ring, size, {})

    def _compat(self, other: "CliffordElement"):
        if other.size != self.size:
            raise ValueError(f"matrix sizes differ: {self.size} vs {other.size}")
        if other.ring is not self.ring and other.ring.names != self.ring.names:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def _scalar(self, other) -> Poly | None:
        if isinstance(other, Poly):
            if other.ring is not self.ring and other.ring.names != self.ring.names:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        c = as_gaussian(other)
        return None if c is None else self.ring.const(c)

    def __add__(self, other):
        if not isinstance(other, CliffordElement):
            s = self._scalar(other)
            if s is None:
                return NotImplemented
            other = self.identity_like() * s
        self._compat(other)
        out = dict(self.entries)
        for rc, p in other.entries.items():
            out[rc] = out[rc] + p if rc in out else p
        return CliffordElement(self.ring, self.size, out)

    __radd__ = __add__

    def __neg__(self):
        return CliffordElement(self.ring, self.size, {rc: -p for rc, p in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, CliffordElement):
            self._compat(other)
            rows: dict[int, list[tuple[int, Poly]]] = {}
            for (r, c), p in other.entries.items():
                rows.setdefault(r, []).append((c, p))
            out: dict[tuple[int, int], Poly] = {}
            for (r, k), p in self.entries.items():
                for c, q in rows.get(k, ()):
                    prod = p * q
                    key = (r, c)
                    out[key] = out[key] + prod if key in out else prod
            return CliffordElement(self.ring, self.size, out)
        s = self._scalar(other)
        if s is None:
            return NotImplemented
        if s.is_constant():
            c = s.constant_term()
            return CliffordElement(self.ring, self.size,
                                   {rc: p * c for rc, p in self.entries.items()})
        return CliffordElement(self.ring, self.size,
                               {rc: p * s for rc, p in self.entries.items()})

    def __rmul__(self, other):
        # scalars commute with matrices
        return self.__mul__(other)

    def __eq__(self, other):
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.size == other.size and self.entries == other.entries

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def __bool__(self):
        return bool(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def identity_like(self) -> "CliffordElement":
        return CliffordElement(self.ring, self.size,
                               {(r, r): self.ring.one() for r in range(self.size)})

    def map(self, fn) -> "CliffordElement":
        """Apply ``fn`` to every entry."""
        return CliffordElement(self.ring, self.size, {rc: fn(p) for rc, p in self.entries.items()})

    def normal_form(self) -> "CliffordElement":
        return self.map(Poly.normal_form)

    def diff(self, name: str) -> "CliffordElement":
        return self.map(lambda p: p.diff(name))

    def trace(self) -> Poly:
        out = self.ring.zero()
        for r in range(self.size):
            p = self.entries.get((r, r))
            if p is not None:
                out = out + p
        return out.normal_form()

    def to_complex(self, values: Mapping[str, complex]):
        import numpy as np

        m = np.zeros((self.size, self.size), dtype=complex)
        for (r, c), p in self.entries.items():
            m[r, c] = p.evaluate(values)
        return m

    def __repr__(self):
        body = ", ".join(f"{rc}: {p}" for rc, p in sorted(self.entries.items()))
        return f"CliffordElement({{{body}}})"


def clifford_of_covector(basis: GammaBasis, coeffs: Sequence[Poly | int],
                         ring: PolyRing | None = None) -> CliffordElement:
    """c(sum_i coeffs[i] e_{i+1})."""
    if len(coeffs) != basis.n:
        raise ValueError(f"expected {basis.n} coefficients, got {len(coeffs)}")
    ring = ring or poly_ring(basis.n)
    out = CliffordElement.zero(ring, basis.size)
    for i, a in enumerate(coeffs, start=1):
        if isinstance(a, Poly) and a.is_zero():
            continue
        if not isinstance(a, Poly) and not a:
            continue
        out = out + basis.generator(i, ring) * a
    return out


def perturbation_A(basis: GammaBasis, ring: PolyRing | None = None) -> CliffordElement:
    """A = sum_{u<v} (p_uv - p_vu) c(e_u) c(e_v), one variable per pair."""
    ring = ring or poly_ring(basis.n)
    out = CliffordElement.zero(ring, basis.size)
    for u, v in ring.pairs():
        out = out + basis.generator(u, ring) * basis.generator(v, ring) * ring.var(P(u, v))
    return out


def trace(x: CliffordElement) -> Poly:
    return x.trace()


def trace_product(*factors: CliffordElement) -> Poly:
    """tr(x_1 ... x_k) without forming the last product in full."""
    if not factors:
        raise ValueError("trace_product needs at least one factor")
    if len(factors) == 1:
        return factors[0].trace()
    left = factors[0]
    for f in factors[1:-1]:
        left = left * f
    right = factors[-1]
    left._compat(right)
    out = left.ring.zero()
    for (r, c), p in left.entries.items():
        q = right.entries.get((c, r))
        if q is not None:
            out = out + p * q
    return out.normal_form()

