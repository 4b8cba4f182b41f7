"""Truncated integer power series and the magnitude of a graph."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .chains import chain_ranks
from .graph import INF, Graph


@dataclass(frozen=True)
class TruncatedSeries:
    """c_0 + c_1 q + ... + c_L q^L, arithmetic modulo q^(L+1)."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int], L: int | None = None):
        cs = [int(c) for c in coeffs]
        if L is not None:
            cs = (cs + [0] * (L + 1))[: L + 1]
        if not cs:
            raise ValueError("series needs at least the constant term")
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def L(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, c: int, L: int) -> "TruncatedSeries":
        return cls([c], L)

    @classmethod
    def monomial(cls, deg, L: int, c: int = 1) -> "TruncatedSeries":
        """c q^deg, zero when deg is infinite or exceeds L."""
        cs = [0] * (L + 1)
        if deg != INF and deg <= L:
            cs[int(deg)] = c
        return cls(cs)

    def _check(self, other: "TruncatedSeries"):
        if self.L != other.L:
            raise ValueError(f"truncation mismatch: {self.L} vs {other.L}")

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-a for a in self.coeffs)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        L = self.L
        out = [0] * (L + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(L + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(out)

    def truncate(self, L: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, L)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}q" if i == 1 else f"{c}q^{i}")
        return (" + ".join(terms) or "0").replace("+ -", "- ") + f" + O(q^{self.L + 1})"


class SeriesMatrix:
    """Square matrix of truncated series, stored as one integer matrix per degree."""

    def __init__(self, layers: Sequence[Sequence[Sequence[int]]]):
        # layers[d][i][j] = coefficient of q^d in entry (i, j)
        self.layers = [[list(r) for r in m] for m in layers]
        self.n = len(self.layers[0]) if self.layers else 0
        self.L = len(self.layers) - 1

    def entry(self, i: int, j: int) -> TruncatedSeries:
        return TruncatedSeries(m[i][j] for m in self.layers)

    def total(self) -> TruncatedSeries:
        """Sum of all entries."""
        return TruncatedSeries(sum(map(sum, m)) for m in self.layers)

    def inverse(self) -> "SeriesMatrix":
        """Inverse, assuming the constant layer is the identity.

        With X = sum X_m q^m: X_0 = I and X_m = -sum_{i=1..m} Z_i X_{m-i}.
        """
        n, L = self.n, self.L
        ident = [[int(i == j) for j in range(n)] for i in range(n)]
        if self.layers[0] != ident:
            raise ValueError("constant term is not the identity")
        xs = [ident]
        for m in range(1, L + 1):
            acc = [[0] * n for _ in range(n)]
            for i in range(1, m + 1):
                z, x = self.layers[i], xs[m - i]
                for r in range(n):
                    zr = z[r]
                    ar = acc[r]
                    for c in range(n):
                        if zr[c]:
                            f = zr[c]
                            xc = x[c]
                            for s in range(n):
                                ar[s] -= f * xc[s]
            xs.append(acc)
        return SeriesMatrix(xs)

    def __matmul__(self, other: "SeriesMatrix") -> "SeriesMatrix":
        n, L = self.n, self.L
        out = [[[0] * n for _ in range(n)] for _ in range(L + 1)]
        for a in range(L + 1):
            for b in range(L + 1 - a):
                x, y, o = self.layers[a], other.layers[b], out[a + b]
                for i in range(n):
                    for k in range(n):
                        if x[i][k]:
                            for j in range(n):
                                o[i][j] += x[i][k] * y[k][j]
        return SeriesMatrix(out)


def similarity_matrix(g: Graph, L: int) -> SeriesMatrix:
    """Entry (i, j) is q^d(i, j), with q^inf = 0, truncated at degree L."""
    if L < 0:
        raise ValueError("truncation must be >= 0")
    layers = [[[int(g.dist[i][j] == d) for j in range(g.n)] for i in range(g.n)] for d in range(L + 1)]
    return SeriesMatrix(layers)


def magnitude_series(g: Graph, L: int) -> TruncatedSeries:
    """Sum of the entries of the inverse similarity matrix, modulo q^(L+1)."""
    if g.n == 0:
        return TruncatedSeries.constant(0, L)
    return similarity_matrix(g, L).inverse().total()


def magnitude_alternating(g: Graph, L: int) -> TruncatedSeries:
    """c_l = sum_k (-1)^k #{k-paths of length l}."""
    counts = chain_ranks(g, L, L)
    return TruncatedSeries(sum((-1) ** k * counts[(k, l)] for k in range(l + 1)) for l in range(L + 1))


class IncompleteTableError(ValueError):
    pass


def euler_characteristic(table, L: int | None = None) -> TruncatedSeries:
    """Graded Euler characteristic sum_l (sum_k (-1)^k rank MH_{k,l}) q^l of a table."""
    L = table.lmax if L is None else L
    missing = [(k, l) for l in range(L + 1) for k in range(l + 1) if (k, l) not in table.cells]
    if missing:
        raise IncompleteTableError(f"table lacks bigradings {missing[:8]}{'...' if len(missing) > 8 else ''}")
    return TruncatedSeries(sum((-1) ** k * table.cells[(k, l)].rank for k in range(l + 1)) for l in range(L + 1))
