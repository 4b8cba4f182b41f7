"""Exact sparse integer linear algebra: ranks over F_p / Q and Smith forms."""
from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from sympy import factorint, isprime

from .chains import SparseIntMatrix

# Two fixed 61/62-bit primes; rank over Q is the larger of the two modular
# ranks (each is a lower bound, equal unless the prime divides every
# maximal nonzero minor).
Q_PRIMES = (2305843009213693951, 4611686018427387847)


class CellTimeout(Exception):
    """A per-cell time ceiling was exceeded."""


class _Clock:
    __slots__ = ("deadline", "ticks")

    def __init__(self, deadline: float | None):
        self.deadline = deadline
        self.ticks = 0

    def tick(self):
        if self.deadline is None:
            return
        self.ticks += 1
        if self.ticks & 1023 == 0 and time.monotonic() > self.deadline:
            raise CellTimeout


def check_prime(p: int) -> int:
    if not isinstance(p, int) or p < 2 or not isprime(p):
        raise ValueError(f"{p!r} is not a prime")
    return p


def _rank_cols_mod(cols: Iterable[dict[int, int]], p: int, clock: _Clock) -> int:
    """Column reduction over F_p; pivots keyed by their lowest (largest) row."""
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for col in cols:
        c = {r: v % p for r, v in col.items() if v % p}
        while c:
            clock.tick()
            low = max(c)
            piv = pivots.get(low)
            if piv is None:
                inv = pow(c[low], -1, p)
                pivots[low] = {r: v * inv % p for r, v in c.items()}
                rank += 1
                break
            f = c[low]
            for r, v in piv.items():
                nv = (c.get(r, 0) - f * v) % p
                if nv:
                    c[r] = nv
                else:
                    c.pop(r, None)
    return rank


def rank_mod(m: SparseIntMatrix, p: int, deadline: float | None = None) -> int:
    """Rank over F_p (p prime)."""
    check_prime(p)
    return _rank_cols_mod(m.cols, p, _Clock(deadline))


def rank_q(m: SparseIntMatrix, deadline: float | None = None) -> int:
    """Rank over Q, via the maximum over two large primes."""
    return max(_rank_cols_mod(m.cols, p, _Clock(deadline)) for p in Q_PRIMES)


def rank(m: SparseIntMatrix, field: str | int = "Q", deadline: float | None = None) -> int:
    if field in ("Q", 0, None):
        return rank_q(m, deadline)
    return rank_mod(m, int(field), deadline)


# -- Smith normal form --------------------------------------------------------

@dataclass(frozen=True)
class SmithForm:
    rank: int
    factors: tuple[int, ...]  # d1 | d2 | ... | d_rank, including units

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.factors if d > 1)


def _eliminate_units(cols: list[dict[int, int]], clock: _Clock) -> tuple[int, dict[int, dict[int, int]]]:
    """Pivot on +-1 entries, replacing the matrix by Schur complements.

    Each pivot is a unimodular reduction contributing an invariant factor
    1.  Returns the number of pivots and the residual as ``row -> {col: v}``.
    """
    rows: dict[int, dict[int, int]] = {}
    colrows: dict[int, set[int]] = {}
    for j, col in enumerate(cols):
        if not col:
            continue
        colrows[j] = set(col)
        for i, v in col.items():
            rows.setdefault(i, {})[j] = v
    npiv = 0
    progress = True
    while progress:
        progress = False
        for j in sorted(colrows, key=lambda c: len(colrows[c])):
            rset = colrows.get(j)
            if not rset:
                colrows.pop(j, None)
                continue
            best = None
            for i in rset:
                if abs(rows[i][j]) == 1 and (best is None or len(rows[i]) < len(rows[best])):
                    best = i
            if best is None:
                continue
            clock.tick()
            prow = rows.pop(best)
            u = prow.pop(j)  # +-1, its own inverse
            others = [i for i in colrows.pop(j) if i != best]
            for c in prow:
                colrows[c].discard(best)
            for i in others:
                clock.tick()
                row = rows[i]
                f = row.pop(j) * u
                for c, v in prow.items():
                    nv = row.get(c, 0) - f * v
                    if nv:
                        if c not in row:
                            colrows[c].add(i)
                        row[c] = nv
                    elif c in row:
                        del row[c]
                        colrows[c].discard(i)
                if not row:
                    del rows[i]
            npiv += 1
            progress = True
    return npiv, rows


def dense_smith_factors(a: list[list[int]], clock: _Clock | None = None) -> list[int]:
    """Nonzero invariant factors of a dense integer matrix (textbook algorithm).

    Repeatedly moves a smallest-magnitude nonzero entry to the pivot,
    reduces its row and column by division with remainder, and fixes
    divisibility against the rest of the block.
    """
    clock = clock or _Clock(None)
    a = [list(r) for r in a if any(r)]
    if not a:
        return []
    ncols = len(a[0])
    keep = [j for j in range(ncols) if any(r[j] for r in a)]
    a = [[r[j] for j in keep] for r in a]
    m, n = len(a), len(keep)
    diag = []
    t = 0
    while t < min(m, n):
        # smallest nonzero entry in the remaining block
        best = None
        for i in range(t, m):
            ri = a[i]
            for j in range(t, n):
                v = ri[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        if j != t:
            for r in a:
                r[t], r[j] = r[j], r[t]
        while True:
            clock.tick()
            p = a[t][t]
            done = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, n):
                            if rt[j]:
                                ri[j] -= q * rt[j]
                    if a[i][t]:
                        done = False
            rt = a[t]
            for j in range(t + 1, n):
                if rt[j]:
                    q = rt[j] // p
                    if q:
                        for r in a[t:]:
                            if r[t]:
                                r[j] -= q * r[t]
                    if rt[j]:
                        done = False
            if done:
                # pivot must divide the remaining block
                bad = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if a[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                rt, rb = a[t], a[bad]
                for j in range(t, n):
                    rt[j] += rb[j]
                continue
            # move a smaller remainder into the pivot position
            small = None
            for i in range(t, m):
                if a[i][t] and (small is None or abs(a[i][t]) < abs(a[small[0]][small[1]])):
                    small = (i, t)
            for j in range(t, n):
                if a[t][j] and abs(a[t][j]) < abs(a[small[0]][small[1]]):
                    small = (t, j)
            i, j = small
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for r in a:
                    r[t], r[j] = r[j], r[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def smith_normal_form(m: SparseIntMatrix, deadline: float | None = None) -> SmithForm:
    """Rank and invariant factors (units included) of an integer matrix."""
    clock = _Clock(deadline)
    npiv, residual = _eliminate_units(m.cols, clock)
    if not residual:
        return SmithForm(npiv, (1,) * npiv)
    colset = sorted({c for row in residual.values() for c in row})
    cidx = {c: i for i, c in enumerate(colset)}
    dense = []
    for r in sorted(residual):
        line = [0] * len(colset)
        for c, v in residual[r].items():
            line[cidx[c]] = v
        dense.append(line)
    rest = dense_smith_factors(dense, clock)
    return SmithForm(npiv + len(rest), normalize_factors([1] * npiv + rest))


def normalize_factors(diag: Iterable[int]) -> tuple[int, ...]:
    """Turn any diagonal of nonzero integers into the invariant-factor chain.

    Units are kept (as leading 1s), so the length equals the rank.
    """
    diag = [abs(int(d)) for d in diag if d]
    units = sum(1 for d in diag if d == 1)
    powers: dict[int, list[int]] = {}
    for d in diag:
        if d > 1:
            for p, e in factorint(d).items():
                powers.setdefault(p, []).append(p ** e)
    nontriv = len(diag) - units
    chain = [1] * nontriv
    for p, qs in powers.items():
        qs.sort()
        # largest powers go to the last factors
        for pos, q in zip(range(nontriv - len(qs), nontriv), qs):
            chain[pos] *= q
    return tuple([1] * units + chain)


def torsion_invariants(factors: Iterable[int]) -> tuple[int, ...]:
    """Invariant factors > 1 of a direct sum of cyclic groups Z_{d}."""
    return tuple(d for d in normalize_factors(factors) if d > 1)


def elementary_divisors(factors: Iterable[int]) -> Counter:
    """Prime-power decomposition of a torsion group given by cyclic orders."""
    out: Counter = Counter()
    for d in factors:
        if d > 1:
            for p, e in factorint(d).items():
                out[p ** e] += 1
    return out
