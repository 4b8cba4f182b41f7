"""Magnitude homology groups MH_{k,l} and bigraded tables.

Each boundary map ``d: MC_{k,l} -> MC_{k-1,l}`` is summarised once by a
:class:`BoundaryInfo` (source dimension, rank, nontrivial invariant factors
or F_p rank).  A cell then needs the boundaries at ``(k, l)`` and
``(k+1, l)``::

    rank MH_{k,l}    = dim MC_{k,l} - rank d_k - rank d_{k+1}
    torsion MH_{k,l} = invariant factors > 1 of d_{k+1}

The torsion formula holds because ``ker d_k`` is a direct summand of
``MC_{k,l}`` (the quotient is the free group ``im d_k``), so
``ker d_k / im d_{k+1}`` and ``MC_{k,l} / im d_{k+1}`` have the same torsion.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .chains import boundary_blocks, chain_ranks
from .graph import Graph
from .linalg import (
    CellTimeout,
    Q_PRIMES,
    _Clock,
    _rank_cols_mod,
    check_prime,
    smith_normal_form,
    torsion_invariants,
)

MODES = ("Z", "Q", "Fp")


@dataclass(frozen=True)
class HomologyGroup:
    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        t = tuple(self.torsion)
        for a, b in zip(t, t[1:]):
            if b % a:
                raise ValueError(f"torsion {t} is not a divisibility chain")
        if any(d < 2 for d in t):
            raise ValueError("invariant factors must be >= 2")
        object.__setattr__(self, "torsion", t)

    @property
    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class Coefficients:
    mode: str = "Z"
    p: int | None = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown coefficient mode {self.mode!r}")
        if self.mode == "Fp":
            if self.p is None:
                raise ValueError("Fp mode needs a prime p")
            check_prime(self.p)
        elif self.p is not None:
            object.__setattr__(self, "p", None)

    def tag(self) -> str:
        return f"F{self.p}" if self.mode == "Fp" else self.mode


ZZ = Coefficients("Z")
QQ = Coefficients("Q")


def Fp(p: int) -> Coefficients:
    return Coefficients("Fp", p)


@dataclass(frozen=True)
class BoundaryInfo:
    dim: int  # dim MC_{k,l}
    rank: int
    torsion: tuple[int, ...] = ()


def boundary_info(g: Graph, k: int, l: int, coeffs: Coefficients = ZZ,
                  deadline: float | None = None) -> BoundaryInfo:
    """Summary of d: MC_{k,l} -> MC_{k-1,l}; for k == 0 the zero map."""
    if k == 0:
        return BoundaryInfo(g.n if l == 0 else 0, 0)
    if k > l:
        return BoundaryInfo(0, 0)
    dim, blocks = boundary_blocks(g, k, l)
    clock = _Clock(deadline)
    if coeffs.mode == "Z":
        r = 0
        tors: list[int] = []
        for b in blocks:
            s = smith_normal_form(b, deadline)
            r += s.rank
            tors += s.torsion
        return BoundaryInfo(dim, r, torsion_invariants(tors))
    primes = Q_PRIMES if coeffs.mode == "Q" else (coeffs.p,)
    r = sum(max(_rank_cols_mod(b.cols, p, clock) for p in primes) for b in blocks)
    return BoundaryInfo(dim, r)


def group_from(out: BoundaryInfo, inc: BoundaryInfo) -> HomologyGroup:
    """Homology at a cell from d_k (``out``) and d_{k+1} (``inc``)."""
    return HomologyGroup(out.dim - out.rank - inc.rank, inc.torsion)


def homology_at(g: Graph, k: int, l: int, coeffs: Coefficients = ZZ,
                deadline: float | None = None) -> HomologyGroup:
    out = boundary_info(g, k, l, coeffs, deadline)
    inc = boundary_info(g, k + 1, l, coeffs, deadline)
    return group_from(out, inc)


# -- tables ---------------------------------------------------------------------

@dataclass
class BigradedTable:
    """Cells ``(k, l) -> HomologyGroup`` for ``0 <= k <= l``; ``skipped`` lists
    cells abandoned under a resource ceiling."""

    coeffs: Coefficients
    cells: dict[tuple[int, int], HomologyGroup] = field(default_factory=dict)
    skipped: set[tuple[int, int]] = field(default_factory=set)
    lmax: int = 0
    kmax: int = 0

    def __getitem__(self, kl: tuple[int, int]) -> HomologyGroup:
        k, l = kl
        if k > l or k < 0 or l < 0:
            return HomologyGroup(0)
        if kl in self.skipped:
            raise KeyError(f"cell {kl} was skipped")
        return self.cells[kl]

    def rank(self, k: int, l: int) -> int:
        return self[k, l].rank

    def rank_grid(self) -> dict[tuple[int, int], int]:
        return {kl: g.rank for kl, g in self.cells.items()}

    def is_complete(self) -> bool:
        return not self.skipped and all(
            (k, l) in self.cells for l in range(self.lmax + 1) for k in range(min(l, self.kmax) + 1))

    def missing(self, lmax: int | None = None) -> list[tuple[int, int]]:
        lmax = self.lmax if lmax is None else lmax
        return [(k, l) for l in range(lmax + 1) for k in range(l + 1) if (k, l) not in self.cells]

    def nonzero(self) -> dict[tuple[int, int], HomologyGroup]:
        return {kl: g for kl, g in sorted(self.cells.items(), key=lambda it: (it[0][1], it[0][0])) if not g.is_zero}

    def has_torsion(self) -> bool:
        return any(g.torsion for g in self.cells.values())

    def to_json(self) -> dict:
        data: dict = {"mode": self.coeffs.mode}
        if self.coeffs.mode == "Fp":
            data["p"] = self.coeffs.p
        cells = []
        for (k, l), grp in sorted(self.cells.items(), key=lambda it: (it[0][1], it[0][0])):
            cells.append({"k": k, "l": l, "rank": grp.rank, "torsion": list(grp.torsion)})
        data["cells"] = cells
        if self.skipped:
            data["skipped"] = [{"k": k, "l": l} for k, l in sorted(self.skipped, key=lambda kl: (kl[1], kl[0]))]
        return data

    @classmethod
    def from_json(cls, data: dict) -> "BigradedTable":
        coeffs = Coefficients(data["mode"], data.get("p"))
        t = cls(coeffs)
        for c in data["cells"]:
            t.cells[(c["k"], c["l"])] = HomologyGroup(c["rank"], tuple(c.get("torsion", ())))
        for c in data.get("skipped", []):
            t.skipped.add((c["k"], c["l"]))
        keys = list(t.cells) + list(t.skipped)
        t.lmax = max((l for _, l in keys), default=0)
        t.kmax = max((k for k, _ in keys), default=0)
        return t

    def format(self) -> str:
        """Rank grid with rows l and columns k; torsion shown as ``r+T``."""
        lines = ["l\\k " + " ".join(f"{k:>7}" for k in range(self.kmax + 1))]
        for l in range(self.lmax + 1):
            row = []
            for k in range(self.kmax + 1):
                if (k, l) in self.skipped:
                    row.append("      ?")
                    continue
                g = self.cells.get((k, l))
                if g is None or g.is_zero:
                    row.append("      .")
                else:
                    s = str(g.rank) + ("+" + ",".join(map(str, g.torsion)) if g.torsion else "")
                    row.append(f"{s:>7}")
            lines.append(f"{l:>3} " + " ".join(row))
        return "\n".join(lines)


def _boundary_task(args):
    g, k, l, coeffs, timeout = args
    deadline = None if timeout is None else time.monotonic() + timeout
    try:
        return (k, l), boundary_info(g, k, l, coeffs, deadline)
    except CellTimeout:
        return (k, l), None


def needed_boundaries(cells: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    need = set()
    for k, l in cells:
        need.add((k, l))
        need.add((k + 1, l))
    return sorted(need, key=lambda kl: (kl[1], kl[0]))


def compute_cells(g: Graph, cells: Iterable[tuple[int, int]], coeffs: Coefficients = ZZ,
                  jobs: int = 1, cell_timeout: float | None = None) -> BigradedTable:
    """Compute the listed cells; boundaries are independent tasks."""
    cells = sorted(set(cells), key=lambda kl: (kl[1], kl[0]))
    tasks = [(g, k, l, coeffs, cell_timeout) for k, l in needed_boundaries(cells)]
    if jobs > 1 and len(tasks) > 1:
        # big tasks first for better packing; results are keyed, so order is irrelevant
        order = sorted(tasks, key=lambda t: -t[2])
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = dict(ex.map(_boundary_task, order))
    else:
        results = dict(map(_boundary_task, tasks))
    table = BigradedTable(coeffs)
    table.lmax = max((l for _, l in cells), default=0)
    table.kmax = max((k for k, _ in cells), default=0)
    for k, l in cells:
        out, inc = results[(k, l)], results[(k + 1, l)]
        if out is None or inc is None:
            table.skipped.add((k, l))
        else:
            table.cells[(k, l)] = group_from(out, inc)
    return table


def homology_table(g: Graph, kmax: int, lmax: int, coeffs: Coefficients = ZZ,
                   jobs: int = 1, cell_timeout: float | None = None) -> BigradedTable:
    """All cells 0 <= k <= min(l, kmax), l <= lmax."""
    cells = [(k, l) for l in range(lmax + 1) for k in range(min(l, kmax) + 1)]
    return compute_cells(g, cells, coeffs, jobs, cell_timeout)


def diagonal_cells(lmax: int, offset: int = 0) -> list[tuple[int, int]]:
    """Cells of the diagonal l - k == offset up to lmax."""
    return [(l - offset, l) for l in range(offset, lmax + 1)]


@dataclass(frozen=True)
class TorsionSignal:
    k: int
    l: int
    dim_q: int
    dim_p: int

    @property
    def gap(self) -> int:
        return self.dim_p - self.dim_q


def torsion_detect(g: Graph, cells: Iterable[tuple[int, int]], p: int = 2, jobs: int = 1,
                   cell_timeout: float | None = None) -> list[TorsionSignal]:
    """Compare dimensions over Q and F_p; a positive gap means p-torsion at
    (k, l) or (k-1, l)."""
    cells = list(cells)
    tq = compute_cells(g, cells, QQ, jobs, cell_timeout)
    tp = compute_cells(g, cells, Fp(p), jobs, cell_timeout)
    out = []
    for kl in cells:
        if kl in tq.cells and kl in tp.cells:
            out.append(TorsionSignal(kl[0], kl[1], tq.cells[kl].rank, tp.cells[kl].rank))
    return out


def generator_counts(g: Graph, kmax: int, lmax: int) -> dict[tuple[int, int], int]:
    return chain_ranks(g, kmax, lmax)
