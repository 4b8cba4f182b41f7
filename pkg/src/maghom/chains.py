"""Generators and boundary matrices of the magnitude chain complex.

A k-path is a tuple ``(x0, ..., xk)`` with consecutive entries distinct and
at finite distance; its length is the sum of consecutive distances.  The
differential deletes an interior vertex whenever that keeps the length, with
sign ``(-1)**i`` for position ``i``.  Endpoints are never deleted, so the
complex splits as a direct sum over endpoint pairs ``(x0, xk)``; the
``*_blocks`` helpers expose that splitting.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterator

from .graph import INF, Graph

PathTuple = tuple[int, ...]


def path_length(g: Graph, x: PathTuple) -> int:
    return sum(g.dist[a][b] for a, b in zip(x, x[1:]))


@dataclass
class PathBasis:
    k: int
    l: int
    paths: list[PathTuple]
    index: dict[PathTuple, int] = field(repr=False, default_factory=dict)

    def __post_init__(self):
        if not self.index:
            self.index = {p: i for i, p in enumerate(self.paths)}

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)


@dataclass
class SparseIntMatrix:
    """Column-major sparse integer matrix; ``cols[j]`` maps row -> nonzero value."""

    nrows: int
    ncols: int
    cols: list[dict[int, int]]

    @classmethod
    def from_dense(cls, rows: list[list[int]]) -> "SparseIntMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        cols = [{i: int(rows[i][j]) for i in range(nrows) if rows[i][j]} for j in range(ncols)]
        return cls(nrows, ncols, cols)

    @classmethod
    def from_triples(cls, nrows: int, ncols: int, triples) -> "SparseIntMatrix":
        cols: list[dict[int, int]] = [{} for _ in range(ncols)]
        for r, c, v in triples:
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise IndexError(f"entry ({r}, {c}) outside {nrows}x{ncols}")
            v = cols[c].get(r, 0) + v
            if v:
                cols[c][r] = v
            else:
                cols[c].pop(r, None)
        return cls(nrows, ncols, cols)

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def triples(self) -> list[tuple[int, int, int]]:
        return sorted((r, c, v) for c, col in enumerate(self.cols) for r, v in col.items())

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for c, col in enumerate(self.cols):
            for r, v in col.items():
                out[r][c] = v
        return out

    def transpose(self) -> "SparseIntMatrix":
        return SparseIntMatrix.from_triples(self.ncols, self.nrows, ((c, r, v) for r, c, v in self.triples()))

    def is_zero(self) -> bool:
        return not any(self.cols)

    def __matmul__(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        out = []
        for col in other.cols:
            acc: dict[int, int] = defaultdict(int)
            for j, b in col.items():
                for i, a in self.cols[j].items():
                    acc[i] += a * b
            out.append({i: v for i, v in acc.items() if v})
        return SparseIntMatrix(self.nrows, other.ncols, out)

    def dump(self) -> str:
        """Text dump: header ``rows cols nnz`` then sorted ``r c v`` lines."""
        t = self.triples()
        lines = [f"{self.nrows} {self.ncols} {len(t)}"]
        lines += [f"{r} {c} {v}" for r, c, v in t]
        return "\n".join(lines) + "\n"

    @classmethod
    def load(cls, text: str) -> "SparseIntMatrix":
        lines = [ln.split() for ln in text.strip().splitlines()]
        nrows, ncols, nnz = map(int, lines[0])
        body = [tuple(map(int, ln)) for ln in lines[1:]]
        if len(body) != nnz:
            raise ValueError(f"expected {nnz} entries, found {len(body)}")
        return cls.from_triples(nrows, ncols, body)


def _steps(g: Graph) -> list[list[tuple[int, int]]]:
    return [[(w, g.dist[v][w]) for w in range(g.n) if w != v and g.dist[v][w] != INF] for v in range(g.n)]


def iter_paths(g: Graph, k: int, l: int, start: int | None = None) -> Iterator[PathTuple]:
    """Yield k-paths of length l in lexicographic order (optionally fixing x0)."""
    if k < 0 or l < 0 or k > l and k > 0:
        return
    if k == 0:
        if l == 0:
            starts = range(g.n) if start is None else [start]
            for v in starts:
                yield (v,)
        return
    steps = _steps(g)
    diam = g.diameter()
    prefix: list[int] = []

    def rec(v: int, left_steps: int, left_len: int) -> Iterator[PathTuple]:
        if left_steps == 0:
            if left_len == 0:
                yield tuple(prefix)
            return
        rest = left_steps - 1
        for w, d in steps[v]:
            r = left_len - d
            if r < rest or r > rest * diam:
                continue
            prefix.append(w)
            yield from rec(w, rest, r)
            prefix.pop()

    starts = range(g.n) if start is None else [start]
    for v in starts:
        prefix.append(v)
        yield from rec(v, k, l)
        prefix.pop()


def enumerate_paths(g: Graph, k: int, l: int) -> PathBasis:
    return PathBasis(k, l, list(iter_paths(g, k, l)))


def paths_by_endpoints(g: Graph, k: int, l: int) -> dict[tuple[int, int], list[PathTuple]]:
    blocks: dict[tuple[int, int], list[PathTuple]] = defaultdict(list)
    for x in iter_paths(g, k, l):
        blocks[(x[0], x[-1])].append(x)
    return dict(blocks)


def faces(g: Graph, x: PathTuple) -> list[tuple[PathTuple, int]]:
    """Nonzero signed faces of ``x`` (before merging coincident faces)."""
    dist = g.dist
    out = []
    for i in range(1, len(x) - 1):
        a, b, c = x[i - 1], x[i], x[i + 1]
        if a != c and dist[a][c] == dist[a][b] + dist[b][c]:
            out.append((x[:i] + x[i + 1:], -1 if i % 2 else 1))
    return out


def _columns(g: Graph, sources: list[PathTuple], row_index: dict[PathTuple, int]) -> list[dict[int, int]]:
    cols = []
    for x in sources:
        col: dict[int, int] = {}
        for face, sign in faces(g, x):
            r = row_index[face]
            v = col.get(r, 0) + sign
            if v:
                col[r] = v
            else:
                del col[r]
        cols.append(col)
    return cols


def boundary_matrix(g: Graph, k: int, l: int) -> SparseIntMatrix:
    """Matrix of MC_{k,l} -> MC_{k-1,l} in lexicographic path bases."""
    if k < 1:
        raise ValueError("boundary_matrix needs k >= 1")
    src = enumerate_paths(g, k, l)
    tgt = enumerate_paths(g, k - 1, l)
    return SparseIntMatrix(len(tgt), len(src), _columns(g, src.paths, tgt.index))


def boundary_blocks(g: Graph, k: int, l: int) -> tuple[int, list[SparseIntMatrix]]:
    """Endpoint blocks of the boundary MC_{k,l} -> MC_{k-1,l}.

    Returns ``(dim MC_{k,l}, blocks)``; only blocks with at least one source
    generator are listed, so the rank and Smith form of the full matrix are
    the sum and union over the blocks.
    """
    src = paths_by_endpoints(g, k, l)
    tgt = paths_by_endpoints(g, k - 1, l) if k >= 1 else {}
    blocks = []
    dim = 0
    for key in sorted(src):
        sources = src[key]
        dim += len(sources)
        rows = tgt.get(key, [])
        index = {p: i for i, p in enumerate(rows)}
        blocks.append(SparseIntMatrix(len(rows), len(sources), _columns(g, sources, index)))
    return dim, blocks


def chain_ranks(g: Graph, kmax: int, lmax: int) -> dict[tuple[int, int], int]:
    """Generator counts |MC_{k,l}| for 0 <= k <= kmax, 0 <= l <= lmax.

    Counted by dynamic programming over (last vertex, length), without
    listing tuples.
    """
    n = g.n
    steps = _steps(g)
    out: dict[tuple[int, int], int] = {}
    # cur[s][v]: number of k-paths of length s ending at v
    cur = [[0] * n for _ in range(lmax + 1)]
    if lmax >= 0:
        cur[0] = [1] * n
    for k in range(kmax + 1):
        for l in range(lmax + 1):
            out[(k, l)] = sum(cur[l])
        nxt = [[0] * n for _ in range(lmax + 1)]
        for s in range(lmax + 1):
            row = cur[s]
            for v in range(n):
                c = row[v]
                if not c:
                    continue
                for w, d in steps[v]:
                    if s + d <= lmax:
                        nxt[s + d][w] += c
        cur = nxt
    return out
