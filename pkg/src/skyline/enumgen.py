"""Exhaustive generators for skyline fillings, contretableaux, and the
Littlewood-Richardson tableau families, plus the shape-rearrangement
construction that underlies the equivalence-class counts.

Generation is backtracking in row reading order (bottom row first, left
to right).  With that order every triple of the diagram becomes checkable
exactly when its last data cell is placed, so each cell carries a
precompiled list of triple checks and candidate entries are pruned
against the left neighbor and the remaining content budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (InvalidShape, NotContreLattice, NotRearrangement,
                     SizeMismatch)
from .contretab import ContreTableau
from .fillings import (BasementKind, Filling, SkewShape, basement_values,
                       enumerate_triples, is_inversion, is_ssk)
from .shapes import Composition, WeakComposition, pad, placements
from .words import col_word, is_contre_lattice, is_regular_contre_lattice


@dataclass(frozen=True)
class EnumQuery:
    """Parameters of one skyline filling enumeration."""

    shape: SkewShape
    basement: BasementKind
    content: tuple[int, ...] | None = None
    require_contre_lattice: bool = False
    require_regular: bool = False


def _raw_fillings(shape: SkewShape, bvals: Sequence[int], n: int,
                  content: Sequence[int] | None) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield the data rows of every filling with weakly decreasing rows
    and all triples inverted.  Deterministic order: cells in row reading
    order, candidate entries descending."""
    outer, inner = shape.outer, shape.inner
    nrows = shape.nrows
    if content is not None:
        if sum(content) != shape.size:
            return
        budget = list(content) + [0] * max(0, n - len(content))
        budget = budget[:n]
    else:
        budget = None

    # grid[i][k], 1-based rows, column 0 = basement.
    grid: list[list[int]] = [[0] * (outer[i] + 1) for i in range(nrows)]
    for i in range(nrows):
        for k in range(0, inner[i] + 1):
            grid[i][k] = bvals[i]

    cells = [(i, k) for i in range(nrows, 0, -1)
             for k in range(inner[i - 1] + 1, outer[i - 1] + 1)]
    order = {cell: t for t, cell in enumerate(cells)}

    # Bin each triple on its last data cell in fill order; triples made of
    # basement and inner cells only are constant and checked up front.
    checks: list[list[tuple[tuple[int, int], tuple[int, int], tuple[int, int]]]] = [
        [] for _ in cells]
    for tr in enumerate_triples(shape):
        members = [tr.a, tr.b, tr.c]
        data = [m for m in members if m in order]
        if not data:
            a, b, c = (grid[m[0] - 1][m[1]] for m in members)
            if not is_inversion(a, b, c):
                return
            continue
        checks[max(order[m] for m in data)].append((tr.a, tr.b, tr.c))

    ncells = len(cells)
    if ncells == 0:
        yield tuple(() for _ in range(nrows))
        return

    def snapshot() -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(grid[i][inner[i] + 1: outer[i] + 1])
                     for i in range(nrows))

    def fill(t: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        i, k = cells[t]
        row = grid[i - 1]
        cell_checks = checks[t]
        top = min(n, row[k - 1])  # the left neighbor always exists
        for v in range(top, 0, -1):
            if budget is not None:
                if budget[v - 1] == 0:
                    continue
                budget[v - 1] -= 1
            row[k] = v
            ok = True
            for pa, pb, pc in cell_checks:
                if not is_inversion(grid[pa[0] - 1][pa[1]],
                                    grid[pb[0] - 1][pb[1]],
                                    grid[pc[0] - 1][pc[1]]):
                    ok = False
                    break
            if ok:
                if t + 1 == ncells:
                    yield snapshot()
                else:
                    yield from fill(t + 1)
            if budget is not None:
                budget[v - 1] += 1
        row[k] = 0

    yield from fill(0)


def enum_ssk(query: EnumQuery) -> Iterator[Filling]:
    """All semistandard skyline fillings matching the query, each once."""
    shape, kind = query.shape, query.basement
    n = shape.nrows
    bvals = basement_values(kind, n)
    for rows in _raw_fillings(shape, bvals, n, query.content):
        f = Filling(shape, kind, rows)
        if query.require_contre_lattice or query.require_regular:
            w = col_word(f)
            if query.require_regular:
                if not is_regular_contre_lattice(w):
                    continue
            elif not is_contre_lattice(w):
                continue
        yield f


def enum_ssk_shape(outer: Sequence[int], basement: BasementKind,
                   inner: Sequence[int] | None = None,
                   content: Sequence[int] | None = None,
                   require_contre_lattice: bool = False,
                   require_regular: bool = False) -> Iterator[Filling]:
    """Convenience wrapper building the EnumQuery from raw shapes."""
    q = EnumQuery(SkewShape(outer, inner), basement,
                  None if content is None else tuple(content),
                  require_contre_lattice, require_regular)
    return enum_ssk(q)


def enum_lrs(delta: Sequence[int], gamma: Sequence[int],
             content: Sequence[int]) -> Iterator[Filling]:
    """LR skyline tableaux: large-basement SSK of shape delta/gamma whose
    column word is regular contre-lattice with the given content."""
    return enum_ssk_shape(delta, BasementKind.LARGE, gamma, content,
                          require_regular=True)


def enum_lrk(delta: Sequence[int], gamma: Sequence[int],
             content: Sequence[int]) -> Iterator[Filling]:
    """LR skew keys: as enum_lrs but on the shifted basement b_i = n + i."""
    return enum_ssk_shape(delta, BasementKind.SHIFTED, gamma, content,
                          require_regular=True)


def lrc_representatives(beta: Sequence[int], alpha: Sequence[int],
                        content: Sequence[int], n: int | None = None
                        ) -> list[Filling]:
    """Canonical representatives of the LR equivalence classes of shape
    beta/alpha: the unique member whose overall shape is beta padded with
    trailing zeros, one per class, over all basements flattening to alpha.

    The padding length n defaults to len(beta) + len(alpha); any n at
    least max(len(beta), len(content)) yields the same classes.
    """
    beta = Composition(beta)
    alpha = Composition(alpha)
    content = tuple(content)
    if beta.size != alpha.size + sum(content):
        raise SizeMismatch(
            f"|beta|={beta.size} must equal |alpha|+|content|="
            f"{alpha.size + sum(content)}")
    if sum(content) == 0:
        return []
    if n is None:
        n = max(len(beta) + len(alpha), len(content))
    delta = pad(beta, n)
    reps = []
    for gamma in placements(alpha, n, bound=delta):
        reps.extend(enum_lrs(delta, gamma, content))
    return reps


def count_lrc(beta: Sequence[int], alpha: Sequence[int],
              content: Sequence[int], n: int | None = None) -> int:
    """Number of LR equivalence classes of shape beta/alpha and given content."""
    return len(lrc_representatives(beta, alpha, content, n))


def reshape(y: Filling, sigma: Sequence[int]) -> Filling:
    """The unique contre-lattice SSK on the large basement with overall
    shape sigma and the same column sets as y.

    Iteratively removes the rightmost occurrence of the smallest remaining
    entry of y and places it at the end of the lowest remaining row of
    matching length in sigma.
    """
    report = is_ssk(y)
    if not report:
        raise NotContreLattice(f"input is not an SSK: {report.failure}")
    if not is_contre_lattice(col_word(y)):
        raise NotContreLattice("input column word is not contre-lattice")
    sigma = WeakComposition(sigma)
    if sorted(sigma) != sorted(y.shape.outer):
        raise NotRearrangement(
            f"{tuple(sigma)} does not rearrange {tuple(y.shape.outer)}")
    n = y.n

    remaining: list[tuple[int, int]] = []  # (value, column)
    for i, k in y.data_cells():
        remaining.append((y.value_at(i, k), k))
    current = list(sigma)
    entries: dict[tuple[int, int], int] = {}
    while remaining:
        x = min(v for v, _ in remaining)
        j = max(k for v, k in remaining if v == x)
        row = None
        for i in range(n, 0, -1):
            if current[i - 1] == j:
                row = i
                break
        if row is None:
            raise NotContreLattice(
                f"no row of length {j} available while placing {x}")
        entries[(row, j)] = x
        current[row - 1] = j - 1
        remaining.remove((x, j))
    tau = WeakComposition(current)
    rows = []
    for i in range(1, n + 1):
        rows.append([entries[(i, k)] for k in range(tau[i - 1] + 1, sigma[i - 1] + 1)])
    return Filling(SkewShape(sigma, tau), BasementKind.LARGE, rows)


def enum_ct(outer: Sequence[int], inner: Sequence[int] = (), *, n: int,
            content: Sequence[int] | None = None) -> Iterator[ContreTableau]:
    """All (skew) contretableaux of shape outer/inner with entries in [n].

    Rows weakly decrease, columns strictly decrease; optional exact content.
    """
    outer = tuple(outer)
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    if any(i > o for i, o in zip(inner, outer)):
        raise InvalidShape(f"inner {inner} not inside {outer}")
    ncells = sum(o - i for o, i in zip(outer, inner))
    if content is not None:
        content = tuple(content)
        if sum(content) != ncells:
            return
        budget = (list(content) + [0] * max(0, n - len(content)))[:n]
    else:
        budget = None

    nrows = len(outer)
    grid = [[0] * (outer[i] + 1) for i in range(nrows)]  # col 0 unused
    cells = [(r, c) for r in range(1, nrows + 1)
             for c in range(inner[r - 1] + 1, outer[r - 1] + 1)]

    def ct_rows():
        return [tuple(grid[r - 1][inner[r - 1] + 1: outer[r - 1] + 1])
                for r in range(1, nrows + 1)]

    def fill(t: int) -> Iterator[ContreTableau]:
        if t == len(cells):
            yield ContreTableau(outer, ct_rows(), inner)
            return
        r, c = cells[t]
        top = n
        if c - 1 >= inner[r - 1] + 1:
            top = min(top, grid[r - 1][c - 1])
        if r > 1 and inner[r - 2] < c <= outer[r - 2]:
            top = min(top, grid[r - 2][c] - 1)
        for v in range(top, 0, -1):
            if budget is not None:
                if v > len(budget) or budget[v - 1] == 0:
                    continue
                budget[v - 1] -= 1
            grid[r - 1][c] = v
            yield from fill(t + 1)
            grid[r - 1][c] = 0
            if budget is not None:
                budget[v - 1] += 1

    yield from fill(0)


def enum_ssc(beta: Sequence[int], n: int,
             content: Sequence[int] | None = None) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Semistandard composition tableaux of shape beta with entries in [n].

    First column strictly increasing top to bottom, rows weakly decreasing,
    every triple an inversion triple; triples are taken on the composition
    diagram itself (the basement is superfluous here).  Yields row tuples.
    """
    beta = Composition(beta)
    nrows = len(beta)
    ncells = beta.size
    if content is not None:
        content = tuple(content)
        if sum(content) != ncells:
            return
        budget = list(content) + [0] * max(0, n - len(content))
        budget = budget[:n]
    else:
        budget = None

    grid = [[0] * (b + 1) for b in beta]
    cells = [(i, k) for i in range(nrows, 0, -1) for k in range(1, beta[i - 1] + 1)]
    order = {cell: t for t, cell in enumerate(cells)}
    checks: list[list[tuple[tuple[int, int], ...]]] = [[] for _ in cells]
    for i in range(1, nrows + 1):
        for j in range(i + 1, nrows + 1):
            bi, bj = beta[i - 1], beta[j - 1]
            if bi >= bj:
                for k in range(2, bj + 1):
                    tri = ((i, k), (j, k), (i, k - 1))
                    checks[max(order[m] for m in tri)].append(tri)
            else:
                for k in range(1, bi + 1):
                    tri = ((j, k + 1), (i, k), (j, k))
                    checks[max(order[m] for m in tri)].append(tri)

    def fill(t: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if t == len(cells):
            yield tuple(tuple(row[1:]) for row in grid)
            return
        i, k = cells[t]
        row = grid[i - 1]
        if k == 1:
            # first column strictly increases downward; lower rows are filled
            top = n if i == nrows else min(n, grid[i][1] - 1)
        else:
            top = min(n, row[k - 1])
        for v in range(top, 0, -1):
            if budget is not None:
                if budget[v - 1] == 0:
                    continue
                budget[v - 1] -= 1
            row[k] = v
            ok = True
            for pa, pb, pc in checks[t]:
                if not is_inversion(grid[pa[0] - 1][pa[1]],
                                    grid[pb[0] - 1][pb[1]],
                                    grid[pc[0] - 1][pc[1]]):
                    ok = False
                    break
            if ok:
                yield from fill(t + 1)
            row[k] = 0
            if budget is not None:
                budget[v - 1] += 1

    yield from fill(0)
