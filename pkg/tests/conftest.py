"""Shared fixtures: worked examples transcribed once as cell data, plus
independent brute-force oracles used to pin expected values."""

from __future__ import annotations

import itertools

import pytest

from skyline.contretab import ContreTableau
from skyline.fillings import BasementKind, Filling, SkewShape
from skyline.shapes import Permutation, WeakComposition, weak_compositions


# ---------------------------------------------------------------------------
# worked examples (kept as coordinates, never re-read by eye)


@pytest.fixture
def ssk_standard_example() -> Filling:
    """Standard-basement SSK of shape (2,0,3,2,1) with n=5."""
    return Filling(SkewShape((2, 0, 3, 2, 1)), BasementKind.IDENT,
                   [[1, 1], [], [3, 3, 2], [4, 2], [5]])


@pytest.fixture
def ssk_reversed_example() -> Filling:
    """Reversed-basement SSK of shape (2,0,3,0,1) with n=5."""
    return Filling(SkewShape((2, 0, 3, 0, 1)), BasementKind.REVERSED,
                   [[3, 1], [], [2, 2, 2], [], [1]])


@pytest.fixture
def ssk_large_skew_example() -> Filling:
    """Large-basement skew SSK of shape (3,1,4,2,6)/(2,0,3,1,3); its row
    word is 4212513 and its column word 1254321."""
    return Filling(SkewShape((3, 1, 4, 2, 6), (2, 0, 3, 1, 3)),
                   BasementKind.LARGE, [[3], [1], [5], [2], [4, 2, 1]])


@pytest.fixture
def lrs_example() -> Filling:
    """LR skyline tableau of shape (3,1,4,2,5)/(2,0,3,1,2), column word
    3231321, content (2,2,3)."""
    return Filling(SkewShape((3, 1, 4, 2, 5), (2, 0, 3, 1, 2)),
                   BasementKind.LARGE, [[1], [1], [2], [2], [3, 3, 3]])


@pytest.fixture
def lrk_example() -> Filling:
    """LR skew key of shape (5,1,3,2,4)/(2,0,1,2,3), column word 3323121."""
    return Filling(SkewShape((5, 1, 3, 2, 4), (2, 0, 1, 2, 3)),
                   BasementKind.SHIFTED, [[3, 3, 3], [1], [2, 1], [], [2]])


RESHAPE_SIGMA = (5, 3, 2, 4, 1)


@pytest.fixture
def reshape_expected() -> Filling:
    """Known output of reshaping the LR skew key example to (5,3,2,4,1)."""
    return Filling(SkewShape((5, 3, 2, 4, 1), (3, 2, 1, 2, 0)),
                   BasementKind.LARGE, [[3, 3], [1], [2], [3, 2], [1]])


@pytest.fixture
def ct_example() -> ContreTableau:
    return ContreTableau((4, 4, 2, 1),
                         [[7, 7, 5, 2], [6, 4, 4, 1], [4, 2], [1]])


@pytest.fixture
def skew_ct_example() -> ContreTableau:
    return ContreTableau((4, 4, 2, 1), [[8], [7, 6], [5, 4], [2]],
                         inner=(3, 2))


@pytest.fixture
def lr_ct_example() -> ContreTableau:
    """LR skew contretableau of shape (4,4,2,1)/(3,2), content (1,2,3)."""
    return ContreTableau((4, 4, 2, 1), [[3], [3, 2], [3, 1], [2]],
                         inner=(3, 2))


@pytest.fixture
def column_sorted_pair(ssk_standard_example) -> tuple[Filling, ContreTableau]:
    """A standard-basement SSK and its column-sorted contretableau."""
    ct = ContreTableau((3, 2, 2, 1), [[5, 3, 2], [4, 2], [3, 1], [1]])
    return ssk_standard_example, ct


LRC_EXAMPLE = {
    "beta": (4, 3, 1, 2, 2),
    "alpha": (3, 2, 1),
    "content": (1, 2, 3),
    "count": 4,
    # per class: per-column entry sets, leftmost column first
    "column_sets": {
        (frozenset({2, 3}), frozenset({1, 2}), frozenset({3}), frozenset({3})),
        (frozenset({2, 3}), frozenset({1, 3}), frozenset({2}), frozenset({3})),
        (frozenset({1, 2}), frozenset({2, 3}), frozenset({3}), frozenset({3})),
        (frozenset({1, 3}), frozenset({2, 3}), frozenset({2}), frozenset({3})),
    },
}


# ---------------------------------------------------------------------------
# oracles and sweep domains


def bruhat_closure_oracle(n: int) -> dict[tuple[Permutation, Permutation], bool]:
    """Strong Bruhat order from covering relations (u -> u.t, length +1)."""
    perms = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
    covers = {u: [] for u in perms}
    for u in perms:
        lu = u.inversions()
        for i in range(n):
            for j in range(i + 1, n):
                v = list(u)
                v[i], v[j] = v[j], v[i]
                v = Permutation(v)
                if v.inversions() == lu + 1:
                    covers[u].append(v)
    leq = {}
    for u in perms:
        seen = {u}
        stack = [u]
        while stack:
            w = stack.pop()
            for x in covers[w]:
                if x not in seen:
                    seen.add(x)
                    stack.append(x)
        for v in perms:
            leq[(u, v)] = v in seen
    return leq


def enum_ssyt(lam, n):
    """Row-weakly-increasing, column-strictly-increasing tableaux; the
    classical counterpart used to cross-check counts."""
    lam = tuple(lam)
    if not lam:
        yield ()
        return
    rows = [[0] * c for c in lam]

    def fill(r, c):
        if r == len(lam):
            yield tuple(tuple(x) for x in rows)
            return
        nr, nc = (r, c + 1) if c + 1 < lam[r] else (r + 1, 0)
        lo = 1
        if c > 0:
            lo = max(lo, rows[r][c - 1])
        if r > 0 and c < lam[r - 1]:
            lo = max(lo, rows[r - 1][c] + 1)
        for v in range(lo, n + 1):
            rows[r][c] = v
            yield from fill(nr, nc)

    yield from fill(0, 0)


def skew_shapes(max_outer_size: int, max_n: int):
    """All (outer, inner, n) with len(outer) = n <= max_n, |outer| bounded."""
    for n in range(1, max_n + 1):
        for d in range(0, max_outer_size + 1):
            for outer in weak_compositions(d, n):
                for inner in itertools.product(*[range(p + 1) for p in outer]):
                    yield outer, WeakComposition(inner), n


def all_ssk(max_outer_size: int, max_n: int, kinds=tuple(BasementKind)):
    """Every SSK over the bounded skew-shape domain, all basements."""
    from skyline.enumgen import enum_ssk_shape

    for outer, inner, n in skew_shapes(max_outer_size, max_n):
        for kind in kinds:
            yield from enum_ssk_shape(outer, kind, inner)
