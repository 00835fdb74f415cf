"""Littlewood-Richardson coefficients for Demazure atoms, Demazure
characters, and quasisymmetric Schur polynomials, with verification
harnesses that check every expansion two ways: tableau enumeration
against exact polynomial arithmetic.

The character decomposition into atoms used throughout is kappa_g =
sum of atoms over weak compositions weakly above g in the Bruhat order.
Statements of this identity sometimes reverse the index; under the
basement conventions of this package the reversed form already fails at
n = 2, and the tests pin the form used here.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .errors import NoSuchPart, ShapeMismatch, SizeMismatch
from .contretab import is_lr_skew_ct
from .enumgen import count_lrc, enum_ct, enum_lrk, enum_lrs
from .poly import Polynomial, atom_poly, char_poly, expand_in_atoms, qs_poly, schur_poly
from .shapes import (Composition, Partition, WeakComposition, comp_bruhat_geq,
                     compositions, min_sorting_perm, partition_of, partitions,
                     placements, rearrangements, rem_k, reverse, strongof,
                     weak_compositions)


# ---------------------------------------------------------------------------
# coefficients


def coeff_a(gamma: Sequence[int], lam: Sequence[int], delta: Sequence[int]) -> int:
    """Atom rule coefficient: LR skyline tableaux of shape delta/gamma with
    content reverse(lam)."""
    gamma, lam, delta = WeakComposition(gamma), Partition(lam), WeakComposition(delta)
    n = len(gamma)
    if len(delta) != n:
        raise ShapeMismatch(f"lengths differ: {tuple(gamma)} vs {tuple(delta)}")
    if not delta.contains(gamma):
        raise ShapeMismatch(f"{tuple(delta)} does not contain {tuple(gamma)}")
    if delta.size - gamma.size != lam.size:
        raise ShapeMismatch(
            f"|delta|-|gamma| = {delta.size - gamma.size} != |lam| = {lam.size}")
    if lam.size == 0:
        return 0
    return sum(1 for _ in enum_lrs(delta, gamma, reverse(lam)))


def coeff_b(gamma: Sequence[int], lam: Sequence[int], delta: Sequence[int]) -> int:
    """Character rule coefficient: LR skew keys of shape delta*/gamma* with
    content reverse(lam)."""
    gamma, lam, delta = WeakComposition(gamma), Partition(lam), WeakComposition(delta)
    n = len(gamma)
    if len(delta) != n:
        raise ShapeMismatch(f"lengths differ: {tuple(gamma)} vs {tuple(delta)}")
    if not delta.contains(gamma):
        raise ShapeMismatch(f"{tuple(delta)} does not contain {tuple(gamma)}")
    if delta.size - gamma.size != lam.size:
        raise ShapeMismatch(
            f"|delta|-|gamma| = {delta.size - gamma.size} != |lam| = {lam.size}")
    if lam.size == 0:
        return 0
    return sum(1 for _ in enum_lrk(reverse(delta), reverse(gamma), reverse(lam)))


def coeff_qs(alpha: Sequence[int], lam: Sequence[int], beta: Sequence[int]) -> int:
    """Quasisymmetric rule coefficient: LR equivalence classes of shape
    beta/alpha with content reverse(lam)."""
    alpha, lam, beta = Composition(alpha), Partition(lam), Composition(beta)
    if beta.size != alpha.size + lam.size:
        raise SizeMismatch(
            f"|beta| = {beta.size} != |alpha|+|lam| = {alpha.size + lam.size}")
    if lam.size == 0:
        return 0
    return count_lrc(beta, alpha, reverse(lam))


def coeff_classical(mu: Sequence[int], lam: Sequence[int], nu: Sequence[int]) -> int:
    """Classical LR coefficient: LR skew contretableaux of shape nu/mu with
    content reverse(lam), counted by brute force."""
    mu, lam, nu = Partition(mu), Partition(lam), Partition(nu)
    if len(mu) > len(nu) or any(m > v for m, v in zip(mu, nu)):
        raise ShapeMismatch(f"{tuple(mu)} not contained in {tuple(nu)}")
    if nu.size != mu.size + lam.size:
        raise ShapeMismatch(
            f"|nu| = {nu.size} != |mu|+|lam| = {mu.size + lam.size}")
    if lam.size == 0:
        return 0
    r = len(lam)
    return sum(1 for t in enum_ct(nu, mu, n=r, content=reverse(lam))
               if is_lr_skew_ct(t))


def _rem_preimage(big, small) -> bool:
    for k in set(big) - {0}:
        try:
            if tuple(rem_k(big, k)) == tuple(small):
                return True
        except NoSuchPart:  # pragma: no cover - k always occurs in big
            pass
    return False


def pieri_single_box(kind: str, shape: Sequence[int]) -> list:
    """All shapes whose single-box removal recovers the input.

    kind "atom": weak compositions delta with rem_k(delta) = shape;
    kind "qs": compositions beta with rem_k(beta) = shape.
    """
    if kind == "atom":
        gamma = WeakComposition(shape)
        cands = set()
        for i in range(len(gamma)):
            d = list(gamma)
            d[i] += 1
            cands.add(WeakComposition(d))
        return sorted(d for d in cands if _rem_preimage(d, gamma))
    if kind == "qs":
        alpha = Composition(shape)
        cands = set()
        for i in range(len(alpha)):
            b = list(alpha)
            b[i] += 1
            cands.add(Composition(b))
        for p in range(len(alpha) + 1):
            b = list(alpha)
            b.insert(p, 1)
            cands.add(Composition(b))
        return sorted(b for b in cands if _rem_preimage(b, alpha))
    raise ValueError(f"kind must be 'atom' or 'qs', got {kind!r}")


# ---------------------------------------------------------------------------
# expansion reports


@dataclass
class ExpansionReport:
    """Double-entry record of one product expansion.

    `enumerated` holds the tableau counts, `expanded` the coefficients
    recovered from the product polynomial by exact linear algebra; the
    report passes iff the two maps agree and the reconstructed sum equals
    the product exactly.
    """

    identity: str
    n: int
    ok: bool
    enumerated: dict = field(default_factory=dict)
    expanded: dict = field(default_factory=dict)
    first_discrepancy: str | None = None

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        def keyed(d):
            return {(",".join(map(str, k)) or "-"): v for k, v in sorted(d.items())}
        return {"identity": self.identity, "n": self.n, "ok": self.ok,
                "enumerated": keyed(self.enumerated),
                "expanded": keyed(self.expanded),
                "first_discrepancy": self.first_discrepancy}


def _first_diff(enumerated: dict, expanded: dict) -> str | None:
    for k in sorted(set(enumerated) | set(expanded)):
        a, b = enumerated.get(k, 0), expanded.get(k, 0)
        if a != b:
            return f"shape {tuple(k)}: enumerated {a}, expanded {b}"
    return None


def _outer_candidates(gamma: WeakComposition, size: int) -> Iterator[WeakComposition]:
    """Weak compositions containing gamma with |delta| = |gamma| + size."""
    n = len(gamma)
    for extra in weak_compositions(size, n):
        yield WeakComposition(g + e for g, e in zip(gamma, extra))


def verify_atom_theorem(gamma: Sequence[int], lam: Sequence[int], n: int
                        ) -> ExpansionReport:
    """Check atom * Schur = sum of LR-counted atoms, both as an exact
    polynomial identity and against the independent atom expansion."""
    gamma, lam = WeakComposition(gamma), Partition(lam)
    ident = f"A[{','.join(map(str, gamma)) or '-'}] * s[{','.join(map(str, lam)) or '-'}]"
    lhs = atom_poly(gamma, n) * schur_poly(lam, n)
    if lam.size == 0:
        enumerated = {gamma: 1}
    else:
        enumerated = {}
        for delta in _outer_candidates(gamma, lam.size):
            c = coeff_a(gamma, lam, delta)
            if c:
                enumerated[delta] = c
    rhs = Polynomial.zero(n)
    for delta, c in enumerated.items():
        rhs = rhs + c * atom_poly(delta, n)
    poly_ok = lhs == rhs
    expanded = expand_in_atoms(lhs)
    diff = _first_diff(enumerated, expanded)
    ok = poly_ok and diff is None
    if not poly_ok:
        diff = diff or "reconstructed sum differs from the product polynomial"
    return ExpansionReport(ident, n, ok, enumerated, expanded, diff)


def _chars_from_atom_expansion(e: dict, n: int) -> dict:
    """Invert kappa_d = sum over b >= d of atoms: recover character
    coefficients from atom coefficients by triangular elimination, one
    rearrangement class at a time."""
    out: dict[WeakComposition, int] = {}
    residual = dict(e)
    groups: dict[Partition, list[WeakComposition]] = {}
    for key in e:
        groups.setdefault(partition_of(key), [])
    for part, _ in groups.items():
        cands = sorted(rearrangements(part, n),
                       key=lambda d: -min_sorting_perm(d).inversions())
        for d in cands:
            c = residual.get(d, 0)
            if c == 0:
                continue
            out[d] = c
            for b in rearrangements(part, n):
                if comp_bruhat_geq(b, d):
                    nc = residual.get(b, 0) - c
                    if nc:
                        residual[b] = nc
                    else:
                        residual.pop(b, None)
    if residual:
        k = next(iter(residual))
        raise ShapeMismatch(f"atom expansion not in character span near {tuple(k)}")
    return out


def verify_char_theorem(gamma: Sequence[int], lam: Sequence[int], n: int
                        ) -> ExpansionReport:
    """Check character * Schur = sum of LRK-counted characters, with the
    coefficients independently recovered through the atom basis."""
    gamma, lam = WeakComposition(gamma), Partition(lam)
    ident = f"k[{','.join(map(str, gamma)) or '-'}] * s[{','.join(map(str, lam)) or '-'}]"
    lhs = char_poly(gamma, n) * schur_poly(lam, n)
    if lam.size == 0:
        enumerated = {gamma: 1}
    else:
        enumerated = {}
        for delta in _outer_candidates(gamma, lam.size):
            c = coeff_b(gamma, lam, delta)
            if c:
                enumerated[delta] = c
    rhs = Polynomial.zero(n)
    for delta, c in enumerated.items():
        rhs = rhs + c * char_poly(delta, n)
    poly_ok = lhs == rhs
    expanded = _chars_from_atom_expansion(expand_in_atoms(lhs), n)
    diff = _first_diff(enumerated, expanded)
    ok = poly_ok and diff is None
    if not poly_ok:
        diff = diff or "reconstructed sum differs from the product polynomial"
    return ExpansionReport(ident, n, ok, enumerated, expanded, diff)


def _qs_from_atom_expansion(e: dict, n: int) -> tuple[dict, str | None]:
    """Group atom coefficients by flattened shape; each group must be
    constant for the expansion to lie in the quasisymmetric Schur span."""
    out: dict[Composition, int] = {}
    for beta in {strongof(k) for k in e}:
        vals = {e.get(g, 0) for g in placements(beta, n)}
        if len(vals) != 1:
            return out, (f"atom coefficients differ across placements of "
                         f"{tuple(beta)}: {sorted(vals)}")
        v = vals.pop()
        if v:
            out[Composition(beta)] = v
    return out, None


def verify_qs_theorem(alpha: Sequence[int], lam: Sequence[int], n: int
                      ) -> ExpansionReport:
    """Check QS * Schur = sum of LRC-counted QS polynomials, with the
    coefficients independently recovered through the atom basis."""
    alpha, lam = Composition(alpha), Partition(lam)
    ident = f"S[{','.join(map(str, alpha)) or '-'}] * s[{','.join(map(str, lam)) or '-'}]"
    lhs = qs_poly(alpha, n) * schur_poly(lam, n)
    if lam.size == 0:
        enumerated = {alpha: 1}
    else:
        enumerated = {}
        for beta in compositions(alpha.size + lam.size):
            if len(beta) > n:
                continue
            c = coeff_qs(alpha, lam, beta)
            if c:
                enumerated[beta] = c
    rhs = Polynomial.zero(n)
    for beta, c in enumerated.items():
        rhs = rhs + c * qs_poly(beta, n)
    poly_ok = lhs == rhs
    expanded, group_err = _qs_from_atom_expansion(expand_in_atoms(lhs), n)
    diff = group_err or _first_diff(enumerated, expanded)
    ok = poly_ok and diff is None
    if not poly_ok:
        diff = diff or "reconstructed sum differs from the product polynomial"
    return ExpansionReport(ident, n, ok, enumerated, expanded, diff)


def verify_consistency_identity(delta: Sequence[int], gamma: Sequence[int],
                                lam: Sequence[int]) -> bool:
    """The linear-independence consequence of the two LR rules: for fixed
    delta and gamma, summing character-rule coefficients over shapes
    between gamma and delta equals summing atom-rule coefficients over
    basements between gamma and delta."""
    delta, gamma, lam = WeakComposition(delta), WeakComposition(gamma), Partition(lam)
    n = len(delta)
    if len(gamma) != n:
        raise ShapeMismatch(f"lengths differ: {tuple(gamma)} vs {tuple(delta)}")
    if delta.size != gamma.size + lam.size:
        return True  # both sides are empty sums
    lhs = 0
    for alpha in rearrangements(partition_of(delta), n):
        if alpha.contains(gamma) and comp_bruhat_geq(delta, alpha):
            lhs += coeff_b(gamma, lam, alpha)
    rhs = 0
    for beta in rearrangements(partition_of(gamma), n):
        if delta.contains(beta) and comp_bruhat_geq(beta, gamma):
            rhs += coeff_a(beta, lam, delta)
    return lhs == rhs


# ---------------------------------------------------------------------------
# sweeps


def _index_partitions(max_lambda: int, n: int) -> list[Partition]:
    out = []
    for size in range(0, max_lambda + 1):
        for lam in partitions(size):
            if len(lam) <= n:
                out.append(lam)
    return out


def iter_atom_instances(max_n: int, max_size: int, max_lambda: int
                        ) -> Iterator[tuple[WeakComposition, Partition, int]]:
    for n in range(1, max_n + 1):
        lams = _index_partitions(max_lambda, n)
        for size in range(0, max_size + 1):
            for gamma in weak_compositions(size, n):
                for lam in lams:
                    yield gamma, lam, n


iter_char_instances = iter_atom_instances


def iter_qs_instances(max_n: int, max_size: int, max_lambda: int
                      ) -> Iterator[tuple[Composition, Partition, int]]:
    for n in range(1, max_n + 1):
        lams = _index_partitions(max_lambda, n)
        for size in range(0, max_size + 1):
            for alpha in compositions(size):
                if len(alpha) > n:
                    continue
                for lam in lams:
                    yield alpha, lam, n


def iter_consistency_instances(max_n: int, max_size: int, max_lambda: int
                               ) -> Iterator[tuple[WeakComposition, WeakComposition, Partition]]:
    for n in range(1, max_n + 1):
        lams = _index_partitions(max_lambda, n)
        for size in range(0, max_size + 1):
            for gamma in weak_compositions(size, n):
                for lam in lams:
                    for delta in _outer_candidates(gamma, lam.size):
                        yield delta, gamma, lam


def _run_instances(worker: Callable, instances: list, threads: int = 1) -> list:
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(worker, instances))
    return [worker(inst) for inst in instances]


def sweep(suite: str, max_n: int, max_size: int, max_lambda: int,
          threads: int = 1) -> list[tuple[str, bool, str | None]]:
    """Run one verification suite; returns (instance label, ok, detail)
    triples in deterministic order."""
    def fmt(s):
        return ",".join(map(str, s)) or "-"

    if suite == "atoms":
        instances = list(iter_atom_instances(max_n, max_size, max_lambda))

        def worker(inst):
            g, lam, n = inst
            r = verify_atom_theorem(g, lam, n)
            return (f"atoms gamma={fmt(g)} lambda={fmt(lam)} n={n}",
                    r.ok, r.first_discrepancy)
    elif suite == "chars":
        instances = list(iter_char_instances(max_n, max_size, max_lambda))

        def worker(inst):
            g, lam, n = inst
            r = verify_char_theorem(g, lam, n)
            return (f"chars gamma={fmt(g)} lambda={fmt(lam)} n={n}",
                    r.ok, r.first_discrepancy)
    elif suite == "qs":
        instances = list(iter_qs_instances(max_n, max_size, max_lambda))

        def worker(inst):
            a, lam, n = inst
            r = verify_qs_theorem(a, lam, n)
            return (f"qs alpha={fmt(a)} lambda={fmt(lam)} n={n}",
                    r.ok, r.first_discrepancy)
    elif suite == "consistency":
        instances = list(iter_consistency_instances(max_n, max_size, max_lambda))

        def worker(inst):
            d, g, lam = inst
            ok = verify_consistency_identity(d, g, lam)
            return (f"consistency delta={fmt(d)} gamma={fmt(g)} lambda={fmt(lam)}",
                    ok, None if ok else "sides differ")
    else:
        raise ValueError(f"unknown suite {suite!r}")

    return _run_instances(worker, instances, threads)
