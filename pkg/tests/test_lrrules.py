import pytest

from skyline.errors import ShapeMismatch, SizeMismatch
from skyline.lrrules import (coeff_a, coeff_b, coeff_classical, coeff_qs,
                             iter_consistency_instances, pieri_single_box,
                             sweep, verify_atom_theorem, verify_char_theorem,
                             verify_consistency_identity, verify_qs_theorem)
from skyline.poly import Polynomial, atom_poly, qs_poly, schur_poly
from skyline.shapes import (WeakComposition, compositions, pad, partition_of,
                            partitions, reverse, weak_compositions)


def test_coeff_a():
    assert coeff_a((2, 0, 3, 1, 2), (3, 2, 2), (3, 1, 4, 2, 5)) == 1
    with pytest.raises(ShapeMismatch):
        coeff_a((1, 1), (1,), (1, 0))  # containment fails
    with pytest.raises(ShapeMismatch):
        coeff_a((1, 1), (2,), (2, 1))  # sizes inconsistent
    assert coeff_a((1, 0), (), (1, 0)) == 0  # counting convention


def test_coeff_a_single_box_matches_pieri():
    for n in (2, 3):
        for d in range(0, 3):
            for gamma in weak_compositions(d, n):
                preimages = set(pieri_single_box("atom", gamma))
                for extra in weak_compositions(1, n):
                    delta = WeakComposition(g + e for g, e in zip(gamma, extra))
                    expected = 1 if delta in preimages else 0
                    assert coeff_a(gamma, (1,), delta) == expected


def test_coeff_b():
    assert coeff_b((3, 2, 1, 0, 2), (3, 2, 2), (4, 2, 3, 1, 5)) == 1
    assert coeff_b((1, 0), (), (1, 0)) == 0


def test_coeff_b_schur_case_forces_partition_shape():
    # with the left index a reversed partition, only reversed-partition
    # outer shapes carry nonzero coefficients
    for mu in [(1,), (2,), (1, 1), (2, 1)]:
        n = 3
        gamma = reverse(pad(mu, n))
        for lam in [(1,), (2,), (1, 1)]:
            for extra in weak_compositions(sum(lam), n):
                delta = WeakComposition(g + e for g, e in zip(gamma, extra))
                if coeff_b(gamma, lam, delta):
                    rev = list(reverse(delta))
                    assert rev == sorted(rev, reverse=True)


def test_coeff_qs():
    assert coeff_qs((3, 2, 1), (3, 2, 1), (4, 3, 1, 2, 2)) == 4
    assert coeff_qs((2, 1), (), (2, 1)) == 0
    with pytest.raises(SizeMismatch):
        coeff_qs((1,), (1,), (3,))


def test_coeff_qs_single_box():
    for alpha in [(1,), (2, 1), (1, 1)]:
        preimages = set(pieri_single_box("qs", alpha))
        for beta in compositions(sum(alpha) + 1):
            expected = 1 if beta in preimages else 0
            assert coeff_qs(alpha, (1,), beta) == expected


def test_coeff_classical_small():
    assert coeff_classical((1,), (1,), (2,)) == 1
    assert coeff_classical((1,), (1,), (1, 1)) == 1
    assert coeff_classical((2, 1), (2, 1), (3, 2, 1)) == 2
    total = 0
    for nu in partitions(6):
        if len(nu) >= 2 and nu[0] >= 2 and nu[1] >= 1:
            total += coeff_classical((2, 1), (2, 1), nu)
    assert total == 8
    with pytest.raises(ShapeMismatch):
        coeff_classical((2,), (1,), (1, 1))


def test_coeff_classical_symmetry():
    # symmetry in the two lower indices; the empty factor is excluded since
    # the identity product is handled at the polynomial level, not by counts
    for nsize in range(2, 6):
        for nu in partitions(nsize):
            for msize in range(1, nsize):
                for mu in partitions(msize):
                    if len(mu) > len(nu) or any(
                            m > v for m, v in zip(mu, nu)):
                        continue
                    for lam in partitions(nsize - msize):
                        if len(lam) > len(nu) or any(
                                l > v for l, v in zip(lam, nu)):
                            continue
                        assert coeff_classical(mu, lam, nu) == \
                            coeff_classical(lam, mu, nu)


def test_coeff_classical_equals_char_specialization():
    for nsize in range(0, 6):
        for nu in partitions(nsize):
            for msize in range(0, nsize + 1):
                for mu in partitions(msize):
                    if len(mu) > len(nu) or any(
                            m > v for m, v in zip(mu, nu)):
                        continue
                    for lam in partitions(nsize - msize):
                        n = max(len(nu), len(lam), 1)
                        assert coeff_classical(mu, lam, nu) == \
                            coeff_b(reverse(pad(mu, n)), lam, reverse(pad(nu, n)))


def test_pieri_single_box_atoms():
    assert pieri_single_box("atom", (1, 0)) == [(1, 1), (2, 0)]
    assert atom_poly((1, 0), 2) * schur_poly((1,), 2) == \
        atom_poly((2, 0), 2) + atom_poly((1, 1), 2)
    zeros = WeakComposition((0, 0, 0))
    units = pieri_single_box("atom", zeros)
    assert units == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    total = Polynomial.zero(3)
    for d in units:
        total = total + atom_poly(d, 3)
    assert total == schur_poly((1,), 3)


def test_pieri_single_box_qs():
    assert pieri_single_box("qs", (1,)) == [(1, 1), (2,)]
    assert qs_poly((1,), 2) * schur_poly((1,), 2) == \
        qs_poly((1, 1), 2) + qs_poly((2,), 2)
    with pytest.raises(ValueError):
        pieri_single_box("schur", (1,))


def test_verify_atom_theorem_samples():
    assert verify_atom_theorem((1, 0), (1,), 2).ok
    assert verify_atom_theorem((2, 0, 1), (2,), 3).ok
    r = verify_atom_theorem((0, 2), (), 2)
    assert r.ok and r.enumerated == {(0, 2): 1}


def test_verify_char_theorem_samples():
    assert verify_char_theorem((0, 1), (1,), 2).ok
    assert verify_char_theorem((1, 2, 0), (1, 1), 3).ok
    assert verify_char_theorem((2, 1), (), 2).ok


def test_verify_qs_theorem_samples():
    assert verify_qs_theorem((1,), (1,), 2).ok
    assert verify_qs_theorem((2, 1), (2,), 3).ok
    assert verify_qs_theorem((1, 2), (), 3).ok


def test_qs_rectangle_expansion_matches_classical():
    # for a rectangle the QS polynomial is Schur, so its expansion must be
    # the classical one restated composition by composition
    r = verify_qs_theorem((2, 2), (1,), 3)
    assert r.ok
    assert dict(r.enumerated) == {(3, 2): 1, (2, 3): 1, (2, 2, 1): 1,
                                  (2, 1, 2): 1, (1, 2, 2): 1}
    for beta, c in r.enumerated.items():
        assert c == coeff_classical((2, 2), (1,), partition_of(beta))


def test_verify_consistency_samples():
    assert verify_consistency_identity((2, 0), (1, 0), (1,))
    assert verify_consistency_identity((1, 1), (1, 0), (1,))
    for delta, gamma, lam in iter_consistency_instances(2, 2, 2):
        assert verify_consistency_identity(delta, gamma, lam)


def test_report_json():
    r = verify_atom_theorem((1, 0), (1,), 2)
    data = r.to_json()
    assert data["ok"] is True
    assert data["enumerated"] == {"1,1": 1, "2,0": 1}
    assert data["first_discrepancy"] is None


def test_sweep_runner_deterministic():
    once = sweep("atoms", 2, 2, 1)
    again = sweep("atoms", 2, 2, 1, threads=2)
    assert once == again
    assert all(ok for _, ok, _ in once)
    with pytest.raises(ValueError):
        sweep("nope", 1, 1, 1)
