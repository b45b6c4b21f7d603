"""Matrix realizations: Chevalley triples, eigenvalue checks, and an
independent coroot oracle.

The coroot oracle recovers H_beta directly from the realization (bracket
a root vector with its negative, normalize to beta(H) = 2, expand in the
h_i basis) and compares the resulting pairing against pair_with_coroot.
That route never touches the symmetrizer, so agreement pins both sides.
"""

import random
from fractions import Fraction

import pytest

from laps import (RealizationError, Root, Weight, bracket, build_root_system,
                  half_sum_positive_roots, pair_with_coroot, realize, weight,
                  weight_of_root)
from laps.lie import is_zero_matrix, mat_add, mat_scale
from laps import linalg

REALIZED = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2),
            ("C", 3), ("D", 3)]


def _algebras():
    for label, rank in REALIZED:
        yield realize(build_root_system(label, rank))


# -- generator relations -----------------------------------------------------

def test_sl2_standard_triple():
    alg = realize(build_root_system("A", 1))
    assert alg.e[0] == ((0, 1), (0, 0))
    assert alg.f[0] == ((0, 0), (1, 0))
    assert alg.h[0] == ((1, 0), (0, -1))


@pytest.mark.parametrize("label,rank", REALIZED)
def test_chevalley_relations(label, rank):
    alg = realize(build_root_system(label, rank))
    a = alg.root_system.cartan_matrix
    for i in range(rank):
        for j in range(rank):
            assert bracket(alg.h[i], alg.e[j]) == mat_scale(a[i][j], alg.e[j])
            assert bracket(alg.h[i], alg.f[j]) == mat_scale(-a[i][j], alg.f[j])
            ef = bracket(alg.e[i], alg.f[j])
            if i == j:
                assert ef == alg.h[i]
            else:
                assert is_zero_matrix(ef)


@pytest.mark.parametrize("label,rank", REALIZED)
def test_root_vectors_are_ad_eigenvectors(label, rank):
    alg = realize(build_root_system(label, rank))
    rs = alg.root_system
    for beta in rs.positive_roots:
        for signed in (beta, -beta):
            x = alg.root_vectors[signed]
            assert not is_zero_matrix(x)
            pair = weight_of_root(rs, beta).pairings
            for i in range(rank):
                expect = pair[i] if signed.sign > 0 else -pair[i]
                assert bracket(alg.h[i], x) == mat_scale(expect, x)


def test_sl3_composite_root_vector():
    alg = realize(build_root_system("A", 2))
    x12 = alg.root_vectors[Root((1, 1))]
    br = bracket(alg.root_vectors[Root((1, 0))], alg.root_vectors[Root((0, 1))])
    assert not is_zero_matrix(br)
    ratio = _proportionality(br, x12)
    assert ratio is not None and ratio != 0


def test_jacobi_identity_on_generators():
    for label, rank in (("A", 2), ("B", 2)):
        alg = realize(build_root_system(label, rank))
        gens = list(alg.e) + list(alg.f) + list(alg.h)
        for x in gens:
            for y in gens:
                for z in gens:
                    lhs = mat_add(bracket(x, bracket(y, z)),
                                  mat_add(bracket(y, bracket(z, x)),
                                          bracket(z, bracket(x, y))))
                    assert is_zero_matrix(lhs)


def test_exceptional_types_have_no_realization():
    with pytest.raises(RealizationError):
        realize(build_root_system("G", 2))
    with pytest.raises(RealizationError):
        realize(build_root_system("F", 4))


def test_bracket_rejects_dimension_mismatch():
    a = realize(build_root_system("A", 1))
    b = realize(build_root_system("A", 2))
    with pytest.raises(ValueError):
        bracket(a.e[0], b.e[0])


# -- independent coroot oracle -----------------------------------------------

def _proportionality(m, base):
    for r, row in enumerate(base):
        for c, x in enumerate(row):
            if x != 0:
                ratio = m[r][c] / x
                return ratio if m == mat_scale(ratio, base) else None
    return None


def _coroot_matrix(alg, beta):
    """H_beta from the realization: [x, y] scaled so beta(H_beta) = 2."""
    x = alg.root_vectors[beta]
    y = alg.root_vectors[-beta]
    h = bracket(x, y)
    eigen = _proportionality(bracket(h, x), x)
    assert eigen is not None and eigen != 0
    return mat_scale(Fraction(2) / eigen, h)


def _pair_by_matrix(alg, lam, beta):
    """Expand H_beta over the h_i and contract with lam's pairings."""
    rank = alg.root_system.rank
    h_beta = _coroot_matrix(alg, beta)
    size = alg.size
    rows = [[alg.h[i][a][a] for i in range(rank)] for a in range(size)]
    rhs = [h_beta[a][a] for a in range(size)]
    coords = linalg.solve_unique(rows, rhs)
    return sum(c * p for c, p in zip(coords, lam.pairings))


@pytest.mark.parametrize("label,rank", [("A", 2), ("B", 2), ("C", 2)])
def test_coroot_pairings_match_matrix_oracle(label, rank):
    rs = build_root_system(label, rank)
    alg = realize(rs)
    rng = random.Random(20260815)
    weights = [half_sum_positive_roots(rs)]
    for _ in range(4):
        weights.append(Weight(tuple(
            Fraction(rng.randint(-12, 12), rng.randint(1, 5))
            for _ in range(rank))))
    for beta in rs.positive_roots:
        for lam in weights:
            assert pair_with_coroot(rs, lam, beta) == _pair_by_matrix(alg, lam, beta)


def test_b2_highest_root_against_matrix_oracle():
    rs = build_root_system("B", 2)
    alg = realize(rs)
    delta = half_sum_positive_roots(rs)
    highest = max(rs.positive_roots, key=lambda r: r.height)
    assert highest == Root((1, 2))
    value = pair_with_coroot(rs, delta, highest)
    assert value == _pair_by_matrix(alg, delta, highest)
    assert value == 2


def test_realization_matrices_in_classical_algebra():
    # so(5): skew with respect to the anti-diagonal form; sp(4): J-skew.
    alg = realize(build_root_system("B", 2))
    size = alg.size
    assert size == 5
    for name in list(alg.e) + list(alg.f) + list(alg.h):
        for a in range(size):
            for b in range(size):
                assert name[a][b] == -name[size - 1 - b][size - 1 - a]
