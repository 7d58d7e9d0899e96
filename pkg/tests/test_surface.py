"""Class existence, the genus/degree dictionary, and the Aut classifier."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quartaut.lattice import IDENTITY, mat_mul, mat_vec
from quartaut.surface import (
    CURVE_MODELS,
    H,
    QuarticLattice,
    ample_square2_axes,
    canonical_bc,
    class_with_square_exists,
    classify_aut,
    curve_model,
    find_curve_class,
    forbidden_small_disc,
    genus_degree,
    is_ample,
    realizable_gd,
)

PARTITION = {
    "Trivial": {9, 12, 16, 24, 25, 33, 36, 44, 49, 57},
    "Z2": {17, 41},
    "Z2starZ2": {28, 56},
    "Z": {20, 32, 40, 48},
}

ALL_R = sorted(r for rs in PARTITION.values() for r in rs)


def test_quartic_lattice_validation():
    with pytest.raises(ValueError):
        QuarticLattice(1, 1)  # r = -7
    with pytest.raises(ValueError):
        QuarticLattice(3, 1)  # r = 1 forbidden
    with pytest.raises(ValueError):
        QuarticLattice(2, 0)  # r = 4 forbidden
    with pytest.raises(ValueError):
        QuarticLattice(4, 1)  # r = 8 forbidden
    assert QuarticLattice(1, -2).r == 17


def test_canonical_bc():
    assert canonical_bc(17) == (1, -2)
    assert canonical_bc(20) == (2, -2)
    assert canonical_bc(48) == (0, -6)
    with pytest.raises(ValueError):
        canonical_bc(7)  # 7 mod 8 is not a square residue
    with pytest.raises(ValueError):
        canonical_bc(0)


def test_genus_degree_examples():
    assert genus_degree(QuarticLattice(11, 13), (0, 1)) == (14, 11)
    assert genus_degree(QuarticLattice(11, 13), H) == (3, 4)
    assert genus_degree(QuarticLattice(8, 1), (0, 1)) == (2, 8)


def test_genus_degree_rejects_nonpositive_degree():
    with pytest.raises(ValueError):
        genus_degree(QuarticLattice(11, 13), (-1, 0))


def test_realizable_gd():
    assert realizable_gd(3, 4)  # complete intersection branch, 8g = d^2 + 8
    assert realizable_gd(14, 11)
    assert realizable_gd(15, 11)
    assert realizable_gd(0, 1)
    assert not realizable_gd(3, 5)  # the single excluded pair
    assert not realizable_gd(4, 5)
    assert not realizable_gd(-1, 3)
    assert not realizable_gd(2, 0)


def test_class_with_square_exists_examples():
    # r = 17: a (-2)-class exists; the first congruent sign variant is (-1, 1)
    assert class_with_square_exists(QuarticLattice(1, -2), -2) == (-1, 1)
    # r = 28 has no (-2)-class, r = 20 no 2-class
    assert class_with_square_exists(QuarticLattice(6, 1), -2) is None
    assert class_with_square_exists(QuarticLattice(2, -2), 2) is None


def test_class_with_square_exists_zero_and_errors():
    assert class_with_square_exists(QuarticLattice(1, -2), 0) == (0, 0)
    assert class_with_square_exists(QuarticLattice(1, -2), 0, nonzero=True) is None
    # isotropic classes exist exactly over square discriminants
    D = class_with_square_exists(QuarticLattice(1, -1), 0, nonzero=True)
    assert D is not None and D != (0, 0)
    L = QuarticLattice(1, -1)
    assert L.dot(D, D) == 0
    with pytest.raises(ValueError):
        class_with_square_exists(QuarticLattice(1, -2), 3)


@given(st.sampled_from(ALL_R), st.sampled_from([-2, 0, 2, 4, 6, -4]))
def test_class_with_square_exists_is_sound(r, k):
    L = QuarticLattice(*canonical_bc(r))
    D = class_with_square_exists(L, k, nonzero=True)
    if D is not None:
        assert D != (0, 0)
        assert L.dot(D, D) == k


def test_find_curve_class_examples():
    assert find_curve_class(QuarticLattice(8, 1), (2, 8)) == (4, -1)
    assert find_curve_class(QuarticLattice(4, -4), (3, 8)) == (3, -1)
    assert find_curve_class(QuarticLattice(1, -2), (14, 11)) == (3, -1)


def test_find_curve_class_pinned_models():
    # each curve model carries W itself as the record curve
    for r, ((b, c), (g, d)) in CURVE_MODELS.items():
        L, gd = curve_model(r)
        assert (L.b, L.c) == (b, c) and gd == (g, d)
        D = find_curve_class(L, gd)
        assert D is not None
        assert L.dot(H, D) == d
        assert L.dot(D, D) == 2 * g - 2
        # {H, D} span the whole lattice: disc of the span equals r
        span_disc = L.dot(H, D) ** 2 - L.dot(H, H) * L.dot(D, D)
        assert span_disc == r
    with pytest.raises(KeyError):
        curve_model(9)


def test_forbidden_small_disc_examples():
    assert forbidden_small_disc(3, 1) == ((1, -1), (0, 1))
    assert forbidden_small_disc(2, 0) == ((0, 1), (0, 2))
    assert forbidden_small_disc(4, 1) == ((1, -1), (-2, 0))
    with pytest.raises(ValueError):
        forbidden_small_disc(1, -2)  # r = 17 is fine, not forbidden


def test_forbidden_small_disc_witnesses_verify():
    for b, c in ((3, 1), (5, 3), (2, 0), (6, 4), (4, 1), (0, -1)):
        E, (sq, deg) = forbidden_small_disc(b, c)
        from quartaut.lattice import GramLattice, pairing

        base = GramLattice(4, b, 2 * c)
        assert pairing(base, E, E) == sq
        assert pairing(base, H, E) == deg
        assert (sq, deg) in ((0, 1), (0, 2), (-2, 0))


def test_classify_examples():
    assert classify_aut(QuarticLattice(1, -5)).tag == "Z2"
    assert classify_aut(QuarticLattice(6, 1)).tag == "Z2starZ2"
    assert classify_aut(QuarticLattice(4, -4)).tag == "Z"
    assert classify_aut(QuarticLattice(1, -1)).tag == "Trivial"


def test_classification_partition():
    for tag, rs in PARTITION.items():
        for r in rs:
            L = QuarticLattice(*canonical_bc(r))
            assert classify_aut(L).tag == tag, r


def test_generator_counts_match_tag():
    for r in ALL_R:
        kind = classify_aut(QuarticLattice(*canonical_bc(r)))
        want = {"Trivial": 0, "Z2": 1, "Z2starZ2": 2, "Z": 1}[kind.tag]
        assert len(kind.generators) == want


def test_finite_order_generators_are_involutions():
    for r in sorted(PARTITION["Z2"] | PARTITION["Z2starZ2"]):
        L = QuarticLattice(*canonical_bc(r))
        kind = classify_aut(L)
        for m in kind.generators:
            assert m != IDENTITY
            assert mat_mul(m, m) == IDENTITY


def test_ample_axes_are_ample_and_sorted():
    for r in sorted(PARTITION["Z2"] | PARTITION["Z2starZ2"]):
        L = QuarticLattice(*canonical_bc(r))
        axes = ample_square2_axes(L)
        assert axes
        for A in axes:
            assert L.dot(A, A) == 2
            assert is_ample(L, A)
        keys = [(abs(A[1]), A[1], L.dot(H, A)) for A in axes]
        assert keys == sorted(keys)


def test_no_ample_axes_in_trivial_and_z_cases():
    for r in sorted(PARTITION["Trivial"] | PARTITION["Z"]):
        L = QuarticLattice(*canonical_bc(r))
        assert ample_square2_axes(L) == []


def test_hyperplane_is_ample():
    for r in ALL_R:
        L = QuarticLattice(*canonical_bc(r))
        assert is_ample(L, H)
        assert not is_ample(L, (-1, 0))


def _models_for(r, shifts=(0, 1, -1, 2, -2, 3)):
    """Several (b, c) models of the same discriminant: b -> b + 4s keeps
    b^2 - 8c soluble with c adjusted, since (b + 4s)^2 = b^2 (mod 8)."""
    b0, c0 = canonical_bc(r)
    out = []
    for s in shifts:
        b = b0 + 4 * s
        c = (b * b - r) // 8
        out.append(QuarticLattice(b, c))
    return out


def test_tag_is_model_independent():
    # at least 3 distinct models per discriminant, as the change of basis
    # H -> H, W -> sH + W realizes them all
    for r in ALL_R:
        models = _models_for(r)
        assert len({(L.b, L.c) for L in models}) >= 3
        tags = {classify_aut(L).tag for L in models}
        assert len(tags) == 1, (r, tags)


@settings(max_examples=1000, deadline=None)
@given(st.sampled_from(ALL_R), st.integers(-6, 6), st.sampled_from([1, -1]))
def test_tag_invariant_under_basis_change_fixing_H(r, s, eps):
    # W -> sH + eps*W is the general unimodular change fixing H
    b0, c0 = canonical_bc(r)
    L0 = QuarticLattice(b0, c0)
    b1 = 4 * s + eps * b0
    c1 = (b1 * b1 - r) // 8
    L1 = QuarticLattice(b1, c1)
    assert classify_aut(L1).tag == classify_aut(L0).tag


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(ALL_R), st.integers(-6, 6), st.sampled_from([1, -1]))
def test_generators_transport_along_basis_change(r, s, eps):
    """Conjugating the generators of one model by the change of basis gives
    isometries of the other model satisfying the generator contract."""
    from quartaut import isometry
    from quartaut.lattice import mat_inv_unimodular

    b0, c0 = canonical_bc(r)
    L0 = QuarticLattice(b0, c0)
    b1 = 4 * s + eps * b0
    L1 = QuarticLattice(b1, (b1 * b1 - r) // 8)
    # columns of P are the L1 basis written in the L0 basis
    P = ((1, s), (0, eps))
    for m in classify_aut(L1).generators:
        transported = mat_mul(mat_mul(P, m), mat_inv_unimodular(P))
        assert isometry.is_isometry(L0, transported)
        assert isometry.gluing_ok(L0, transported)
        assert isometry.torelli_ok(L0, transported)
