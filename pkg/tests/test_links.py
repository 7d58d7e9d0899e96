"""Link catalog, conjugation and composition identities, generator words."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quartaut import isometry, links
from quartaut.lattice import GramLattice, IDENTITY, mat_det, mat_mul, pairing
from quartaut.surface import QuarticLattice, classify_aut, curve_model, genus_degree

CATALOG_ROWS = [
    ((14, 11), "P3", (14, 11), (19, 5, 19)),
    ((6, 9), "P3", (6, 9), (27, 7, 27)),
    ((10, 10), "P3", (10, 10), (23, 6, 23)),
    ((2, 8), "P3", (2, 8), (31, 8, 31)),
    ((11, 10), "P3", (11, 10), (11, 3, 11)),
    ((3, 6), "P3", (3, 6), (3, 1, 3)),
    ((5, 8), "P3", (5, 8), (7, 2, 7)),
    ((4, 8), "X5", (4, 10), (11, 3, 5)),
    ((3, 8), "P3", (3, 8), (15, 4, 15)),
]


def test_catalog_rows_verbatim():
    got = [(r.gd, r.target, r.gd_plus, (r.a, r.b, r.c)) for r in links.catalog()]
    assert got == CATALOG_ROWS


def test_lookup_examples():
    rec = links.lookup((14, 11))
    assert rec.target == "P3" and rec.gd_plus == (14, 11)
    assert (rec.a, rec.b, rec.c) == (19, 5, 19)
    rec = links.lookup((4, 8))
    assert rec.target == "X5" and rec.gd_plus == (4, 10)
    assert (rec.a, rec.b, rec.c) == (11, 3, 5)
    rec = links.lookup((3, 6))
    assert rec.target == "P3" and (rec.a, rec.b, rec.c) == (3, 1, 3)
    assert links.lookup((7, 7)) is None


def test_link_matrix_examples():
    assert links.link_matrix(links.lookup((14, 11))) == ((19, 72), (-5, -19))
    assert links.link_matrix(links.lookup((6, 9))) == ((27, 104), (-7, -27))
    assert links.link_matrix(links.lookup((3, 6))) == ((3, 8), (-1, -3))


def test_link_matrices_have_det_minus_one():
    for rec in links.catalog():
        assert mat_det(links.link_matrix(rec)) == -1


def test_link_record_validation():
    with pytest.raises(ValueError):
        links.LinkRecord((1, 1), "P3", (1, 1), 4, 3, 2)  # 3 does not divide 7
    with pytest.raises(ValueError):
        links.LinkRecord((1, 1), "P2", (1, 1), 3, 1, 3)  # unknown model
    with pytest.raises(ValueError):
        links.LinkRecord((1, 1), "P3", (1, 1), 0, 1, 3)  # nonpositive datum


def test_link_matrices_act_as_isometries_of_their_frames():
    """Each P3 row preserves the Gram matrix of the lattice spanned by H and
    its curve; the X5 row transports it onto the degree-10 frame."""
    for rec in links.catalog():
        g, d = rec.gd
        m = links.link_matrix(rec)
        if rec.target == "P3":
            L = QuarticLattice(d, g - 1)
            assert isometry.is_isometry(L, m)
        else:
            q = ((4, d), (d, 2 * g - 2))
            gp, dp = rec.gd_plus
            want = ((10, dp), (dp, 2 * gp - 2))
            mt = ((m[0][0], m[1][0]), (m[0][1], m[1][1]))
            got = mat_mul(mt, mat_mul(q, m))
            assert got == want


def test_conjugate_examples():
    assert links.conjugate(((23, 88), (-6, -23)), ((1, 5), (0, -1))) == ((-7, -8), (6, 7))
    assert links.conjugate(((3, 8), (-1, -3)), IDENTITY) == ((3, 8), (-1, -3))
    assert links.conjugate(((31, 120), (-8, -31)), ((1, 4), (0, -1))) == ((-1, 0), (8, 1))


def test_conjugate_rejects_non_unimodular():
    with pytest.raises(ValueError):
        links.conjugate(IDENTITY, ((2, 0), (0, 1)))


def test_base_change_is_self_inverse():
    for lam in range(-8, 9):
        B = links.base_change(lam)
        assert mat_mul(B, B) == IDENTITY


def _word(*steps):
    return links.LinkWord(tuple(links.LinkStep(rec, B) for rec, B in steps))


def test_compose_word_examples():
    w = _word(
        (links.lookup((11, 10)), IDENTITY),
        (links.lookup((3, 6)), links.base_change(4)),
    )
    assert links.compose_word(w) == ((29, 40), (-8, -11))

    w = _word(
        (links.lookup((3, 8)), IDENTITY),
        (links.lookup((3, 8)), links.base_change(4)),
    )
    assert links.compose_word(w) == ((209, 56), (-56, -15))

    w = _word((links.lookup((14, 11)), IDENTITY))
    assert links.compose_word(w) == ((19, 72), (-5, -19))


def test_compose_word_rejects_bad_chains():
    x5 = links.lookup((4, 8))
    with pytest.raises(ValueError):
        links.compose_word(_word((x5, IDENTITY), (x5, IDENTITY)))
    with pytest.raises(ValueError):
        links.compose_word(links.LinkWord(()))
    # a synthesized X5-source step cannot open a word
    ret = links.LinkRecord((5, 8), "P3", (5, 8), 5, 3, 5, source="X5")
    with pytest.raises(ValueError):
        links.compose_word(_word((ret, IDENTITY)))


def test_realize_single_link_cases():
    # one catalog row realizes the reflection generator directly
    for r, gd in ((17, (14, 11)), (41, (6, 9))):
        L, _ = curve_model(r)
        (gen,) = classify_aut(L).generators
        word = links.realize_generator(L, gen)
        assert word is not None
        assert len(word.steps) == 1
        assert word.steps[0].record.gd == gd
        assert word.steps[0].change == IDENTITY
        assert links.compose_word(word) == gen


def test_realize_involution_pairs():
    # both generators come from the same (2, 8) row; the second involution
    # blows up the swapped curve 4H - C, hence the base change
    L, _ = curve_model(56)
    g1, g2 = classify_aut(L).generators
    w1 = links.realize_generator(L, g1)
    assert [(s.record.gd, s.change) for s in w1.steps] == [((2, 8), IDENTITY)]
    w2 = links.realize_generator(L, g2)
    assert [(s.record.gd, s.change) for s in w2.steps] == [
        ((2, 8), links.base_change(4))
    ]
    assert links.compose_word(w2) == g2

    L28, _ = curve_model(28)
    h1, h2 = classify_aut(L28).generators
    v1 = links.realize_generator(L28, h1)
    assert [(s.record.gd, s.change) for s in v1.steps] == [((10, 10), IDENTITY)]
    v2 = links.realize_generator(L28, h2)
    assert [(s.record.gd, s.change) for s in v2.steps] == [
        ((10, 10), links.base_change(5))
    ]


def test_realize_infinite_order_composites():
    L48, _ = curve_model(48)
    (gen,) = classify_aut(L48).generators
    w = links.realize_generator(L48, gen)
    assert [s.record.gd for s in w.steps] == [(3, 8), (3, 8)]
    assert w.steps[1].change == links.base_change(4)
    assert links.compose_word(w) == gen


def test_realize_through_x5():
    L, _ = curve_model(40)
    (gen,) = classify_aut(L).generators
    assert gen == ((43, 18), (-12, -5))
    word = links.realize_generator(L, gen)
    assert word is not None and len(word.steps) == 2
    first, second = word.steps
    assert first.record.gd == (4, 8) and first.record.target == "X5"
    assert second.record.source == "X5" and second.record.target == "P3"
    assert (second.record.a, second.record.b, second.record.c) == (5, 3, 5)
    assert links.link_matrix(second.record) == ((5, 8), (-3, -5))
    assert second.change == links.base_change(2)
    assert links.compose_word(word) == gen


def test_realize_all_generators_with_short_words():
    for r in (17, 41, 28, 56, 20, 32, 40, 48):
        L, _ = curve_model(r)
        for gen in classify_aut(L).generators:
            word = links.realize_generator(L, gen)
            assert word is not None, r
            assert len(word.steps) <= 2
            assert links.compose_word(word) == gen
            # every word starts and ends on P3
            assert word.steps[0].record.source == "P3"
            assert word.steps[-1].record.target == "P3"


def test_curve_data_transport_at_56():
    # the swapped curve 4H - C has the same genus and degree, so the same
    # catalog row applies after the base change
    L, gd = curve_model(56)
    C2 = (4, -1)
    assert genus_degree(L, C2) == gd == (2, 8)


def test_word_to_json_schema():
    L, _ = curve_model(48)
    (gen,) = classify_aut(L).generators
    word = links.realize_generator(L, gen)
    out = links.word_to_json(word, gen)
    assert out["matches_generator"] is True
    assert out["composite"] == [[209, 56], [-56, -15]]
    assert [w["gd"] for w in out["word"]] == [[3, 8], [3, 8]]
    assert out["word"][0]["base_change"] == [[1, 0], [0, 1]]
    assert out["word"][1]["base_change"] == [[1, 4], [0, -1]]
    assert {"gd", "target", "base_change"} <= set(out["word"][0])


abc = st.tuples(st.integers(1, 60), st.integers(1, 12), st.integers(1, 60))


@settings(max_examples=1000, deadline=None)
@given(abc)
def test_link_shape_always_has_det_minus_one(t):
    a, b, c = t
    if (a * c - 1) % b:
        return
    rec = links.LinkRecord((1, 1), "P3", (1, 1), a, b, c)
    assert mat_det(links.link_matrix(rec)) == -1
