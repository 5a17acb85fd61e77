import pytest

from chordalg.kauffman import (
    BOUND_EQUALITY,
    BOUND_STRICT,
    BOUND_VIOLATED,
    FramedDiagram,
    KauffmanError,
    LaurentPoly2,
    dubrovnik_poly,
    dumps_pd,
    kauffman_bound,
    kauffman_poly,
    loads_pd,
    min_deg_a,
    torus_knot_diagram,
)


def mirror_substitution(f):
    # Dubrovnik mirror rule: a -> 1/a together with z -> -z
    return LaurentPoly2(
        {(-ea, ez): c * (-1) ** ez for (ea, ez), c in f.terms.items()}
    )


def test_unknot_normalizations():
    for word, strands in ([1], 2), ([-1], 2), ([1, 1, -1], 2), ([1, -1, 1], 2):
        d = FramedDiagram.from_braid(word, strands)
        assert kauffman_poly(d) == LaurentPoly2.monomial()


def test_min_deg_a():
    assert min_deg_a(LaurentPoly2.monomial()) == 0
    f = LaurentPoly2({(-2, 1): 1, (3, 0): 1})
    assert min_deg_a(f) == -2
    with pytest.raises(KauffmanError):
        min_deg_a(LaurentPoly2())


def test_trefoil_value_and_equality_anchor():
    # the maximal Legendrian (2,3) torus knot has tb = 1 and an augmentation,
    # so the Kauffman bound must be an equality: min-deg = 2
    f = kauffman_poly(torus_knot_diagram(2, 3))
    assert min_deg_a(f) == 2
    verdict = kauffman_bound(1, f)
    assert verdict.verdict == BOUND_EQUALITY


def test_t25_equality_anchor():
    f = kauffman_poly(torus_knot_diagram(2, 5))
    assert min_deg_a(f) == 4
    assert kauffman_bound(3, f).verdict == BOUND_EQUALITY


def test_negative_torus_34_strictness():
    # tb(Lambda_{3,-4}) = -12 and min-deg F - 1 = -11: strict bound
    f = kauffman_poly(torus_knot_diagram(3, -4))
    assert min_deg_a(f) == -10
    verdict = kauffman_bound(-12, f)
    assert verdict.verdict == BOUND_STRICT
    assert verdict.bound == -11
    assert kauffman_bound(-11, f).verdict == BOUND_EQUALITY
    assert kauffman_bound(-10, f).verdict == BOUND_VIOLATED


def test_negative_torus_35_matches_family_formula():
    # min-deg F = -pq + q - p + 1 for the maximal negative torus knots
    f = kauffman_poly(torus_knot_diagram(3, -5))
    assert min_deg_a(f) == -15 + 5 - 3 + 1


def test_regular_isotopy_invariance_r2():
    d1 = FramedDiagram.from_braid([1, 1, 1], 2)
    d2 = FramedDiagram.from_braid([1, 1, 1, 1, -1], 2)
    assert dubrovnik_poly(d1) == dubrovnik_poly(d2)
    d3 = FramedDiagram.from_braid([1, -2, 1, -2], 3)
    d4 = FramedDiagram.from_braid([1, -2, 1, -2, 2, -2], 3)
    assert dubrovnik_poly(d3) == dubrovnik_poly(d4)


def test_regular_isotopy_invariance_r3():
    d1 = FramedDiagram.from_braid([1, 2, 1, 1], 3)
    d2 = FramedDiagram.from_braid([2, 1, 2, 1], 3)
    assert dubrovnik_poly(d1) == dubrovnik_poly(d2)


def test_r1_scales_then_cancels_under_normalization():
    base = FramedDiagram.from_braid([1, 1, 1], 2)
    stabilized = FramedDiagram.from_braid([1, 1, 1, 2], 3)
    # one extra curl: unnormalized polynomials differ by a^(writhe difference)
    a = LaurentPoly2.monomial(stabilized.writhe - base.writhe)
    assert dubrovnik_poly(stabilized) == a * dubrovnik_poly(base)
    assert kauffman_poly(stabilized) == kauffman_poly(base)


def test_mirror_rule():
    for p, q in ((2, 3), (2, 5), (3, 4)):
        d = torus_knot_diagram(p, q)
        f = kauffman_poly(d)
        fm = kauffman_poly(d.mirror())
        assert fm == mirror_substitution(f)
        assert min_deg_a(fm) == -max(ea for ea, _ in f.terms)


def test_connected_sum_multiplicative():
    t = torus_knot_diagram(2, 3)
    n34 = torus_knot_diagram(3, -4)
    s = t.connected_sum(t)
    ft = kauffman_poly(t)
    assert kauffman_poly(s) == ft * ft
    s2 = t.connected_sum(n34)
    assert min_deg_a(kauffman_poly(s2)) == min_deg_a(ft) + min_deg_a(
        kauffman_poly(n34)
    )


def test_memoization_key_is_order_independent():
    import random

    base = torus_knot_diagram(3, -4)
    f = kauffman_poly(base)
    rng = random.Random(4)
    for _ in range(5):
        perm = list(range(len(base.crossings)))
        rng.shuffle(perm)
        d = FramedDiagram(
            [base.crossings[i] for i in perm], [base.signs[i] for i in perm]
        )
        assert kauffman_poly(d) == f


def test_crossing_cap():
    with pytest.raises(KauffmanError):
        torus_knot_diagram(2, 15)  # 15 crossings > 14
    torus_knot_diagram(2, 15, cap=20)  # raised cap constructs fine


def test_links_rejected():
    with pytest.raises(KauffmanError):
        FramedDiagram.from_braid([1, 1], 2)  # Hopf link


def test_pd_round_trip():
    d = torus_knot_diagram(2, 3)
    text = dumps_pd(d)
    back = loads_pd(text)
    assert kauffman_poly(back) == kauffman_poly(d)
    assert back.writhe == d.writhe


def test_pd_file_orientation_rule():
    d = torus_knot_diagram(3, -4)
    back = loads_pd(dumps_pd(d))
    assert sorted(back.signs) == sorted(d.signs)
    assert min_deg_a(kauffman_poly(back)) == -10
