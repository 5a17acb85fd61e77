import pytest

from chordalg.diagram import (
    DiagramError,
    connected_sum,
    dumps_diagram,
    loads_diagram,
    negative_torus_metadata,
    reverse,
    t2k_diagram,
    unknot_kink_diagram,
)
from chordalg.reps import find_augmentations
from tests.test_dga import brute_force_augmentations


def trefoil_diagram():
    return t2k_diagram(2, names=["b1", "b2", "b3", "a2", "a1"])


def test_trefoil_differential_matches_classic_computation():
    d = trefoil_diagram()
    dga = d.dga()
    assert dga.check() == []
    assert str(dga.differential["a1"]) == "1 + b1 + b3 + b1*b2*b3"
    assert str(dga.differential["a2"]) == "1 + b1 + b3 + b3*b2*b1"
    for b in ("b1", "b2", "b3"):
        assert dga.differential[b].is_zero()


def test_trefoil_classical_invariants():
    d = trefoil_diagram()
    assert d.tb() == 1
    assert d.rotation() == 0
    assert d.census() == {0: 3, 1: 2}
    # parity identity |c_even - c_odd| = |tb| on this knot diagram
    assert abs(d.census()[0] - d.census()[1]) == abs(d.tb())


def test_trefoil_augmentation_count_against_oracle():
    dga = trefoil_diagram().dga()
    assert len(find_augmentations(dga)) == len(brute_force_augmentations(dga))
    assert len(brute_force_augmentations(dga)) == 20
    assert len(find_augmentations(dga, graded=True)) == 5


def test_unknot_single_chord():
    d = unknot_kink_diagram()
    assert d.crossing_count == 1
    assert d.tb() == -1
    assert d.rotation() == 0
    dga = d.dga()
    assert dga.differential["a1"].is_zero()  # single-chord differential is trivial
    assert dga.check() == []


def test_zero_crossing_like_behavior_via_t2k1():
    d = t2k_diagram(1)
    assert d.crossing_count == 3
    assert d.tb() == -1
    dga = d.dga()
    assert dga.check() == []
    # the three-crossing unknot still admits augmentations
    assert len(find_augmentations(dga)) > 0


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6, 7])
def test_t2k_family_valid(k):
    d = t2k_diagram(k)
    assert d.crossing_count == 2 * k + 1
    assert d.rotation() == 0
    assert d.tb() == 2 * k - 3
    dga = d.dga()
    assert dga.check() == []
    assert d.census() == {0: 2 * k - 1, 1: 2}


def test_t2k_rejects_bad_k():
    with pytest.raises(DiagramError):
        t2k_diagram(0)


def test_reverse_negates_rotation_keeps_tb():
    for k in (1, 2, 3):
        d = t2k_diagram(k)
        r = reverse(d)
        assert r.rotation() == -d.rotation()
        assert r.tb() == d.tb()
        assert r.dga().check() == []


def test_connected_sum_additivity():
    pairs = [
        (t2k_diagram(2), t2k_diagram(1)),
        (t2k_diagram(2), t2k_diagram(2)),
        (t2k_diagram(3), t2k_diagram(2)),
    ]
    for d1, d2 in pairs:
        s = connected_sum(d1, d2)
        assert s.tb() == d1.tb() + d2.tb() + 1
        assert s.rotation() == d1.rotation() + d2.rotation()
        assert s.crossing_count == d1.crossing_count + d2.crossing_count - 1
        assert s.dga().check() == []


def test_connected_sum_with_unknot_is_tb_neutral():
    d = t2k_diagram(2)
    u = t2k_diagram(1)  # tb = -1 unknot representative
    s = connected_sum(d, u)
    assert s.tb() == d.tb()  # tb(d) + (-1) + 1
    assert s.dga().check() == []


def test_connected_sum_iterated():
    s = connected_sum(connected_sum(t2k_diagram(2), t2k_diagram(2)), t2k_diagram(1))
    assert s.tb() == 1 + 1 + 1 - 1 + 1
    assert s.dga().check() == []


def test_connected_sum_requires_geometry():
    d1 = t2k_diagram(2)
    text = dumps_diagram(t2k_diagram(1))
    d2 = loads_diagram(text)  # file-loaded: combinatorial only
    with pytest.raises(DiagramError):
        connected_sum(d1, d2)


def test_diagram_file_round_trip():
    d = trefoil_diagram()
    text = dumps_diagram(d)
    back = loads_diagram(text)
    assert back.names == d.names
    assert back.visits == d.visits
    assert back.signs == d.signs
    assert back.turning == d.turning
    assert back.kinks == d.kinks
    dga = back.dga()
    assert str(dga.differential["a1"]) == "1 + b1 + b3 + b1*b2*b3"


def test_corner_pattern_validation():
    d = trefoil_diagram()
    text = dumps_diagram(d)
    bad = text.replace("corners b1 +-+-", "corners b1 -+-+")
    with pytest.raises(DiagramError):
        loads_diagram(bad)


def test_invariance_under_gauss_basepoint_rotation():
    d = trefoil_diagram()
    n = len(d.visits)
    from chordalg.diagram import LagrangianDiagram

    for shift in (1, 3, 6):
        visits = d.visits[shift:] + d.visits[:shift]
        turning = d.turning[shift:] + d.turning[:shift]
        d2 = LagrangianDiagram(
            d.names, d.gradings, visits, d.signs, turning, d.kinks
        )
        assert d2.tb() == d.tb()
        assert d2.rotation() == d.rotation()
        dga2 = d2.dga()
        assert dga2.check() == []
        # same differential up to nothing at all: names are stable
        base = {n_: str(p) for n_, p in d.dga().differential.items()}
        got = {n_: str(p) for n_, p in dga2.differential.items()}
        assert base == got


def test_negative_torus_metadata():
    meta = negative_torus_metadata(3, 4)
    assert meta["tb"] == -12
    assert meta["rotation"] == 1
    assert meta["maslov"] == 2
    with pytest.raises(DiagramError):
        negative_torus_metadata(4, 5)
    with pytest.raises(DiagramError):
        negative_torus_metadata(3, 3)


def test_disk_words_are_ccw_from_positive_corner():
    # the two big trefoil disks read b1 b2 b3 and b3 b2 b1: opposite loops
    d = trefoil_diagram()
    words = {disk.word for disk in d.enumerate_disks() if len(disk.word) == 3}
    assert words == {("b1", "b2", "b3"), ("b3", "b2", "b1")}
