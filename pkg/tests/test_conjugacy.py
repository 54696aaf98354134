import random

import pytest

from weylmax import (EnumerationCapExceeded, all_classes, build_root_system,
                     class_of, enumerate_elements, from_word, generators,
                     identity_element, involution_classes, longest_element,
                     weyl_order)
from conftest import TYPES_RANK_LE_4, TYPES_RANK_5_6


@pytest.mark.parametrize("tname", TYPES_RANK_LE_4 + ("D5", "A5"))
def test_order_by_cayley_walk(tname):
    # the classical order formula is re-derived, not assumed
    rs = build_root_system(tname)
    assert len(enumerate_elements(rs)) == weyl_order(tname)


@pytest.mark.parametrize("tname", TYPES_RANK_LE_4)
def test_partition(tname):
    rs = build_root_system(tname)
    classes = all_classes(rs)
    assert sum(c.size for c in classes) == weyl_order(tname)
    seen = set()
    for c in classes:
        assert not (seen & c.elements)
        seen |= c.elements


def test_class_of_examples():
    rs = build_root_system("A2")
    e = identity_element(rs)
    s1, s2 = generators(rs)
    assert class_of(rs, e).elements == frozenset([e])
    refl = class_of(rs, s1)
    assert refl.elements == frozenset([s1, s2, from_word(rs, [0, 1, 0])])
    assert refl.min_length == 1 and refl.max_length == 3
    assert set(refl.min_elements) == {s1, s2}
    assert refl.max_elements == (from_word(rs, [0, 1, 0]),)
    rot = class_of(rs, s1 * s2)
    assert rot.elements == frozenset([s1 * s2, s2 * s1])
    assert rot.min_length == rot.max_length == 2
    assert not rot.is_involution_class


def test_all_classes_counts():
    assert len(all_classes(build_root_system("A1"))) == 2
    a2 = all_classes(build_root_system("A2"))
    assert sorted(c.size for c in a2) == [1, 2, 3]
    assert len(all_classes(build_root_system("A3"))) == 5  # partitions of 4
    assert len(all_classes(build_root_system("G2"))) == 6


def test_involution_classes_counts():
    assert len(involution_classes(build_root_system("A2"))) == 2
    assert len(involution_classes(build_root_system("B2"))) == 4
    assert len(involution_classes(build_root_system("G2"))) == 4
    for c in involution_classes(build_root_system("B3")):
        for w in c.elements_sorted:
            assert w.is_involution()


def test_deterministic_order_and_representative():
    rs = build_root_system("B3")
    classes = all_classes(rs)
    keys = [(c.min_length, c.representative.reduced_word()) for c in classes]
    assert keys == sorted(keys)
    for c in classes:
        assert c.representative in c.elements
        # lexicographically smallest canonical word in the class
        words = sorted(w.reduced_word() for w in c.elements_sorted)
        assert c.representative.reduced_word() == words[0]
        assert c.min_elements[0].length == c.min_length
        assert c.max_elements[-1].length == c.max_length
        assert {w for w in c.elements if w.length == c.min_length} == \
            set(c.min_elements)


@pytest.mark.parametrize("tname", TYPES_RANK_LE_4)
def test_closed_under_inversion_exhaustive(tname):
    rs = build_root_system(tname)
    for c in all_classes(rs):
        for w in c.elements_sorted:
            assert w.inverse() in c.elements


@pytest.mark.parametrize("tname", TYPES_RANK_5_6)
def test_closed_under_inversion_sampled(tname):
    rs = build_root_system(tname)
    classes = all_classes(rs)
    rng = random.Random(5)
    for _ in range(300):
        c = classes[rng.randrange(len(classes))]
        w = c.elements_sorted[rng.randrange(c.size)]
        assert w.inverse() in c.elements


def test_conjugation_closure():
    rs = build_root_system("B3")
    gens = generators(rs)
    for c in all_classes(rs):
        for w in c.elements_sorted:
            for s in gens:
                assert s * w * s in c.elements


def test_cap_refused_with_message():
    rs = build_root_system("E8")
    with pytest.raises(EnumerationCapExceeded) as exc:
        all_classes(rs)
    assert "696729600" in str(exc.value)
    assert "--cap" in str(exc.value) and "WEYLMAX_CAP" in str(exc.value)
    assert exc.value.cap == 10_000_000
    with pytest.raises(EnumerationCapExceeded):
        enumerate_elements(build_root_system("A4"), cap=10)


def test_identity_and_longest_are_singletons():
    rs = build_root_system("D4")
    assert class_of(rs, identity_element(rs)).size == 1
    w0 = longest_element(rs)
    assert class_of(rs, w0).size == 1  # w0 central in D4
