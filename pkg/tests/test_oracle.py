import itertools

import pytest

from weylmax import (EnumerationCapExceeded, bruhat_oracle, build_root_system,
                     classes_oracle, enumerate_group, generators,
                     identity_element, longest_element)


def test_enumeration_counts():
    assert len(enumerate_group(build_root_system("A1"))) == 2
    assert len(enumerate_group(build_root_system("A2"))) == 6
    assert len(enumerate_group(build_root_system("B3"))) == 48


def test_enumeration_cap():
    with pytest.raises(EnumerationCapExceeded):
        enumerate_group(build_root_system("B3"), cap=10)


def test_bruhat_oracle_a1():
    rs = build_root_system("A1")
    orc = bruhat_oracle(rs)
    e = identity_element(rs)
    s = generators(rs)[0]
    assert orc.leq(e, s) and not orc.leq(s, e)
    assert orc.leq(e, e) and orc.leq(s, s)


def test_bruhat_oracle_a2_and_b2():
    rs = build_root_system("A2")
    orc = bruhat_oracle(rs)
    w0 = longest_element(rs)
    for w in orc.elements:
        assert orc.leq(w, w0)
    b2 = build_root_system("B2")
    orc = bruhat_oracle(b2)
    s1, s2 = generators(b2)
    assert not orc.leq(s1 * s2, s2 * s1)
    assert not orc.leq(s2 * s1, s1 * s2)


def test_bruhat_oracle_is_partial_order():
    rs = build_root_system("B2")
    orc = bruhat_oracle(rs)
    elems = orc.elements
    for u in elems:
        assert orc.leq(u, u)
    for u, v in itertools.permutations(elems, 2):
        if orc.leq(u, v):
            assert not orc.leq(v, u)
    for u, v, w in itertools.product(elems, repeat=3):
        if orc.leq(u, v) and orc.leq(v, w):
            assert orc.leq(u, w)


def test_classes_oracle():
    assert len(classes_oracle(build_root_system("A1"))) == 2
    sizes = sorted(len(c) for c in classes_oracle(build_root_system("A2")))
    assert sizes == [1, 2, 3]
    assert len(classes_oracle(build_root_system("G2"))) == 6
