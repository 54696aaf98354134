import pytest

from weylmax import (WeylMaxError, build_root_system, class_of,
                     chain_step_property_check, from_word, generators,
                     gkp_descent_chain, gkp_suite, identity_element,
                     lattice_check, longest_element, predicted_dimension,
                     psi_rank_maximization_check, rank_identity_check,
                     rank_lemma_suite, richardson_decomposition,
                     theorem_max_check, validate_descent_chain, wm_classes)
from weylmax.wm import DescentChain


def _sigmas(lat):
    return {frozenset(i + 1 for i in e.sigma) for e in lat.entries}


def test_wm_classes_a1_degenerate():
    # rank one: two entries, family {{}, {1}}; no special-casing anywhere
    lat = wm_classes(build_root_system("A1"))
    assert len(lat.entries) == 2
    assert lat.jsets == frozenset([frozenset(), frozenset([0])])


def test_wm_classes_a2():
    lat = wm_classes(build_root_system("A2"))
    assert len(lat.entries) == 2
    assert _sigmas(lat) == {frozenset([1, 2]), frozenset()}
    by_sigma = {e.sigma: e for e in lat.entries}
    triv = by_sigma[frozenset([0, 1])]
    assert triv.max_element.is_identity()
    refl = by_sigma[frozenset()]
    assert refl.max_element == longest_element(build_root_system("A2"))
    assert refl.rank_defect == 1
    assert refl.predicted_dimension == 4
    assert predicted_dimension(refl) == 4


def test_wm_classes_b2_g2():
    for tname in ("B2", "G2"):
        lat = wm_classes(build_root_system(tname))
        assert len(lat.entries) == 4
        assert lat.jsets == frozenset(
            [frozenset(), frozenset([0]), frozenset([1]), frozenset([0, 1])])
    b2 = wm_classes(build_root_system("B2"))
    top = max(b2.entries, key=lambda e: e.max_element.length)
    assert top.predicted_dimension == 6  # length 4 plus rank defect 2


def test_wm_classes_a3():
    lat = wm_classes(build_root_system("A3"))
    assert len(lat.entries) == 3
    assert _sigmas(lat) == {frozenset([1, 2, 3]), frozenset([2]), frozenset()}
    by_sigma = {frozenset(i + 1 for i in e.sigma): e for e in lat.entries}
    assert by_sigma[frozenset([2])].rank_defect == 1
    assert by_sigma[frozenset()].rank_defect == 2


def test_entry_invariants_moderate_types():
    from weylmax import minus_w0_on_simples, parabolic_longest, support
    for tname in ("A3", "B3", "C3", "D4", "G2", "F4"):
        rs = build_root_system(tname)
        w0 = longest_element(rs)
        auto = minus_w0_on_simples(rs)
        for e in wm_classes(rs).entries:
            m = e.max_element
            assert e.class_ref.max_elements == (m,)
            assert m.is_involution()
            assert m == w0 * parabolic_longest(rs, e.sigma)
            assert {auto[i] for i in e.sigma} == e.sigma
            assert support(w0 * m) == e.sigma
            assert e.rank_defect + e.fixed_dim == rs.rank


def test_richardson_examples():
    rs = build_root_system("A2")
    e = identity_element(rs)
    w0 = longest_element(rs)
    s1, _ = generators(rs)
    assert richardson_decomposition(w0) == frozenset()
    assert richardson_decomposition(e) == frozenset([0, 1])
    assert richardson_decomposition(s1) is None
    assert richardson_decomposition(s1 * generators(rs)[1]) is None


def test_rank_identity():
    rs = build_root_system("B2")
    res = rank_identity_check(rs, frozenset())
    assert res.hypothesis_met and res.identity_holds
    assert res.rank_parabolic == 0 and res.rank_product == res.rank_w0
    res = rank_identity_check(rs, frozenset([0, 1]))
    assert res.hypothesis_met and res.identity_holds
    assert res.rank_product == 0
    res = rank_identity_check(rs, frozenset([0]))
    assert (res.rank_w0, res.rank_parabolic, res.rank_product) == (2, 1, 1)
    assert res.minus_w0_stable
    # hypothesis violated: in A2, w0 * s1 is a rotation, not an involution
    res = rank_identity_check(build_root_system("A2"), frozenset([0]))
    assert not res.hypothesis_met
    assert res.passed  # vacuous


def test_rank_lemma_suite_counts():
    rep = rank_lemma_suite(build_root_system("B3"))
    assert rep.n_checked == 8
    assert rep.passed


def test_theorem_max_report():
    rep = theorem_max_check(build_root_system("A2"))
    assert rep.passed and rep.n_checked == 3
    assert any("maximum=none" in line for line in rep.outcomes)
    assert rep.to_json_dict() == {
        "type": "A2", "rank": 2, "suite": "theorem-max",
        "n_checked": 3, "n_passed": 3, "counterexamples": []}


def test_theorem_max_jobs_deterministic():
    a = theorem_max_check(build_root_system("B3"), jobs=1)
    b = theorem_max_check(build_root_system("B3"), jobs=4)
    assert a.outcomes == b.outcomes and a.passed == b.passed


def test_psi_rank_maximization():
    rep = psi_rank_maximization_check(build_root_system("A3"))
    assert rep.passed
    # comparable ordered pairs include the diagonal
    assert rep.n_checked >= len(wm_classes(build_root_system("A3")).entries)


def test_descent_chain_a2():
    rs = build_root_system("A2")
    s1, s2 = generators(rs)
    w0 = longest_element(rs)
    c = class_of(rs, s1)
    chain = gkp_descent_chain(c, s1)
    assert chain.source == w0 and chain.target == s1
    assert chain.steps == (1,)
    assert [x.word_str() for x in chain.elements] == ["1 2 1", "1"]
    assert validate_descent_chain(chain, c)
    # already at the top: empty chain from the element itself
    chain = gkp_descent_chain(c, w0)
    assert chain.steps == () and chain.source == w0
    assert validate_descent_chain(chain, c)


def test_descent_chain_b2():
    rs = build_root_system("B2")
    s1, s2 = generators(rs)
    c = class_of(rs, s1)
    top = from_word(rs, [1, 0, 1])
    assert c.max_elements == (top,)
    chain = gkp_descent_chain(c, top)
    assert chain.steps == ()
    chain = gkp_descent_chain(c, s1)
    assert validate_descent_chain(chain, c)
    lengths = [x.length for x in chain.elements]
    assert lengths == sorted(lengths, reverse=True)


def test_descent_chain_rejects_foreign_element():
    rs = build_root_system("A2")
    s1, s2 = generators(rs)
    c = class_of(rs, s1)
    with pytest.raises(WeylMaxError):
        gkp_descent_chain(c, s1 * s2)


def test_validate_rejects_tampered_chain():
    rs = build_root_system("A2")
    s1, s2 = generators(rs)
    c = class_of(rs, s1)
    good = gkp_descent_chain(c, s1)
    bad = DescentChain(source=good.source, target=s2,
                       steps=good.steps, elements=good.elements)
    assert not validate_descent_chain(bad, c)
    bad = DescentChain(source=s1, target=good.target, steps=good.steps,
                       elements=good.elements)
    assert not validate_descent_chain(bad, c)


def test_gkp_suite_exhaustive_and_sampled():
    rep = gkp_suite(build_root_system("B3"))
    assert rep.passed and rep.n_checked == 48
    rep = gkp_suite(build_root_system("B4"), sample=100, seed=1)
    assert rep.passed and rep.n_checked == 100
    # deterministic for a fixed seed
    again = gkp_suite(build_root_system("B4"), sample=100, seed=1)
    assert again.n_checked == rep.n_checked and again.passed


def test_chain_step_property():
    rep = chain_step_property_check(build_root_system("A2"))
    assert rep.passed
    # involutions of A2: e, s1, s2, s1s2s1 -> 4 * 2 generator pairs
    assert rep.n_checked == 8
    rs = build_root_system("A2")
    s1, s2 = generators(rs)
    # conjugating s1 by s2 jumps length 1 -> 3
    assert (s2 * s1 * s2).length == s1.length + 2


def test_lattice_check_structure():
    rep = lattice_check(wm_classes(build_root_system("B2")))
    assert rep.passed and rep.n_checked == 16
    assert rep.outcomes == ()  # rank 2: intersections all present
    rep = lattice_check(wm_classes(build_root_system("B4")))
    assert rep.passed  # the lattice structure holds...
    assert any("{3}" in line for line in rep.outcomes)  # ...but {3} is absent


def test_wm_respects_cap():
    from weylmax import EnumerationCapExceeded
    with pytest.raises(EnumerationCapExceeded):
        wm_classes(build_root_system("A4"), cap=10)
