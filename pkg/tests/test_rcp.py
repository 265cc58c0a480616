import pytest

import oracles as o
from rcpkit.errors import NotCoprime, SizeCapExceeded
from rcpkit.rcp import (
    coprimality_suite,
    enumerate_rcp,
    is_minimal,
    is_right_coprime,
    minimal_below,
    orthogonal_witness,
    pair_class,
)

POSET_RINGS = ["zmod2", "zmod4", "zmod6", "zmod8", "zmod12", "ut2_zmod2", "m2_zmod2", "zmod2_x_zmod4", "zmod8_mod_4"]


def as_sets(c):
    return (frozenset(c.first.elements), frozenset(c.second.elements))


class TestPairs:
    def test_coprime_witness_is_lexicographically_first(self, ring):
        R = ring("zmod6")
        res = is_right_coprime(R, 2, 3)
        assert res and res.witness == (2, 1)
        r, s = res.witness
        assert R.add[R.mul[2, r], R.mul[3, s]] == R.one

    def test_not_coprime(self, ring):
        R = ring("zmod6")
        assert not is_right_coprime(R, 2, 4)
        with pytest.raises(NotCoprime):
            pair_class(R, 2, 4)

    def test_class_depends_only_on_ideals(self, ring):
        R = ring("zmod6")
        assert pair_class(R, 4, 3) == pair_class(R, 2, 3)
        assert pair_class(R, 5, 1) == pair_class(R, 1, 1)
        assert str(pair_class(R, 4, 3)) == "<2,3>"

    def test_order(self, ring):
        R = ring("zmod6")
        top, low = pair_class(R, 1, 1), pair_class(R, 2, 3)
        assert low <= top and low < top and not top <= low


class TestPoset:
    @pytest.mark.parametrize("name", POSET_RINGS)
    def test_matches_oracle(self, ring, name):
        R = ring(name)
        T = o.Tables.of(R)
        poset = enumerate_rcp(R)
        expected = o.rcp_classes(T)
        assert {as_sets(c) for c in poset.classes} == expected
        assert {as_sets(poset.classes[i]) for i in poset.minimal} == o.minimal_classes(expected)
        assert len(poset.covers()) == o.cover_count(expected)

    def test_zmod6_golden(self, ring, golden):
        poset = enumerate_rcp(ring("zmod6"))
        assert len(poset) == golden["zmod6"]["class_count"] == 9
        assert len(poset.minimal) == golden["zmod6"]["minimal_count"] == 4
        gens = {poset.classes[i].generators for i in poset.minimal}
        assert gens == {(0, 1), (1, 0), (2, 3), (3, 2)}

    def test_zmod4_minimal_golden(self, ring, golden):
        poset = enumerate_rcp(ring("zmod4"))
        found = sorted([list(c.first.elements), list(c.second.elements)] for c in (poset.classes[i] for i in poset.minimal))
        assert found == golden["zmod4"]["minimal_classes"]
        assert {poset.classes[i].generators for i in poset.minimal} == {(0, 1), (1, 0)}

    def test_m2_zmod2_golden(self, ring, golden):
        poset = enumerate_rcp(ring("m2_zmod2"))
        g = golden["m2_zmod2"]
        assert (len(poset), len(poset.minimal), len(poset.covers())) == (g["nodes"], g["minimal_count"], g["edges"])

    def test_field_has_three_classes(self, ring):
        assert len(enumerate_rcp(ring("zmod2"))) == 3

    def test_leq_is_a_partial_order(self, ring):
        poset = enumerate_rcp(ring("ut2_zmod2"))
        L = poset.leq
        assert L.diagonal().all()
        n = len(poset)
        for i in range(n):
            for j in range(n):
                if i != j:
                    assert not (L[i, j] and L[j, i])
                    if L[i, j]:
                        assert all(L[i, k] for k in range(n) if L[j, k])

    def test_cap(self, ring):
        with pytest.raises(SizeCapExceeded):
            enumerate_rcp(ring("m2_zmod2"), cap=8)

    def test_dot_output(self, ring):
        poset = enumerate_rcp(ring("zmod6"))
        dot = poset.to_dot()
        assert dot.count("shape=doublecircle") == 4
        assert dot.count("shape=circle") == 5
        assert dot.count(" -> ") == len(poset.covers())
        assert dot == enumerate_rcp(ring("zmod6")).to_dot()
        assert "⟨2,3⟩ |aR|=3 |bR|=2" in dot

    def test_to_dict(self, ring):
        data = enumerate_rcp(ring("zmod6")).to_dict()
        assert data["size"] == 6 and len(data["classes"]) == 9
        assert data["classes"][0] == {"generators": [0, 1], "first_ideal": [0], "second_ideal": [0, 1, 2, 3, 4, 5]}
        assert [i for i, j in data["leq"] if i == j] == list(range(9))


class TestMinimality:
    def test_top_is_not_minimal(self, ring):
        R = ring("zmod6")
        rep = is_minimal(R, pair_class(R, 1, 1))
        assert rep.agree and not rep.value
        assert rep.witnesses["strictly_below"] == [0, 1]

    def test_idempotent_pair_is_minimal(self, ring):
        R = ring("zmod6")
        rep = is_minimal(R, pair_class(R, 2, 3))
        assert rep.agree and rep.value
        assert rep.witnesses["idempotent"] == 4
        r, s = rep.witnesses["orthogonal_rs"]
        assert R.mul[R.mul[2, r], 2] == 2 and R.mul[R.mul[3, s], 3] == 3

    @pytest.mark.parametrize("name", POSET_RINGS)
    def test_routes_agree(self, ring, name):
        R = ring(name)
        for c in enumerate_rcp(R).classes:
            assert is_minimal(R, c).agree

    def test_minimal_below(self, ring):
        R = ring("zmod6")
        assert minimal_below(R, pair_class(R, 2, 3)) == pair_class(R, 2, 3)
        assert minimal_below(R, pair_class(R, 1, 1)) == pair_class(R, 0, 1)

    def test_orthogonal_witness_absent_for_non_regular(self, ring):
        assert orthogonal_witness(ring("zmod4"), 2, 1) is None


class TestCoprimalitySuite:
    def test_zmod6_pair(self, ring):
        rep = coprimality_suite(ring("zmod6"), 2, 3)
        assert (rep.c1, rep.c4, rep.c5, rep.c6, rep.c7, rep.c8) == (True,) * 6
        assert rep.witnesses["c5"]["matrix"] == [[4, 0], [2, 3]]
        assert rep.agree

    def test_non_coprime_pair(self, ring):
        rep = coprimality_suite(ring("zmod6"), 2, 4)
        assert not any((rep.c1, rep.c4, rep.c5, rep.c6, rep.c7))
        assert rep.agree

    @pytest.mark.parametrize("name", ["zmod4", "zmod6", "ut2_zmod2", "zmod2_x_zmod2", "zmod8_mod_4"])
    def test_projector_form_matches_matrix_enumeration(self, ring, name):
        R = ring(name)
        T = o.Tables.of(R)
        for a in R.elements:
            for b in R.elements:
                rep = coprimality_suite(R, a, b)
                assert rep.c4 == o.projector_condition(T, a, b), (a, b)
                assert rep.c1 == o.right_coprime(T, a, b)

    @pytest.mark.parametrize("name", ["m2_zmod2", "zmod12", "zmod2_x_zmod4"])
    def test_all_pairs_agree(self, ring, name):
        R = ring(name)
        for a in R.elements:
            for b in R.elements:
                assert coprimality_suite(R, a, b).agree, (a, b)

    def test_converse_only_claimed_when_sufficient(self, ring):
        rep = coprimality_suite(ring("m2_zmod2"), 0, 1)
        assert rep.c8_sufficient
        assert not coprimality_suite(ring("zmod4"), 2, 3).c8_sufficient
