import json

import pytest

import oracles as o
from rcpkit.errors import InputError, InvalidTable, NotTwoSided, SideMismatch, SizeCapExceeded
from rcpkit.ring import (
    LEFT,
    RIGHT,
    TWO_SIDED,
    RingSpec,
    build,
    generated_ideal,
    ideal_intersection,
    ideal_sum,
    idempotents,
    jacobson_radical,
    left_annihilator,
    matrix,
    principal_left_ideal,
    principal_right_ideal,
    product,
    quotient,
    quotient_ring,
    radical_quotient,
    regular_witness,
    right_annihilator,
    table,
    units,
    upper_triangular,
    zmod,
)
from rcpkit.ring.ideals import is_closed, make_ideal
from rcpkit.ring.lattice import enumerate_ideals, maximal_ideals
from rcpkit.ring.tables import members

SMALL = ["zmod2", "zmod4", "zmod6", "zmod8", "zmod12", "ut2_zmod2", "m2_zmod2", "zmod2_x_zmod4", "zmod8_mod_4"]


def nonassociative_table():
    """F2-algebra on 1, x, y with x^2 = y, xy = 1 and every other product 0.

    Bilinear, so distributive; (xx)x = 0 but x(xx) = 1.
    """
    basis = {"1": (1, 0, 0), "x": (0, 1, 0), "y": (0, 0, 1)}
    prod = {
        ("x", "x"): (0, 0, 1),
        ("x", "y"): (1, 0, 0),
        ("y", "x"): (0, 0, 0),
        ("y", "y"): (0, 0, 0),
    }
    names = ["1", "x", "y"]

    def times(u, v):
        out = [0, 0, 0]
        for i, a in enumerate(names):
            for j, b in enumerate(names):
                if u[i] and v[j]:
                    if a == "1":
                        term = basis[b]
                    elif b == "1":
                        term = basis[a]
                    else:
                        term = prod[a, b]
                    out = [(p + q) % 2 for p, q in zip(out, term)]
        return tuple(out)

    elems = [tuple(int(c) for c in f"{k:03b}") for k in range(8)]
    idx = {e: i for i, e in enumerate(elems)}
    add = [[idx[tuple((p + q) % 2 for p, q in zip(u, v))] for v in elems] for u in elems]
    mul = [[idx[times(u, v)] for v in elems] for u in elems]
    return add, mul, idx[(1, 0, 0)]


class TestConstruction:
    @pytest.mark.parametrize("n", [1, 2, 5, 6, 12])
    def test_zmod_matches_oracle(self, n):
        R, T = build(zmod(n)), o.zmod_tables(n)
        assert R.add.tolist() == T.add and R.mul.tolist() == T.mul and R.one == T.one

    @pytest.mark.parametrize("k,n,upper", [(2, 2, False), (2, 3, True), (2, 2, True), (3, 2, True)])
    def test_matrix_rings_match_oracle(self, k, n, upper):
        spec = (upper_triangular if upper else matrix)(k, zmod(n))
        R, T = build(spec), o.matrix_tables(k, n, upper)
        assert R.add.tolist() == T.add and R.mul.tolist() == T.mul and R.one == T.one

    def test_product_matches_oracle(self):
        R = build(product(zmod(2), zmod(4)))
        T = o.product_tables(o.zmod_tables(2), o.zmod_tables(4))
        assert R.mul.tolist() == T.mul and R.one == T.one

    def test_sizes_and_labels(self):
        assert build(matrix(2, zmod(2))).size == 16
        assert build(matrix(2, zmod(4))).size == 256
        assert build(upper_triangular(2, zmod(3))).label == "UT2(Z/3)"
        assert build(product(zmod(2), zmod(3))).label == "Z/2 x Z/3"

    def test_quotient_of_z8_is_z4(self):
        Q = build(quotient(zmod(8), [4]))
        assert Q.size == 4
        assert Q.add.tolist() == o.zmod_tables(4).add and Q.mul.tolist() == o.zmod_tables(4).mul
        assert Q.label == "(Z/8)/<4>"

    def test_product_is_commutative_when_factors_are(self, ring):
        assert ring("zmod2_x_zmod4").is_commutative()
        assert not ring("m2_zmod2").is_commutative()


class TestValidation:
    def test_nonassociative_table_names_a_triple(self):
        add, mul, one = nonassociative_table()
        with pytest.raises(InvalidTable) as info:
            build(table(add, mul, one))
        assert "not associative" in str(info.value)
        x, y, z = info.value.witness
        assert mul[mul[x][y]][z] != mul[x][mul[y][z]]

    def test_bad_identity(self):
        with pytest.raises(InvalidTable, match="left identity"):
            build(table([[0, 1], [1, 0]], [[0, 0], [0, 0]], 1))

    def test_noncommutative_addition(self):
        with pytest.raises(InvalidTable, match="not commutative"):
            build(table([[0, 1, 2], [1, 2, 0], [2, 1, 0]], [[0, 0, 0], [0, 1, 2], [0, 2, 1]], 1))

    def test_zero_equals_one(self):
        with pytest.raises(InvalidTable, match="zero equals one"):
            build(table([[0, 1], [1, 0]], [[0, 1], [1, 0]], 0))

    def test_ragged_and_out_of_range(self):
        with pytest.raises(InputError, match="2 x 2"):
            build(table([[0, 1], [1]], [[0, 0], [0, 1]], 1))
        with pytest.raises(InvalidTable, match="out of range"):
            build(table([[0, 5], [1, 0]], [[0, 0], [0, 1]], 1))

    def test_valid_raw_table_roundtrip(self):
        T = o.zmod_tables(3)
        R = build(table(T.add, T.mul, T.one))
        assert R.size == 3 and R.label == "table(3)"

    def test_tables_are_read_only(self, ring):
        with pytest.raises(ValueError):
            ring("zmod4").mul[0, 0] = 1


class TestSpecs:
    def test_json_roundtrip(self):
        spec = quotient(product(zmod(2), upper_triangular(2, zmod(3))), [1])
        again = RingSpec.from_json(spec.to_json())
        assert again == spec

    @pytest.mark.parametrize(
        "data",
        [
            {"n": 3},
            {"type": "zmod"},
            {"type": "zmod", "n": "3"},
            {"type": "zmod", "n": 0},
            {"type": "banana"},
            {"type": "product", "factors": []},
            {"type": "matrix", "k": 2},
        ],
    )
    def test_malformed_specs(self, data):
        with pytest.raises(InputError):
            RingSpec.from_dict(data)

    def test_invalid_json(self):
        with pytest.raises(InputError, match="invalid JSON"):
            RingSpec.from_json("{not json")

    def test_caps_checked_before_building(self):
        assert build(upper_triangular(3, zmod(2)), cap=64).size == 64
        with pytest.raises(SizeCapExceeded):
            build(matrix(3, zmod(3)), cap=512)
        with pytest.raises(SizeCapExceeded):
            build(matrix(2, zmod(30)), cap=512)

    def test_quotient_generator_range(self):
        with pytest.raises(InputError):
            build(quotient(zmod(4), [9]))

    def test_load_from_file(self, tmp_path):
        path = tmp_path / "r.json"
        path.write_text(json.dumps({"type": "zmod", "n": 5}))
        assert build(RingSpec.load(path)).size == 5


class TestElements:
    @pytest.mark.parametrize("name", SMALL)
    def test_units_idempotents_regular_match_oracle(self, ring, name):
        R = ring(name)
        T = o.Tables.of(R)
        assert units(R) == o.units(T)
        assert idempotents(R) == o.idempotents(T)
        assert {a for a in R.elements if regular_witness(R, a) is not None} == o.regular(T)

    def test_zmod6_facts(self, ring, golden):
        R = ring("zmod6")
        assert sorted(units(R)) == golden["zmod6"]["units"] == [1, 5]
        assert sorted(idempotents(R)) == golden["zmod6"]["idempotents"] == [0, 1, 3, 4]

    def test_m2_zmod2_has_six_units(self, ring, golden):
        assert len(units(ring("m2_zmod2"))) == golden["m2_zmod2"]["units"] == 6

    def test_regular_witness(self, ring):
        R = ring("zmod6")
        x = regular_witness(R, 2)
        assert R.mul[R.mul[2, x], 2] == 2
        assert regular_witness(ring("zmod4"), 2) is None


class TestIdeals:
    def test_principal_and_annihilators(self, ring):
        R = ring("zmod6")
        assert principal_right_ideal(R, 2).elements == (0, 2, 4)
        assert left_annihilator(R, 2).elements == (0, 3)
        assert right_annihilator(R, 3).elements == (0, 2, 4)
        assert principal_left_ideal(R, 3).side == LEFT

    def test_sum_and_intersection(self, ring):
        R = ring("zmod6")
        two, three = principal_right_ideal(R, 2), principal_right_ideal(R, 3)
        assert ideal_sum(two, three).is_whole()
        assert ideal_intersection(two, three).elements == (0,)

    def test_side_mismatch(self, ring):
        R = ring("zmod6")
        with pytest.raises(SideMismatch):
            ideal_sum(principal_right_ideal(R, 2), principal_left_ideal(R, 3))
        with pytest.raises(SideMismatch):
            ideal_sum(principal_right_ideal(R, 2), principal_right_ideal(ring("zmod4"), 2))

    def test_one_sided_quotient_rejected(self, ring):
        R = ring("m2_zmod2")
        # a right ideal of M2 that is not two-sided
        I = next(principal_right_ideal(R, a) for a in R.elements if not is_closed(R, R.right_masks[a], TWO_SIDED))
        with pytest.raises(NotTwoSided):
            quotient_ring(R, I)

    @pytest.mark.parametrize("name", SMALL)
    def test_radical_matches_maximal_right_ideal_oracle(self, ring, name):
        R = ring(name)
        assert set(jacobson_radical(R).elements) == o.radical_by_maximal_right_ideals(o.Tables.of(R))

    def test_radical_examples(self, ring, golden):
        assert list(jacobson_radical(ring("ut2_zmod2")).elements) == golden["ut2_zmod2"]["radical"] == [0, 2]
        assert jacobson_radical(ring("zmod6")).elements == (0,)
        assert jacobson_radical(ring("zmod8")).elements == (0, 2, 4, 6)

    def test_radical_of_m2_zmod4(self):
        R = build(matrix(2, zmod(4)))
        J = jacobson_radical(R)
        assert len(J) == 16
        # every entry of a radical element is even
        digits = [[(x // 4**p) % 4 for p in range(4)] for x in J.elements]
        assert all(all(d % 2 == 0 for d in ds) for ds in digits)

    def test_radical_quotient(self, ring):
        Q, proj = radical_quotient(ring("zmod8"))
        assert Q.size == 2 and Q.label == "Z/8/J"
        assert proj.tolist() == [0, 1] * 4

    def test_generated_two_sided_ideal(self, ring):
        R = ring("m2_zmod2")
        # any nonzero two-sided ideal of a simple ring is everything
        assert generated_ideal(R, [1], TWO_SIDED).is_whole()

    @pytest.mark.parametrize("name", ["zmod6", "ut2_zmod2", "m2_zmod2"])
    @pytest.mark.parametrize("side", [RIGHT, LEFT])
    def test_lattice_matches_oracle(self, ring, name, side):
        R = ring(name)
        found = {frozenset(members(m)) for m in enumerate_ideals(R, side)}
        assert found == o.all_ideals(o.Tables.of(R), side)
        maxes = {frozenset(members(m)) for m in maximal_ideals(R, side)}
        assert maxes == set(o.maximal(found, R.size))

    def test_ideal_equality_ignores_generators(self, ring):
        R = ring("zmod6")
        a = make_ideal(R, R.right_masks[2], RIGHT, (2,))
        b = make_ideal(R, R.right_masks[4], RIGHT, (4,))
        assert a == b and 4 in a and len(a) == 3
