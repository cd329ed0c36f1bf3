from fractions import Fraction

import pytest

import measlat


def test_named_measurabilities():
    assert measlat.measurability(measlat.named("m3"), "all") == 0
    assert measlat.measurability(measlat.named("n5"), "all") == 2
    assert measlat.measurability(measlat.named("m2"), "all") == 2
    assert measlat.measurability(measlat.named("hexagon9")) == measlat.expected_n("hexagon9") == 2
    assert measlat.measurability(measlat.chain(5), "groebner") == 5


def test_parse_and_serialize():
    text = "elements: 0 a b 1\ncovers:\n0 < a\n0 < b\na < 1\nb < 1\n"
    lat = measlat.Lattice.parse(text)
    assert len(lat) == 4
    assert lat.meet("a", "b") == "0"
    assert lat.join("a", "b") == "1"
    assert measlat.Lattice.parse(lat.to_text("m2")).covers() == lat.covers()
    assert measlat.are_isomorphic(lat, measlat.named("m2"))


def test_errors_carry_kind():
    with pytest.raises(measlat.MeaslatError) as info:
        measlat.Lattice(["a", "b"], [])
    assert info.value.kind == "NotBounded"
    with pytest.raises(ValueError):
        measlat.named("nonsense")


def test_points_and_universal_measure():
    assert measlat.points(measlat.named("m3")) == []
    assert measlat.points(measlat.chain(1)) == [["1"]]
    table = measlat.universal_measure(measlat.chain(3))
    assert table["2"] == [0, 1, 1]


def test_groebner_and_snf():
    m3 = measlat.named("m3")
    assert measlat.groebner_basis(m3) == ["1"]
    assert measlat.standard_monomials(measlat.named("n5")) == ["1", "c"]
    assert all(d == 1 for d in measlat.smith_normal_form(measlat.named("n5")))
    assert measlat.is_boolean_ring(measlat.named("n5"), trials=50, seed=3)


def test_measures():
    p3 = measlat.powerset(3)
    card = {x: (0 if x == "0" else len(x)) for x in p3.names}
    assert measlat.check_measure(p3, card) == (True, [])
    assert measlat.solve_membership(p3, card) == [1, 1, 1]
    values = measlat.make_measure(p3, [Fraction(1, 2), 0, 3])
    assert measlat.check_measure(p3, values)[0]
    ok, witness = measlat.check_measure(measlat.named("m3"), {"0": 0, "x1": 1, "x2": 1, "x3": 1, "1": 1})
    assert not ok and witness == ["x1", "x2"]
    measure, constant = measlat.nn_split(measlat.named("m2"), {x: 7 for x in ["0", "a", "b", "1"]})
    assert constant == 7 and all(v == 0 for v in measure.values())


def test_invariants_hull_and_table():
    p3 = measlat.powerset(3)
    dim, orbits = measlat.invariant_space(p3, "perm: a->b b->a ac->bc bc->ac\nperm: b->c c->b ab->ac ac->ab\n")
    assert dim == 1 and orbits == [[0, 1, 2]]
    assert measlat.hull(measlat.named("m2")) == {"0": [], "a": [1], "b": [0], "1": [0, 1]}
    assert measlat.hull_violation(measlat.named("n5")) is None
    assert measlat.verify_universal_property(measlat.chain(2), measlat.powerset(1))
    assert measlat.boolean_ring_structure(measlat.powerset(2))
    assert measlat.orthogonalize(measlat.chain(3), ["1", "2"])[1] == [0, 1, 0]
    rows = measlat.table()
    assert len(rows) == 25
    per_size = {}
    for size, _, n in rows:
        per_size.setdefault(size, []).append(n)
    assert {k: sorted(v) for k, v in per_size.items()} == measlat.reference_multisets()
    assert len(measlat.enumerate_all(5)) == 5
    assert measlat.measurability(measlat.product(measlat.chain(1), measlat.named("m2"))) == 3
