import pytest

import pysatake as ps


def test_catalog():
    names = ps.catalog_names()
    for n in ["GL2", "GL3", "PGL2", "U3"]:
        assert n in names
    d = ps.catalog("GL2")
    assert d.rank == 2
    assert d.is_dominant([2, 1])
    with pytest.raises(ps.SatakeError):
        ps.catalog("nope")


def test_structure_constants():
    d = ps.catalog("GL2")
    t = ps.structure_constants(d, [0, 1], [0, 1])
    assert t == {(0, 2): "1", (1, 1): "2*q"}


def test_m_element():
    d = ps.catalog("GL2")
    m = ps.m_element(d, [0, 1])
    assert m == {(0, 1): "1", (1, 0): "q"}


def test_double_coset_basis():
    d = ps.catalog("GL2")
    dc = ps.double_coset_basis(d, [2, 0])
    assert dc == {(0, 2): "1", (1, 1): "-1+q"}


def test_kostka():
    d = ps.catalog("GL3")
    assert ps.kostka_foulkes(d, [2, 1, 0], [1, 1, 1]) == "q+q^2"


def test_oracle():
    assert ps.satake_count(2, 3, [1, 0], [1, 0]) == 3
    v = ps.satake_vector(2, 2, [1, 0])
    assert v == {(0, 1): "1", (1, 0): "2"}
    table = dict((tuple(k), c) for k, c in ps.convolve_table(2, [1, 0], [1, 0]))
    assert table == {(1, 1): 3, (2, 0): 1}


def test_json_roundtrip():
    d = ps.catalog("U3")
    back = ps.datum_from_json(ps.datum_to_json(d))
    assert back.rank == d.rank
    assert back.sigma_order == 2
