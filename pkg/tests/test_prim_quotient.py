from __future__ import annotations

import random

import pytest

from brauerkit import burnside_ring as bs
from brauerkit.burnside_ring import BurnsideElement
from brauerkit.catalog import CATALOG
from brauerkit.exact_linalg import in_lattice
from brauerkit.groupspec import parse_group_spec
from brauerkit.perm_core import clear_caches
from brauerkit.prim_quotient import (
    certificate_generates,
    generator_certificate,
    imprimitive_lattice,
    induced_relations,
    inflated_relations,
    predict_prim,
    prim_invariants,
    proper_quotients,
    random_certificates,
    verify_classification,
)
from brauerkit.brauer_relations import relation_lattice

from conftest import group, subgroup_of_order


def test_induced_examples():
    assert induced_relations(group("C 7"), 0).nrows == 0
    assert induced_relations(group("S 3"), 0).nrows == 0
    A4 = group("A 4")
    V = subgroup_of_order(A4, 4)
    ind = bs.induce(A4, V, BurnsideElement(A4.subgroup_group(V), (1, -1, -1, -1, 2)))
    assert in_lattice(induced_relations(A4, 0), ind.coeffs)


def test_inflated_examples():
    assert inflated_relations(group("A 5"), 0).nrows == 0
    assert inflated_relations(group("S 3"), 0).nrows == 0
    assert inflated_relations(group("C 2 x C 2 x C 2"), 0).nrows > 0


def test_a4_char0():
    A4 = group("A 4")
    r = prim_invariants(A4, 0)
    assert r.k_rank == 2
    assert str(r.invariants) == "Z"
    assert str(r.predicted) == "Z"
    assert r.agree
    assert r.generator_certificate.coeffs[-1] == 1
    assert r.generator_certificate in relation_lattice(A4, 0)


@pytest.mark.parametrize("spec,char,expected", [("A 4", 0, "Z"), ("A 5", 0, "Z"), ("A 5", 2, "Z"), ("S 4", 0, "Z/2")])
def test_predictions(spec, char, expected):
    assert str(predict_prim(group(spec), char)) == expected
    ok, report = verify_classification(group(spec), char)
    assert ok and str(report.invariants) == expected


def test_not_applicable_is_vacuous():
    ok, report = verify_classification(group("S 3"), 0)
    assert not report.predicted.applicable and ok
    assert "quasi-elementary" in report.predicted.reason


@pytest.mark.parametrize("char", [0, 2, 3])
def test_certificates(full_catalog, char):
    rng = random.Random(char)
    for label, G in full_catalog:
        R = relation_lattice(G, char)
        cert = generator_certificate(G, char)
        assert (cert is not None) == (R.top_ideal == 1), label
        if cert is None:
            continue
        assert cert.coeffs[-1] == 1 and cert in R
        for x in random_certificates(G, char, 5, rng):
            assert x.coeffs[-1] == 1 and x in R
            assert certificate_generates(G, char, x), label


@pytest.mark.parametrize("char", [0, 2, 3])
def test_primordial_quotient_kills_prim(full_catalog, char):
    for label, G in full_catalog:
        if any(relation_lattice(q.target, char).top_ideal == 1 for q in proper_quotients(G)):
            assert prim_invariants(G, char).invariants.is_trivial, label


@pytest.mark.parametrize("char", [0, 2, 3])
def test_prim_is_cyclic_quotient_by_ideal(full_catalog, char):
    for label, G in full_catalog:
        if relation_lattice(G, char).top_ideal != 1:
            continue
        r = prim_invariants(G, char)
        a = r.quotient_ideal
        expected = "Z" if a == 0 else ("trivial" if a == 1 else f"Z/{a}")
        assert str(r.invariants) == expected, label


def test_imprim_inside_k(full_catalog):
    for label, G in full_catalog:
        for char in (0, 2):
            K = relation_lattice(G, char).basis
            assert all(in_lattice(K, r) for r in imprimitive_lattice(G, char).rows), label


def test_invariant_under_catalog_order():
    chars = (0, 2, 3)
    specs = [spec for _, spec in CATALOG]

    def run(order):
        clear_caches()
        out = {}
        for spec in order:
            G = parse_group_spec(spec).build()
            out[spec] = [
                (prim_invariants(G, c).invariants, relation_lattice(G, c).basis.tolist()) for c in chars
            ]
        return out

    forward = run(specs)
    shuffled = specs[:]
    random.Random(11).shuffle(shuffled)
    assert run(shuffled) == forward
    clear_caches()


def test_report_json():
    data = prim_invariants(group("A 4"), 0).to_json()
    assert data["prim"] == "Z" and data["agree"] and data["predicted"]["kind"] == "Z"
    assert data["generator_certificate"][-1][2] == 1
