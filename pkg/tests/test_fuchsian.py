import json

import jsonschema
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wpcurves import schemas
from wpcurves.core import DomainError, WeightedCurve
from wpcurves.foxsearch import WitnessNotFound
from wpcurves.fuchsian import (
    GeneratorImages,
    RelationFailure,
    TriangleWitness,
    certificate_from_dict,
    certificate_from_triangle,
    certify_curve,
    certify_torsionfree_kernel,
    check_homomorphism,
    failing_relation,
    fox_witness_search,
    published_witness,
    presentation,
    triangle_presentation,
    trivial_witness,
)
from wpcurves.permgrp import Permutation, parse_cycles


def test_triangle_presentation_text():
    pres = presentation(WeightedCurve.line(2, 3, 7))
    assert pres.generators() == ["s1", "s2", "s3"]
    assert len(pres.relations()) == 4
    assert pres.render() == "< s1, s2, s3 | s1^2, s2^3, s3^7, s1*s2*s3 >"


def test_surface_presentation_text():
    pres = presentation(WeightedCurve(1))
    assert pres.generators() == ["a1", "b1"]
    assert pres.render() == "< a1, b1 | a1*b1*a1^-1*b1^-1 >"


def test_trivial_presentation():
    pres = presentation(WeightedCurve(0))
    assert pres.generators() == [] and len(pres.relations()) == 1


@given(st.integers(0, 4), st.lists(st.integers(2, 9), max_size=5))
def test_presentation_shape(g, ws):
    pres = presentation(WeightedCurve(g, ws))
    assert len(pres.generators()) == 2 * g + len(ws)
    assert len(pres.relations()) == len(ws) + 1


def test_check_homomorphism_published_pair():
    s, r = parse_cycles("(1,2)(3,6)"), parse_cycles("(1,2,3,4,5,6,7)")
    c3 = parse_cycles("(1,3,7)(4,5,6)").inverse()
    # c2 = r has order 7 and c3 has order 3
    pres = triangle_presentation(2, 7, 3)
    assert check_homomorphism(pres, GeneratorImages(sigma=(s, r, c3)))
    broken = GeneratorImages(sigma=(s, Permutation.identity(), c3))
    assert not check_homomorphism(pres, broken)
    assert failing_relation(pres, broken) is not None


def test_commuting_torus_images():
    a = parse_cycles("(1,2,3)")
    assert check_homomorphism(presentation(WeightedCurve(1)), GeneratorImages((a,), (a,)))


def test_arity_mismatch():
    with pytest.raises(DomainError):
        check_homomorphism(triangle_presentation(2, 3, 7), GeneratorImages(sigma=("(1,2)",)))


@pytest.mark.parametrize("abc, index", [((2, 3, 7), 168), ((2, 4, 7), 168), ((2, 3, 9), 504)])
def test_published_witnesses_certify(abc, index):
    cert = certificate_from_triangle(published_witness(*abc))
    assert cert.torsionfree and cert.normal
    assert cert.index == index


def test_order_drop_detected():
    ident = Permutation.identity()
    cert = certify_torsionfree_kernel(triangle_presentation(2, 3, 7), GeneratorImages(sigma=(ident,) * 3))
    assert cert.index == 1
    assert not cert.torsionfree


def test_relation_failure_rejected():
    imgs = GeneratorImages(sigma=("(1,2)", "(1,2,3)", "(1,2,3)"))
    with pytest.raises(RelationFailure):
        certify_torsionfree_kernel(triangle_presentation(2, 3, 3), imgs)


def test_triangle_witness_validation():
    with pytest.raises(DomainError):
        TriangleWitness(2, 3, 7, parse_cycles("(1,2)"), parse_cycles("(1,2,3)"))
    w = trivial_witness(6)
    assert str(w.c1) == "(1,2,3,4,5,6)" and w.c3.is_identity()


def test_search_result_certifies():
    w = fox_witness_search(2, 3, 7)
    cert = certificate_from_triangle(w)
    assert cert.torsionfree
    assert cert.index == 168


def test_certificate_json_roundtrip():
    cert = certificate_from_triangle(published_witness(2, 3, 7))
    doc = json.loads(cert.to_json())
    jsonschema.validate(doc, schemas.CERTIFICATE)
    back = certificate_from_dict(doc)
    assert back == cert


@pytest.mark.parametrize(
    "g, ws, torsionfree",
    [
        (0, (), True),
        (1, (), True),
        (2, (), True),
        (0, (5, 5), True),
        (1, (3, 3), True),
        (1, (2,), True),
        (2, (3,), True),
        (1, (2, 3), True),
        (0, (2, 3, 7), True),
        (1, (2, 3, 7), True),
        (0, (2, 2, 2, 3), False),
        (2, (2, 3, 4, 5, 6), False),
    ],
)
def test_certify_curve(g, ws, torsionfree):
    cert = certify_curve(WeightedCurve(g, ws), max_degree=12)
    assert check_homomorphism(cert.presentation, cert.images)
    assert cert.torsionfree is torsionfree
    if not torsionfree:
        assert "killed" in cert.reduction


def test_certify_curve_rejects_excluded():
    with pytest.raises(DomainError):
        certify_curve(WeightedCurve(0, (2, 5)))


@settings(max_examples=30)
@given(st.integers(0, 2), st.lists(st.integers(2, 7), min_size=3, max_size=5))
def test_reduction_chain_gives_homomorphisms(g, ws):
    cert = certify_curve(WeightedCurve(g, ws), max_degree=14)
    assert check_homomorphism(cert.presentation, cert.images)
    assert cert.image_group_order >= 1
