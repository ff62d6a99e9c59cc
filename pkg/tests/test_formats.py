import json

import pytest
from hypothesis import given, settings, strategies as st

from catgen import random_category
from catstrict import formats
from catstrict.corpus import corpus_items
from catstrict.efs import factorize
from catstrict.errors import FormatError
from catstrict.fixtures import a3_swap, a3_twisted_smc
from catstrict.operad import pg_operad
from catstrict.fincat import cyclic_group


@pytest.mark.parametrize("name,value", corpus_items(), ids=[n for n, _ in corpus_items()])
def test_round_trip_is_byte_exact(name, value):
    text = formats.emit(value)
    kind, back = formats.parse(text)
    assert formats.emit(back) == text
    assert text.endswith("\n") and "\n" not in text[:-1]


@pytest.mark.parametrize("name,value", [(n, v) for n, v in corpus_items()
                                        if n.split(".")[-2] in ("category", "functor", "nat", "group",
                                                                "action", "operad", "smc")])
def test_round_trip_equality(name, value):
    _, back = formats.parse(formats.emit(value))
    assert back == value


def test_equivariant_operad_round_trip():
    O = pg_operad(cyclic_group(2), 2)
    _, back = formats.parse(formats.emit(O))
    assert back == O and back.group_actions == O.group_actions


def test_factorization_round_trip():
    fz = factorize(a3_swap())
    _, back = formats.parse(formats.emit(fz))
    assert back.f == fz.f and back.e == fz.e and back.m == fz.m


@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False))
def test_random_categories_round_trip(rng):
    C = random_category(rng)
    _, back = formats.parse(formats.emit(C))
    assert back == C


def test_header_is_sorted_and_versioned():
    doc = json.loads(formats.emit(a3_twisted_smc()))
    assert list(doc) == sorted(doc)
    assert doc["format"] == formats.FORMAT and doc["version"] == formats.VERSION
    assert doc["kind"] == "biased-smc"


@pytest.mark.parametrize("text,msg", [
    ("{", "line 1"),
    ('{"format": "other", "version": 1, "kind": "category", "payload": {}}', "header"),
    ('{"format": "catstrict", "version": 9, "kind": "category", "payload": {}}', "version"),
    ('{"format": "catstrict", "version": 1, "kind": "widget", "payload": {}}', "unknown kind"),
    ('{"format": "catstrict", "version": 1, "kind": "category"}', "payload"),
    ('{"format": "catstrict", "version": 1, "kind": "category", "payload": {"objects": []}}', "malformed"),
    ('{"format": "catstrict", "version": 1, "kind": "category", "payload": {"objects": ["a b"],'
     ' "morphisms": [], "identities": [], "composition": []}}', "bad id token"),
])
def test_parse_errors(text, msg):
    with pytest.raises(FormatError, match=msg):
        formats.parse(text)


def test_expected_kind():
    with pytest.raises(FormatError, match="expected a functor"):
        formats.parse(formats.emit(a3_swap().dom), expect="functor")


def test_unencodable_value():
    with pytest.raises(FormatError):
        formats.emit(object())
