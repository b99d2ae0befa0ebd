import json
import logging
from fractions import Fraction

import pytest

from core._types import Scalar
from core.catalog import CATALOG, get_entry
from core.construction import truncate
from core.errors import ParseError, VersionError
from core.partition import wavelet_verdict
from core.set_loader import FileSetLoader, dumps, load, loads, save


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_catalog_entries_are_wavelet_sets(name):
    entry = get_entry(name)
    assert wavelet_verdict(entry.set).is_wavelet_set
    assert entry.set.measure() == Scalar.of_pi(2)


def test_unknown_catalog_entry():
    with pytest.raises(KeyError, match="shannon"):
        get_entry("meyer")


def test_document_round_trip(journe_set):
    text = dumps(journe_set)
    document = loads(text)
    assert document.canonical
    assert document.set == journe_set
    assert dumps(document.set) == text
    assert text.endswith("}\n")


def test_truncation_header(params_2):
    t = truncate(params_2, 2)
    text = dumps(t)
    doc = json.loads(text)
    assert list(doc) == ["version", "eps_ratio", "n", "depth", "excess", "intervals"]
    assert doc["eps_ratio"] == "1/5" and doc["n"] == 2 and doc["depth"] == 2
    document = loads(text)
    assert document.excess == t.excess_measure
    assert document.set.binding.key(document.excess) == Fraction(269, 983040)
    assert dumps(t) == text


def test_implicit_documents_omit_eps_ratio(shannon_set):
    doc = json.loads(dumps(shannon_set))
    assert list(doc) == ["version", "intervals"]
    assert doc["intervals"][0] == {"lo": {"pi": "-2/1", "eps": "0/1"}, "hi": {"pi": "-1/1", "eps": "0/1"}}


def test_non_canonical_document_is_normalized(caplog):
    text = json.dumps(
        {
            "version": 1,
            "intervals": [
                {"lo": {"pi": "1/2", "eps": "0"}, "hi": {"pi": "1", "eps": "0"}},
                {"lo": {"pi": "1/4", "eps": "0"}, "hi": {"pi": "1/2", "eps": "0"}},
            ],
        }
    )
    with caplog.at_level(logging.WARNING):
        document = loads(text)
    assert not document.canonical
    assert len(document.set) == 1
    assert "no canónico" in caplog.text


@pytest.mark.parametrize(
    "payload, error",
    [
        ("{not json", ParseError),
        (json.dumps({"intervals": []}), ParseError),
        (json.dumps({"version": 2, "intervals": []}), VersionError),
        (json.dumps({"version": 1, "intervals": "x"}), ParseError),
        (json.dumps({"version": 1, "intervals": [{"lo": {"pi": "0", "eps": "1"}, "hi": {"pi": "1", "eps": "0"}}]}), ParseError),
        (json.dumps({"version": 1, "intervals": [{"lo": {"pi": "0.5"}, "hi": {"pi": "1"}}]}), ParseError),
    ],
)
def test_malformed_documents(payload, error):
    with pytest.raises(error):
        loads(payload)


def test_file_save_and_load(tmp_path, journe_set):
    path = tmp_path / "journe.json"
    save(journe_set, path)
    assert load(path).set == journe_set
    with pytest.raises(ParseError):
        FileSetLoader().load(tmp_path / "missing.json")


@pytest.mark.parametrize(
    "header",
    [{"version": True}, {"version": "1"}, {"version": 1, "n": "abc"}, {"version": 1, "depth": -7}, {"version": 1, "n": 0}],
)
def test_header_fields_are_validated(header):
    with pytest.raises(ParseError):
        loads(json.dumps({**header, "intervals": []}))
