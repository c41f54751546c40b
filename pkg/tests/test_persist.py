"""Model persistence: lossless round trips and byte-stable files."""

import json

import numpy as np
import pytest

from factories import build_corpus

from topiclens.errors import CorpusIoError, FormatError
from topiclens.lda import LdaConfig, train
from topiclens.persist import load_model, model_to_dict, save_model


@pytest.fixture()
def small_model():
    rng = np.random.default_rng(12)
    docs = [(f"d{i}", rng.integers(0, 8, size=14).tolist()) for i in range(7)]
    corpus = build_corpus(docs, num_terms=8)
    config = LdaConfig(
        num_topics=3, alpha=0.4, beta=0.05, iterations=12, burn_in=6, seed=44
    )
    return train(corpus, config)


ARRAY_FIELDS = (
    "phi",
    "theta",
    "prevalence",
    "term_marginal",
    "doc_lengths",
    "avg_doc_topic_counts",
    "avg_topic_term_counts",
    "avg_topic_totals",
)


def assert_models_equal(a, b):
    for name in ARRAY_FIELDS:
        assert np.array_equal(getattr(a, name), getattr(b, name)), name
    assert a.vocabulary == b.vocabulary
    assert a.config == b.config
    assert a.doc_ids == b.doc_ids


class TestJsonFormat:
    def test_round_trip_is_lossless(self, tmp_path, small_model):
        path = tmp_path / "model.json"
        save_model(small_model, path)
        assert_models_equal(small_model, load_model(path))

    def test_identical_models_serialize_identically(self, tmp_path, small_model):
        first = tmp_path / "one.json"
        second = tmp_path / "two.json"
        save_model(small_model, first)
        save_model(load_model(first), second)
        assert first.read_bytes() == second.read_bytes()

    def test_version_field_present(self, tmp_path, small_model):
        path = tmp_path / "model.json"
        save_model(small_model, path)
        assert json.loads(path.read_text())["model_version"] == 1

    def test_unsupported_version_rejected(self, tmp_path, small_model):
        path = tmp_path / "model.json"
        data = model_to_dict(small_model)
        data["model_version"] = 99
        path.write_text(json.dumps(data))
        with pytest.raises(FormatError, match="model_version"):
            load_model(path)

    def test_missing_field_rejected(self, tmp_path, small_model):
        path = tmp_path / "model.json"
        data = model_to_dict(small_model)
        del data["phi"]
        path.write_text(json.dumps(data))
        with pytest.raises(FormatError):
            load_model(path)

    def test_corrupted_distribution_rejected(self, tmp_path, small_model):
        path = tmp_path / "model.json"
        data = model_to_dict(small_model)
        data["phi"][0][0] = 0.9999  # breaks row normalization
        path.write_text(json.dumps(data))
        with pytest.raises(FormatError):
            load_model(path)

    def test_not_json_rejected(self, tmp_path):
        path = tmp_path / "model.json"
        path.write_text("definitely not json{")
        with pytest.raises(FormatError):
            load_model(path)

    def test_missing_file_is_io_error(self, tmp_path):
        with pytest.raises(CorpusIoError):
            load_model(tmp_path / "absent.json")


class TestNpzTwin:
    def test_round_trip_is_lossless(self, tmp_path, small_model):
        path = tmp_path / "model.npz"
        save_model(small_model, path)
        assert_models_equal(small_model, load_model(path))
