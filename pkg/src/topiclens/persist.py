"""Lossless model persistence.

The canonical format is a single self-describing JSON document (compact,
sorted keys) whose float fields round-trip exactly via shortest-repr
encoding; identical models always serialize to identical bytes. Paths
ending in ``.npz`` select a compact binary twin instead (same content,
not byte-stable because of zip metadata).
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .corpus import Vocabulary
from .errors import CorpusIoError, FormatError
from .lda import LdaConfig, TopicModel

MODEL_VERSION = 1

_ARRAY_FIELDS = {
    "phi": np.float64,
    "theta": np.float64,
    "prevalence": np.float64,
    "term_marginal": np.float64,
    "doc_lengths": np.int64,
    "avg_doc_topic_counts": np.float64,
    "avg_topic_term_counts": np.float64,
    "avg_topic_totals": np.float64,
}


def model_to_dict(model: TopicModel) -> dict:
    data: dict = {
        "model_version": MODEL_VERSION,
        "config": {
            "num_topics": model.config.num_topics,
            "alpha": model.config.alpha,
            "beta": model.config.beta,
            "iterations": model.config.iterations,
            "burn_in": model.config.burn_in,
            "seed": model.config.seed,
        },
        "vocabulary": {
            "terms": list(model.vocabulary.terms),
            "doc_frequency": model.vocabulary.doc_frequency.tolist(),
            "corpus_frequency": model.vocabulary.corpus_frequency.tolist(),
        },
        "doc_ids": list(model.doc_ids),
    }
    for name in _ARRAY_FIELDS:
        data[name] = getattr(model, name).tolist()
    return data


def model_from_dict(data: dict) -> TopicModel:
    try:
        version = data["model_version"]
        if version != MODEL_VERSION:
            raise FormatError(f"unsupported model_version: {version!r}")
        config = LdaConfig(**data["config"])
        vocab_data = data["vocabulary"]
        vocabulary = Vocabulary(
            terms=tuple(vocab_data["terms"]),
            doc_frequency=np.asarray(vocab_data["doc_frequency"], dtype=np.int64),
            corpus_frequency=np.asarray(
                vocab_data["corpus_frequency"], dtype=np.int64
            ),
        )
        arrays = {
            name: np.asarray(data[name], dtype=dtype)
            for name, dtype in _ARRAY_FIELDS.items()
        }
        model = TopicModel(
            vocabulary=vocabulary,
            config=config,
            doc_ids=tuple(data["doc_ids"]),
            **arrays,
        )
        model.check()
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed model file: {exc}") from exc
    return model


def save_model(model: TopicModel, path: str | Path) -> None:
    """Write a model file; ``.npz`` paths get the binary twin."""
    p = Path(path)
    try:
        if p.suffix == ".npz":
            _save_npz(model, p)
        else:
            text = json.dumps(
                model_to_dict(model), sort_keys=True, separators=(",", ":")
            )
            p.write_bytes(text.encode("utf-8"))
    except OSError as exc:
        raise CorpusIoError(f"cannot write model file {p}: {exc}") from exc


def load_model(path: str | Path) -> TopicModel:
    p = Path(path)
    if not p.is_file():
        raise CorpusIoError(f"not a readable file: {p}")
    try:
        if p.suffix == ".npz":
            return _load_npz(p)
        data = json.loads(p.read_bytes().decode("utf-8"))
    except OSError as exc:
        raise CorpusIoError(f"cannot read model file {p}: {exc}") from exc
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise FormatError(f"model file {p} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise FormatError(f"model file {p} does not hold a JSON object")
    return model_from_dict(data)


def _save_npz(model: TopicModel, path: Path) -> None:
    header = json.dumps(
        {
            "model_version": MODEL_VERSION,
            "config": model_to_dict(model)["config"],
            "terms": list(model.vocabulary.terms),
            "doc_ids": list(model.doc_ids),
        },
        sort_keys=True,
    )
    np.savez_compressed(
        path,
        header=np.asarray(header),
        doc_frequency=model.vocabulary.doc_frequency,
        corpus_frequency=model.vocabulary.corpus_frequency,
        **{name: getattr(model, name) for name in _ARRAY_FIELDS},
    )


def _load_npz(path: Path) -> TopicModel:
    with np.load(path, allow_pickle=False) as bundle:
        try:
            header = json.loads(str(bundle["header"]))
            if header["model_version"] != MODEL_VERSION:
                raise FormatError(
                    f"unsupported model_version: {header['model_version']!r}"
                )
            vocabulary = Vocabulary(
                terms=tuple(header["terms"]),
                doc_frequency=bundle["doc_frequency"].astype(np.int64),
                corpus_frequency=bundle["corpus_frequency"].astype(np.int64),
            )
            model = TopicModel(
                vocabulary=vocabulary,
                config=LdaConfig(**header["config"]),
                doc_ids=tuple(header["doc_ids"]),
                **{
                    name: bundle[name].astype(dtype)
                    for name, dtype in _ARRAY_FIELDS.items()
                },
            )
            model.check()
        except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
            raise FormatError(f"malformed model file: {exc}") from exc
    return model
