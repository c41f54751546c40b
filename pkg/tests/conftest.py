"""Shared fixtures: planted corpora and models trained once per session."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import pytest

import topiclens as tl
from topiclens import synthetic
from topiclens.corpus import RawDocument, TokenizedCorpus
from topiclens.lda import LdaConfig, TopicModel
from topiclens.synthetic import PlantedCorpus

import reference


@dataclass
class TrainedFixture:
    """A planted corpus, the model trained on it, and the ground truth."""

    planted: PlantedCorpus
    raw_docs: list[RawDocument]
    corpus: TokenizedCorpus
    config: LdaConfig
    model: TopicModel
    train_seconds: float
    ll_history: list[float]
    onehot: dict[int, int]  # doc index -> planted topic
    mean_tv: float
    topic_map: dict[int, int]  # planted topic -> learned topic
    shared_term_id: int | None = None
    forced_doc_groups: dict[int, list[int]] = field(default_factory=dict)


def _train_fixture(
    planted: PlantedCorpus,
    config: LdaConfig,
    onehot: dict[int, int],
    shared_term_id: int | None = None,
    forced_doc_groups: dict[int, list[int]] | None = None,
) -> TrainedFixture:
    raw_docs = list(planted.documents)
    corpus = tl.tokenize(raw_docs, synthetic.passthrough_preprocess())
    assert corpus.vocabulary.terms == planted.terms

    ll_history: list[float] = []
    start = time.perf_counter()
    model = tl.train(corpus, config, progress=lambda _i, ll: ll_history.append(ll))
    seconds = time.perf_counter() - start
    mean_tv, topic_map = reference.greedy_match_tv(model.phi, planted.phi)
    return TrainedFixture(
        planted=planted,
        raw_docs=raw_docs,
        corpus=corpus,
        config=config,
        model=model,
        train_seconds=seconds,
        ll_history=ll_history,
        onehot=onehot,
        mean_tv=mean_tv,
        topic_map=topic_map,
        shared_term_id=shared_term_id,
        forced_doc_groups=forced_doc_groups or {},
    )


@pytest.fixture(scope="session")
def planted_bundle() -> TrainedFixture:
    """1000 docs x 100 tokens from 5 disjoint 100-term topics (V=500)."""
    num_topics, vocab_size = 5, 500
    phi = synthetic.phi_from_supports(
        synthetic.disjoint_supports(num_topics, vocab_size), vocab_size
    )
    onehot = {d: d for d in range(num_topics)}
    planted = synthetic.sample_corpus(
        phi,
        num_docs=1000,
        doc_length=100,
        alpha=0.1,
        seed=20240,
        onehot_topics=onehot,
    )
    config = LdaConfig(
        num_topics=num_topics,
        alpha=0.1,
        beta=0.01,
        iterations=500,
        burn_in=250,
        seed=42,
    )
    return _train_fixture(planted, config, onehot)


@pytest.fixture(scope="session")
def disambig_bundle() -> TrainedFixture:
    """Two topics whose supports overlap in a single ambiguous term.

    Docs 0-4 are pure topic-0, docs 5-9 pure topic-1, all ten with two
    forced occurrences of the shared term so the {topic, term} selection
    has known relevant documents on both sides.
    """
    vocab_size = 60
    shared_term_id = 45
    supports = [list(range(30)) + [shared_term_id], list(range(30, 60))]
    phi = synthetic.phi_from_supports(supports, vocab_size)
    onehot = {d: 0 for d in range(5)} | {d: 1 for d in range(5, 10)}
    planted = synthetic.sample_corpus(
        phi,
        num_docs=240,
        doc_length=50,
        alpha=0.05,
        seed=99,
        onehot_topics=onehot,
        extra_tokens={d: [shared_term_id, shared_term_id] for d in range(10)},
    )
    config = LdaConfig(
        num_topics=2, alpha=0.1, beta=0.01, iterations=300, burn_in=150, seed=7
    )
    return _train_fixture(
        planted,
        config,
        onehot,
        shared_term_id=shared_term_id,
        forced_doc_groups={0: list(range(5)), 1: list(range(5, 10))},
    )
