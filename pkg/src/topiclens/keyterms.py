"""Distinguishing-keyterm scoring and selection.

A term's score for a topic is the posterior probability that an observed
occurrence of the term was generated by that topic:

    score(k, w) = phi[k, w] * prevalence[k] / term_marginal[w]

which sums to 1 over topics for every term. Selection restricts candidates
to each topic's most probable terms above a corpus-frequency floor, keeping
the keyterms representative as well as distinguishing: the raw posterior
alone would crown every hapax a perfect keyterm of its topic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, UnknownTermError, UnknownTopicError
from .lda import TopicModel


@dataclass(frozen=True)
class KeytermPolicy:
    """Selection policy.

    ``candidate_pool_size`` is the per-topic candidate count (top terms by
    topic-term probability), ``score_threshold`` the minimum score kept,
    ``max_per_topic`` the list cap. With ``prioritize_shared``, terms that
    clear the threshold for two or more topics are moved ahead of the rest
    before the cap is applied (scores are left untouched).
    """

    candidate_pool_size: int = 200
    score_threshold: float = 0.2
    max_per_topic: int = 15
    prioritize_shared: bool = False
    min_corpus_frequency: int = 5

    def __post_init__(self) -> None:
        if self.candidate_pool_size < 1:
            raise ConfigError("candidate_pool_size must be >= 1")
        if not 0.0 <= self.score_threshold < 1.0:
            raise ConfigError("score_threshold must be in [0, 1)")
        if self.max_per_topic < 1:
            raise ConfigError("max_per_topic must be >= 1")
        if self.candidate_pool_size < self.max_per_topic:
            raise ConfigError("candidate_pool_size must be >= max_per_topic")
        if self.min_corpus_frequency < 1:
            raise ConfigError("min_corpus_frequency must be >= 1")


@dataclass(frozen=True)
class KeytermTable:
    """Selected keyterms per topic as ``(term id, score)`` pairs.

    ``shared_terms`` holds exactly the term ids selected for two or more
    topics.
    """

    topics: tuple[tuple[tuple[int, float], ...], ...]
    shared_terms: frozenset[int]

    @property
    def num_topics(self) -> int:
        return len(self.topics)

    def terms_for(self, topic: int) -> tuple[tuple[int, float], ...]:
        if not 0 <= topic < len(self.topics):
            raise UnknownTopicError(f"unknown topic index: {topic}")
        return self.topics[topic]


def _term_id(model: TopicModel, term: int | str) -> int:
    if isinstance(term, str):
        return model.vocabulary.id_of(term)
    if not 0 <= term < model.num_terms:
        raise UnknownTermError(f"term id out of range: {term}")
    return int(term)


def score(model: TopicModel, topic: int, term: int | str) -> float:
    """How distinguishing ``term`` is of ``topic``, in [0, 1]."""
    if not 0 <= topic < model.num_topics:
        raise UnknownTopicError(f"unknown topic index: {topic}")
    w = _term_id(model, term)
    marginal = float(model.term_marginal[w])
    if marginal <= 0.0:
        raise ValueError(f"term {w} has zero marginal probability")
    return float(model.phi[topic, w] * model.prevalence[topic] / marginal)


def score_matrix(model: TopicModel) -> np.ndarray:
    """All scores at once: (num_topics, num_terms), columns sum to 1."""
    marginal = model.term_marginal
    safe = np.where(marginal > 0.0, marginal, 1.0)
    return model.phi * model.prevalence[:, None] / safe[None, :]


def select_keyterms(model: TopicModel, policy: KeytermPolicy) -> KeytermTable:
    """Pick each topic's keyterm list under the policy.

    Per topic: candidates are the ``candidate_pool_size`` most probable terms
    (by phi) with corpus frequency >= ``min_corpus_frequency``; candidates
    scoring below the threshold are dropped, the rest are ordered by
    descending score (ties by ascending term id) and capped at
    ``max_per_topic``. A topic may legitimately end up with no keyterms.
    """
    scores = score_matrix(model)
    term_ids = np.arange(model.num_terms)
    eligible = term_ids[
        model.vocabulary.corpus_frequency >= policy.min_corpus_frequency
    ]

    above: list[list[tuple[int, float]]] = []
    for k in range(model.num_topics):
        phi_k = model.phi[k, eligible]
        # primary key: phi descending; ties resolved by ascending term id
        order = np.lexsort((eligible, -phi_k))
        candidates = eligible[order[: policy.candidate_pool_size]]
        kept = [
            (int(t), float(scores[k, t]))
            for t in candidates
            if scores[k, t] >= policy.score_threshold and scores[k, t] > 0.0
        ]
        kept.sort(key=lambda ts: (-ts[1], ts[0]))
        above.append(kept)

    if policy.prioritize_shared:
        candidate_counts = Counter(t for kept in above for t, _ in kept)
        shared_eligible = {t for t, c in candidate_counts.items() if c >= 2}
        above = [
            [ts for ts in kept if ts[0] in shared_eligible]
            + [ts for ts in kept if ts[0] not in shared_eligible]
            for kept in above
        ]

    lists = tuple(tuple(kept[: policy.max_per_topic]) for kept in above)
    final_counts = Counter(t for kept in lists for t, _ in kept)
    shared = frozenset(t for t, c in final_counts.items() if c >= 2)
    return KeytermTable(topics=lists, shared_terms=shared)
