"""Helpers that build domain objects directly, bypassing the pipeline."""

from __future__ import annotations

import numpy as np

from topiclens.corpus import TokenizedCorpus, TokenizedDocument, Vocabulary
from topiclens.lda import LdaConfig, TopicModel
from topiclens.synthetic import alphabetic_terms


def build_corpus(token_docs, num_terms, terms=None, titles=None) -> TokenizedCorpus:
    """Corpus from explicit (doc id, token id list) pairs.

    The vocabulary may contain terms with zero occurrences, which the
    pipeline itself never produces.
    """
    terms = tuple(terms) if terms is not None else alphabetic_terms(num_terms)
    assert len(terms) == num_terms
    documents = tuple(
        TokenizedDocument(doc_id, np.asarray(tokens, dtype=np.int32))
        for doc_id, tokens in token_docs
    )
    df = np.zeros(num_terms, dtype=np.int64)
    cf = np.zeros(num_terms, dtype=np.int64)
    for doc in documents:
        uniq, counts = np.unique(doc.tokens, return_counts=True)
        df[uniq] += 1
        cf[uniq] += counts
    return TokenizedCorpus(
        documents=documents,
        vocabulary=Vocabulary(terms, df, cf),
        total_tokens=int(sum(len(d) for d in documents)),
        titles=titles or {d.id: f"title of {d.id}" for d in documents},
    )


def build_model(
    phi,
    prevalence,
    theta=None,
    corpus_frequency=None,
    doc_ids=None,
    config=None,
) -> TopicModel:
    """TopicModel with hand-chosen distributions and placeholder counts."""
    phi = np.asarray(phi, dtype=np.float64)
    prevalence = np.asarray(prevalence, dtype=np.float64)
    num_topics, num_terms = phi.shape
    theta = (
        np.asarray(theta, dtype=np.float64)
        if theta is not None
        else np.full((1, num_topics), 1.0 / num_topics)
    )
    num_docs = theta.shape[0]
    doc_ids = tuple(doc_ids) if doc_ids is not None else tuple(
        f"d{i:03d}" for i in range(num_docs)
    )
    cf = (
        np.asarray(corpus_frequency, dtype=np.int64)
        if corpus_frequency is not None
        else np.full(num_terms, 10, dtype=np.int64)
    )
    vocabulary = Vocabulary(
        terms=alphabetic_terms(num_terms),
        doc_frequency=np.minimum(cf, num_docs),
        corpus_frequency=cf,
    )
    return TopicModel(
        phi=phi,
        theta=theta,
        prevalence=prevalence,
        term_marginal=phi.T @ prevalence,
        vocabulary=vocabulary,
        config=config
        or LdaConfig(num_topics=num_topics, alpha=0.1, beta=0.01, iterations=2, burn_in=1, seed=0),
        doc_ids=doc_ids,
        doc_lengths=np.full(num_docs, 10, dtype=np.int64),
        avg_doc_topic_counts=np.zeros((num_docs, num_topics)),
        avg_topic_term_counts=np.zeros((num_topics, num_terms)),
        avg_topic_totals=np.zeros(num_topics),
    )


def random_model(num_topics, num_terms, num_docs=6, seed=0) -> TopicModel:
    """Fully populated random model with valid normalizations."""
    rng = np.random.default_rng(seed)
    phi = rng.dirichlet(np.ones(num_terms), size=num_topics)
    theta = rng.dirichlet(np.ones(num_topics), size=num_docs)
    prevalence = rng.dirichlet(np.ones(num_topics))
    cf = rng.integers(1, 50, size=num_terms, dtype=np.int64)
    return build_model(phi, prevalence, theta=theta, corpus_frequency=cf)
