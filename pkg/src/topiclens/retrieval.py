"""Probabilistic document retrieval for selected topic and term nodes.

A topic node scores a document by its topic-document probability; a term
node by the fraction of the term's corpus occurrences that fall in the
document. Multi-node selections multiply the per-node scores (an
independence-factorized joint), so a selection like {topic, term} surfaces
documents that use the term in that topic's sense.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .corpus import TokenizedCorpus
from .errors import (
    EmptySelectionError,
    UnknownNodeError,
    UnknownTermError,
    UnknownTopicError,
)
from .lda import TopicModel

_TOPIC_ID_RE = re.compile(r"^T(\d+)$")
_TERM_ID_PREFIX = "w:"

DEFAULT_LIMIT = 50


@dataclass(frozen=True)
class SelectionQuery:
    """A set of selected node ids plus a result-list cap.

    ``selected`` accepts any iterable of node ids ("T<k>" for topics,
    "w:<term>" for terms); duplicates collapse, order does not matter.
    """

    selected: tuple[str, ...]
    limit: int = DEFAULT_LIMIT

    def __init__(self, selected, limit: int = DEFAULT_LIMIT):
        deduped = tuple(dict.fromkeys(selected))
        if not deduped:
            raise EmptySelectionError("selection must contain at least one node id")
        if not isinstance(limit, int) or limit < 1:
            raise ValueError("limit must be an integer >= 1")
        object.__setattr__(self, "selected", deduped)
        object.__setattr__(self, "limit", limit)


@dataclass(frozen=True)
class RankedDocument:
    id: str
    title: str
    score: float


@dataclass(frozen=True)
class RankedDocuments:
    """Scored documents, strictly non-increasing, zero scores excluded.

    ``total_matching`` counts every nonzero-score document, including those
    cut by the query limit.
    """

    documents: tuple[RankedDocument, ...]
    total_matching: int


def parse_node_id(node_id: str) -> tuple[str, str]:
    """Split a node id into ("topic", digits) or ("term", term string)."""
    m = _TOPIC_ID_RE.match(node_id)
    if m:
        return ("topic", m.group(1))
    if node_id.startswith(_TERM_ID_PREFIX):
        term = node_id[len(_TERM_ID_PREFIX) :]
        if term:
            return ("term", term)
    raise UnknownNodeError(f"not a topic or term node id: {node_id!r}")


def _topic_index(model: TopicModel, digits: str) -> int:
    k = int(digits)
    if k >= model.num_topics:
        raise UnknownTopicError(f"unknown topic id: T{digits}")
    return k


def score_topic(model: TopicModel, doc_id: str, topic: int) -> float:
    """P(topic | document), from the trained topic-document distribution."""
    if not 0 <= topic < model.num_topics:
        raise UnknownTopicError(f"unknown topic index: {topic}")
    return float(model.theta[model.doc_position(doc_id), topic])


def score_term(corpus: TokenizedCorpus, doc_id: str, term: int | str) -> float:
    """P(document | term): the document's share of the term's occurrences.

    Zero when the term does not occur in the document; over all documents
    the shares sum to one (they partition the term's occurrence count).
    """
    term_id = corpus.vocabulary.id_of(term) if isinstance(term, str) else int(term)
    pos = corpus.doc_position(doc_id)
    entries = corpus.postings(term_id)
    total = sum(c for _, c in entries)
    if total == 0:
        return 0.0
    in_doc = next((c for p, c in entries if p == pos), 0)
    return in_doc / total


def _term_occurrence_fractions(corpus: TokenizedCorpus, term_id: int) -> np.ndarray:
    fractions = np.zeros(corpus.num_documents, dtype=np.float64)
    entries = corpus.postings(term_id)
    total = sum(c for _, c in entries)
    if total == 0:
        return fractions
    for pos, count in entries:
        fractions[pos] = count / total
    return fractions


def rank(
    model: TopicModel, corpus: TokenizedCorpus, query: SelectionQuery
) -> RankedDocuments:
    """Rank documents by the product of per-node scores.

    Documents with zero joint mass are omitted; the rest sort by descending
    score with ties broken by ascending document id. Factors multiply in a
    canonical node order (topics by index, then terms lexicographically), so
    the result is independent of selection order down to the last bit.
    """
    if model.doc_ids != corpus.doc_ids:
        raise ValueError("model and corpus hold different document sets")
    if not query.selected:
        raise EmptySelectionError("selection must contain at least one node id")

    topics: list[int] = []
    term_ids: list[int] = []
    for node_id in query.selected:
        kind, value = parse_node_id(node_id)
        if kind == "topic":
            topics.append(_topic_index(model, value))
        else:
            term_ids.append(corpus.vocabulary.id_of(value))

    scores = np.ones(corpus.num_documents, dtype=np.float64)
    for k in sorted(set(topics)):
        scores = scores * model.theta[:, k]
    for term_id in sorted(set(term_ids)):
        scores = scores * _term_occurrence_fractions(corpus, term_id)

    doc_ids = corpus.doc_ids
    matching = [
        (doc_ids[pos], float(scores[pos]))
        for pos in np.flatnonzero(scores > 0.0)
    ]
    matching.sort(key=lambda entry: (-entry[1], entry[0]))
    top = matching[: query.limit]
    return RankedDocuments(
        documents=tuple(
            RankedDocument(id=doc_id, title=corpus.titles.get(doc_id, doc_id), score=s)
            for doc_id, s in top
        ),
        total_matching=len(matching),
    )
