"""Synthetic corpora drawn from a known topic-mixture generative process.

Useful for demos and for quantitative checks: the planted topic-term
distributions are ground truth that a trained model can be compared
against. Terms are fixed-width alphabetic strings, so the tokenizer
reproduces them exactly and the lexicographic vocabulary order matches
the planted term order.
"""

from __future__ import annotations

import itertools
import json
import string
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from .corpus import PreprocessConfig, RawDocument


def alphabetic_terms(count: int) -> tuple[str, ...]:
    """``count`` distinct lowercase terms whose ids equal their sort order."""
    if count < 1:
        raise ValueError("count must be >= 1")
    width = 1
    while 26**width < count:
        width += 1
    combos = itertools.product(string.ascii_lowercase, repeat=width)
    return tuple("".join(c) for c in itertools.islice(combos, count))


def disjoint_supports(num_topics: int, vocab_size: int) -> list[list[int]]:
    """Split term ids 0..vocab_size-1 into contiguous per-topic blocks."""
    if num_topics < 1 or vocab_size < num_topics:
        raise ValueError("need at least one term per topic")
    blocks = np.array_split(np.arange(vocab_size), num_topics)
    return [block.tolist() for block in blocks]


def phi_from_supports(supports: Sequence[Sequence[int]], vocab_size: int) -> np.ndarray:
    """Topic-term matrix uniform over each topic's support set.

    Supports may overlap; a term listed in several supports becomes a
    genuinely ambiguous term used by several topics.
    """
    phi = np.zeros((len(supports), vocab_size), dtype=np.float64)
    for k, support in enumerate(supports):
        ids = np.asarray(list(support), dtype=np.int64)
        if ids.size == 0:
            raise ValueError(f"support of topic {k} is empty")
        phi[k, ids] = 1.0 / ids.size
    return phi


def passthrough_preprocess() -> PreprocessConfig:
    """Preprocessing that keeps every generated token."""
    return PreprocessConfig(min_doc_frequency=1, max_doc_fraction=1.0)


@dataclass(frozen=True)
class PlantedCorpus:
    """Generated documents plus the ground truth that produced them."""

    documents: tuple[RawDocument, ...]
    phi: np.ndarray  # (K, V) planted topic-term distributions
    theta: np.ndarray  # (D, K) per-document mixtures actually used
    terms: tuple[str, ...]

    @property
    def num_topics(self) -> int:
        return int(self.phi.shape[0])


def sample_corpus(
    phi: np.ndarray,
    *,
    num_docs: int,
    doc_length: int,
    alpha: float,
    seed: int,
    onehot_topics: Mapping[int, int] | None = None,
    extra_tokens: Mapping[int, Sequence[int]] | None = None,
) -> PlantedCorpus:
    """Draw documents from the mixture process defined by ``phi``.

    Each document's topic mixture comes from a symmetric Dirichlet(alpha),
    except documents listed in ``onehot_topics`` which use a pure single-topic
    mixture. ``extra_tokens`` appends fixed term ids to chosen documents
    (handy to guarantee a term's presence). Deterministic for a given seed.
    """
    phi = np.asarray(phi, dtype=np.float64)
    num_topics, vocab_size = phi.shape
    if num_docs < 1 or doc_length < 1:
        raise ValueError("need at least one document and one token")
    terms = alphabetic_terms(vocab_size)
    rng = np.random.default_rng(seed)
    onehot_topics = dict(onehot_topics or {})
    extra_tokens = {d: list(ts) for d, ts in (extra_tokens or {}).items()}

    id_width = max(4, len(str(num_docs - 1)))
    documents: list[RawDocument] = []
    thetas = np.zeros((num_docs, num_topics), dtype=np.float64)
    for d in range(num_docs):
        if d in onehot_topics:
            theta = np.zeros(num_topics)
            theta[onehot_topics[d]] = 1.0
        else:
            theta = rng.dirichlet(np.full(num_topics, alpha))
        thetas[d] = theta
        z = rng.choice(num_topics, size=doc_length, p=theta)
        tokens = np.empty(doc_length, dtype=np.int64)
        for k in np.unique(z):
            mask = z == k
            tokens[mask] = rng.choice(vocab_size, size=int(mask.sum()), p=phi[k])
        token_ids = tokens.tolist() + extra_tokens.get(d, [])
        doc_id = f"d{d:0{id_width}d}"
        documents.append(
            RawDocument(
                id=doc_id,
                title=f"Synthetic document {d:0{id_width}d}",
                body=" ".join(terms[t] for t in token_ids),
            )
        )
    return PlantedCorpus(
        documents=tuple(documents), phi=phi, theta=thetas, terms=terms
    )


def write_jsonl(documents: Sequence[RawDocument], path: str | Path) -> None:
    """Write documents in the JSONL ingestion format."""
    with Path(path).open("w", encoding="utf-8") as fh:
        for doc in documents:
            record = {"id": doc.id, "title": doc.title, "body": doc.body}
            if doc.date is not None:
                record["date"] = doc.date
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")
