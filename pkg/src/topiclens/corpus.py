"""Corpus ingestion, tokenization and vocabulary construction.

Input formats:
  * JSONL, one document per line:
    ``{"id": str, "title": str?, "body": str, "date": str?}`` (UTF-8)
  * a directory of ``.txt`` files, document id = relative filename
  * stopword files: one lowercase term per line, UTF-8
"""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass, field
from datetime import date, datetime
from pathlib import Path

import numpy as np

from .errors import (
    ConfigError,
    CorpusIoError,
    DuplicateIdError,
    EmptyCorpusError,
    FormatError,
    UnknownDocumentError,
    UnknownTermError,
)

log = logging.getLogger(__name__)

CORPUS_FORMATS = ("jsonl", "text-dir")

# A token is a maximal run of Unicode letters; digits, underscores and
# punctuation act as separators.
_TOKEN_RE = re.compile(r"[^\W\d_]+", re.UNICODE)

_TITLE_FALLBACK_CHARS = 80


@dataclass
class RawDocument:
    """One ingested document; ``date`` is an optional ISO-8601 string."""

    id: str
    title: str
    body: str
    date: str | None = None


@dataclass(frozen=True)
class PreprocessConfig:
    """Tokenization knobs.

    ``min_doc_frequency`` and ``max_doc_fraction`` prune terms that are too
    rare or too corpus-general to distinguish anything; both thresholds are
    measured against the number of ingested documents.
    """

    stopwords: frozenset[str] = frozenset()
    min_term_length: int = 1
    min_doc_frequency: int = 3
    max_doc_fraction: float = 0.5

    def __post_init__(self) -> None:
        if self.min_term_length < 1:
            raise ConfigError("min_term_length must be >= 1")
        if self.min_doc_frequency < 1:
            raise ConfigError("min_doc_frequency must be >= 1")
        if not 0.0 < self.max_doc_fraction <= 1.0:
            raise ConfigError("max_doc_fraction must be in (0, 1]")


@dataclass(eq=False)
class Vocabulary:
    """Retained terms with integer ids and per-term frequency statistics.

    ``terms`` and ``index`` are mutually inverse; ``doc_frequency[w]`` counts
    documents containing term ``w`` and ``corpus_frequency[w]`` its total
    token occurrences.
    """

    terms: tuple[str, ...]
    doc_frequency: np.ndarray
    corpus_frequency: np.ndarray
    index: dict[str, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self.index = {t: i for i, t in enumerate(self.terms)}

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, term: str) -> bool:
        return term in self.index

    def id_of(self, term: str) -> int:
        try:
            return self.index[term]
        except KeyError:
            raise UnknownTermError(f"term not in vocabulary: {term!r}") from None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Vocabulary):
            return NotImplemented
        return (
            self.terms == other.terms
            and np.array_equal(self.doc_frequency, other.doc_frequency)
            and np.array_equal(self.corpus_frequency, other.corpus_frequency)
        )


@dataclass(eq=False)
class TokenizedDocument:
    """A document reduced to its retained token ids, in text order."""

    id: str
    tokens: np.ndarray

    def __len__(self) -> int:
        return int(self.tokens.shape[0])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TokenizedDocument):
            return NotImplemented
        return self.id == other.id and np.array_equal(self.tokens, other.tokens)


@dataclass(eq=False)
class TokenizedCorpus:
    """Bag-of-tokens view of a corpus; immutable once built.

    ``titles`` keeps the surviving documents' display titles so retrieval
    results can be rendered without the raw documents at hand.
    """

    documents: tuple[TokenizedDocument, ...]
    vocabulary: Vocabulary
    total_tokens: int
    titles: dict[str, str] = field(default_factory=dict)
    dropped_ids: tuple[str, ...] = ()

    _flat: tuple[np.ndarray, np.ndarray] | None = field(
        default=None, init=False, repr=False
    )
    _positions: dict[str, int] | None = field(default=None, init=False, repr=False)
    _postings: list[tuple[tuple[int, int], ...]] | None = field(
        default=None, init=False, repr=False
    )

    @property
    def num_documents(self) -> int:
        return len(self.documents)

    @property
    def doc_ids(self) -> tuple[str, ...]:
        return tuple(d.id for d in self.documents)

    def doc_position(self, doc_id: str) -> int:
        """Index of a document in corpus order."""
        if self._positions is None:
            self._positions = {d.id: i for i, d in enumerate(self.documents)}
        try:
            return self._positions[doc_id]
        except KeyError:
            raise UnknownDocumentError(f"unknown document id: {doc_id!r}") from None

    def flat_tokens(self) -> tuple[np.ndarray, np.ndarray]:
        """Token stream as parallel (document index, term id) int32 arrays.

        Order is corpus order: documents as stored, tokens in text order.
        """
        if self._flat is None:
            lengths = [len(d) for d in self.documents]
            doc_of = np.repeat(
                np.arange(len(self.documents), dtype=np.int32), lengths
            )
            if self.documents:
                word_of = np.concatenate([d.tokens for d in self.documents])
            else:
                word_of = np.empty(0, dtype=np.int32)
            self._flat = (doc_of, word_of.astype(np.int32, copy=False))
        return self._flat

    def postings(self, term_id: int) -> tuple[tuple[int, int], ...]:
        """(document position, occurrence count) pairs for one term id."""
        if not 0 <= term_id < len(self.vocabulary):
            raise UnknownTermError(f"term id out of range: {term_id}")
        if self._postings is None:
            built: list[list[tuple[int, int]]] = [[] for _ in self.vocabulary.terms]
            for pos, doc in enumerate(self.documents):
                terms, counts = np.unique(doc.tokens, return_counts=True)
                for t, c in zip(terms.tolist(), counts.tolist()):
                    built[t].append((pos, c))
            self._postings = [tuple(entries) for entries in built]
        return self._postings[term_id]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TokenizedCorpus):
            return NotImplemented
        return (
            self.documents == other.documents
            and self.vocabulary == other.vocabulary
            and self.total_tokens == other.total_tokens
            and self.titles == other.titles
            and self.dropped_ids == other.dropped_ids
        )


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Read a stopword file: one term per line, UTF-8, blank lines ignored."""
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise CorpusIoError(f"cannot read stopword file {p}: {exc}") from exc
    return frozenset(line.strip() for line in text.splitlines() if line.strip())


def ingest(path: str | Path, format: str = "jsonl") -> list[RawDocument]:
    """Read raw documents from ``path`` in file order.

    Duplicate ids or documents with empty bodies reject the whole batch.
    """
    if format not in CORPUS_FORMATS:
        raise ConfigError(f"unknown corpus format {format!r}; expected one of {CORPUS_FORMATS}")
    p = Path(path)
    if format == "jsonl":
        docs = _ingest_jsonl(p)
    else:
        docs = _ingest_text_dir(p)
    seen: set[str] = set()
    for doc in docs:
        if doc.id in seen:
            raise DuplicateIdError(f"duplicate document id: {doc.id!r}")
        seen.add(doc.id)
    return docs


def _default_title(body: str) -> str:
    return body.strip()[:_TITLE_FALLBACK_CHARS]


def _checked_date(value: object, where: str) -> str | None:
    if value is None:
        return None
    if not isinstance(value, str):
        raise FormatError(f"{where}: 'date' must be a string")
    try:
        date.fromisoformat(value)
    except ValueError:
        try:
            datetime.fromisoformat(value)
        except ValueError:
            raise FormatError(f"{where}: 'date' is not ISO-8601: {value!r}") from None
    return value


def _ingest_jsonl(path: Path) -> list[RawDocument]:
    if not path.is_file():
        raise CorpusIoError(f"not a readable file: {path}")
    docs: list[RawDocument] = []
    try:
        with path.open(encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                where = f"{path}:{lineno}"
                try:
                    record = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise FormatError(f"line {lineno}: invalid JSON ({exc.msg})") from None
                if not isinstance(record, dict):
                    raise FormatError(f"line {lineno}: expected a JSON object")
                doc_id = record.get("id")
                if not isinstance(doc_id, str) or not doc_id:
                    raise FormatError(f"line {lineno}: missing or empty 'id'")
                body = record.get("body")
                if not isinstance(body, str):
                    raise FormatError(f"line {lineno}: missing 'body'")
                if not body.strip():
                    raise FormatError(f"line {lineno}: empty 'body'")
                title = record.get("title")
                if title is None:
                    title = _default_title(body)
                elif not isinstance(title, str):
                    raise FormatError(f"line {lineno}: 'title' must be a string")
                docs.append(
                    RawDocument(
                        id=doc_id,
                        title=title,
                        body=body,
                        date=_checked_date(record.get("date"), where),
                    )
                )
    except UnicodeDecodeError as exc:
        raise FormatError(f"{path} is not valid UTF-8: {exc}") from exc
    except OSError as exc:
        raise CorpusIoError(f"cannot read {path}: {exc}") from exc
    return docs


def _ingest_text_dir(path: Path) -> list[RawDocument]:
    if not path.is_dir():
        raise CorpusIoError(f"not a readable directory: {path}")
    docs: list[RawDocument] = []
    files = sorted(path.rglob("*.txt"), key=lambda f: f.relative_to(path).as_posix())
    for file in files:
        rel = file.relative_to(path).as_posix()
        try:
            body = file.read_text(encoding="utf-8")
        except UnicodeDecodeError as exc:
            raise FormatError(f"{rel} is not valid UTF-8: {exc}") from exc
        except OSError as exc:
            raise CorpusIoError(f"cannot read {file}: {exc}") from exc
        if not body.strip():
            raise FormatError(f"{rel}: empty body")
        docs.append(RawDocument(id=rel, title=_default_title(body), body=body))
    return docs


def tokenize(docs: list[RawDocument], config: PreprocessConfig) -> TokenizedCorpus:
    """Lowercase, tokenize and frequency-prune a batch of raw documents.

    Terms kept: length >= ``min_term_length``, not a stopword, document
    frequency in ``[min_doc_frequency, max_doc_fraction * len(docs)]``.
    Documents left with no tokens are dropped (and logged). The retained
    vocabulary is ordered lexicographically, so identical inputs always
    produce an identical corpus.
    """
    token_lists: list[list[str]] = []
    for doc in docs:
        tokens = _TOKEN_RE.findall(doc.body.lower())
        token_lists.append(
            [
                t
                for t in tokens
                if len(t) >= config.min_term_length and t not in config.stopwords
            ]
        )

    doc_freq: dict[str, int] = {}
    for tokens in token_lists:
        for term in set(tokens):
            doc_freq[term] = doc_freq.get(term, 0) + 1

    max_df = config.max_doc_fraction * len(docs)
    retained = sorted(
        term
        for term, df in doc_freq.items()
        if df >= config.min_doc_frequency and df <= max_df
    )
    index = {t: i for i, t in enumerate(retained)}

    documents: list[TokenizedDocument] = []
    titles: dict[str, str] = {}
    dropped: list[str] = []
    df_arr = np.zeros(len(retained), dtype=np.int64)
    cf_arr = np.zeros(len(retained), dtype=np.int64)
    for doc, tokens in zip(docs, token_lists):
        ids = [index[t] for t in tokens if t in index]
        if not ids:
            dropped.append(doc.id)
            continue
        arr = np.asarray(ids, dtype=np.int32)
        documents.append(TokenizedDocument(doc.id, arr))
        titles[doc.id] = doc.title
        uniq, counts = np.unique(arr, return_counts=True)
        df_arr[uniq] += 1
        cf_arr[uniq] += counts

    if not documents:
        raise EmptyCorpusError("no document survived preprocessing")
    if dropped:
        log.warning(
            "dropped %d document(s) with no retained tokens: %s",
            len(dropped),
            ", ".join(dropped[:10]) + ("..." if len(dropped) > 10 else ""),
        )

    return TokenizedCorpus(
        documents=tuple(documents),
        vocabulary=Vocabulary(tuple(retained), df_arr, cf_arr),
        total_tokens=int(sum(len(d) for d in documents)),
        titles=titles,
        dropped_ids=tuple(dropped),
    )
