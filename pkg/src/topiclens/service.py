"""Read-only HTTP service over a trained model.

Endpoints (all JSON unless noted):

    GET /api/graph                     topic-keyterm graph document
    GET /api/topics/{topic_id}         one topic's keyterms with scores
    GET /api/rank?nodes=...&limit=n    ranked documents for selected nodes
    GET /api/document/{doc_id}         id, title, date and full body text
    GET /                              static UI bundle, when configured

Errors use ``{"error": code, "detail": message}`` with a 4xx status. The
model is loaded once and never mutated, so identical requests always return
identical bytes and any number of requests may be served concurrently.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Mapping

from fastapi import FastAPI
from fastapi.exceptions import RequestValidationError
from fastapi.responses import Response
from fastapi.staticfiles import StaticFiles

from . import graph as graphmod
from . import persist, retrieval
from .corpus import (
    CORPUS_FORMATS,
    PreprocessConfig,
    RawDocument,
    TokenizedCorpus,
    ingest,
    load_stopwords,
    tokenize,
)
from .errors import (
    ConfigError,
    EmptySelectionError,
    TopicLensError,
    UnknownDocumentError,
    UnknownNodeError,
    UnknownTopicError,
)
from .keyterms import KeytermPolicy, KeytermTable, select_keyterms
from .lda import LdaConfig, TopicModel
from .retrieval import SelectionQuery

DEFAULT_HOST = "127.0.0.1"
DEFAULT_PORT = 8750

# Codes that signal a failed path lookup; everything else is a bad request.
_NOT_FOUND_CODES = {UnknownDocumentError.code, UnknownTopicError.code}


@dataclass
class AppConfig:
    """Everything needed to train and serve one corpus."""

    corpus_path: Path
    corpus_format: str
    preprocess: PreprocessConfig
    lda: LdaConfig
    keyterms: KeytermPolicy
    model_path: Path
    host: str = DEFAULT_HOST
    port: int = DEFAULT_PORT
    static_dir: Path | None = None

    @classmethod
    def from_file(cls, path: str | Path) -> "AppConfig":
        """Parse a JSON config file; relative paths resolve against it."""
        p = Path(path)
        if not p.is_file():
            raise ConfigError(f"config file not found: {p}")
        try:
            data = json.loads(p.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError, UnicodeDecodeError) as exc:
            raise ConfigError(f"cannot parse config file {p}: {exc}") from exc
        return cls.from_dict(data, base_dir=p.parent)

    @classmethod
    def from_dict(cls, data: dict, base_dir: Path | None = None) -> "AppConfig":
        base = base_dir or Path.cwd()

        def _resolve(value: str) -> Path:
            q = Path(value)
            return q if q.is_absolute() else base / q

        try:
            known = {"corpus", "preprocess", "lda", "keyterms", "model_path", "server"}
            unknown = set(data) - known
            if unknown:
                raise ConfigError(f"unknown config keys: {sorted(unknown)}")

            corpus_section = dict(data.get("corpus") or {})
            corpus_path = corpus_section.pop("path", None)
            if not corpus_path:
                raise ConfigError("config is missing corpus.path")
            corpus_format = corpus_section.pop("format", "jsonl")
            if corpus_format not in CORPUS_FORMATS:
                raise ConfigError(f"unknown corpus.format: {corpus_format!r}")
            if corpus_section:
                raise ConfigError(f"unknown corpus keys: {sorted(corpus_section)}")

            pre_section = dict(data.get("preprocess") or {})
            stopwords_path = pre_section.pop("stopwords_path", None)
            stopwords = (
                load_stopwords(_resolve(stopwords_path))
                if stopwords_path
                else frozenset()
            )
            preprocess = PreprocessConfig(stopwords=stopwords, **pre_section)

            lda_config = LdaConfig(**(data.get("lda") or {}))
            policy = KeytermPolicy(**(data.get("keyterms") or {}))

            model_path = data.get("model_path")
            if not model_path:
                raise ConfigError("config is missing model_path")

            server = dict(data.get("server") or {})
            host = server.pop("host", DEFAULT_HOST)
            port = server.pop("port", DEFAULT_PORT)
            static_dir = server.pop("static_dir", None)
            if server:
                raise ConfigError(f"unknown server keys: {sorted(server)}")
            if not isinstance(port, int) or not 0 < port < 65536:
                raise ConfigError(f"invalid server.port: {port!r}")
        except TypeError as exc:
            raise ConfigError(f"invalid config: {exc}") from exc

        return cls(
            corpus_path=_resolve(corpus_path),
            corpus_format=corpus_format,
            preprocess=preprocess,
            lda=lda_config,
            keyterms=policy,
            model_path=_resolve(model_path),
            host=host,
            port=port,
            static_dir=_resolve(static_dir) if static_dir else None,
        )

    def with_seed(self, seed: int) -> "AppConfig":
        updated = replace(self)
        updated.lda = LdaConfig(
            num_topics=self.lda.num_topics,
            alpha=self.lda.alpha,
            beta=self.lda.beta,
            iterations=self.lda.iterations,
            burn_in=self.lda.burn_in,
            seed=seed,
        )
        return updated


def to_json_bytes(payload: object) -> bytes:
    """Canonical JSON encoding shared by every endpoint."""
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":")).encode(
        "utf-8"
    )


def topic_payload(model: TopicModel, table: KeytermTable, topic_id: str) -> dict:
    kind, digits = retrieval.parse_node_id(topic_id)
    if kind != "topic":
        raise UnknownTopicError(f"not a topic id: {topic_id!r}")
    k = int(digits)
    if k >= model.num_topics:
        raise UnknownTopicError(f"unknown topic id: {topic_id}")
    terms = model.vocabulary.terms
    selected = table.topics[k]
    return {
        "id": f"T{k}",
        "label": terms[selected[0][0]] if selected else f"T{k}",
        "prevalence": float(model.prevalence[k]),
        "keyterms": [{"term": terms[t], "score": s} for t, s in selected],
    }


def rank_payload(
    model: TopicModel, corpus: TokenizedCorpus, query: SelectionQuery
) -> dict:
    ranked = retrieval.rank(model, corpus, query)
    return {
        "documents": [
            {"id": d.id, "title": d.title, "score": d.score}
            for d in ranked.documents
        ],
        "total_matching": ranked.total_matching,
    }


def document_payload(documents: Mapping[str, RawDocument], doc_id: str) -> dict:
    doc = documents.get(doc_id)
    if doc is None:
        raise UnknownDocumentError(f"unknown document id: {doc_id!r}")
    return {"id": doc.id, "title": doc.title, "date": doc.date, "body": doc.body}


def _json_response(payload: object, status_code: int = 200) -> Response:
    return Response(
        content=to_json_bytes(payload),
        status_code=status_code,
        media_type="application/json",
    )


def _error_response(code: str, detail: str, status_code: int) -> Response:
    return _json_response({"error": code, "detail": detail}, status_code)


def create_app(
    model: TopicModel,
    corpus: TokenizedCorpus,
    documents: Mapping[str, RawDocument],
    policy: KeytermPolicy,
    static_dir: Path | None = None,
) -> FastAPI:
    """Build the application around one immutable model/corpus pair."""
    if model.doc_ids != corpus.doc_ids:
        raise ConfigError("model and corpus hold different document sets")

    table = select_keyterms(model, policy)
    graph_bytes = graphmod.export_graph(graphmod.build_graph(model, table)).encode(
        "utf-8"
    )

    app = FastAPI(title="topiclens", docs_url=None, redoc_url=None)

    @app.exception_handler(TopicLensError)
    async def _handle_domain_error(_request, exc: TopicLensError):
        status = 404 if exc.code in _NOT_FOUND_CODES else 400
        return _error_response(exc.code, str(exc), status)

    @app.exception_handler(RequestValidationError)
    async def _handle_validation_error(_request, _exc):
        return _error_response("invalid_request", "invalid request parameters", 400)

    @app.get("/api/graph")
    def get_graph() -> Response:
        return Response(content=graph_bytes, media_type="application/json")

    @app.get("/api/topics/{topic_id}")
    def get_topic(topic_id: str) -> Response:
        try:
            payload = topic_payload(model, table, topic_id)
        except UnknownNodeError as exc:
            raise UnknownTopicError(str(exc)) from None
        return _json_response(payload)

    @app.get("/api/rank")
    def get_rank(nodes: str = "", limit: int = retrieval.DEFAULT_LIMIT) -> Response:
        selected = [n for n in nodes.split(",") if n]
        if not selected:
            raise EmptySelectionError("query parameter 'nodes' is empty")
        try:
            query = SelectionQuery(selected, limit=limit)
            payload = rank_payload(model, corpus, query)
        except ValueError as exc:
            return _error_response("invalid_limit", str(exc), 400)
        except TopicLensError as exc:
            # unknown nodes in a query are a client error, not a missing page
            return _error_response(exc.code, str(exc), 400)
        return _json_response(payload)

    @app.get("/api/document/{doc_id}")
    def get_document(doc_id: str) -> Response:
        return _json_response(document_payload(documents, doc_id))

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    else:

        @app.get("/")
        def index() -> Response:
            return Response(
                content=(
                    "<html><body><h1>topiclens</h1>"
                    "<p>No UI bundle configured. API endpoints: /api/graph, "
                    "/api/topics/{id}, /api/rank?nodes=..., /api/document/{id}"
                    "</p></body></html>"
                ),
                media_type="text/html",
            )

    return app


def load_serving_state(
    config: AppConfig,
) -> tuple[TopicModel, TokenizedCorpus, dict[str, RawDocument]]:
    """Load the persisted model and re-derive the corpus it was trained on.

    Tokenization is deterministic, so re-running it with the configured
    preprocessing reproduces the training corpus; a vocabulary or document
    mismatch means the config no longer matches the model file.
    """
    model = persist.load_model(config.model_path)
    raw_docs = ingest(config.corpus_path, config.corpus_format)
    corpus = tokenize(raw_docs, config.preprocess)
    if corpus.vocabulary != model.vocabulary or corpus.doc_ids != model.doc_ids:
        raise ConfigError(
            "corpus/preprocess config does not reproduce the corpus this model "
            "was trained on; retrain or fix the config"
        )
    documents = {doc.id: doc for doc in raw_docs}
    return model, corpus, documents


def serve(config: AppConfig) -> None:
    """Run the service until interrupted."""
    import uvicorn

    if config.static_dir is not None and not config.static_dir.is_dir():
        raise ConfigError(f"static_dir is not a directory: {config.static_dir}")
    model, corpus, documents = load_serving_state(config)
    app = create_app(
        model, corpus, documents, config.keyterms, static_dir=config.static_dir
    )
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
