"""topiclens: LDA topic-model training, keyterm graphs and document retrieval.

Pipeline: ingest -> tokenize -> train -> select_keyterms -> build_graph,
with `retrieval.rank` answering node-selection queries and `service`
exposing everything over HTTP for the interactive UI.
"""

from .corpus import (
    PreprocessConfig,
    RawDocument,
    TokenizedCorpus,
    Vocabulary,
    ingest,
    load_stopwords,
    tokenize,
)
from .graph import TopicGraph, build_graph, export_graph, graph_from_json
from .keyterms import KeytermPolicy, KeytermTable, score, select_keyterms
from .lda import GibbsState, LdaConfig, TopicModel, gibbs_sweep, log_likelihood, train
from .persist import load_model, save_model
from .retrieval import (
    RankedDocuments,
    SelectionQuery,
    rank,
    score_term,
    score_topic,
)
from .service import AppConfig, create_app

__version__ = "0.1.0"

__all__ = [
    "AppConfig",
    "GibbsState",
    "KeytermPolicy",
    "KeytermTable",
    "LdaConfig",
    "PreprocessConfig",
    "RankedDocuments",
    "RawDocument",
    "SelectionQuery",
    "TokenizedCorpus",
    "TopicGraph",
    "TopicModel",
    "Vocabulary",
    "build_graph",
    "create_app",
    "export_graph",
    "gibbs_sweep",
    "graph_from_json",
    "ingest",
    "load_model",
    "load_stopwords",
    "log_likelihood",
    "rank",
    "save_model",
    "score",
    "score_term",
    "score_topic",
    "select_keyterms",
    "tokenize",
    "train",
]
