"""Command-line entry points: train a model, export a graph, serve the API."""

from __future__ import annotations

import sys
from functools import wraps
from pathlib import Path

import click

from . import graph as graphmod
from . import lda, persist
from .corpus import ingest, tokenize
from .errors import TopicLensError
from .keyterms import KeytermPolicy, select_keyterms
from .service import AppConfig, serve

#: Exit code for input problems (bad config, unreadable corpus, bad data).
EXIT_INPUT_ERROR = 2


def _domain_errors_to_exit(fn):
    @wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except TopicLensError as exc:
            click.echo(f"error ({exc.code}): {exc}", err=True)
            sys.exit(EXIT_INPUT_ERROR)

    return wrapper


@click.group()
def main() -> None:
    """Train, inspect and serve topic models over text corpora."""


@main.command()
@click.option(
    "--config",
    "config_path",
    required=True,
    type=click.Path(path_type=Path),
    help="JSON app config file.",
)
@click.option("--seed", type=int, default=None, help="Override the configured seed.")
@_domain_errors_to_exit
def train(config_path: Path, seed: int | None) -> None:
    """Ingest the corpus, train the model and persist it."""
    config = AppConfig.from_file(config_path)
    if seed is not None:
        config = config.with_seed(seed)

    docs = ingest(config.corpus_path, config.corpus_format)
    click.echo(f"ingested {len(docs)} documents from {config.corpus_path}")
    corpus = tokenize(docs, config.preprocess)
    click.echo(
        f"tokenized: {corpus.num_documents} documents, "
        f"{len(corpus.vocabulary)} terms, {corpus.total_tokens} tokens"
        + (f" ({len(corpus.dropped_ids)} dropped as empty)" if corpus.dropped_ids else "")
    )

    total = config.lda.iterations

    def report(sweep: int, loglik: float) -> None:
        if sweep % 100 == 0 or sweep == total:
            click.echo(f"sweep {sweep}/{total}  log-likelihood {loglik:.3f}")

    model = lda.train(corpus, config.lda, progress=report)
    persist.save_model(model, config.model_path)
    click.echo(f"model written to {config.model_path}")


@main.command("export-graph")
@click.option(
    "--model",
    "model_path",
    required=True,
    type=click.Path(path_type=Path),
    help="Persisted model file.",
)
@click.option(
    "--out",
    "out_path",
    required=True,
    type=click.Path(path_type=Path),
    help="Output path for the graph JSON document.",
)
@click.option(
    "--config",
    "config_path",
    type=click.Path(path_type=Path),
    default=None,
    help="Optional app config supplying the keyterm policy (defaults otherwise).",
)
@_domain_errors_to_exit
def export_graph(model_path: Path, out_path: Path, config_path: Path | None) -> None:
    """Select keyterms and write the topic-keyterm graph JSON."""
    policy = (
        AppConfig.from_file(config_path).keyterms if config_path else KeytermPolicy()
    )
    model = persist.load_model(model_path)
    table = select_keyterms(model, policy)
    document = graphmod.export_graph(graphmod.build_graph(model, table))
    out_path.write_text(document, encoding="utf-8")
    click.echo(
        f"graph written to {out_path} "
        f"({len(table.topics)} topics, {sum(len(t) for t in table.topics)} keyterm links)"
    )


@main.command("serve")
@click.option(
    "--config",
    "config_path",
    required=True,
    type=click.Path(path_type=Path),
    help="JSON app config file.",
)
@_domain_errors_to_exit
def serve_cmd(config_path: Path) -> None:
    """Serve the graph, retrieval and document API over a trained model."""
    serve(AppConfig.from_file(config_path))


if __name__ == "__main__":
    main()
