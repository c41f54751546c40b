"""Bipartite topic-keyterm graph construction and JSON serialization.

Topic nodes connect to term nodes only; link weight is the keyterm's
distinguishing score (the UI maps it to link opacity), node radius encodes
topic prevalence by area, and colors index into a qualitative palette that
ships inside the export so every consumer renders the same hues.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources

import jsonschema

from .errors import FormatError
from .keyterms import KeytermTable
from .lda import TopicModel

GRAPH_VERSION = 1

#: Qualitative 10-hue palette; topic k uses palette[k % len(palette)].
PALETTE = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
    "#bcbd22",
    "#17becf",
)

#: Radius of a (hypothetical) prevalence-1.0 topic, in display units.
BASE_RADIUS = 36.0
#: Floor that keeps near-empty topics clickable.
MIN_RADIUS = 4.0


@dataclass(frozen=True)
class TopicNode:
    id: str
    label: str
    prevalence: float
    radius: float
    color: int


@dataclass(frozen=True)
class TermNode:
    id: str
    label: str


@dataclass(frozen=True)
class GraphLink:
    source: str  # topic node id
    target: str  # term node id
    weight: float


@dataclass(frozen=True)
class TopicGraph:
    palette: tuple[str, ...]
    topics: tuple[TopicNode, ...]
    terms: tuple[TermNode, ...]
    links: tuple[GraphLink, ...]


def topic_node_id(topic: int) -> str:
    return f"T{topic}"


def term_node_id(term: str) -> str:
    return f"w:{term}"


def build_graph(
    model: TopicModel,
    table: KeytermTable,
    *,
    base_radius: float = BASE_RADIUS,
    min_radius: float = MIN_RADIUS,
    palette: tuple[str, ...] = PALETTE,
) -> TopicGraph:
    """Assemble the graph for a model and its selected keyterms.

    Every topic appears (keyterm-less topics become isolated nodes); term
    nodes exist only for selected keyterms, so each has degree >= 1. Output
    ordering is deterministic: topics by index, terms lexicographic, links
    by (topic index, term string).
    """
    if table.num_topics != model.num_topics:
        raise ValueError("keyterm table does not match the model's topic count")
    terms = model.vocabulary.terms

    topic_nodes = []
    for k in range(model.num_topics):
        selected = table.topics[k]
        label = terms[selected[0][0]] if selected else topic_node_id(k)
        prevalence = float(model.prevalence[k])
        radius = max(base_radius * math.sqrt(prevalence), min_radius)
        topic_nodes.append(
            TopicNode(
                id=topic_node_id(k),
                label=label,
                prevalence=prevalence,
                radius=radius,
                color=k % len(palette),
            )
        )

    selected_terms = sorted({terms[t] for kept in table.topics for t, _ in kept})
    term_nodes = [TermNode(id=term_node_id(t), label=t) for t in selected_terms]

    links = []
    for k in range(model.num_topics):
        by_term = sorted((terms[t], s) for t, s in table.topics[k])
        links.extend(
            GraphLink(source=topic_node_id(k), target=term_node_id(t), weight=s)
            for t, s in by_term
        )

    return TopicGraph(
        palette=tuple(palette),
        topics=tuple(topic_nodes),
        terms=tuple(term_nodes),
        links=tuple(links),
    )


def graph_to_dict(graph: TopicGraph) -> dict:
    return {
        "graph_version": GRAPH_VERSION,
        "palette": list(graph.palette),
        "topics": [
            {
                "id": t.id,
                "label": t.label,
                "prevalence": t.prevalence,
                "radius": t.radius,
                "color": t.color,
            }
            for t in graph.topics
        ],
        "terms": [{"id": t.id, "label": t.label} for t in graph.terms],
        "links": [
            {"source": l.source, "target": l.target, "weight": l.weight}
            for l in graph.links
        ],
    }


def export_graph(graph: TopicGraph) -> str:
    """Serialize to the version-1 JSON document; byte-stable per graph."""
    return json.dumps(graph_to_dict(graph), ensure_ascii=False, separators=(",", ":"))


def graph_from_json(text: str | bytes) -> TopicGraph:
    """Parse an exported document back into an equal TopicGraph."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"graph document is not valid JSON: {exc.msg}") from None
    validate_graph_dict(data)
    return TopicGraph(
        palette=tuple(data["palette"]),
        topics=tuple(
            TopicNode(
                id=t["id"],
                label=t["label"],
                prevalence=t["prevalence"],
                radius=t["radius"],
                color=t["color"],
            )
            for t in data["topics"]
        ),
        terms=tuple(TermNode(id=t["id"], label=t["label"]) for t in data["terms"]),
        links=tuple(
            GraphLink(source=l["source"], target=l["target"], weight=l["weight"])
            for l in data["links"]
        ),
    )


def load_schema() -> dict:
    """The published graph JSON schema, as shipped with the package."""
    schema_text = (
        resources.files("topiclens").joinpath("schemas/graph.schema.json").read_text()
    )
    return json.loads(schema_text)


def validate_graph_dict(data: dict) -> None:
    """Validate a parsed graph document against the schema plus the
    cross-field rules the schema language cannot express."""
    try:
        jsonschema.validate(data, load_schema())
    except jsonschema.ValidationError as exc:
        raise FormatError(f"graph document violates schema: {exc.message}") from None

    palette_size = len(data["palette"])
    topic_ids = {t["id"] for t in data["topics"]}
    term_ids = {t["id"] for t in data["terms"]}
    if len(topic_ids) != len(data["topics"]) or len(term_ids) != len(data["terms"]):
        raise FormatError("duplicate node ids")
    if topic_ids & term_ids:
        raise FormatError("node ids must be unique across topic and term nodes")
    for t in data["topics"]:
        if t["color"] >= palette_size:
            raise FormatError(f"color index {t['color']} outside palette")
    linked_terms = set()
    for l in data["links"]:
        if l["source"] not in topic_ids:
            raise FormatError(f"link source {l['source']!r} is not a topic node")
        if l["target"] not in term_ids:
            raise FormatError(f"link target {l['target']!r} is not a term node")
        linked_terms.add(l["target"])
    if linked_terms != term_ids:
        raise FormatError("every term node must have at least one link")
