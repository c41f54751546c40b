/** Data contracts shared with the engine's HTTP API. */

export interface TopicNodeInfo {
  id: string; // "T<k>"
  label: string;
  prevalence: number;
  radius: number;
  color: number; // index into palette
}

export interface TermNodeInfo {
  id: string; // "w:<term>"
  label: string;
}

export interface LinkInfo {
  source: string; // topic node id
  target: string; // term node id
  weight: number; // keyterm score in (0, 1]
}

export interface GraphDoc {
  graph_version: number;
  palette: string[];
  topics: TopicNodeInfo[];
  terms: TermNodeInfo[];
  links: LinkInfo[];
}

export interface RankedDoc {
  id: string;
  title: string;
  score: number;
}

export interface RankResult {
  documents: RankedDoc[];
  total_matching: number;
}

export interface Viewport {
  x: number;
  y: number;
  k: number; // zoom scale
}

export interface PanelState {
  docs: RankedDoc[];
  totalMatching: number;
  loading: boolean;
  error: string | null;
}

export interface ViewState {
  focused: string | null;
  selected: string[]; // insertion-ordered node ids
  viewport: Viewport;
  panel: PanelState;
}

/** Recorded user interactions; replaying a script must reproduce the
 * same final ViewState. */
export type InteractionEvent =
  | { kind: "focus"; node: string | null }
  | { kind: "toggle-select"; node: string }
  | { kind: "zoom"; cursor: [number, number]; factor: number }
  | { kind: "pan"; dx: number; dy: number }
  | { kind: "rank-result"; nodes: string[]; result: RankResult }
  | { kind: "rank-error"; nodes: string[]; message: string };

export class GraphSchemaError extends Error {}

const GRAPH_VERSION = 1;

/** Validate a fetched graph document before rendering anything. */
export function parseGraphDoc(data: unknown): GraphDoc {
  const doc = data as GraphDoc;
  if (!doc || typeof doc !== "object") {
    throw new GraphSchemaError("graph document is not an object");
  }
  if (doc.graph_version !== GRAPH_VERSION) {
    throw new GraphSchemaError(
      `unsupported graph_version ${String(doc.graph_version)}; expected ${GRAPH_VERSION}`,
    );
  }
  for (const field of ["palette", "topics", "terms", "links"] as const) {
    if (!Array.isArray(doc[field])) {
      throw new GraphSchemaError(`graph document is missing ${field}`);
    }
  }
  const ids = new Set<string>();
  for (const node of [...doc.topics, ...doc.terms]) {
    if (!node.id || ids.has(node.id)) {
      throw new GraphSchemaError(`missing or duplicate node id: ${node.id}`);
    }
    ids.add(node.id);
  }
  for (const link of doc.links) {
    if (!ids.has(link.source) || !ids.has(link.target)) {
      throw new GraphSchemaError(
        `link references unknown node: ${link.source} -> ${link.target}`,
      );
    }
  }
  return doc;
}
