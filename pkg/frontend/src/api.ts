/** Thin client for the engine's read-only HTTP API. */

import { GraphDoc, RankResult, parseGraphDoc } from "./types";

export const DEFAULT_LIMIT = 50;

export function buildRankUrl(nodes: string[], limit: number = DEFAULT_LIMIT): string {
  return `/api/rank?nodes=${encodeURIComponent(nodes.join(","))}&limit=${limit}`;
}

export function documentUrl(docId: string): string {
  return `/api/document/${encodeURIComponent(docId)}`;
}

type Fetcher = (url: string) => Promise<Response>;

async function errorDetail(response: Response): Promise<string> {
  try {
    const body = (await response.json()) as { error?: string; detail?: string };
    return body.detail ?? body.error ?? `HTTP ${response.status}`;
  } catch {
    return `HTTP ${response.status}`;
  }
}

export async function fetchGraph(fetcher: Fetcher = fetch): Promise<GraphDoc> {
  const response = await fetcher("/api/graph");
  if (!response.ok) {
    throw new Error(await errorDetail(response));
  }
  return parseGraphDoc(await response.json());
}

/** Issues rank requests; at most one response wins per selection state.
 * A newer submission supersedes any in-flight one: stale responses resolve
 * to null and must be ignored by the caller. */
export class RankClient {
  private seq = 0;

  constructor(
    private fetcher: Fetcher = fetch,
    private limit: number = DEFAULT_LIMIT,
  ) {}

  async submit(nodes: string[]): Promise<RankResult | null> {
    const ticket = ++this.seq;
    const response = await this.fetcher(buildRankUrl(nodes, this.limit));
    if (ticket !== this.seq) {
      return null; // superseded while waiting
    }
    if (!response.ok) {
      throw new Error(await errorDetail(response));
    }
    const result = (await response.json()) as RankResult;
    return ticket === this.seq ? result : null;
  }
}
