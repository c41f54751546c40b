/** ViewState container and pure reducers.
 *
 * Every user interaction maps to a reducer; the scene is re-derived from the
 * state, so replaying a recorded event script reproduces the same final
 * state.
 */

import {
  InteractionEvent,
  PanelState,
  RankResult,
  ViewState,
  Viewport,
} from "./types";
import { MAX_ZOOM, MIN_ZOOM } from "./style";

const EMPTY_PANEL: PanelState = {
  docs: [],
  totalMatching: 0,
  loading: false,
  error: null,
};

export function initialViewState(): ViewState {
  return {
    focused: null,
    selected: [],
    viewport: { x: 0, y: 0, k: 1 },
    panel: { ...EMPTY_PANEL },
  };
}

export function setFocus(state: ViewState, node: string | null): ViewState {
  return { ...state, focused: node };
}

export interface SelectionChange {
  state: ViewState;
  /** Node ids to rank, or null when the selection became empty (panel
   * cleared, no request issued). */
  request: string[] | null;
}

/** Double-click semantics: toggle membership, keep insertion order. */
export function toggleSelect(state: ViewState, node: string): SelectionChange {
  const selected = state.selected.includes(node)
    ? state.selected.filter((id) => id !== node)
    : [...state.selected, node];
  if (selected.length === 0) {
    return {
      state: { ...state, selected, panel: { ...EMPTY_PANEL } },
      request: null,
    };
  }
  return {
    state: { ...state, selected, panel: { ...state.panel, loading: true } },
    request: selected,
  };
}

export function applyRankResult(state: ViewState, result: RankResult): ViewState {
  return {
    ...state,
    panel: {
      docs: result.documents,
      totalMatching: result.total_matching,
      loading: false,
      error: null,
    },
  };
}

export function applyRankError(state: ViewState, message: string): ViewState {
  // the selection itself survives request failures
  return { ...state, panel: { ...state.panel, loading: false, error: message } };
}

function clampZoom(k: number): number {
  return Math.min(MAX_ZOOM, Math.max(MIN_ZOOM, k));
}

/** Zoom about a screen-space cursor: the world point under the cursor keeps
 * its screen position. */
export function zoomAt(
  state: ViewState,
  cursor: [number, number],
  factor: number,
): ViewState {
  const { x, y, k } = state.viewport;
  const next = clampZoom(k * factor);
  const ratio = next / k;
  const viewport: Viewport = {
    x: cursor[0] - (cursor[0] - x) * ratio,
    y: cursor[1] - (cursor[1] - y) * ratio,
    k: next,
  };
  return { ...state, viewport };
}

export function panBy(state: ViewState, dx: number, dy: number): ViewState {
  const { x, y, k } = state.viewport;
  return { ...state, viewport: { x: x + dx, y: y + dy, k } };
}

/** Screen coordinates of a world point under the current viewport. */
export function toScreen(viewport: Viewport, point: [number, number]): [number, number] {
  return [point[0] * viewport.k + viewport.x, point[1] * viewport.k + viewport.y];
}

function sameNodes(a: string[], b: string[]): boolean {
  return a.length === b.length && a.every((id, i) => id === b[i]);
}

/** Fold a recorded interaction script into a final state. Rank responses
 * apply only when they answer the current selection (last write wins). */
export function replay(
  events: InteractionEvent[],
  start: ViewState = initialViewState(),
): ViewState {
  let state = start;
  for (const event of events) {
    switch (event.kind) {
      case "focus":
        state = setFocus(state, event.node);
        break;
      case "toggle-select":
        state = toggleSelect(state, event.node).state;
        break;
      case "zoom":
        state = zoomAt(state, event.cursor, event.factor);
        break;
      case "pan":
        state = panBy(state, event.dx, event.dy);
        break;
      case "rank-result":
        if (sameNodes(event.nodes, state.selected)) {
          state = applyRankResult(state, event.result);
        }
        break;
      case "rank-error":
        if (sameNodes(event.nodes, state.selected)) {
          state = applyRankError(state, event.message);
        }
        break;
    }
  }
  return state;
}
