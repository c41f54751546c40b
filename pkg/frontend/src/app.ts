/** Controller binding state reducers, the scene and the rank client.
 *
 * All interaction handlers live here so tests can drive them directly;
 * main.ts only wires DOM events to these methods.
 */

import { RankClient } from "./api";
import { renderPanel } from "./panel";
import { Scene, applySelection, applyViewState, renderScene } from "./render";
import {
  applyRankError,
  applyRankResult,
  initialViewState,
  panBy,
  setFocus,
  toggleSelect,
  zoomAt,
} from "./state";
import { GraphDoc, ViewState } from "./types";

export class TopicLensApp {
  state: ViewState = initialViewState();
  readonly scene: Scene;

  constructor(
    graphContainer: HTMLElement,
    private panelRoot: HTMLElement,
    graph: GraphDoc,
    private client: RankClient,
    width = 960,
    height = 640,
  ) {
    this.scene = renderScene(graphContainer, graph, width, height);
    applyViewState(this.scene, this.state);
    renderPanel(this.panelRoot, this.state.panel);
  }

  focus(node: string | null): void {
    this.state = setFocus(this.state, node);
    applyViewState(this.scene, this.state);
  }

  /** Double-click handler: toggle the node and refresh the panel with one
   * rank request (or clear it when the selection empties). */
  async toggleSelect(node: string): Promise<void> {
    const { state, request } = toggleSelect(this.state, node);
    this.state = state;
    applySelection(this.scene, state.selected);
    renderPanel(this.panelRoot, state.panel);
    if (request === null) {
      return;
    }
    try {
      const result = await this.client.submit(request);
      if (result === null) {
        return; // superseded by a newer selection change
      }
      this.state = applyRankResult(this.state, result);
    } catch (err) {
      this.state = applyRankError(this.state, String((err as Error).message ?? err));
    }
    renderPanel(this.panelRoot, this.state.panel);
  }

  zoom(cursor: [number, number], factor: number): void {
    this.state = zoomAt(this.state, cursor, factor);
    applyViewState(this.scene, this.state);
  }

  pan(dx: number, dy: number): void {
    this.state = panBy(this.state, dx, dy);
    applyViewState(this.scene, this.state);
  }
}
