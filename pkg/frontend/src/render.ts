/** SVG scene: builds the DOM for the graph and applies state-derived styles.
 *
 * The scene is dumb on purpose; which element gets which opacity, font size
 * or ring is decided by the pure helpers in highlight.ts and state.ts.
 */

import { select, Selection } from "d3-selection";

import { computeHighlight } from "./highlight";
import { SimLink, SimNode, buildLinks, buildNodes, createSimulation } from "./simulation";
import { GraphDoc, ViewState, Viewport } from "./types";

type Sel<E extends Element, D> = Selection<E, D, SVGGElement, unknown>;

export interface Scene {
  svg: Selection<SVGSVGElement, unknown, null, undefined>;
  viewportLayer: Selection<SVGGElement, unknown, null, undefined>;
  nodes: SimNode[];
  links: SimLink[];
  linkSel: Sel<SVGLineElement, SimLink>;
  topicSel: Sel<SVGGElement, SimNode>;
  termSel: Sel<SVGTextElement, SimNode>;
  simulation: ReturnType<typeof createSimulation>;
  graph: GraphDoc;
}

export function renderScene(
  container: HTMLElement,
  graph: GraphDoc,
  width: number,
  height: number,
): Scene {
  const svg = select(container)
    .append("svg")
    .attr("width", width)
    .attr("height", height)
    .attr("viewBox", `0 0 ${width} ${height}`);
  const viewportLayer = svg.append("g").attr("class", "viewport");

  const nodes = buildNodes(graph);
  const links = buildLinks(graph);
  const simulation = createSimulation(nodes, links, width, height);

  const linkSel = viewportLayer
    .append("g")
    .attr("class", "links")
    .selectAll<SVGLineElement, SimLink>("line")
    .data(links)
    .join("line")
    .attr("class", "link")
    .attr("stroke", "#555");

  const topicSel = viewportLayer
    .append("g")
    .attr("class", "topics")
    .selectAll<SVGGElement, SimNode>("g")
    .data(nodes.filter((n) => n.kind === "topic"))
    .join("g")
    .attr("class", "topic")
    .attr("data-id", (n) => n.id);
  topicSel
    .append("circle")
    .attr("r", (n) => n.radius)
    .attr("fill", (n) => graph.palette[n.color]);
  topicSel
    .append("text")
    .attr("class", "topic-label")
    .attr("text-anchor", "middle")
    .attr("dy", "0.35em")
    .text((n) => n.id);

  const termSel = viewportLayer
    .append("g")
    .attr("class", "terms")
    .selectAll<SVGTextElement, SimNode>("text")
    .data(nodes.filter((n) => n.kind === "term"))
    .join("text")
    .attr("class", "term")
    .attr("data-id", (n) => n.id)
    .attr("text-anchor", "middle")
    .text((n) => n.label);

  simulation.on("tick", () => updatePositions(linkSel, topicSel, termSel));
  return { svg, viewportLayer, nodes, links, linkSel, topicSel, termSel, simulation, graph };
}

function updatePositions(
  linkSel: Sel<SVGLineElement, SimLink>,
  topicSel: Sel<SVGGElement, SimNode>,
  termSel: Sel<SVGTextElement, SimNode>,
): void {
  linkSel
    .attr("x1", (l) => (l.source as SimNode).x ?? 0)
    .attr("y1", (l) => (l.source as SimNode).y ?? 0)
    .attr("x2", (l) => (l.target as SimNode).x ?? 0)
    .attr("y2", (l) => (l.target as SimNode).y ?? 0);
  topicSel.attr("transform", (n) => `translate(${n.x ?? 0},${n.y ?? 0})`);
  termSel.attr("x", (n) => n.x ?? 0).attr("y", (n) => n.y ?? 0);
}

/** Re-style the scene for the current focus (opacity + topic-cloud fonts). */
export function applyFocus(scene: Scene, focused: string | null): void {
  const highlight = computeHighlight(scene.graph, focused);
  scene.topicSel.attr("opacity", (n) => highlight.nodeOpacity.get(n.id) ?? 1);
  scene.termSel
    .attr("opacity", (n) => highlight.nodeOpacity.get(n.id) ?? 1)
    .attr("font-size", (n) => highlight.termFontSize.get(n.id) ?? null);
  scene.linkSel.attr("stroke-opacity", (_l, i) =>
    highlight.linkOpacityByIndex.get(i) ?? 1,
  );
}

/** Persistent ring on selected nodes. */
export function applySelection(scene: Scene, selected: string[]): void {
  const chosen = new Set(selected);
  scene.topicSel.classed("selected", (n) => chosen.has(n.id));
  scene.termSel.classed("selected", (n) => chosen.has(n.id));
}

export function applyViewport(scene: Scene, viewport: Viewport): void {
  scene.viewportLayer.attr(
    "transform",
    `translate(${viewport.x},${viewport.y}) scale(${viewport.k})`,
  );
}

export function applyViewState(scene: Scene, state: ViewState): void {
  applyFocus(scene, state.focused);
  applySelection(scene, state.selected);
  applyViewport(scene, state.viewport);
}
