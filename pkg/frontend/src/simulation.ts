/** Force-directed layout over the bipartite graph.
 *
 * Link strength grows with keyterm weight so strongly associated terms sit
 * closer to their topics, and shared terms settle between the topics that
 * use them. Damping is tuned soft: after a drag the layout re-forms over a
 * couple of seconds, slow enough to move several nodes around.
 */

import {
  forceCenter,
  forceCollide,
  forceLink,
  forceManyBody,
  forceSimulation,
  Simulation,
  SimulationLinkDatum,
  SimulationNodeDatum,
} from "d3-force";

import { GraphDoc } from "./types";

export interface SimNode extends SimulationNodeDatum {
  id: string;
  kind: "topic" | "term";
  label: string;
  radius: number;
  color: number;
}

export interface SimLink extends SimulationLinkDatum<SimNode> {
  weight: number;
}

export const DRAG_ALPHA_TARGET = 0.3;

export function buildNodes(graph: GraphDoc): SimNode[] {
  const topics: SimNode[] = graph.topics.map((t) => ({
    id: t.id,
    kind: "topic",
    label: t.label,
    radius: t.radius,
    color: t.color,
  }));
  const terms: SimNode[] = graph.terms.map((t) => ({
    id: t.id,
    kind: "term",
    label: t.label,
    radius: 0,
    color: -1,
  }));
  return [...topics, ...terms];
}

export function buildLinks(graph: GraphDoc): SimLink[] {
  return graph.links.map((l) => ({
    source: l.source,
    target: l.target,
    weight: l.weight,
  }));
}

export function createSimulation(
  nodes: SimNode[],
  links: SimLink[],
  width: number,
  height: number,
): Simulation<SimNode, SimLink> {
  return forceSimulation(nodes)
    .force(
      "link",
      forceLink<SimNode, SimLink>(links)
        .id((n) => n.id)
        .distance((l) => 90 - 50 * l.weight)
        .strength((l) => 0.2 + 0.8 * l.weight),
    )
    .force("charge", forceManyBody().strength(-160))
    .force("center", forceCenter(width / 2, height / 2))
    .force(
      "collide",
      forceCollide<SimNode>().radius((n) => (n.kind === "topic" ? n.radius + 6 : 14)),
    )
    .velocityDecay(0.55);
}

/** Run the simulation synchronously until it cools down. */
export function settle(
  simulation: Simulation<SimNode, SimLink>,
  maxTicks = 300,
): void {
  simulation.stop();
  for (let i = 0; i < maxTicks && simulation.alpha() > simulation.alphaMin(); i++) {
    simulation.tick();
  }
}

/** Pin the node to the pointer and reheat so the rest re-layouts live. */
export function startDrag(
  simulation: Simulation<SimNode, SimLink>,
  node: SimNode,
): void {
  simulation.alphaTarget(DRAG_ALPHA_TARGET).restart();
  node.fx = node.x;
  node.fy = node.y;
}

export function moveDrag(node: SimNode, x: number, y: number): void {
  node.fx = x;
  node.fy = y;
}

/** Release the pin and let the simulation cool back down. */
export function endDrag(
  simulation: Simulation<SimNode, SimLink>,
  node: SimNode,
): void {
  simulation.alphaTarget(0);
  node.fx = null;
  node.fy = null;
}
