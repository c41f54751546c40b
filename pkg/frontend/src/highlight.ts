/** Focus+context: pure computation of per-element opacities and font sizes.
 *
 * Fading never removes elements, so the rendered element counts stay
 * constant regardless of focus.
 */

import { GraphDoc } from "./types";
import {
  BASE_FONT_SIZE,
  FADED_OPACITY,
  keytermFontSize,
  linkOpacity,
} from "./style";

export interface HighlightMap {
  /** node id -> opacity */
  nodeOpacity: Map<string, number>;
  /** link index (into graph.links) -> opacity */
  linkOpacityByIndex: Map<number, number>;
  /** term node id -> label font size */
  termFontSize: Map<string, number>;
}

export function computeHighlight(
  graph: GraphDoc,
  focused: string | null,
): HighlightMap {
  const nodeOpacity = new Map<string, number>();
  const linkOpacityByIndex = new Map<number, number>();
  const termFontSize = new Map<string, number>();
  for (const term of graph.terms) {
    termFontSize.set(term.id, BASE_FONT_SIZE);
  }

  if (focused === null) {
    // overview: everything visible, link opacity encodes weight
    for (const node of [...graph.topics, ...graph.terms]) {
      nodeOpacity.set(node.id, 1);
    }
    graph.links.forEach((link, i) => {
      linkOpacityByIndex.set(i, linkOpacity(link.weight));
    });
    return { nodeOpacity, linkOpacityByIndex, termFontSize };
  }

  const neighborhood = new Set<string>([focused]);
  const focusedLinks = new Set<number>();
  graph.links.forEach((link, i) => {
    if (link.source === focused || link.target === focused) {
      neighborhood.add(link.source);
      neighborhood.add(link.target);
      focusedLinks.add(i);
    }
  });

  for (const node of [...graph.topics, ...graph.terms]) {
    nodeOpacity.set(node.id, neighborhood.has(node.id) ? 1 : FADED_OPACITY);
  }
  graph.links.forEach((_link, i) => {
    linkOpacityByIndex.set(i, focusedLinks.has(i) ? 1 : FADED_OPACITY);
  });

  // topic cloud: the focused topic's keyterm labels scale with their score
  const isTopic = graph.topics.some((t) => t.id === focused);
  if (isTopic) {
    graph.links.forEach((link) => {
      if (link.source === focused) {
        termFontSize.set(link.target, keytermFontSize(link.weight));
      }
    });
  }
  return { nodeOpacity, linkOpacityByIndex, termFontSize };
}
