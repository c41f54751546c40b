import { describe, expect, it } from "vitest";

import sharedGraphJson from "./fixtures/graph-shared.json";
import { computeHighlight } from "../src/highlight";
import { BASE_FONT_SIZE, FADED_OPACITY, keytermFontSize } from "../src/style";
import { parseGraphDoc } from "../src/types";

const graph = parseGraphDoc(sharedGraphJson);
const sharedTerm = graph.terms
  .map((t) => t.id)
  .find((id) => graph.links.filter((l) => l.target === id).length === 2)!;

describe("computeHighlight", () => {
  it("fixture has a degree-two shared term", () => {
    expect(sharedTerm).toBeDefined();
  });

  it("overview shows everything with weight-encoded links", () => {
    const map = computeHighlight(graph, null);
    for (const node of [...graph.topics, ...graph.terms]) {
      expect(map.nodeOpacity.get(node.id)).toBe(1);
    }
    graph.links.forEach((link, i) => {
      expect(map.linkOpacityByIndex.get(i)).toBeCloseTo(
        0.15 + 0.85 * link.weight,
        12,
      );
    });
  });

  it("topic hover keeps exactly the closed neighborhood visible", () => {
    const topic = graph.topics[0].id;
    const neighborhood = graph.links
      .filter((l) => l.source === topic)
      .map((l) => l.target);
    const map = computeHighlight(graph, topic);

    const fullNodes = [...map.nodeOpacity.entries()].filter(([, o]) => o === 1);
    expect(new Set(fullNodes.map(([id]) => id))).toEqual(
      new Set([topic, ...neighborhood]),
    );
    const fadedNodes = [...map.nodeOpacity.values()].filter(
      (o) => o === FADED_OPACITY,
    );
    expect(fullNodes.length + fadedNodes.length).toBe(
      graph.topics.length + graph.terms.length,
    );

    graph.links.forEach((link, i) => {
      const expected = link.source === topic ? 1 : FADED_OPACITY;
      expect(map.linkOpacityByIndex.get(i)).toBe(expected);
    });
  });

  it("focused topic scales its keyterm labels by score", () => {
    const topic = graph.topics[1].id;
    const map = computeHighlight(graph, topic);
    for (const link of graph.links) {
      const expected =
        link.source === topic ? keytermFontSize(link.weight) : BASE_FONT_SIZE;
      if (link.source === topic) {
        expect(map.termFontSize.get(link.target)).toBeCloseTo(expected, 12);
      }
    }
    for (const term of graph.terms) {
      if (!graph.links.some((l) => l.source === topic && l.target === term.id)) {
        expect(map.termFontSize.get(term.id)).toBe(BASE_FONT_SIZE);
      }
    }
  });

  it("hovering a shared term highlights both of its topics", () => {
    const map = computeHighlight(graph, sharedTerm);
    const linkedTopics = graph.links
      .filter((l) => l.target === sharedTerm)
      .map((l) => l.source);
    expect(linkedTopics).toHaveLength(2);
    for (const topic of linkedTopics) {
      expect(map.nodeOpacity.get(topic)).toBe(1);
    }
    expect(map.nodeOpacity.get(sharedTerm)).toBe(1);
    // every other topic fades
    for (const topic of graph.topics) {
      if (!linkedTopics.includes(topic.id)) {
        expect(map.nodeOpacity.get(topic.id)).toBe(FADED_OPACITY);
      }
    }
    graph.links.forEach((link, i) => {
      const expected = link.target === sharedTerm ? 1 : FADED_OPACITY;
      expect(map.linkOpacityByIndex.get(i)).toBe(expected);
    });
  });

  it("clearing focus restores the overview exactly", () => {
    const before = computeHighlight(graph, null);
    computeHighlight(graph, graph.topics[0].id);
    const after = computeHighlight(graph, null);
    expect(after).toEqual(before);
  });

  it("never changes the number of styled elements", () => {
    for (const focused of [null, graph.topics[0].id, sharedTerm]) {
      const map = computeHighlight(graph, focused);
      expect(map.nodeOpacity.size).toBe(graph.topics.length + graph.terms.length);
      expect(map.linkOpacityByIndex.size).toBe(graph.links.length);
    }
  });
});
