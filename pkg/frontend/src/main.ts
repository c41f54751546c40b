/** Browser bootstrap: fetch the graph, build the app, wire DOM events. */

import { drag } from "d3-drag";
import { Selection, select } from "d3-selection";

import { TopicLensApp } from "./app";
import { RankClient, fetchGraph } from "./api";
import { SimNode, endDrag, moveDrag, startDrag } from "./simulation";
import { FOCUS_DEBOUNCE_MS } from "./style";
import { GraphSchemaError } from "./types";

type NodeSelection<E extends Element> = Selection<E, SimNode, SVGGElement, unknown>;

function showBanner(message: string): void {
  const banner = document.createElement("div");
  banner.className = "error-banner";
  banner.textContent = message;
  document.body.prepend(banner);
}

async function boot(): Promise<void> {
  const graphContainer = document.getElementById("graph");
  const panelRoot = document.getElementById("panel");
  if (!graphContainer || !panelRoot) {
    showBanner("page is missing #graph / #panel containers");
    return;
  }

  let graph;
  try {
    graph = await fetchGraph();
  } catch (err) {
    showBanner(
      err instanceof GraphSchemaError
        ? `Incompatible graph document: ${err.message}`
        : `Could not load the topic graph: ${String(err)}`,
    );
    return;
  }

  const width = graphContainer.clientWidth || 960;
  const height = graphContainer.clientHeight || 640;
  const app = new TopicLensApp(
    graphContainer,
    panelRoot,
    graph,
    new RankClient(),
    width,
    height,
  );
  const scene = app.scene;

  // hover focus with a small debounce to keep dense areas flicker-free
  let focusTimer: number | undefined;
  const requestFocus = (node: string | null) => {
    window.clearTimeout(focusTimer);
    focusTimer = window.setTimeout(() => app.focus(node), FOCUS_DEBOUNCE_MS);
  };
  const bindHover = <E extends Element>(sel: NodeSelection<E>) => {
    sel
      .on("mouseenter", (_event: unknown, n: SimNode) => requestFocus(n.id))
      .on("mouseleave", () => requestFocus(null))
      .on("dblclick", (event: Event, n: SimNode) => {
        event.stopPropagation();
        void app.toggleSelect(n.id);
      });
  };
  bindHover(scene.topicSel);
  bindHover(scene.termSel);

  // node dragging pins to the pointer and reheats the simulation
  const toWorld = (event: { x: number; y: number }): [number, number] => {
    const { x, y, k } = app.state.viewport;
    return [(event.x - x) / k, (event.y - y) / k];
  };
  const bindDrag = <E extends Element>(sel: NodeSelection<E>) => {
    sel.call(
      drag<E, SimNode>()
        .on("start", (event, n) => {
          startDrag(scene.simulation, n);
          const [wx, wy] = toWorld(event);
          moveDrag(n, wx, wy);
        })
        .on("drag", (event, n) => {
          const [wx, wy] = toWorld(event);
          moveDrag(n, wx, wy);
        })
        .on("end", (_event, n) => endDrag(scene.simulation, n)),
    );
  };
  bindDrag(scene.topicSel);
  bindDrag(scene.termSel);

  // wheel zoom about the cursor; background drag pans
  scene.svg.on("wheel", (event: WheelEvent) => {
    event.preventDefault();
    const factor = Math.pow(2, -event.deltaY * 0.002);
    app.zoom([event.offsetX, event.offsetY], factor);
  });
  let panFrom: [number, number] | null = null;
  scene.svg
    .on("mousedown", (event: MouseEvent) => {
      if ((event.target as Element).tagName === "svg") {
        panFrom = [event.clientX, event.clientY];
      }
    })
    .on("mousemove", (event: MouseEvent) => {
      if (panFrom) {
        app.pan(event.clientX - panFrom[0], event.clientY - panFrom[1]);
        panFrom = [event.clientX, event.clientY];
      }
    })
    .on("mouseup mouseleave", () => {
      panFrom = null;
    });

  select(document.body).attr("data-ready", "true");
}

void boot();
