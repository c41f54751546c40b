/** Ranked-document side panel: titles linking to the full texts. */

import { documentUrl } from "./api";
import { PanelState } from "./types";

export function renderPanel(root: HTMLElement, panel: PanelState): void {
  root.replaceChildren();

  const status = document.createElement("div");
  status.className = "panel-status";
  if (panel.loading) {
    status.textContent = "Ranking documents...";
  } else if (panel.error) {
    status.textContent = `Request failed: ${panel.error}`;
    status.classList.add("panel-error");
  } else if (panel.docs.length === 0) {
    status.textContent = "No selection. Double-click nodes to find documents.";
  } else {
    status.textContent = `${panel.totalMatching} matching document(s)`;
  }
  root.appendChild(status);

  if (panel.docs.length === 0) {
    return;
  }
  const list = document.createElement("ol");
  list.className = "panel-docs";
  for (const doc of panel.docs) {
    const item = document.createElement("li");
    const link = document.createElement("a");
    link.href = documentUrl(doc.id);
    link.target = "_blank";
    link.textContent = doc.title;
    link.title = `score ${doc.score.toExponential(3)}`;
    item.appendChild(link);
    list.appendChild(item);
  }
  root.appendChild(list);
}
