/** Pure rendering: SessionView in, HTML/SVG strings out.
 *
 * Visual convention: support edges end in an arrow head, attack edges in a
 * round head.  Nodes show id, weight and the current degree (or a dash when
 * the last evaluation is stale or non-convergent).
 */
import { escapeHtml, formatDegree, formatWeight } from "./format.js";
import { layoutGraph, Point } from "./layout.js";
import {
  SessionView,
  currentDegrees,
  nonConvergenceBanner,
} from "./state.js";

const NODE_RADIUS = 26;

function edgeEndpoints(a: Point, b: Point): { x1: number; y1: number; x2: number; y2: number } {
  const dx = b.x - a.x;
  const dy = b.y - a.y;
  const dist = Math.max(Math.hypot(dx, dy), 1);
  const trim = NODE_RADIUS + 6;
  return {
    x1: a.x + (dx / dist) * NODE_RADIUS,
    y1: a.y + (dy / dist) * NODE_RADIUS,
    x2: b.x - (dx / dist) * trim,
    y2: b.y - (dy / dist) * trim,
  };
}

function selfLoopPath(p: Point): string {
  const r = NODE_RADIUS;
  return `M ${p.x + r * 0.7} ${p.y - r * 0.7} ` +
    `C ${p.x + r * 2.4} ${p.y - r * 2.4}, ${p.x - r * 1.0} ${p.y - r * 2.8}, ` +
    `${p.x - r * 0.2} ${p.y - r * 1.05}`;
}

export function renderGraphSvg(view: SessionView, width = 720, height = 480): string {
  const doc = view.doc;
  if (!doc || doc.arguments.length === 0) {
    return "";
  }
  const positions = layoutGraph(doc, width, height);
  const degrees = currentDegrees(view);
  const parts: string[] = [];
  parts.push(
    `<svg viewBox="0 0 ${width} ${height}" xmlns="http://www.w3.org/2000/svg" role="img">`,
    "<defs>",
    `<marker id="head-support" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="8" markerHeight="8" orient="auto-start-reverse">` +
      `<path d="M 0 0 L 10 5 L 0 10 z" class="marker-support"/></marker>`,
    `<marker id="head-attack" viewBox="0 0 10 10" refX="8" refY="5" markerWidth="8" markerHeight="8" orient="auto">` +
      `<circle cx="5" cy="5" r="4" class="marker-attack"/></marker>`,
    "</defs>",
  );
  for (const edge of doc.edges) {
    const from = positions.get(edge.from);
    const to = positions.get(edge.to);
    if (!from || !to) continue;
    const marker = edge.polarity === "support" ? "head-support" : "head-attack";
    const cls = `edge edge-${edge.polarity}`;
    const title = `<title>${escapeHtml(edge.from)} ${edge.polarity}s ${escapeHtml(edge.to)}</title>`;
    const data = `data-from="${escapeHtml(edge.from)}" data-to="${escapeHtml(edge.to)}"`;
    if (edge.from === edge.to) {
      parts.push(
        `<path class="${cls}" ${data} d="${selfLoopPath(from)}" fill="none" marker-end="url(#${marker})">${title}</path>`,
      );
    } else {
      const { x1, y1, x2, y2 } = edgeEndpoints(from, to);
      parts.push(
        `<line class="${cls}" ${data} x1="${x1}" y1="${y1}" x2="${x2}" y2="${y2}" marker-end="url(#${marker})">${title}</line>`,
      );
    }
  }
  for (const argument of doc.arguments) {
    const p = positions.get(argument.id)!;
    const degree = degrees ? degrees[argument.id] : undefined;
    const degreeText = degree === undefined ? "&#8211;" : formatDegree(degree);
    const stale = view.dirty || degree === undefined ? " node-stale" : "";
    parts.push(
      `<g class="node${stale}" data-node="${escapeHtml(argument.id)}">`,
      `<circle cx="${p.x}" cy="${p.y}" r="${NODE_RADIUS}"/>`,
      `<text class="node-id" x="${p.x}" y="${p.y - 4}" text-anchor="middle">${escapeHtml(argument.id)}</text>`,
      `<text class="node-weight" x="${p.x}" y="${p.y + 11}" text-anchor="middle">w=${escapeHtml(formatWeight(argument.weight))}</text>`,
      `<text class="node-degree" x="${p.x}" y="${p.y + NODE_RADIUS + 16}" text-anchor="middle">${degreeText}</text>`,
      "</g>",
    );
  }
  parts.push("</svg>");
  return parts.join("");
}

export function renderBanner(view: SessionView): string {
  if (view.error) {
    return `<div class="banner banner-error">${escapeHtml(view.error)}</div>`;
  }
  const banner = nonConvergenceBanner(view);
  if (banner) {
    return `<div class="banner banner-${banner.kind}">${escapeHtml(banner.text)}</div>`;
  }
  if (view.dirty && view.doc) {
    return `<div class="banner banner-pending">evaluating&#8230;</div>`;
  }
  return "";
}

export function renderEmptyState(): string {
  return `<div class="empty-state">Load a bundled example or paste a graph document to begin.</div>`;
}

export function renderWeightsPanel(view: SessionView): string {
  const doc = view.doc;
  if (!doc) return "";
  const degrees = currentDegrees(view);
  const rows = doc.arguments.map((argument) => {
    const degree = degrees ? degrees[argument.id] : undefined;
    const shown = degree === undefined ? "&#8211;" : formatDegree(degree);
    return (
      `<tr>` +
      `<td class="arg-id">${escapeHtml(argument.id)}</td>` +
      `<td><input class="weight-input" data-weight-for="${escapeHtml(argument.id)}" ` +
      `type="number" step="any" value="${escapeHtml(formatWeight(argument.weight))}"/></td>` +
      `<td class="degree-cell" data-degree-for="${escapeHtml(argument.id)}">${shown}</td>` +
      `</tr>`
    );
  });
  return (
    `<table class="weights"><thead><tr><th>argument</th><th>weight</th><th>degree</th></tr></thead>` +
    `<tbody>${rows.join("")}</tbody></table>`
  );
}

export function renderParamsPanel(view: SessionView, tags: string[]): string {
  const p = view.params;
  const options = tags
    .map((tag) => `<option value="${tag}"${tag === p.semantics ? " selected" : ""}>${tag}</option>`)
    .join("");
  const sigmoids = ["logistic", "arctan", "fraction"]
    .map((kind) => `<option value="${kind}"${kind === p.sigmoid ? " selected" : ""}>${kind}</option>`)
    .join("");
  const fixed = p.damping.policy === "fixed";
  return (
    `<label>semantics <select id="semantics-select">${options}</select></label>` +
    `<label>damping <select id="damping-policy">` +
    `<option value="auto"${fixed ? "" : " selected"}>auto (indegree+1)</option>` +
    `<option value="fixed"${fixed ? " selected" : ""}>fixed</option></select>` +
    `<input id="damping-value" type="number" step="any" min="1" ` +
    `value="${fixed && p.damping.value !== undefined ? p.damping.value : 2}"` +
    `${fixed ? "" : " disabled"}/></label>` +
    `<label>sigmoid <select id="sigmoid-select">${sigmoids}</select></label>` +
    `<label>tolerance <input id="tol-input" type="number" step="any" value="${p.tol}"/></label>`
  );
}
