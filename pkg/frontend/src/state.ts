/** Session state and its pure transitions.
 *
 * One invariant rules them all: degrees on screen come from the most recent
 * service response and never from client-side computation.  Anything that
 * invalidates the last evaluation (an edit in flight, a failed request)
 * flips the dirty flag and the view stops showing degrees as current.
 */
import {
  EvalParams,
  EvalResponse,
  GraphDocument,
  WhatIfResponse,
} from "./types.js";
import { formatDegree } from "./format.js";

export interface SessionView {
  graphId: string | null;
  doc: GraphDocument | null;
  params: EvalParams;
  lastResponse: EvalResponse | null;
  dirty: boolean;
  error: string | null;
}

export function defaultParams(): EvalParams {
  return {
    semantics: "dir",
    damping: { policy: "auto" },
    sigmoid: "logistic",
    tol: 1e-9,
  };
}

export function initialView(): SessionView {
  return {
    graphId: null,
    doc: null,
    params: defaultParams(),
    lastResponse: null,
    dirty: false,
    error: null,
  };
}

export function withDocument(view: SessionView, id: string, doc: GraphDocument): SessionView {
  return { ...view, graphId: id, doc, lastResponse: null, dirty: true, error: null };
}

export function withParams(view: SessionView, params: Partial<EvalParams>): SessionView {
  return { ...view, params: { ...view.params, ...params }, dirty: true };
}

export function beginEdit(view: SessionView): SessionView {
  return { ...view, dirty: true, error: null };
}

export function applyEvaluation(view: SessionView, response: EvalResponse): SessionView {
  return { ...view, lastResponse: response, dirty: false, error: null };
}

export function applyWhatIf(view: SessionView, response: WhatIfResponse): SessionView {
  return {
    ...view,
    graphId: response.id,
    doc: response.graph,
    lastResponse: response.evaluation,
    dirty: false,
    error: null,
  };
}

/** A failed edit reverts to the previous document and keeps the reason. */
export function revertEdit(view: SessionView, previous: SessionView, message: string): SessionView {
  return { ...previous, error: message, dirty: previous.dirty };
}

export function applyError(view: SessionView, message: string): SessionView {
  return { ...view, error: message };
}

/** Degrees to display, straight from the last response; null when the last
 * evaluation did not converge or nothing has been evaluated yet. */
export function currentDegrees(view: SessionView): Record<string, number> | null {
  const response = view.lastResponse;
  if (!response || response.outcome !== "converged" || !response.degrees) {
    return null;
  }
  return response.degrees;
}

export function displayedDegrees(view: SessionView): Map<string, string> {
  const degrees = currentDegrees(view);
  const out = new Map<string, string>();
  if (!degrees) {
    return out;
  }
  for (const [id, value] of Object.entries(degrees)) {
    out.set(id, formatDegree(value));
  }
  return out;
}

export interface BannerInfo {
  kind: "oscillating" | "diverging" | "not_well_defined";
  text: string;
}

export function nonConvergenceBanner(view: SessionView): BannerInfo | null {
  const response = view.lastResponse;
  if (!response || response.outcome === "converged") {
    return null;
  }
  if (response.outcome === "oscillating" && response.oscillation) {
    return {
      kind: "oscillating",
      text: `did not converge: oscillating with period ${response.oscillation.period}`,
    };
  }
  if (response.outcome === "diverging") {
    return { kind: "diverging", text: "did not converge: degrees diverge" };
  }
  return {
    kind: "not_well_defined",
    text: response.reason ?? "did not converge within the iteration budget",
  };
}
