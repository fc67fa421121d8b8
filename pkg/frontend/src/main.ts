/** Browser bootstrap: wires the api client, session state, scheduler and
 * renderer together.  All numbers on screen originate from service
 * responses; edits go out as PATCH requests and the view refreshes
 * atomically when the fresh evaluation arrives. */
import { ApiClient, ApiError } from "./api.js";
import { EDIT_DEBOUNCE_MS, EditScheduler } from "./debounce.js";
import {
  renderBanner,
  renderEmptyState,
  renderGraphSvg,
  renderParamsPanel,
  renderWeightsPanel,
} from "./render.js";
import {
  SessionView,
  applyError,
  applyEvaluation,
  applyWhatIf,
  beginEdit,
  initialView,
  withDocument,
  withParams,
} from "./state.js";
import { EvalParams, GraphDocument, SemanticsTag } from "./types.js";

const api = new ApiClient("");
let view: SessionView = initialView();
let lastGood: SessionView = view;
let knownTags: string[] = ["dir", "sdir", "rsig", "rdamped", "dogged", "gorgias", "aggregation"];

const $ = (selector: string) => document.querySelector(selector) as HTMLElement;

function render(): void {
  const graphPane = $("#graph-pane");
  const weightsPane = $("#weights-pane");
  $("#banner-slot").innerHTML = renderBanner(view);
  if (!view.doc) {
    graphPane.innerHTML = renderEmptyState();
    weightsPane.innerHTML = "";
  } else {
    graphPane.innerHTML = renderGraphSvg(view);
    weightsPane.innerHTML = renderWeightsPanel(view);
  }
  $("#params-pane").innerHTML = renderParamsPanel(view, knownTags);
  const idLabel = $("#graph-id");
  idLabel.textContent = view.graphId ? `graph ${view.graphId}` : "no graph loaded";
}

function evalParams(): EvalParams {
  return view.params;
}

const weightScheduler = new EditScheduler<Record<string, number>>(
  async (weights) => {
    const before = lastGood;
    try {
      const response = await api.patchWeights(view.graphId!, weights, evalParams());
      view = applyWhatIf(view, response);
      lastGood = view;
    } catch (error) {
      view = {
        ...before,
        error: error instanceof ApiError ? error.message : String(error),
      };
    }
    render();
  },
  (a, b) => ({ ...a, ...b }),
  EDIT_DEBOUNCE_MS,
);

async function reevaluate(): Promise<void> {
  if (!view.graphId) return;
  try {
    const response = await api.evaluate(view.graphId, evalParams());
    view = applyEvaluation(view, response);
    lastGood = view;
  } catch (error) {
    view = applyError(view, error instanceof ApiError ? error.message : String(error));
  }
  render();
}

async function loadDocument(doc: GraphDocument): Promise<void> {
  try {
    const stored = await api.postGraph(doc);
    view = withDocument(view, stored.id, stored.graph);
    lastGood = view;
    render();
    await reevaluate();
  } catch (error) {
    view = applyError(view, error instanceof ApiError ? error.message : String(error));
    render();
  }
}

function wireEvents(): void {
  $("#weights-pane").addEventListener("change", (event) => {
    const target = event.target as HTMLInputElement;
    const id = target.dataset.weightFor;
    if (!id || !view.doc) return;
    const value = Number(target.value);
    if (!Number.isFinite(value)) {
      view = applyError(view, `weight for ${id} must be a finite number`);
      render();
      return;
    }
    view = beginEdit(view);
    render();
    weightScheduler.submit({ [id]: value });
  });

  $("#params-pane").addEventListener("change", (event) => {
    const target = event.target as HTMLElement;
    if (target.id === "semantics-select") {
      view = withParams(view, { semantics: (target as HTMLSelectElement).value as SemanticsTag });
    } else if (target.id === "damping-policy") {
      const policy = (target as HTMLSelectElement).value as "auto" | "fixed";
      const valueInput = document.querySelector("#damping-value") as HTMLInputElement;
      view = withParams(view, {
        damping: policy === "auto" ? { policy } : { policy, value: Number(valueInput.value) || 2 },
      });
    } else if (target.id === "damping-value") {
      view = withParams(view, {
        damping: { policy: "fixed", value: Number((target as HTMLInputElement).value) || 2 },
      });
    } else if (target.id === "sigmoid-select") {
      view = withParams(view, { sigmoid: (target as HTMLSelectElement).value as EvalParams["sigmoid"] });
    } else if (target.id === "tol-input") {
      view = withParams(view, { tol: Number((target as HTMLInputElement).value) || 1e-9 });
    } else {
      return;
    }
    render();
    void reevaluate();
  });

  $("#fixture-form").addEventListener("submit", (event) => {
    event.preventDefault();
    const input = document.querySelector("#document-input") as HTMLTextAreaElement;
    try {
      const doc = JSON.parse(input.value) as GraphDocument;
      void loadDocument(doc);
    } catch {
      view = applyError(view, "the pasted text is not valid JSON");
      render();
    }
  });

  $("#edge-form").addEventListener("submit", (event) => {
    event.preventDefault();
    const graphId = view.graphId;
    if (!graphId) return;
    const pick = (id: string) => (document.querySelector(id) as HTMLInputElement).value.trim();
    const action = pick("#edge-action") as "add" | "remove" | "flip";
    const edit = {
      action,
      from: pick("#edge-from"),
      to: pick("#edge-to"),
      ...(action === "add" ? { polarity: pick("#edge-polarity") as "support" | "attack" } : {}),
    };
    const before = lastGood;
    view = beginEdit(view);
    render();
    api
      .patchEdges(graphId, edit, evalParams())
      .then((response) => {
        view = applyWhatIf(view, response);
        lastGood = view;
        render();
      })
      .catch((error) => {
        view = { ...before, error: error instanceof ApiError ? error.message : String(error) };
        render();
      });
  });
}

async function boot(): Promise<void> {
  try {
    const catalog = await api.getSemantics();
    knownTags = [...catalog.semantics, ...catalog.additional].map((e) => e.tag);
  } catch {
    // catalog is cosmetic; the default tag list stands in when offline
  }
  wireEvents();
  render();
}

void boot();
