/** Typed client for the what-if service.  `fetchFn` is injectable so tests
 * can stub the network. */
import {
  EdgeEdit,
  EvalParams,
  EvalResponse,
  GraphDocument,
  SemanticsCatalog,
  StoredGraph,
  WhatIfResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly path: string = "",
    readonly status: number = 0,
  ) {
    super(message);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, {
      method,
      headers: body === undefined ? {} : { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const text = await response.text();
    let payload: unknown = null;
    if (text) {
      try {
        payload = JSON.parse(text);
      } catch {
        throw new ApiError("bad_response", `service returned non-JSON (${response.status})`);
      }
    }
    if (!response.ok) {
      const err = payload as { code?: string; message?: string; path?: string } | null;
      throw new ApiError(
        err?.code ?? "http_error",
        err?.message ?? `request failed with status ${response.status}`,
        err?.path ?? "",
        response.status,
      );
    }
    return payload as T;
  }

  getSemantics(): Promise<SemanticsCatalog> {
    return this.request("GET", "/semantics");
  }

  listGraphs(): Promise<string[]> {
    return this.request("GET", "/graphs");
  }

  postGraph(doc: GraphDocument): Promise<StoredGraph> {
    return this.request("POST", "/graphs", doc);
  }

  getGraph(id: string): Promise<StoredGraph> {
    return this.request("GET", `/graphs/${id}`);
  }

  putGraph(id: string, doc: GraphDocument): Promise<StoredGraph> {
    return this.request("PUT", `/graphs/${id}`, doc);
  }

  evaluate(id: string, params: EvalParams): Promise<EvalResponse> {
    return this.request("POST", `/graphs/${id}/evaluate`, params);
  }

  patchWeights(
    id: string,
    weights: Record<string, number>,
    evaluate: EvalParams,
  ): Promise<WhatIfResponse> {
    return this.request("PATCH", `/graphs/${id}/weights`, { weights, evaluate });
  }

  patchEdges(id: string, edit: EdgeEdit, evaluate: EvalParams): Promise<WhatIfResponse> {
    return this.request("PATCH", `/graphs/${id}/edges`, { edit, evaluate });
  }
}
