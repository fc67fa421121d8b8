/** Wire types of the what-if service. */

export type Polarity = "support" | "attack";

export interface DocumentArgument {
  id: string;
  weight: number;
  label?: string;
}

export interface DocumentEdge {
  from: string;
  to: string;
  polarity: Polarity;
}

export interface GraphDocument {
  version: string;
  arguments: DocumentArgument[];
  edges: DocumentEdge[];
}

export type SemanticsTag =
  | "gorgias"
  | "dir"
  | "sdir"
  | "rsig"
  | "rdamped"
  | "dogged"
  | "aggregation";

export interface DampingChoice {
  policy: "auto" | "fixed";
  value?: number;
}

export interface EvalParams {
  semantics: SemanticsTag;
  damping: DampingChoice;
  sigmoid: "logistic" | "arctan" | "fraction";
  tol: number;
  include_propagation?: boolean;
}

export type OutcomeKind = "converged" | "oscillating" | "diverging" | "not_well_defined";

export interface OscillationInfo {
  period: number;
  state_iterations: number[];
  states: Record<string, number>[];
}

export interface EvalResponse {
  semantics: string;
  damping?: number;
  outcome: OutcomeKind;
  degrees?: Record<string, number>;
  iterations?: number;
  residual?: number;
  oscillation?: OscillationInfo;
  growth_rate?: number;
  reason?: string;
  propagation?: number[][];
}

export interface StoredGraph {
  id: string;
  graph: GraphDocument;
}

export interface WhatIfResponse {
  id: string;
  graph: GraphDocument;
  evaluation: EvalResponse;
}

export interface EdgeEdit {
  action: "add" | "remove" | "flip";
  from: string;
  to: string;
  polarity?: Polarity;
}

export interface SemanticsEntry {
  tag: SemanticsTag;
  name: string;
  weight_range: string;
  neutral: number;
  convergent: string;
  bounded: boolean;
  reverse_impact: boolean;
  edge_domain: string;
  uses_damping: boolean;
  uses_sigmoid: boolean;
}

export interface SemanticsCatalog {
  semantics: SemanticsEntry[];
  additional: SemanticsEntry[];
}

export interface ApiErrorBody {
  code: string;
  message: string;
  path?: string;
}
