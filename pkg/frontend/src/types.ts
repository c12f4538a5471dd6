// Wire types mirroring the session service JSON documents.

export interface VertexDoc {
  id: number;
  label: string;
}

export interface HyperedgeDoc {
  id: number;
  label: string;
  members: number[];
}

export interface HypergraphDoc {
  vertices: VertexDoc[];
  hyperedges: HyperedgeDoc[];
}

export interface BarDoc {
  id: number;
  length?: number;
  length_exact?: [number, number];
  edge?: [number, number];
  essential?: boolean;
}

export interface BarcodeDoc {
  bars: BarDoc[];
  node_count: number;
  component_count: number;
}

export type TreeDoc = number | [number, TreeDoc, TreeDoc];

export interface DendrogramDoc {
  leaves: number[];
  trees: TreeDoc[];
}

export interface NumDoc {
  value: number;
  exact?: [number, number];
}

export interface PartitionDoc {
  epsilon: NumDoc;
  expanded_bars: number[];
  classes: number[][];
}

export interface CorrespondenceDoc {
  vertex_to_collapsed: number[];
  edge_to_collapsed: number[];
  filtered: number[];
  node_to_class: Record<string, number>;
}

export interface GraphEdgeDoc extends Array<unknown> {
  0: number;
  1: number;
  2: number;
  3: [number, number];
}

export interface GraphDoc {
  nodes: number[];
  labels: string[];
  edges: GraphEdgeDoc[];
  singleton: boolean[];
}

export interface HullDoc {
  edge_id: number;
  margin: number;
  points: [number, number][];
}

export interface LayoutDoc {
  seed: number;
  vertices: [number, number][];
  hyperedges: [number, number][];
  hulls?: HullDoc[];
}

export interface ParamsResponse {
  barcode: BarcodeDoc;
  dendrogram: DendrogramDoc;
  persistence_graph: [number, number][];
  cleared: boolean;
}

export interface ThresholdResponse {
  partition: PartitionDoc;
  simplified_hypergraph: HypergraphDoc;
  correspondence: CorrespondenceDoc;
}

export interface ClassResponse {
  simplified_id: number;
  label: string;
  members: { id: number; label: string }[];
}

export interface MetricsDoc {
  m_i: number;
  m_c: number;
  m_l: number;
  m_a: number;
}

export interface ResultDoc {
  params: Record<string, unknown>;
  original: HypergraphDoc;
  collapsed: HypergraphDoc;
  graph: GraphDoc;
  barcode: BarcodeDoc;
  partition: PartitionDoc;
  simplified_hypergraph: HypergraphDoc;
  simplified_graph: GraphDoc;
  correspondence: CorrespondenceDoc;
}

export type SideName = "vertex" | "edge";

export interface UiParams {
  side: SideName;
  s: number;
  weight: "jaccard" | "overlap";
  collapse_vertices: boolean;
  collapse_edges: boolean;
  singletons: "greyout" | "filter";
}
