/** Payload shapes of the /v1 HTTP API. */

export interface ItemSummary {
  id: string;
  title: string;
  labels: string[];
}

export interface Item {
  id: string;
  title: string;
  description: string;
  source?: string;
}

/** Trigger terms grouped by parent prototype (emotion vs value column). */
export interface Explanation {
  label: string;
  coverage: number;
  emotions: Record<string, string[]>;
  values: Record<string, string[]>;
}

export interface ClassificationRecord {
  item_id: string;
  labels: string[];
  explanations: Explanation[];
  error?: string;
}

export interface RankedItem {
  item_id: string;
  score: number;
  labels: string[];
}

export interface RecommendationRecord {
  seed_id: string;
  mode: "similar" | "opposite";
  ranked: RankedItem[];
}

export interface Health {
  status: string;
  bundle_sha256: string;
  items: number;
}
