/** Thin typed client for the /v1 HTTP API.
 *
 * The UI holds no classification logic; every fact it displays comes from
 * these endpoints. Configuration is a single base URL.
 */

import type {
  ClassificationRecord,
  Health,
  Item,
  ItemSummary,
  RecommendationRecord,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function readError(response: Response): Promise<string> {
  try {
    const body = (await response.json()) as { error?: string };
    if (body && typeof body.error === "string") return body.error;
  } catch {
    // fall through to the generic message
  }
  return `request failed with status ${response.status}`;
}

export class ApiClient {
  constructor(readonly baseUrl: string) {}

  private async get<T>(path: string): Promise<T> {
    const response = await fetch(`${this.baseUrl}${path}`);
    if (!response.ok) {
      throw new ApiError(response.status, await readError(response));
    }
    return (await response.json()) as T;
  }

  health(): Promise<Health> {
    return this.get("/v1/health");
  }

  async listItems(): Promise<ItemSummary[]> {
    const body = await this.get<{ items: ItemSummary[] }>("/v1/items");
    return body.items;
  }

  item(id: string): Promise<Item> {
    return this.get(`/v1/items/${encodeURIComponent(id)}`);
  }

  classification(id: string): Promise<ClassificationRecord> {
    return this.get(`/v1/items/${encodeURIComponent(id)}/classification`);
  }

  similar(id: string, limit?: number): Promise<RecommendationRecord> {
    return this.get(this.recommendPath(id, "similar", limit));
  }

  opposite(id: string, limit?: number): Promise<RecommendationRecord> {
    return this.get(this.recommendPath(id, "opposite", limit));
  }

  private recommendPath(id: string, mode: string, limit?: number): string {
    const query = limit === undefined ? "" : `?limit=${limit}`;
    return `/v1/items/${encodeURIComponent(id)}/${mode}${query}`;
  }
}
