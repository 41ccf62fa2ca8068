import type {
  ErrorBody,
  MatrixDocument,
  ModelDocument,
  RecommendationReport,
  Requirements,
  WhatifReport,
} from "./types.js";

/** The only gateway to the backend; the UI never computes results itself. */
export interface ApiClient {
  getModel(): Promise<ModelDocument>;
  getMatrix(): Promise<MatrixDocument>;
  recommend(requirements: Requirements): Promise<RecommendationReport>;
  whatif(base: Requirements, variant: Requirements): Promise<WhatifReport>;
}

/** Raised when the server answers with its error envelope. */
export class ApiRequestError extends Error {
  readonly code: string;
  readonly status: number;
  readonly details?: Record<string, unknown>;

  constructor(status: number, body: ErrorBody) {
    super(body.message);
    this.name = "ApiRequestError";
    this.code = body.code;
    this.status = status;
    this.details = body.details;
  }
}

async function toError(response: Response): Promise<ApiRequestError> {
  let body: ErrorBody;
  try {
    body = (await response.json()) as ErrorBody;
  } catch {
    body = { code: "E_INTERNAL", message: `HTTP ${response.status}` };
  }
  return new ApiRequestError(response.status, body);
}

export class HttpApiClient implements ApiClient {
  private readonly base: string;

  /** baseUrl "" targets the page's own origin. */
  constructor(baseUrl = "") {
    this.base = baseUrl.replace(/\/$/, "");
  }

  private async get<T>(path: string): Promise<T> {
    const response = await fetch(this.base + path, {
      headers: { accept: "application/json" },
    });
    if (!response.ok) {
      throw await toError(response);
    }
    return (await response.json()) as T;
  }

  private async post<T>(path: string, payload: unknown): Promise<T> {
    const response = await fetch(this.base + path, {
      method: "POST",
      headers: {
        accept: "application/json",
        "content-type": "application/json",
      },
      body: JSON.stringify(payload),
    });
    if (!response.ok) {
      throw await toError(response);
    }
    return (await response.json()) as T;
  }

  getModel(): Promise<ModelDocument> {
    return this.get("/api/v1/model");
  }

  getMatrix(): Promise<MatrixDocument> {
    return this.get("/api/v1/matrix");
  }

  recommend(requirements: Requirements): Promise<RecommendationReport> {
    return this.post("/api/v1/recommend", requirements);
  }

  whatif(base: Requirements, variant: Requirements): Promise<WhatifReport> {
    return this.post("/api/v1/whatif", { base, variant });
  }
}
