/** Thin typed client for the clustering API. */

import type { ClusterRequestBody, ClusterResponse } from "./types.js";

export class ApiError extends Error {
  constructor(
    message: string,
    readonly status: number,
  ) {
    super(message);
  }
}

async function check(response: Response): Promise<Response> {
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = await response.json();
      detail = typeof body.detail === "string" ? body.detail : JSON.stringify(body.detail);
    } catch {
      // body was not JSON; keep the status text
    }
    throw new ApiError(detail, response.status);
  }
  return response;
}

export class Client {
  constructor(private base: string = "") {}

  async health(): Promise<{ status: string; flights: number; backend: string }> {
    return (await check(await fetch(`${this.base}/api/health`))).json();
  }

  async cluster(body: ClusterRequestBody, signal?: AbortSignal): Promise<ClusterResponse> {
    const response = await fetch(`${this.base}/api/cluster`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
      signal,
    });
    return (await check(response)).json();
  }
}
