// Thin wrapper over the service's /api/v1 endpoints. URLs are relative
// so the bundle works wherever the service mounts it.

import type { FrontDoc, InstanceDoc, ParetoRequestBody } from "./documents.js";

export type ApiResult<T> =
  | { ok: true; value: T }
  | { ok: false; status: number; messages: string[] };

async function failure(resp: Response): Promise<{ ok: false; status: number; messages: string[] }> {
  let messages: string[] = [`request failed with status ${resp.status}`];
  try {
    const body = (await resp.json()) as Record<string, unknown>;
    if (Array.isArray(body.violations)) {
      messages = body.violations.map((v) => String(v));
    } else if (typeof body.detail === "string") {
      messages = [body.detail];
    } else if (typeof body.status === "string") {
      messages = [String(body.status)];
    }
  } catch {
    // non-JSON error body, keep the status line
  }
  return { ok: false, status: resp.status, messages };
}

export async function fetchSamples(): Promise<ApiResult<string[]>> {
  const resp = await fetch("api/v1/samples");
  if (!resp.ok) return failure(resp);
  const body = (await resp.json()) as { samples: string[] };
  return { ok: true, value: body.samples };
}

export async function fetchSample(name: string): Promise<ApiResult<InstanceDoc>> {
  const resp = await fetch(`api/v1/samples/${encodeURIComponent(name)}`);
  if (!resp.ok) return failure(resp);
  return { ok: true, value: (await resp.json()) as InstanceDoc };
}

export async function requestFront(body: ParetoRequestBody): Promise<ApiResult<FrontDoc>> {
  const resp = await fetch("api/v1/pareto", {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(body),
  });
  if (!resp.ok) return failure(resp);
  return { ok: true, value: (await resp.json()) as FrontDoc };
}
