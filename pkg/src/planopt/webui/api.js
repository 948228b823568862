// Thin wrapper over the service's /api/v1 endpoints. URLs are relative
// so the bundle works wherever the service mounts it.
async function failure(resp) {
    let messages = [`request failed with status ${resp.status}`];
    try {
        const body = (await resp.json());
        if (Array.isArray(body.violations)) {
            messages = body.violations.map((v) => String(v));
        }
        else if (typeof body.detail === "string") {
            messages = [body.detail];
        }
        else if (typeof body.status === "string") {
            messages = [String(body.status)];
        }
    }
    catch {
        // non-JSON error body, keep the status line
    }
    return { ok: false, status: resp.status, messages };
}
export async function fetchSamples() {
    const resp = await fetch("api/v1/samples");
    if (!resp.ok)
        return failure(resp);
    const body = (await resp.json());
    return { ok: true, value: body.samples };
}
export async function fetchSample(name) {
    const resp = await fetch(`api/v1/samples/${encodeURIComponent(name)}`);
    if (!resp.ok)
        return failure(resp);
    return { ok: true, value: (await resp.json()) };
}
export async function requestFront(body) {
    const resp = await fetch("api/v1/pareto", {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body),
    });
    if (!resp.ok)
        return failure(resp);
    return { ok: true, value: (await resp.json()) };
}
