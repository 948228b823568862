// Receptor dial gauges. Each receptor is scored against its own range
// over the current front, oriented so that a fuller dial means a better
// (lower) receptor loading. The raw value shown is the server's number.
import { h } from "./vdom.js";
function receptorRanges(front) {
    const ranges = new Map();
    for (const s of front.scenarios) {
        for (const [name, v] of Object.entries(s.receptors)) {
            const r = ranges.get(name);
            if (!r)
                ranges.set(name, { lo: v, hi: v });
            else {
                r.lo = Math.min(r.lo, v);
                r.hi = Math.max(r.hi, v);
            }
        }
    }
    return ranges;
}
/** Score in [0, 1]; flat ranges (single-scenario fronts) sit mid-dial. */
export function receptorScore(range, value) {
    const span = range.hi - range.lo;
    if (span <= 0)
        return 0.5;
    return (range.hi - value) / span;
}
/**
 * Meters to show for one scenario: the three best-scoring receptors,
 * the three worst, and the user's pick, without repeats.
 */
export function receptorMeters(front, scenarioIndex, selected) {
    const scen = front.scenarios[scenarioIndex];
    if (!scen)
        return [];
    const ranges = receptorRanges(front);
    const names = Object.keys(scen.receptors);
    const scored = names.map((name, i) => ({
        name,
        i,
        q: receptorScore(ranges.get(name), scen.receptors[name]),
    }));
    scored.sort((a, b) => b.q - a.q || a.i - b.i);
    const out = [];
    const byName = new Map();
    const add = (name, role) => {
        const existing = byName.get(name);
        if (existing) {
            if (!existing.roles.includes(role))
                existing.roles.push(role);
            return;
        }
        const entry = scored.find((s) => s.name === name);
        if (!entry)
            return;
        const meter = {
            receptor: name,
            value: scen.receptors[name],
            q: entry.q,
            roles: [role],
        };
        byName.set(name, meter);
        out.push(meter);
    };
    for (const s of scored.slice(0, 3))
        add(s.name, "top");
    for (const s of scored.slice(-3))
        add(s.name, "bottom");
    if (selected)
        add(selected, "selected");
    return out;
}
function gaugeView(meter) {
    const cx = 60;
    const cy = 58;
    const r = 46;
    const angle = Math.PI - meter.q * Math.PI;
    const ex = cx + r * Math.cos(angle);
    const ey = cy - r * Math.sin(angle);
    const fill = meter.q > 0
        ? h("path", {
            class: "gauge-fill",
            d: `M ${cx - r} ${cy} A ${r} ${r} 0 0 1 ${ex.toFixed(2)} ${ey.toFixed(2)}`,
        })
        : null;
    return h("div", {
        class: `meter ${meter.roles.map((x) => `role-${x}`).join(" ")}`,
        "data-receptor": meter.receptor,
    }, h("svg", { viewBox: "0 0 120 64", width: 120, height: 64, class: "gauge" }, h("path", { class: "gauge-track", d: `M ${cx - r} ${cy} A ${r} ${r} 0 0 1 ${cx + r} ${cy}` }), fill), h("div", { class: "meter-name" }, meter.receptor), h("div", { class: "meter-value" }, String(meter.value)));
}
export function metersView(meters) {
    return h("div", { class: "meters", id: "receptor-meters" }, ...meters.map(gaugeView));
}
