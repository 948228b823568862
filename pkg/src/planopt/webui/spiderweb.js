// Radar chart of the front: one axis per objective, one polygon per
// scenario. Values are normalized per axis over the current front so
// that the better end of each objective points outward; the scenario
// that is optimal in an objective therefore touches the rim.
import { h } from "./vdom.js";
function minSense(value, sense) {
    return sense === "maximize" ? -value : value;
}
export function spiderwebModel(front, objectives, size = 360, selected = -1) {
    const cx = size / 2;
    const cy = size / 2;
    const radius = size * 0.38;
    const n = objectives.length;
    // Per-axis bounds in min-sense units.
    const cols = objectives.map((o) => front.scenarios.map((s) => minSense(s.objective_values[o.label], o.sense)));
    const best = cols.map((col) => Math.min(...col));
    const worst = cols.map((col) => Math.max(...col));
    const angle = (k) => -Math.PI / 2 + (2 * Math.PI * k) / n;
    const axes = objectives.map((o, k) => {
        const a = angle(k);
        return {
            label: o.label,
            x2: cx + radius * Math.cos(a),
            y2: cy + radius * Math.sin(a),
            lx: cx + radius * 1.12 * Math.cos(a),
            ly: cy + radius * 1.12 * Math.sin(a),
        };
    });
    const polygons = front.scenarios.map((s, i) => {
        const radii = objectives.map((o, k) => {
            const span = worst[k] - best[k];
            if (span <= 0)
                return 1.0; // single point or flat axis sits at the rim
            const v = minSense(s.objective_values[o.label], o.sense);
            return (worst[k] - v) / span;
        });
        const points = radii
            .map((r, k) => {
            const a = angle(k);
            const x = cx + radius * r * Math.cos(a);
            const y = cy + radius * r * Math.sin(a);
            return `${x.toFixed(2)},${y.toFixed(2)}`;
        })
            .join(" ");
        return { index: i, kind: s.kind, radii, points, selected: i === selected };
    });
    return { size, cx, cy, radius, rings: [0.25, 0.5, 0.75, 1.0], axes, polygons };
}
export function spiderwebView(model) {
    const rings = model.rings.map((f) => h("circle", {
        class: "ring",
        cx: model.cx,
        cy: model.cy,
        r: model.radius * f,
    }));
    const axes = model.axes.flatMap((a) => [
        h("line", { class: "axis", x1: model.cx, y1: model.cy, x2: a.x2, y2: a.y2 }),
        h("text", {
            class: "axis-label",
            x: a.lx,
            y: a.ly,
            "text-anchor": a.lx < model.cx - 1 ? "end" : a.lx > model.cx + 1 ? "start" : "middle",
        }, a.label),
    ]);
    const polys = model.polygons.map((p) => h("polygon", {
        class: `scenario kind-${p.kind}${p.selected ? " selected" : ""}`,
        points: p.points,
        "data-scenario": p.index,
    }));
    return h("svg", {
        class: "spiderweb",
        viewBox: `0 0 ${model.size} ${model.size}`,
        width: model.size,
        height: model.size,
        role: "img",
    }, ...rings, ...axes, ...polys);
}
