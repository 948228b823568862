// Input page: sample picker, per-activity bound editors, objective and
// constraint builders over the closed quantity-key space, and the point
// count. Every editable field has an adjacent error slot so server and
// client messages land next to what caused them.
import { quantityKeys } from "./documents.js";
import { h } from "./vdom.js";
function numVal(x) {
    return Number.isFinite(x) ? String(x) : "";
}
function errSlot(id, msgs) {
    return h("div", { class: "errors", id }, ...(msgs ?? []).map((m) => h("div", { class: "error" }, m)));
}
function keySelect(attrs, keys, current) {
    return h("select", attrs, ...keys.map((k) => h("option", { value: k, selected: k === current }, k)));
}
function termRow(prefix, idx, termIdx, term, keys) {
    return h("span", { class: "term" }, h("input", {
        class: "coef",
        type: "number",
        step: "any",
        value: numVal(term.coef),
        "data-field": `${prefix}-coef`,
        "data-idx": idx,
        "data-term": termIdx,
    }), " × ", keySelect({ "data-field": `${prefix}-key`, "data-idx": idx, "data-term": termIdx }, keys, term.key), h("button", { type: "button", "data-action": `del-${prefix}-term`, "data-idx": idx, "data-term": termIdx }, "−"));
}
function objectiveRow(i, o, keys, errs) {
    return h("div", { class: "objective", id: `objective-${i}` }, h("select", { id: `obj-sense-${i}`, "data-field": "obj-sense", "data-idx": i }, h("option", { value: "minimize", selected: o.sense === "minimize" }, "minimize"), h("option", { value: "maximize", selected: o.sense === "maximize" }, "maximize")), ...o.terms.map((t, j) => termRow("obj", i, j, t, keys)), h("button", { type: "button", "data-action": "add-obj-term", "data-idx": i }, "+ term"), h("button", { type: "button", "data-action": "del-objective", "data-idx": i }, "remove"), errSlot(`err-objective-${i}`, errs));
}
function constraintRow(i, c, keys, errs) {
    return h("div", { class: "constraint", id: `constraint-${i}` }, ...c.terms.map((t, j) => termRow("con", i, j, t, keys)), h("button", { type: "button", "data-action": "add-con-term", "data-idx": i }, "+ term"), h("select", { id: `con-relation-${i}`, "data-field": "con-relation", "data-idx": i }, ...["<=", "=", ">="].map((r) => h("option", { value: r, selected: c.relation === r }, r))), h("input", {
        class: "rhs",
        type: "number",
        step: "any",
        value: numVal(c.rhs),
        "data-field": "con-rhs",
        "data-idx": i,
    }), h("button", { type: "button", "data-action": "del-constraint", "data-idx": i }, "remove"), errSlot(`err-constraint-${i}`, errs));
}
export function formModel(session) {
    const inst = session.instance;
    const keys = inst ? quantityKeys(inst) : [];
    const e = session.errors;
    const sampleRow = h("div", { class: "row" }, h("label", { for: "sample" }, "Sample instance "), h("select", { id: "sample", "data-field": "sample" }, ...session.samples.map((s) => h("option", { value: s, selected: s === session.sampleName }, s))));
    const bounds = inst
        ? h("fieldset", { id: "bounds" }, h("legend", {}, "Activity bounds"), ...inst.activities.map((a, i) => h("div", { class: "bound-row", id: `bound-${i}` }, h("span", { class: "bound-name" }, a.name), h("input", {
            id: `bound-lower-${i}`,
            type: "number",
            step: "any",
            value: numVal(a.lower),
            "data-field": "bound-lower",
            "data-idx": i,
        }), " to ", h("input", {
            id: `bound-upper-${i}`,
            type: "number",
            step: "any",
            value: numVal(a.upper),
            "data-field": "bound-upper",
            "data-idx": i,
        }), errSlot(`err-bound-${i}`, e.bounds[i]))))
        : null;
    const objectives = h("fieldset", { id: "objectives" }, h("legend", {}, "Objectives"), ...session.objectives.map((o, i) => objectiveRow(i, o, keys, e.objectives[i])), h("button", { type: "button", "data-action": "add-objective" }, "+ objective"), errSlot("err-objectives", e.objectivesBlock));
    const constraints = h("fieldset", { id: "constraints" }, h("legend", {}, "Extra constraints"), ...session.constraints.map((c, i) => constraintRow(i, c, keys, e.constraints[i])), h("button", { type: "button", "data-action": "add-constraint" }, "+ constraint"));
    const points = h("div", { class: "row" }, h("label", { for: "points" }, "Front points "), h("input", {
        id: "points",
        type: "number",
        min: 2,
        step: 1,
        value: numVal(session.points),
        "data-field": "points",
    }), errSlot("err-points", e.points));
    return h("section", { id: "input-page" }, sampleRow, bounds, objectives, constraints, points, h("div", { class: "row" }, h("button", { id: "submit", type: "button", "data-action": "submit", disabled: session.pending }, session.pending ? "Computing…" : "Compute front"), errSlot("err-global", e.global)));
}
