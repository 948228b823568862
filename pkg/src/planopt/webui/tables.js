// Tabular views of one scenario. Cells carry the server's numbers
// verbatim; totals come from the Scenario fields rather than being
// re-added client side.
import { h } from "./vdom.js";
/** Energy delivered per source: activity magnitudes and their outcome. */
export function energyTable(instance, scenario) {
    const rows = instance.activities.map((a) => {
        const m = scenario.magnitudes[a.id] ?? 0;
        return [a.name, m, a.unit_outcome, m * a.unit_outcome];
    });
    return {
        id: "table-energy",
        title: "Energy per source",
        columns: ["source", "amount", "unit outcome", "outcome"],
        numeric: [false, true, true, true],
        rows,
        footer: ["total", "", "", scenario.total_outcome],
    };
}
/** Two-way cost split; the halves add up to the scenario's total cost. */
export function costSplitTable(instance, scenario) {
    let primary = 0;
    let secondary = 0;
    for (const a of instance.activities) {
        const cost = (scenario.positive_parts[a.id] ?? 0) * a.unit_cost;
        if (a.kind === "primary")
            primary += cost;
        else
            secondary += cost;
    }
    return {
        id: "table-cost-split",
        title: "Cost split",
        columns: ["share", "cost"],
        numeric: [false, true],
        rows: [
            ["primary", primary],
            ["secondary", secondary],
        ],
        footer: ["total", scenario.total_cost],
    };
}
/** Cost detail per activity: positive part times unit cost. */
export function activityCostTable(instance, scenario) {
    const rows = instance.activities.map((a) => {
        const p = scenario.positive_parts[a.id] ?? 0;
        return [a.name, a.kind, p, a.unit_cost, p * a.unit_cost];
    });
    return {
        id: "table-activity-cost",
        title: "Cost per activity",
        columns: ["activity", "kind", "positive part", "unit cost", "cost"],
        numeric: [false, false, true, true, true],
        rows,
        footer: ["total", "", "", "", scenario.total_cost],
    };
}
/** One row per emission the instance tracks, zero or not. */
export function emissionsTable(instance, scenario) {
    const rows = instance.emission_names.map((name) => [
        name,
        scenario.emissions[name] ?? 0,
    ]);
    return {
        id: "table-emissions",
        title: "Annual emissions",
        columns: ["emission", "mass"],
        numeric: [false, true],
        rows,
    };
}
/** Stable sort: equal keys keep their current relative order. */
export function sortTable(model, sort) {
    const decorated = model.rows.map((row, i) => ({ row, i }));
    const numeric = model.numeric[sort.col];
    decorated.sort((a, b) => {
        const x = a.row[sort.col];
        const y = b.row[sort.col];
        let cmp;
        if (numeric)
            cmp = Number(x) - Number(y);
        else
            cmp = String(x) < String(y) ? -1 : String(x) > String(y) ? 1 : 0;
        if (cmp !== 0)
            return cmp * sort.dir;
        return a.i - b.i;
    });
    return { ...model, rows: decorated.map((d) => d.row) };
}
export function tableView(model, sort) {
    const head = model.columns.map((c, k) => {
        const active = sort && sort.col === k;
        const cls = `sortable${active ? (sort.dir === 1 ? " sorted-asc" : " sorted-desc") : ""}`;
        return h("th", { class: cls, "data-table": model.id, "data-col": k }, c);
    });
    const body = model.rows.map((row) => h("tr", {}, ...row.map((cell, k) => h("td", { class: model.numeric[k] ? "num" : "" }, String(cell)))));
    const footer = model.footer
        ? h("tfoot", {}, h("tr", {}, ...model.footer.map((cell, k) => h("td", { class: model.numeric[k] ? "num" : "" }, String(cell)))))
        : null;
    return h("div", { class: "table-block" }, h("h4", {}, model.title), h("table", { class: "data-table", id: model.id }, h("thead", {}, h("tr", {}, ...head)), h("tbody", {}, ...body), footer));
}
