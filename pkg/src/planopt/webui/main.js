// Browser entry point. Owns the one mutable Session, wires delegated
// DOM events to state changes, and re-renders the pure views. Only this
// module and mount() ever touch the document.
import { fetchSample, fetchSamples, requestFront } from "./api.js";
import { barsView, costBars, outcomeBars, pollutantColumns, pollutantColumnsView, } from "./bars.js";
import { formModel } from "./form.js";
import { metersView, receptorMeters } from "./meters.js";
import { spiderwebModel, spiderwebView } from "./spiderweb.js";
import { activityCostTable, costSplitTable, emissionsTable, energyTable, sortTable, tableView, } from "./tables.js";
import { buildParetoRequest, loadInstance, newSession, noErrors } from "./state.js";
import { routeViolations } from "./violations.js";
import { h, mount } from "./vdom.js";
const session = newSession();
const sorts = {};
function root(id) {
    const el = document.getElementById(id);
    if (!el)
        throw new Error(`missing #${id}`);
    return el;
}
function renderInto(id, ...nodes) {
    const el = root(id);
    el.replaceChildren(...nodes.map((n) => mount(n)));
}
function renderForm() {
    renderInto("form-root", formModel(session));
}
function scenarioPicker() {
    const front = session.front;
    return h("div", { id: "scenario-picker", class: "row" }, "Scenario: ", ...front.scenarios.map((s, i) => h("button", {
        type: "button",
        class: `pick${i === session.selectedScenario ? " selected" : ""}`,
        "data-action": "select-scenario",
        "data-scenario": i,
    }, `#${i + 1} ${s.kind}`)));
}
function receptorPicker() {
    const names = session.instance ? session.instance.receptor_names : [];
    return h("div", { class: "row" }, h("label", { for: "receptor-select" }, "Watch receptor "), h("select", { id: "receptor-select", "data-field": "receptor-select" }, ...names.map((n) => h("option", { value: n, selected: n === session.selectedReceptor }, n))));
}
function sortedView(model) {
    const sort = sorts[model.id] ?? null;
    return tableView(sort ? sortTable(model, sort) : model, sort);
}
function renderResults() {
    const front = session.front;
    const inst = session.instance;
    if (!front || !inst || front.scenarios.length === 0) {
        renderInto("results-root");
        return;
    }
    if (session.selectedScenario >= front.scenarios.length)
        session.selectedScenario = 0;
    const idx = session.selectedScenario;
    const scen = front.scenarios[idx];
    const head = h("p", { class: "front-meta" }, `Front of ${front.scenarios.length} scenarios, ${front.dropped} duplicate ` +
        `or dominated solves dropped.`);
    const spider = spiderwebView(spiderwebModel(front, session.frontObjectives, 360, idx));
    const bars = h("div", { class: "bars-pair" }, barsView(costBars(inst, scen), "cost-bars"), barsView(outcomeBars(inst, scen), "outcome-bars"));
    const pollutants = pollutantColumnsView(pollutantColumns(inst, scen));
    const meters = metersView(receptorMeters(front, idx, session.selectedReceptor));
    const tables = h("div", { class: "tables" }, sortedView(energyTable(inst, scen)), sortedView(costSplitTable(inst, scen)), sortedView(activityCostTable(inst, scen)), sortedView(emissionsTable(inst, scen)));
    renderInto("results-root", h("section", { id: "results" }, h("h2", {}, "Trade-off front"), head, spider, scenarioPicker(), h("h2", {}, "Scenario detail"), bars, pollutants, receptorPicker(), meters, tables));
}
async function loadSample(name) {
    const res = await fetchSample(name);
    if (!res.ok) {
        session.errors = noErrors();
        session.errors.global = res.messages;
        renderForm();
        return;
    }
    loadInstance(session, name, res.value);
    renderForm();
    renderResults();
}
async function onSubmit() {
    if (session.pending)
        return; // one request in flight at a time
    const built = buildParetoRequest(session);
    if (!built.ok) {
        session.errors = built.errors;
        renderForm();
        return;
    }
    session.pending = true;
    session.errors = noErrors();
    renderForm();
    const res = await requestFront(built.body);
    session.pending = false;
    if (res.ok) {
        session.front = res.value;
        session.frontObjectives = built.body.objectives;
        session.selectedScenario = 0;
        renderForm();
        renderResults();
        return;
    }
    if (res.status === 422) {
        const labelIndex = {};
        built.body.objectives.forEach((o, i) => (labelIndex[o.label] = i));
        session.errors = routeViolations(res.messages, labelIndex);
    }
    else {
        session.errors = noErrors();
        session.errors.global = res.messages;
    }
    renderForm();
}
function numberFrom(el) {
    return el.value.trim() === "" ? NaN : Number(el.value);
}
function onInput(ev) {
    const el = ev.target;
    const field = el.getAttribute("data-field");
    if (!field || !(el instanceof HTMLInputElement))
        return;
    const idx = Number(el.getAttribute("data-idx"));
    const term = Number(el.getAttribute("data-term"));
    switch (field) {
        case "points":
            session.points = numberFrom(el);
            break;
        case "bound-lower":
            if (session.instance)
                session.instance.activities[idx].lower = numberFrom(el);
            break;
        case "bound-upper":
            if (session.instance)
                session.instance.activities[idx].upper = numberFrom(el);
            break;
        case "obj-coef":
            session.objectives[idx].terms[term].coef = numberFrom(el);
            break;
        case "con-coef":
            session.constraints[idx].terms[term].coef = numberFrom(el);
            break;
        case "con-rhs":
            session.constraints[idx].rhs = numberFrom(el);
            break;
    }
}
function onChange(ev) {
    const el = ev.target;
    const field = el.getAttribute("data-field");
    if (!field || !(el instanceof HTMLSelectElement))
        return;
    const idx = Number(el.getAttribute("data-idx"));
    const term = Number(el.getAttribute("data-term"));
    switch (field) {
        case "sample":
            void loadSample(el.value);
            break;
        case "obj-sense":
            session.objectives[idx].sense = el.value;
            break;
        case "obj-key":
            session.objectives[idx].terms[term].key = el.value;
            break;
        case "con-key":
            session.constraints[idx].terms[term].key = el.value;
            break;
        case "con-relation":
            session.constraints[idx].relation = el.value;
            break;
        case "receptor-select":
            session.selectedReceptor = el.value;
            renderResults();
            break;
    }
}
function onClick(ev) {
    const target = ev.target.closest("[data-action],[data-table]");
    if (!target)
        return;
    const action = target.getAttribute("data-action");
    const idx = Number(target.getAttribute("data-idx"));
    const term = Number(target.getAttribute("data-term"));
    const inst = session.instance;
    const firstKey = "total_cost";
    if (!action) {
        const tableId = target.getAttribute("data-table");
        const col = Number(target.getAttribute("data-col"));
        if (tableId) {
            const prev = sorts[tableId];
            sorts[tableId] =
                prev && prev.col === col ? { col, dir: prev.dir === 1 ? -1 : 1 } : { col, dir: 1 };
            renderResults();
        }
        return;
    }
    switch (action) {
        case "submit":
            void onSubmit();
            return;
        case "select-scenario":
            session.selectedScenario = Number(target.getAttribute("data-scenario"));
            renderResults();
            return;
        case "add-objective":
            session.objectives.push({ sense: "minimize", terms: [{ coef: 1, key: firstKey }] });
            break;
        case "del-objective":
            session.objectives.splice(idx, 1);
            break;
        case "add-obj-term":
            session.objectives[idx].terms.push({ coef: 1, key: firstKey });
            break;
        case "del-obj-term":
            session.objectives[idx].terms.splice(term, 1);
            break;
        case "add-constraint":
            session.constraints.push({
                terms: [{ coef: 1, key: firstKey }],
                relation: "<=",
                rhs: inst ? inst.budget : 0,
            });
            break;
        case "del-constraint":
            session.constraints.splice(idx, 1);
            break;
        case "add-con-term":
            session.constraints[idx].terms.push({ coef: 1, key: firstKey });
            break;
        case "del-con-term":
            session.constraints[idx].terms.splice(term, 1);
            break;
        default:
            return;
    }
    renderForm();
}
async function init() {
    document.addEventListener("input", onInput);
    document.addEventListener("change", onChange);
    document.addEventListener("click", onClick);
    const res = await fetchSamples();
    if (!res.ok) {
        session.errors.global = res.messages;
        renderForm();
        return;
    }
    session.samples = res.value;
    if (session.samples.length) {
        await loadSample(session.samples[0]);
    }
    else {
        renderForm();
    }
}
void init();
