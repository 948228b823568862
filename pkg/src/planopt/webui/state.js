// Client-side session. The server is stateless, so everything the user
// is working on lives here: the editable instance, the objective and
// constraint drafts, and the last front.
import { quantityKeys } from "./documents.js";
export function noErrors() {
    return {
        global: [],
        points: [],
        objectivesBlock: [],
        objectives: {},
        constraints: {},
        bounds: {},
    };
}
export function hasErrors(e) {
    return (e.global.length > 0 ||
        e.points.length > 0 ||
        e.objectivesBlock.length > 0 ||
        Object.values(e.objectives).some((v) => v.length > 0) ||
        Object.values(e.constraints).some((v) => v.length > 0) ||
        Object.values(e.bounds).some((v) => v.length > 0));
}
export function newSession() {
    return {
        samples: [],
        sampleName: null,
        instance: null,
        objectives: [],
        constraints: [],
        points: 5,
        pending: false,
        front: null,
        frontObjectives: [],
        errors: noErrors(),
        selectedScenario: 0,
        selectedReceptor: null,
    };
}
/** Install an instance document and pre-fill the form from it. */
export function loadInstance(session, name, doc) {
    session.sampleName = name;
    session.instance = JSON.parse(JSON.stringify(doc));
    session.objectives = [
        { sense: "minimize", terms: [{ coef: 1, key: "total_cost" }] },
        { sense: "maximize", terms: [{ coef: 1, key: "total_outcome" }] },
    ];
    session.constraints = [];
    session.points = 5;
    session.front = null;
    session.frontObjectives = [];
    session.errors = noErrors();
    session.selectedScenario = 0;
    session.selectedReceptor = doc.receptor_names[0] ?? null;
}
function fmtCoef(x) {
    // Plain decimal text; only uniqueness of the resulting label matters.
    return String(x);
}
export function objectiveLabel(draft) {
    const sense = draft.sense === "minimize" ? "min" : "max";
    const terms = draft.terms.map((t) => `${fmtCoef(t.coef)}*${t.key}`).join(" + ");
    return `${sense} ${terms}`;
}
function draftTerms(terms) {
    const out = {};
    for (const t of terms)
        out[t.key] = (out[t.key] ?? 0) + t.coef;
    return out;
}
/**
 * Validate the session against the request schema and build the pareto
 * body. Nothing that fails here is ever sent to the server.
 */
export function buildParetoRequest(session) {
    const errors = noErrors();
    const inst = session.instance;
    if (!inst) {
        errors.global.push("no instance loaded");
        return { ok: false, errors };
    }
    const keys = new Set(quantityKeys(inst));
    inst.activities.forEach((a, i) => {
        const msgs = [];
        if (!Number.isFinite(a.lower))
            msgs.push("lower bound must be a number");
        if (!Number.isFinite(a.upper))
            msgs.push("upper bound must be a number");
        if (Number.isFinite(a.lower) && Number.isFinite(a.upper) && a.lower > a.upper) {
            msgs.push(`lower ${a.lower} > upper ${a.upper}`);
        }
        if (msgs.length)
            errors.bounds[i] = msgs;
    });
    if (!Number.isInteger(session.points) || session.points < 2) {
        errors.points.push(`points must be >= 2, got ${session.points}`);
    }
    if (session.objectives.length < 2) {
        errors.objectivesBlock.push("at least two objectives are required");
    }
    const labels = [];
    session.objectives.forEach((o, i) => {
        const msgs = [];
        if (o.terms.length === 0)
            msgs.push("at least one term is required");
        for (const t of o.terms) {
            if (!Number.isFinite(t.coef))
                msgs.push("coefficient must be a number");
            if (!keys.has(t.key))
                msgs.push(`unknown quantity key '${t.key}'`);
        }
        if (msgs.length)
            errors.objectives[i] = msgs;
        labels.push(objectiveLabel(o));
    });
    if (new Set(labels).size !== labels.length) {
        errors.objectivesBlock.push("objective labels must be unique");
    }
    session.constraints.forEach((c, i) => {
        const msgs = [];
        if (c.terms.length === 0)
            msgs.push("at least one term is required");
        for (const t of c.terms) {
            if (!Number.isFinite(t.coef))
                msgs.push("coefficient must be a number");
            if (!keys.has(t.key))
                msgs.push(`unknown quantity key '${t.key}'`);
        }
        if (!Number.isFinite(c.rhs))
            msgs.push("right-hand side must be a number");
        if (msgs.length)
            errors.constraints[i] = msgs;
    });
    if (hasErrors(errors))
        return { ok: false, errors };
    const objectives = session.objectives.map((o, i) => ({
        label: labels[i],
        sense: o.sense,
        terms: draftTerms(o.terms),
    }));
    const constraints = session.constraints.map((c) => ({
        terms: draftTerms(c.terms),
        relation: c.relation,
        rhs: c.rhs,
    }));
    const body = {
        instance: inst,
        objectives,
        points: session.points,
    };
    if (constraints.length)
        body.constraints = constraints;
    return { ok: true, body };
}
