// Route server-side violation messages to the form field they belong
// to, so each message lands next to the input that caused it.
import { noErrors } from "./state.js";
/**
 * Classify each violation string by the leading path in the message.
 * Messages that match nothing stay global. `labelIndex` maps objective
 * labels to their position, for messages that name the objective by
 * its label rather than its index.
 */
export function routeViolations(messages, labelIndex = {}) {
    var _a, _b, _c, _d;
    const out = noErrors();
    for (const msg of messages) {
        if (/^points\b/.test(msg)) {
            out.points.push(msg);
            continue;
        }
        const objIdx = msg.match(/^objectives\[(\d+)\]/);
        if (objIdx) {
            const i = Number(objIdx[1]);
            ((_a = out.objectives)[i] ?? (_a[i] = [])).push(msg);
            continue;
        }
        const objLabel = msg.match(/^objective '([^']*)'/);
        if (objLabel && objLabel[1] in labelIndex) {
            const i = labelIndex[objLabel[1]];
            ((_b = out.objectives)[i] ?? (_b[i] = [])).push(msg);
            continue;
        }
        if (/^(at least two objectives|objective labels)/.test(msg)) {
            out.objectivesBlock.push(msg);
            continue;
        }
        const conIdx = msg.match(/^constraints\[(\d+)\]/);
        if (conIdx) {
            const i = Number(conIdx[1]);
            ((_c = out.constraints)[i] ?? (_c[i] = [])).push(msg);
            continue;
        }
        const actIdx = msg.match(/^activities\[(\d+)\]/);
        if (actIdx) {
            const i = Number(actIdx[1]);
            ((_d = out.bounds)[i] ?? (_d[i] = [])).push(msg);
            continue;
        }
        out.global.push(msg);
    }
    return out;
}
