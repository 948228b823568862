// Route server-side violation messages to the form field they belong
// to, so each message lands next to the input that caused it.

import type { RoutedErrors } from "./state.js";
import { noErrors } from "./state.js";

/**
 * Classify each violation string by the leading path in the message.
 * Messages that match nothing stay global. `labelIndex` maps objective
 * labels to their position, for messages that name the objective by
 * its label rather than its index.
 */
export function routeViolations(
  messages: string[],
  labelIndex: Record<string, number> = {},
): RoutedErrors {
  const out = noErrors();
  for (const msg of messages) {
    if (/^points\b/.test(msg)) {
      out.points.push(msg);
      continue;
    }
    const objIdx = msg.match(/^objectives\[(\d+)\]/);
    if (objIdx) {
      const i = Number(objIdx[1]);
      (out.objectives[i] ??= []).push(msg);
      continue;
    }
    const objLabel = msg.match(/^objective '([^']*)'/);
    if (objLabel && objLabel[1] in labelIndex) {
      const i = labelIndex[objLabel[1]];
      (out.objectives[i] ??= []).push(msg);
      continue;
    }
    if (/^(at least two objectives|objective labels)/.test(msg)) {
      out.objectivesBlock.push(msg);
      continue;
    }
    const conIdx = msg.match(/^constraints\[(\d+)\]/);
    if (conIdx) {
      const i = Number(conIdx[1]);
      (out.constraints[i] ??= []).push(msg);
      continue;
    }
    const actIdx = msg.match(/^activities\[(\d+)\]/);
    if (actIdx) {
      const i = Number(actIdx[1]);
      (out.bounds[i] ??= []).push(msg);
      continue;
    }
    out.global.push(msg);
  }
  return out;
}
