// Shared fixtures: the real sample instance shipped with the service
// and a front computed from it ahead of time.

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import type { FrontDoc, InstanceDoc, ObjectiveDoc, ScenarioDoc } from "../src/documents.js";
import { loadInstance, newSession, type Session } from "../src/state.js";

const here = dirname(fileURLToPath(import.meta.url));

export function sampleInstance(): InstanceDoc {
  const p = join(here, "..", "..", "src", "planopt", "samples", "sample-region.json");
  return JSON.parse(readFileSync(p, "utf8")) as InstanceDoc;
}

export function regionFront(): FrontDoc {
  const p = join(here, "fixtures", "front-region.json");
  return JSON.parse(readFileSync(p, "utf8")) as FrontDoc;
}

/** The objectives the fixture front was computed for, labels included. */
export function regionObjectives(): ObjectiveDoc[] {
  return [
    { label: "min 1*total_cost", sense: "minimize", terms: { total_cost: 1 } },
    { label: "max 1*total_outcome", sense: "maximize", terms: { total_outcome: 1 } },
  ];
}

export function loadedSession(): Session {
  const s = newSession();
  s.samples = ["sample-region"];
  loadInstance(s, "sample-region", sampleInstance());
  return s;
}

/** A do-nothing plan over the given instance. */
export function zeroScenario(inst: InstanceDoc): ScenarioDoc {
  const zeros = (ids: string[]) => Object.fromEntries(ids.map((x) => [x, 0]));
  return {
    kind: "intermediate",
    magnitudes: zeros(inst.activities.map((a) => a.id)),
    positive_parts: zeros(inst.activities.map((a) => a.id)),
    pressures: zeros(inst.pressure_names),
    receptors: zeros(inst.receptor_names),
    boiler_powers: zeros(inst.boilers.map((b) => b.id)),
    emissions: zeros(inst.emission_names),
    indicators: {},
    total_cost: 0,
    total_outcome: 0,
    objective_values: {},
  };
}

/** Cut a front down to its first scenario, keeping the document shape. */
export function singleScenarioFront(front: FrontDoc): FrontDoc {
  return { ...front, scenarios: front.scenarios.slice(0, 1) };
}
