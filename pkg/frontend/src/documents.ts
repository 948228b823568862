// Shapes of the JSON documents the service speaks. These mirror the
// server's codecs; the UI never invents fields of its own.

export interface ActivityDoc {
  id: string;
  name: string;
  kind: "primary" | "secondary";
  lower: number;
  upper: number;
  unit_cost: number;
  unit_outcome: number;
}

export interface BoilerDoc {
  id: string;
  name: string;
}

export type MatrixField = number[][] | string[][] | string;

export interface InstanceDoc {
  schema_version: number;
  activities: ActivityDoc[];
  budget: number;
  min_outcome: number;
  dep_plus: MatrixField;
  dep_minus: MatrixField;
  mop: MatrixField;
  mpr: MatrixField;
  pressure_names: string[];
  receptor_names: string[];
  boilers: BoilerDoc[];
  moc: MatrixField;
  mec: MatrixField;
  emission_names: string[];
  indicator_tables: Record<string, Record<string, number[]>>;
  hours_per_year: number;
  efficiency: number;
  emission_groups?: Record<string, string>;
  qualitative_mapping?: Record<string, number>;
}

export interface ScenarioDoc {
  kind: "boundary" | "intermediate";
  magnitudes: Record<string, number>;
  positive_parts: Record<string, number>;
  pressures: Record<string, number>;
  receptors: Record<string, number>;
  boiler_powers: Record<string, number>;
  emissions: Record<string, number>;
  indicators: Record<string, number[]>;
  total_cost: number;
  total_outcome: number;
  objective_values: Record<string, number>;
}

export interface FrontDoc {
  schema_version: number;
  scenarios: ScenarioDoc[];
  utopia: number[];
  nadir_estimate: number[];
  dropped: number;
  objective_labels?: string[];
}

export type Sense = "minimize" | "maximize";

export interface ObjectiveDoc {
  label: string;
  sense: Sense;
  terms: Record<string, number>;
}

export type Relation = "<=" | "=" | ">=";

export interface ConstraintDoc {
  terms: Record<string, number>;
  relation: Relation;
  rhs: number;
}

export interface ParetoRequestBody {
  instance: InstanceDoc;
  objectives: ObjectiveDoc[];
  points: number;
  constraints?: ConstraintDoc[];
}

/** The closed set of keys objectives and constraints may reference. */
export function quantityKeys(instance: InstanceDoc): string[] {
  const keys = ["total_cost", "total_outcome"];
  for (const r of instance.receptor_names) keys.push(`receptor:${r}`);
  for (const e of instance.emission_names) keys.push(`emission:${e}`);
  for (const i of Object.keys(instance.indicator_tables)) keys.push(`indicator:${i}`);
  return keys;
}

/** Group label for one emission; instances without grouping get one bucket. */
export function emissionGroup(instance: InstanceDoc, emission: string): string {
  return instance.emission_groups?.[emission] ?? "all pollutants";
}
