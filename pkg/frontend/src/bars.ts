// Stacked composition bars for one scenario: where the cost goes, where
// the outcome comes from, and emissions bucketed by pollutant group.
// Values are recombined from server fields only (parts times unit rates).

import type { InstanceDoc, ScenarioDoc } from "./documents.js";
import { emissionGroup } from "./documents.js";
import { h, type VNode } from "./vdom.js";

export interface BarSegment {
  id: string;
  label: string;
  value: number;
}

export interface BarsModel {
  title: string;
  segments: BarSegment[];
  total: number;
}

/** Cost composition: positive part of each activity times its unit cost. */
export function costBars(instance: InstanceDoc, scenario: ScenarioDoc): BarsModel {
  const segments: BarSegment[] = [];
  let total = 0;
  for (const a of instance.activities) {
    const value = (scenario.positive_parts[a.id] ?? 0) * a.unit_cost;
    total += value;
    if (value !== 0) segments.push({ id: a.id, label: a.name, value });
  }
  return { title: "Cost by activity", segments, total };
}

/** Outcome composition: signed magnitude times unit outcome. */
export function outcomeBars(instance: InstanceDoc, scenario: ScenarioDoc): BarsModel {
  const segments: BarSegment[] = [];
  let total = 0;
  for (const a of instance.activities) {
    const value = (scenario.magnitudes[a.id] ?? 0) * a.unit_outcome;
    total += value;
    if (value !== 0) segments.push({ id: a.id, label: a.name, value });
  }
  return { title: "Outcome by activity", segments, total };
}

export interface PollutantColumn {
  group: string;
  rows: { name: string; value: number }[];
  total: number;
}

/** Emissions bucketed by group; ungrouped instances get one bucket. */
export function pollutantColumns(instance: InstanceDoc, scenario: ScenarioDoc): PollutantColumn[] {
  const order: string[] = [];
  const byGroup = new Map<string, PollutantColumn>();
  for (const name of instance.emission_names) {
    const group = emissionGroup(instance, name);
    let col = byGroup.get(group);
    if (!col) {
      col = { group, rows: [], total: 0 };
      byGroup.set(group, col);
      order.push(group);
    }
    const value = scenario.emissions[name] ?? 0;
    col.rows.push({ name, value });
    col.total += value;
  }
  return order.map((g) => byGroup.get(g)!);
}

const BAR_W = 420;
const BAR_H = 46;

export function barsView(model: BarsModel, id: string): VNode {
  const pos = model.segments.filter((s) => s.value > 0);
  const neg = model.segments.filter((s) => s.value < 0);
  const posSum = pos.reduce((acc, s) => acc + s.value, 0);
  const negSum = neg.reduce((acc, s) => acc - s.value, 0);
  const span = posSum + negSum;
  const scale = span > 0 ? BAR_W / span : 0;
  const zeroX = negSum * scale;

  const rects: VNode[] = [];
  let x = zeroX;
  model.segments.forEach((s, i) => {
    if (s.value <= 0) return;
    const w = s.value * scale;
    rects.push(
      h(
        "rect",
        { class: `seg seg-${i % 8}`, x: x.toFixed(2), y: 8, width: w.toFixed(2), height: BAR_H - 16 },
        h("title", {}, `${s.label}: ${s.value}`),
      ),
    );
    x += w;
  });
  x = zeroX;
  model.segments.forEach((s, i) => {
    if (s.value >= 0) return;
    const w = -s.value * scale;
    x -= w;
    rects.push(
      h(
        "rect",
        { class: `seg seg-neg seg-${i % 8}`, x: x.toFixed(2), y: 8, width: w.toFixed(2), height: BAR_H - 16 },
        h("title", {}, `${s.label}: ${s.value}`),
      ),
    );
  });

  const legend = model.segments.map((s, i) =>
    h(
      "span",
      { class: "legend-item" },
      h("span", { class: `swatch seg-${i % 8}${s.value < 0 ? " seg-neg" : ""}` }),
      ` ${s.label}: ${s.value}`,
    ),
  );

  return h(
    "figure",
    { class: "bars", id },
    h("figcaption", {}, `${model.title} (total ${model.total})`),
    h(
      "svg",
      { viewBox: `0 0 ${BAR_W} ${BAR_H}`, width: BAR_W, height: BAR_H, class: "bars-svg" },
      h("rect", { class: "bar-frame", x: 0, y: 8, width: BAR_W, height: BAR_H - 16 }),
      ...rects,
      span > 0 && negSum > 0
        ? h("line", { class: "bar-zero", x1: zeroX.toFixed(2), y1: 2, x2: zeroX.toFixed(2), y2: BAR_H - 2 })
        : null,
    ),
    h("div", { class: "legend" }, ...legend),
  );
}

export function pollutantColumnsView(columns: PollutantColumn[]): VNode {
  return h(
    "div",
    { class: "pollutant-columns", id: "pollutant-columns" },
    ...columns.map((col) =>
      h(
        "div",
        { class: "pollutant-column" },
        h("h4", {}, col.group),
        ...col.rows.map((r) => h("div", { class: "pollutant-row" }, `${r.name}: ${r.value}`)),
        h("div", { class: "pollutant-total" }, `total: ${col.total}`),
      ),
    ),
  );
}
