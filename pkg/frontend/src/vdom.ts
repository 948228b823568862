// Minimal virtual nodes. Views stay pure functions over documents and
// session state; only mount() touches the real DOM, so everything above
// it is unit-testable in plain node.

export type AttrValue = string | number | boolean | null | undefined;

export interface VNode {
  tag: string;
  attrs: Record<string, AttrValue>;
  children: Array<VNode | string>;
}

export function h(
  tag: string,
  attrs: Record<string, AttrValue> = {},
  ...children: Array<VNode | string | null | undefined | false>
): VNode {
  const kept: Array<VNode | string> = [];
  for (const c of children) {
    if (c === null || c === undefined || c === false) continue;
    kept.push(c);
  }
  return { tag, attrs, children: kept };
}

const SVG_TAGS = new Set([
  "svg", "g", "line", "polyline", "polygon", "circle", "rect",
  "path", "text", "title", "defs", "marker",
]);

const SVG_NS = "http://www.w3.org/2000/svg";

export function mount(node: VNode | string, doc: Document = document): Node {
  if (typeof node === "string") return doc.createTextNode(node);
  const el = SVG_TAGS.has(node.tag)
    ? doc.createElementNS(SVG_NS, node.tag)
    : doc.createElement(node.tag);
  for (const [k, v] of Object.entries(node.attrs)) {
    if (v === null || v === undefined || v === false) continue;
    el.setAttribute(k, v === true ? "" : String(v));
  }
  for (const child of node.children) el.appendChild(mount(child, doc));
  return el;
}

/** Depth-first search helpers used by tests and by delegation code. */
export function findAll(node: VNode, pred: (n: VNode) => boolean): VNode[] {
  const out: VNode[] = [];
  const walk = (n: VNode) => {
    if (pred(n)) out.push(n);
    for (const c of n.children) if (typeof c !== "string") walk(c);
  };
  walk(node);
  return out;
}

export function findById(node: VNode, id: string): VNode | undefined {
  return findAll(node, (n) => n.attrs["id"] === id)[0];
}

export function textOf(node: VNode): string {
  let out = "";
  const walk = (n: VNode | string) => {
    if (typeof n === "string") {
      out += n;
      return;
    }
    for (const c of n.children) walk(c);
  };
  walk(node);
  return out;
}
