/** Small DOM helpers; no templating framework. */

type Child = Node | string | null | undefined;

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | boolean | ((ev: Event) => void)> = {},
  ...children: Child[]
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    if (typeof value === "function") {
      node.addEventListener(key.replace(/^on/, ""), value);
    } else if (typeof value === "boolean") {
      if (value) node.setAttribute(key, "");
    } else {
      node.setAttribute(key, value);
    }
  }
  for (const child of children) {
    if (child === null || child === undefined) continue;
    node.append(child);
  }
  return node;
}

export function svgEl(
  tag: string,
  attrs: Record<string, string> = {},
  ...children: (SVGElement | string)[]
): SVGElement {
  const node = document.createElementNS("http://www.w3.org/2000/svg", tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  for (const child of children) node.append(child);
  return node;
}

/** Numbers are rendered exactly as the service sent them. */
export function fmt(value: number | null | undefined): string {
  if (value === null || value === undefined) return "—";
  return String(value);
}

export function scoreBadge(label: string, value: number | null, cls = ""): HTMLElement {
  return el(
    "span",
    { class: `badge ${cls}`.trim(), title: label },
    `${label}=${fmt(value)}`,
  );
}

export function arrow(before: number | null, after: number | null): string {
  if (before === null) return "new";
  if (after === null) return "removed";
  return after > before ? "▲" : "▼";
}

export function arrowClass(before: number | null, after: number | null): string {
  if (before === null) return "diff-new";
  if (after === null) return "diff-removed";
  return after > before ? "diff-up" : "diff-down";
}
