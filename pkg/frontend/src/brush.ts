// Linking and brushing: hovering a temporal element paints every element
// of the same period (or intensity bin) in double stroke width.

const SAVED_ATTR = "data-orig-stroke-width";

function doubleStroke(element: Element): void {
  const width = element.getAttribute("stroke-width");
  if (width === null || element.hasAttribute(SAVED_ATTR)) return;
  element.setAttribute(SAVED_ATTR, width);
  element.setAttribute("stroke-width", String(2 * parseFloat(width)));
}

function restoreStroke(element: Element): void {
  const saved = element.getAttribute(SAVED_ATTR);
  if (saved === null) return;
  element.setAttribute("stroke-width", saved);
  element.removeAttribute(SAVED_ATTR);
}

function matches(root: ParentNode, attr: string, value: string): Element[] {
  return Array.from(root.querySelectorAll(`[${attr}="${value}"]`));
}

export function brushPeriod(root: ParentNode, period: number): void {
  matches(root, "data-period", String(period)).forEach(doubleStroke);
}

export function unbrushPeriod(root: ParentNode, period: number): void {
  matches(root, "data-period", String(period)).forEach(restoreStroke);
}

export function brushBin(root: ParentNode, bin: number): void {
  matches(root, "data-bin", String(bin)).forEach(doubleStroke);
}

export function unbrushBin(root: ParentNode, bin: number): void {
  matches(root, "data-bin", String(bin)).forEach(restoreStroke);
}

/**
 * Decide what a hovered element brushes.
 *
 * Bottom-bar cells always brush their period. Edge segments brush their
 * period in the time-color view and their intensity bin otherwise; white
 * gap segments carry no bin and brush nothing. Legend cells brush their
 * bin.
 */
export function brushTarget(
  element: Element,
  view: "timecolor" | "intensity",
): { kind: "period" | "bin"; value: number } | null {
  const period = element.getAttribute("data-period");
  const bin = element.getAttribute("data-bin");
  const inBar = element.closest(".bottom-bar") !== null;
  if (inBar && period !== null) {
    return { kind: "period", value: Number(period) };
  }
  if (element.closest(".legend") !== null && bin !== null) {
    return { kind: "bin", value: Number(bin) };
  }
  if (element.closest(".edges") !== null) {
    if (view === "timecolor" && period !== null) {
      return { kind: "period", value: Number(period) };
    }
    if (view === "intensity" && bin !== null) {
      return { kind: "bin", value: Number(bin) };
    }
  }
  return null;
}
