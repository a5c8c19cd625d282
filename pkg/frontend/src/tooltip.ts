// Floating tooltip showing an entity's tooltip lines verbatim.

export function showTooltip(
  container: HTMLElement,
  x: number,
  y: number,
  lines: string[],
): void {
  hideTooltip(container);
  if (lines.length === 0) return;
  const box = document.createElement("div");
  box.className = "tooltip";
  box.style.left = `${x + 12}px`;
  box.style.top = `${y + 12}px`;
  for (const line of lines) {
    const row = document.createElement("div");
    row.textContent = line;
    box.appendChild(row);
  }
  container.appendChild(box);
}

export function hideTooltip(container: HTMLElement): void {
  container.querySelectorAll(".tooltip").forEach((t) => t.remove());
}
