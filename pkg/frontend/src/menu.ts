// Connection menu shown when a node is clicked: the relations available
// for that node's entity type, plus an external link when configured.

import type { RelationMenuEntry } from "./types.js";

export interface MenuChoice {
  relation: string;
}

/**
 * Relations with exactly one entry skip the menu and navigate directly.
 * Returns the direct choice, or null when a menu must be shown.
 */
export function directChoice(relations: RelationMenuEntry[]): MenuChoice | null {
  if (relations.length === 1 && relations[0] !== undefined) {
    return { relation: relations[0].name };
  }
  return null;
}

export function showMenu(
  container: HTMLElement,
  x: number,
  y: number,
  relations: RelationMenuEntry[],
  link: string | null,
  onChoose: (choice: MenuChoice) => void,
): void {
  hideMenu(container);
  const menu = document.createElement("div");
  menu.className = "connection-menu";
  menu.style.left = `${x}px`;
  menu.style.top = `${y}px`;
  for (const relation of relations) {
    const item = document.createElement("button");
    item.type = "button";
    item.className = "menu-item";
    item.textContent = relation.label;
    item.dataset.relation = relation.name;
    item.addEventListener("click", () => {
      hideMenu(container);
      onChoose({ relation: relation.name });
    });
    menu.appendChild(item);
  }
  if (link !== null) {
    const external = document.createElement("a");
    external.className = "menu-item menu-link";
    external.href = link;
    external.target = "_blank";
    external.rel = "noopener";
    external.textContent = "External page";
    menu.appendChild(external);
  }
  container.appendChild(menu);
}

export function hideMenu(container: HTMLElement): void {
  container.querySelectorAll(".connection-menu").forEach((m) => m.remove());
}
