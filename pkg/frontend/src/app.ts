// Application wiring: fetch graphs, inject the SVG, and hook up
// brushing, tooltips, connection menus, search, lens, and history.

import { ApiClient, NotFound } from "./api.js";
import { brushTarget, brushBin, brushPeriod, unbrushBin, unbrushPeriod } from "./brush.js";
import { checkLens, recentered, toggledView, withK, withLens } from "./controls.js";
import { directChoice, hideMenu, showMenu } from "./menu.js";
import { HISTORY_LIMIT, UiState, sameParams } from "./state.js";
import { hideTooltip, showTooltip } from "./tooltip.js";
import type {
  AlterInfo,
  EgoInfo,
  GraphParams,
  GraphResponse,
  MetaResponse,
} from "./types.js";

export interface AppElements {
  graph: HTMLElement;
  history: HTMLElement;
  overlay: HTMLElement;
  search: HTMLInputElement;
  searchResults: HTMLElement;
  lensFrom: HTMLSelectElement;
  lensTo: HTMLSelectElement;
  lensApply: HTMLElement;
  lensClear: HTMLElement;
  lensHint: HTMLElement;
  kInput: HTMLInputElement;
  viewToggle: HTMLElement;
  message: HTMLElement;
}

export class App {
  readonly state = new UiState();
  meta: MetaResponse | null = null;
  response: GraphResponse | null = null;

  constructor(
    private api: ApiClient,
    private el: AppElements,
  ) {}

  async start(): Promise<void> {
    this.meta = await this.api.meta();
    this.populateLensOptions();
    this.el.kInput.value = String(this.meta.defaults.max_alters);
    this.wireControls();
  }

  // Navigation ----------------------------------------------------------

  async show(params: GraphParams): Promise<void> {
    let response: GraphResponse;
    try {
      response = await this.api.fetchGraph(params);
    } catch (error) {
      if (error instanceof NotFound) {
        this.setMessage(
          `${params.ego_type} "${params.ego_id}" was not found - try the search box.`,
        );
        return;
      }
      if ((error as Error).name === "AbortError") return;
      this.setMessage((error as Error).message);
      return;
    }
    this.setMessage("");
    if (this.state.current !== null && !sameParams(this.state.current, params)) {
      this.state.pushCurrentToHistory();
    }
    this.state.setCurrent(params, response.svg);
    this.response = response;
    this.renderGraph(response);
    this.renderHistory();
    this.syncControls(params);
  }

  private renderGraph(response: GraphResponse): void {
    hideMenu(this.el.overlay);
    hideTooltip(this.el.overlay);
    this.el.graph.innerHTML = response.svg;
    const svg = this.el.graph.querySelector("svg");
    if (svg === null) return;
    svg.removeAttribute("width");
    svg.removeAttribute("height");
    this.wireGraph(svg, response);
  }

  private nodeInfo(element: Element, response: GraphResponse): EgoInfo | AlterInfo | null {
    const type = element.getAttribute("data-entity-type");
    const id = element.getAttribute("data-entity-id");
    if (type === null || id === null) return null;
    if (response.ego.type === type && response.ego.id === id) return response.ego;
    return (
      response.alters.find((a) => a.type === type && a.id === id) ?? null
    );
  }

  private wireGraph(svg: SVGElement, response: GraphResponse): void {
    svg.addEventListener("mouseover", (event) => {
      const element = event.target as Element;
      const target = brushTarget(element, response.view);
      if (target !== null) {
        if (target.kind === "period") brushPeriod(svg, target.value);
        else brushBin(svg, target.value);
      }
      const node = element.closest(".node, .edge");
      if (node !== null) {
        const info = this.nodeInfo(node, response);
        if (info !== null) {
          const at = event as MouseEvent;
          showTooltip(this.el.overlay, at.clientX, at.clientY, info.tooltip);
        }
      }
    });
    svg.addEventListener("mouseout", (event) => {
      const element = event.target as Element;
      const target = brushTarget(element, response.view);
      if (target !== null) {
        if (target.kind === "period") unbrushPeriod(svg, target.value);
        else unbrushBin(svg, target.value);
      }
      hideTooltip(this.el.overlay);
    });
    svg.addEventListener("click", (event) => {
      const element = (event.target as Element).closest(".node");
      if (element === null) {
        hideMenu(this.el.overlay);
        return;
      }
      const info = this.nodeInfo(element, response);
      if (info === null) return;
      this.openNode(info, event as MouseEvent);
    });
  }

  private openNode(info: EgoInfo, at: MouseEvent): void {
    const current = this.state.current;
    if (current === null) return;
    const direct = directChoice(info.relations);
    const navigate = (relation: string) =>
      void this.show(recentered(current, info.type, info.id, relation));
    if (direct !== null && info.link === null) {
      navigate(direct.relation);
      return;
    }
    showMenu(
      this.el.overlay,
      at.clientX,
      at.clientY,
      info.relations,
      info.link,
      (choice) => navigate(choice.relation),
    );
  }

  // History ---------------------------------------------------------------

  renderHistory(): void {
    this.el.history.innerHTML = "";
    this.state.history.forEach((entry, index) => {
      const slot = document.createElement("button");
      slot.type = "button";
      slot.className = "history-slot";
      slot.title = `${entry.params.ego_id} (${entry.params.relation}, ${entry.params.view})`;
      slot.innerHTML = entry.thumbnail;
      const svg = slot.querySelector("svg");
      if (svg !== null) {
        // Thumbnails reuse the received markup, shrunk via viewport size.
        svg.setAttribute("width", "150");
        svg.setAttribute("height", "100");
        svg.setAttribute("preserveAspectRatio", "xMidYMid meet");
      }
      slot.addEventListener("click", () => {
        void this.show(this.state.replay(index));
      });
      this.el.history.appendChild(slot);
    });
    while (this.el.history.children.length > HISTORY_LIMIT) {
      this.el.history.lastElementChild?.remove();
    }
  }

  // Controls ----------------------------------------------------------------

  private populateLensOptions(): void {
    if (this.meta === null) return;
    for (const [index, label] of this.meta.period_labels.entries()) {
      for (const select of [this.el.lensFrom, this.el.lensTo]) {
        const option = document.createElement("option");
        option.value = String(index);
        option.textContent = label;
        select.appendChild(option);
      }
    }
    this.el.lensTo.selectedIndex = this.meta.period_labels.length - 1;
  }

  private syncControls(params: GraphParams): void {
    if (this.meta === null) return;
    const lens = params.lens ?? [0, this.meta.frame.period_count - 1];
    this.el.lensFrom.value = String(lens[0]);
    this.el.lensTo.value = String(lens[1]);
    if (params.k !== null) this.el.kInput.value = String(params.k);
    this.el.viewToggle.textContent =
      params.view === "timecolor" ? "intensity view" : "time-color view";
  }

  private wireControls(): void {
    this.el.search.addEventListener("input", () => {
      void this.runSearch(this.el.search.value);
    });
    this.el.lensApply.addEventListener("click", () => this.applyLens());
    this.el.lensClear.addEventListener("click", () => {
      const current = this.state.current;
      if (current === null) return;
      this.el.lensHint.textContent = "";
      void this.show(withLens(current, null));
    });
    this.el.kInput.addEventListener("change", () => {
      const current = this.state.current;
      if (current === null) return;
      const k = Number(this.el.kInput.value);
      if (!Number.isInteger(k) || k < 1) {
        this.el.lensHint.textContent = "alter count must be a positive integer";
        return;
      }
      void this.show(withK(current, k));
    });
    this.el.viewToggle.addEventListener("click", () => {
      const current = this.state.current;
      if (current === null) return;
      void this.show(toggledView(current));
    });
  }

  applyLens(): void {
    const current = this.state.current;
    if (current === null || this.meta === null) return;
    const from = Number(this.el.lensFrom.value);
    const to = Number(this.el.lensTo.value);
    const check = checkLens(from, to, this.meta.frame.period_count);
    this.el.lensHint.textContent = check.hint;
    if (!check.ok) return; // the control refuses; nothing is requested
    void this.show(withLens(current, [from, to]));
  }

  private async runSearch(query: string): Promise<void> {
    if (query.trim().length < 2) {
      this.el.searchResults.innerHTML = "";
      return;
    }
    const results = await this.api.search(query.trim());
    this.el.searchResults.innerHTML = "";
    for (const result of results) {
      const row = document.createElement("button");
      row.type = "button";
      row.className = "search-result";
      row.textContent = `${result.label} (${result.type})`;
      row.addEventListener("click", () => {
        this.el.searchResults.innerHTML = "";
        this.el.search.value = "";
        void this.openSearchResult(result.type, result.id);
      });
      this.el.searchResults.appendChild(row);
    }
  }

  async openSearchResult(type: string, id: string): Promise<void> {
    if (this.meta === null) return;
    const relation = this.meta.relations.find((r) => r.sources.includes(type));
    if (relation === undefined) {
      this.setMessage(`no relations are configured for type "${type}"`);
      return;
    }
    const base: GraphParams = this.state.current ?? {
      ego_type: type,
      ego_id: id,
      relation: relation.name,
      view: (this.meta.defaults.view as GraphParams["view"]) ?? "timecolor",
      k: null,
      lens: null,
    };
    const params = recentered(base, type, id, relation.name);
    await this.show(params);
  }

  private setMessage(text: string): void {
    this.el.message.textContent = text;
    this.el.message.style.display = text === "" ? "none" : "block";
  }
}

export function collectElements(root: Document): AppElements {
  const get = (id: string): HTMLElement => {
    const element = root.getElementById(id);
    if (element === null) throw new Error(`missing #${id}`);
    return element;
  };
  return {
    graph: get("graph"),
    history: get("history"),
    overlay: get("overlay"),
    search: get("search") as HTMLInputElement,
    searchResults: get("search-results"),
    lensFrom: get("lens-from") as HTMLSelectElement,
    lensTo: get("lens-to") as HTMLSelectElement,
    lensApply: get("lens-apply"),
    lensClear: get("lens-clear"),
    lensHint: get("lens-hint"),
    kInput: get("k") as HTMLInputElement,
    viewToggle: get("view-toggle"),
    message: get("message"),
  };
}

export function createApp(root: Document, api = new ApiClient()): App {
  return new App(api, collectElements(root));
}
