// DOM rendering of a layout: stacked manuals, two key rows each, with
// name/annotation tooltips and highlight modes.
//
// Keys line up by ascending step within each row; true key geometry is
// not part of the layout data.

import { HighlightMode, LayoutJson, ManualJson } from "./types.js";

const MANUAL_TOP_TO_BOTTOM: ManualJson["name"][] = ["upper", "middle", "lower"];

export interface KeyboardCallbacks {
  onNoteStart(step: number, source: string): void;
  onNoteEnd(source: string): void;
}

export class KeyboardView {
  readonly layout: LayoutJson;
  readonly root: HTMLElement;
  private readonly keyButtons = new Map<number, HTMLButtonElement>();
  private mode: HighlightMode = "none";

  constructor(layout: LayoutJson, container: HTMLElement, callbacks: KeyboardCallbacks) {
    this.layout = layout;
    this.root = document.createElement("div");
    this.root.className = "keyboard";
    for (const name of MANUAL_TOP_TO_BOTTOM) {
      const manual = layout.manuals.find((m) => m.name === name);
      if (manual) this.root.appendChild(this.buildManual(manual, callbacks));
    }
    container.appendChild(this.root);
  }

  private buildManual(manual: ManualJson, callbacks: KeyboardCallbacks): HTMLElement {
    const section = document.createElement("section");
    section.className = "manual";
    section.dataset.manual = manual.name;
    const heading = document.createElement("h3");
    heading.textContent = `${manual.name} manual`;
    section.appendChild(heading);
    const back = manual.rows.find((r) => r.kind === "back");
    const front = manual.rows.find((r) => r.kind === "front");
    for (const row of [back, front]) {  // back row drawn above the front row
      if (!row) continue;
      const rowEl = document.createElement("div");
      rowEl.className = `row ${row.kind}`;
      for (const key of [...row.keys].sort((a, b) => a.x - b.x)) {
        rowEl.appendChild(this.buildKey(key.step, key.color, callbacks));
      }
      section.appendChild(rowEl);
    }
    return section;
  }

  private buildKey(step: number, color: string, callbacks: KeyboardCallbacks): HTMLButtonElement {
    const button = document.createElement("button");
    button.type = "button";
    button.className = `key ${color}`;
    button.dataset.step = String(step);
    button.textContent = String(step);
    button.title = this.describeStep(step);
    button.addEventListener("pointerdown", (event) => {
      if (button.classList.contains("dimmed")) return;
      event.preventDefault();
      callbacks.onNoteStart(step, `pointer:${event.pointerId}`);
    });
    const end = (event: PointerEvent) => callbacks.onNoteEnd(`pointer:${event.pointerId}`);
    button.addEventListener("pointerup", end);
    button.addEventListener("pointercancel", end);
    button.addEventListener("pointerleave", end);
    this.keyButtons.set(step, button);
    return button;
  }

  /** Tooltip text: position in cents, spellings, diatonic/overtone roles. */
  describeStep(step: number): string {
    const cents = (step - 1) * this.layout.system.step_cents;
    const parts = [`step ${step}`, `${cents.toFixed(2)} c`];
    const names = this.layout.labels?.[String(step)];
    if (names?.length) parts.push(names.join(" = "));
    const note = this.layout.annotations?.[String(step)];
    if (note?.diatonic) parts.push(`diatonic ${note.diatonic}`);
    if (note?.overtone) parts.push(`overtone ${note.overtone}`);
    return parts.join(" · ");
  }

  get highlightMode(): HighlightMode {
    return this.mode;
  }

  /** Which highlight modes the loaded layout supports. */
  availableModes(): HighlightMode[] {
    const modes: HighlightMode[] = ["none"];
    const manuals = this.layout.manuals.map((m) => m.name);
    if (this.layout.system.divisions === 53) {
      if (manuals.includes("lower") && manuals.includes("middle")) modes.push("subsystem-29");
      if (manuals.includes("middle") && manuals.includes("upper")) modes.push("subsystem-41");
      if (this.layout.annotations) modes.push("overtones");
    }
    return modes;
  }

  /**
   * Apply a highlight mode: the 29-step subsystem dims the upper manual,
   * the 41-step one dims the lower, overtones outlines the harmonic steps.
   */
  setHighlight(mode: HighlightMode): void {
    if (!this.availableModes().includes(mode)) {
      throw new Error(`highlight mode ${mode} unavailable for ${this.layout.variant_id}`);
    }
    this.mode = mode;
    const dimmedManual = mode === "subsystem-29" ? "upper" : mode === "subsystem-41" ? "lower" : null;
    const outlined = mode === "overtones" ? this.overtoneSteps() : new Set<number>();
    for (const [step, button] of this.keyButtons) {
      const manual = button.closest<HTMLElement>(".manual")?.dataset.manual;
      button.classList.toggle("dimmed", dimmedManual !== null && manual === dimmedManual);
      button.classList.toggle("outlined", outlined.has(step));
    }
  }

  /** Steps that carry harmonics above the fundamental (the prime stays plain). */
  private overtoneSteps(): Set<number> {
    const steps = new Set<number>();
    for (const [step, note] of Object.entries(this.layout.annotations ?? {})) {
      if (note.overtone && !note.overtone.startsWith("prime")) steps.add(Number(step));
    }
    return steps;
  }

  playableSteps(): number[] {
    return [...this.keyButtons.entries()]
      .filter(([, button]) => !button.classList.contains("dimmed"))
      .map(([step]) => step)
      .sort((a, b) => a - b);
  }

  outlinedSteps(): number[] {
    return [...this.keyButtons.entries()]
      .filter(([, button]) => button.classList.contains("outlined"))
      .map(([step]) => step)
      .sort((a, b) => a - b);
  }

  isPlayable(step: number): boolean {
    const button = this.keyButtons.get(step);
    return button !== undefined && !button.classList.contains("dimmed");
  }

  setPressed(step: number, pressed: boolean): void {
    this.keyButtons.get(step)?.classList.toggle("pressed", pressed);
  }

  keyCount(): number {
    return this.keyButtons.size;
  }

  destroy(): void {
    this.root.remove();
  }
}
