// App wiring: layout loading, audio, pointer + computer-keyboard input.

import { KeyboardView } from "./keyboard.js";
import { buildKeyMap } from "./keymap.js";
import {
  DEFAULT_BASE_FREQUENCY,
  MAX_BASE_FREQUENCY,
  MIN_BASE_FREQUENCY,
  stepFrequency,
} from "./tuning.js";
import { HighlightMode, parseLayout } from "./types.js";
import { Synth, Timbre } from "./voices.js";

const LAYOUT_IDS = [
  "53-v1", "53-v2", "53-v3", "53-v4", "53-v5", "53-v6",
  "29-v1", "29-v2", "41-v1", "41-v2",
];
const HIGHLIGHT_MODES: HighlightMode[] = ["none", "subsystem-29", "subsystem-41", "overtones"];

class App {
  private baseFrequency = DEFAULT_BASE_FREQUENCY;
  private register = 0;
  private synth: Synth | null = null;
  private audioCtx: AudioContext | null = null;
  private view: KeyboardView | null = null;
  private keyMap = new Map<string, number>();
  private held = new Map<string, number>(); // input source -> sounding step

  private readonly stage: HTMLElement;
  private readonly banner: HTMLElement;
  private readonly modeButtons = new Map<HighlightMode, HTMLButtonElement>();

  constructor(root: HTMLElement) {
    this.banner = document.createElement("div");
    this.banner.className = "banner hidden";
    this.banner.setAttribute("role", "alert");
    this.stage = document.createElement("div");
    this.stage.className = "stage";
    root.append(this.buildControls(), this.banner, this.stage);
    window.addEventListener("keydown", this.onKeyDown);
    window.addEventListener("keyup", this.onKeyUp);
    window.addEventListener("blur", this.onBlur);
  }

  destroy(): void {
    this.releaseAll();
    window.removeEventListener("keydown", this.onKeyDown);
    window.removeEventListener("keyup", this.onKeyUp);
    window.removeEventListener("blur", this.onBlur);
    this.view?.destroy();
    this.view = null;
  }

  private buildControls(): HTMLElement {
    const bar = document.createElement("div");
    bar.className = "controls";

    const layoutSelect = document.createElement("select");
    layoutSelect.id = "layout-select";
    for (const id of LAYOUT_IDS) {
      const option = document.createElement("option");
      option.value = id;
      option.textContent = id;
      layoutSelect.appendChild(option);
    }
    layoutSelect.addEventListener("change", () => void this.fetchLayout(layoutSelect.value));
    bar.append(labeled("layout", layoutSelect));

    const base = document.createElement("input");
    base.type = "range";
    base.min = String(MIN_BASE_FREQUENCY);
    base.max = String(MAX_BASE_FREQUENCY);
    base.step = "0.001";
    base.value = String(DEFAULT_BASE_FREQUENCY);
    const baseReadout = document.createElement("span");
    baseReadout.className = "readout";
    baseReadout.textContent = `${DEFAULT_BASE_FREQUENCY.toFixed(3)} Hz`;
    base.addEventListener("input", () => {
      this.baseFrequency = Number(base.value);
      baseReadout.textContent = `${this.baseFrequency.toFixed(3)} Hz`;
    });
    bar.append(labeled("base", base), baseReadout);

    const register = document.createElement("select");
    for (const r of [-1, 0, 1]) {
      const option = document.createElement("option");
      option.value = String(r);
      option.textContent = r === 0 ? "middle" : r < 0 ? "low" : "high";
      if (r === 0) option.selected = true;
      register.appendChild(option);
    }
    register.addEventListener("change", () => (this.register = Number(register.value)));
    bar.append(labeled("register", register));

    const timbre = document.createElement("select");
    for (const t of ["dual", "sine"] as Timbre[]) {
      const option = document.createElement("option");
      option.value = t;
      option.textContent = t === "dual" ? "two partials" : "pure sine";
      timbre.appendChild(option);
    }
    timbre.addEventListener("change", () => {
      if (this.synth) this.synth.timbre = timbre.value as Timbre;
    });
    bar.append(labeled("timbre", timbre));

    for (const mode of HIGHLIGHT_MODES) {
      const button = document.createElement("button");
      button.type = "button";
      button.textContent = mode;
      button.disabled = mode !== "none";
      button.addEventListener("click", () => this.setHighlight(mode));
      this.modeButtons.set(mode, button);
      bar.appendChild(button);
    }
    return bar;
  }

  async fetchLayout(id: string): Promise<void> {
    try {
      const response = await fetch(`public/layouts/${id}.json`);
      if (!response.ok) throw new Error(`HTTP ${response.status}`);
      this.loadLayoutText(await response.text());
    } catch (err) {
      this.showError(`could not load layout ${id}: ${(err as Error).message}`);
    }
  }

  /** Parse and render a layout; malformed input shows the banner, never throws. */
  loadLayoutText(text: string): void {
    const { layout, error } = parseLayout(text);
    if (!layout) {
      this.showError(`layout rejected: ${error}`);
      return;
    }
    this.releaseAll();
    this.view?.destroy();
    this.banner.classList.add("hidden");
    this.view = new KeyboardView(layout, this.stage, {
      onNoteStart: (step, source) => this.noteStart(step, source),
      onNoteEnd: (source) => this.noteEnd(source),
    });
    this.keyMap = buildKeyMap(layout);
    const available = this.view.availableModes();
    for (const [mode, button] of this.modeButtons) {
      button.disabled = !available.includes(mode);
      button.classList.toggle("active", mode === "none");
    }
  }

  private showError(message: string): void {
    this.banner.textContent = message;
    this.banner.classList.remove("hidden");
  }

  private setHighlight(mode: HighlightMode): void {
    if (!this.view) return;
    this.view.setHighlight(mode);
    for (const [m, button] of this.modeButtons) {
      button.classList.toggle("active", m === mode);
    }
    // silence anything that just became unplayable
    for (const [source, step] of [...this.held]) {
      if (!this.view.isPlayable(step)) this.noteEnd(source);
    }
  }

  private ensureSynth(): Synth {
    if (!this.synth) {
      this.audioCtx = new AudioContext();
      this.synth = new Synth(this.audioCtx);
    }
    void this.audioCtx?.resume();
    return this.synth;
  }

  private noteStart(step: number, source: string): void {
    if (!this.view || !this.view.isPlayable(step) || this.held.has(source)) return;
    const divisions = this.view.layout.system.divisions;
    const frequency = stepFrequency(this.baseFrequency, divisions, step, this.register);
    this.ensureSynth().noteOn(source, frequency);
    this.held.set(source, step);
    this.view.setPressed(step, true);
  }

  private noteEnd(source: string): void {
    const step = this.held.get(source);
    if (step === undefined) return;
    this.held.delete(source);
    this.synth?.noteOff(source);
    if (![...this.held.values()].includes(step)) {
      this.view?.setPressed(step, false);
    }
  }

  private releaseAll(): void {
    for (const source of [...this.held.keys()]) this.noteEnd(source);
  }

  private onKeyDown = (event: KeyboardEvent): void => {
    if (event.repeat) return;
    const step = this.keyMap.get(event.code);
    if (step === undefined) return;
    event.preventDefault();
    this.noteStart(step, `code:${event.code}`);
  };

  private onKeyUp = (event: KeyboardEvent): void => {
    const step = this.keyMap.get(event.code);
    if (step === undefined) return;
    this.noteEnd(`code:${event.code}`);
  };

  private onBlur = (): void => this.releaseAll();
}

function labeled(text: string, control: HTMLElement): HTMLElement {
  const label = document.createElement("label");
  label.append(text, control);
  return label;
}

const rootEl = document.getElementById("app");
if (rootEl) {
  const app = new App(rootEl);
  void app.fetchLayout("53-v1");
}

export { App };
