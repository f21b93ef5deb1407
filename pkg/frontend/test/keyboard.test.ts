import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { beforeEach, describe, expect, it } from "vitest";

import { KeyboardView } from "../src/keyboard.js";
import { buildKeyMap } from "../src/keymap.js";
import { LayoutJson, parseLayout } from "../src/types.js";

const layoutsDir = join(dirname(fileURLToPath(import.meta.url)), "..", "public", "layouts");

function loadLayout(id: string): LayoutJson {
  const { layout, error } = parseLayout(readFileSync(join(layoutsDir, `${id}.json`), "utf8"));
  if (!layout) throw new Error(`fixture ${id} rejected: ${error}`);
  return layout;
}

const noCallbacks = { onNoteStart: () => {}, onNoteEnd: () => {} };

function view(id: string): KeyboardView {
  return new KeyboardView(loadLayout(id), document.body, noCallbacks);
}

beforeEach(() => {
  document.body.innerHTML = "";
});

describe("KeyboardView rendering", () => {
  it("renders 53 keys on three manuals for 53-v1", () => {
    const v = view("53-v1");
    expect(v.keyCount()).toBe(53);
    const manuals = [...document.querySelectorAll(".manual")];
    expect(manuals.map((m) => (m as HTMLElement).dataset.manual)).toEqual([
      "upper", "middle", "lower",
    ]);
    const sizes = manuals.map((m) => m.querySelectorAll(".key").length);
    expect(sizes).toEqual([24, 17, 12]);
  });

  it("renders two manuals of 17+12 for 29-v1", () => {
    const v = view("29-v1");
    expect(v.keyCount()).toBe(29);
    const manuals = [...document.querySelectorAll(".manual")];
    expect(manuals.map((m) => (m as HTMLElement).dataset.manual)).toEqual(["middle", "lower"]);
    expect(manuals.map((m) => m.querySelectorAll(".key").length)).toEqual([17, 12]);
  });

  it("shows the step number on every key", () => {
    view("53-v1");
    const labels = [...document.querySelectorAll(".key")].map((k) => Number(k.textContent));
    expect(labels.sort((a, b) => a - b)).toEqual(
      Array.from({ length: 53 }, (_, i) => i + 1),
    );
  });

  it("reveals names and annotations in the key tooltip", () => {
    const v = view("53-v1");
    expect(v.describeStep(43)).toContain("F4# = D4b");
    expect(v.describeStep(32)).toContain("G");
    expect(v.describeStep(32)).toContain("overtone fifth (3rd harmonic)");
    expect(v.describeStep(10)).toContain("diatonic major second");
  });

  it("rejects malformed layout documents", () => {
    expect(parseLayout("{ nope").error).toMatch(/not valid JSON/);
    expect(parseLayout("{}").error).toMatch(/schema_version/);
    expect(parseLayout('{"schema_version": 1}').error).toMatch(/variant_id/);
    const doc = loadLayout("53-v1") as unknown as { manuals: unknown };
    doc.manuals = [];
    expect(parseLayout(JSON.stringify(doc)).error).toMatch(/no manuals/);
  });
});

describe("highlight modes", () => {
  it("dims the upper manual in subsystem-29 mode", () => {
    const v = view("53-v1");
    v.setHighlight("subsystem-29");
    expect(v.playableSteps()).toHaveLength(29);
    const upperSteps = loadLayout("53-v1")
      .manuals.find((m) => m.name === "upper")!
      .rows.flatMap((r) => r.keys.map((k) => k.step));
    for (const step of upperSteps) expect(v.isPlayable(step)).toBe(false);
  });

  it("dims the lower manual in subsystem-41 mode", () => {
    const v = view("53-v1");
    v.setHighlight("subsystem-41");
    expect(v.playableSteps()).toHaveLength(41);
  });

  it("outlines the ten overtone steps", () => {
    const v = view("53-v1");
    v.setHighlight("overtones");
    expect(v.outlinedSteps()).toEqual([6, 10, 14, 15, 18, 25, 32, 38, 44, 49]);
    expect(v.playableSteps()).toHaveLength(53); // outlining never disables keys
  });

  it("returns to full playability in none mode", () => {
    const v = view("53-v1");
    v.setHighlight("subsystem-29");
    v.setHighlight("none");
    expect(v.playableSteps()).toHaveLength(53);
  });

  it("refuses subsystem modes on the 29- and 41-step layouts", () => {
    expect(view("29-v1").availableModes()).toEqual(["none"]);
    expect(() => view("41-v1").setHighlight("subsystem-29")).toThrow(/unavailable/);
  });

  it("offers no overtone mode without annotations", () => {
    expect(view("53-v4").availableModes()).toEqual(["none", "subsystem-29", "subsystem-41"]);
  });
});

describe("computer-keyboard mapping", () => {
  it("covers all 17 middle-manual steps of 53-v1", () => {
    const layout = loadLayout("53-v1");
    const map = buildKeyMap(layout);
    const middleSteps = layout.manuals
      .find((m) => m.name === "middle")!
      .rows.flatMap((r) => r.keys.map((k) => k.step));
    const mapped = new Set(map.values());
    for (const step of middleSteps) expect(mapped.has(step)).toBe(true);
    expect(middleSteps).toHaveLength(17);
  });

  it("assigns home-row keys to the middle manual in step order", () => {
    const map = buildKeyMap(loadLayout("53-v1"));
    expect(map.get("KeyA")).toBe(1);
    expect(map.get("KeyS")).toBe(5);
    expect(map.get("Backquote")).toBe(4);  // lowest step of the lower manual
    expect(map.get("KeyQ")).toBe(2);       // lowest step of the upper manual
  });
});
