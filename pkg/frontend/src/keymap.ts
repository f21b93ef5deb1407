// Computer-keyboard mapping: one physical row zone per manual, assigned to
// the manual's steps in ascending order.  The home+bottom zone (21 codes)
// always covers the middle manual's 17 steps; the digit and top-letter
// rows reach the lower manual fully and the first stretch of the upper.

import { LayoutJson } from "./types.js";

const ZONES: Record<string, string[]> = {
  lower: [
    "Backquote", "Digit1", "Digit2", "Digit3", "Digit4", "Digit5", "Digit6",
    "Digit7", "Digit8", "Digit9", "Digit0", "Minus", "Equal",
  ],
  middle: [
    "KeyA", "KeyS", "KeyD", "KeyF", "KeyG", "KeyH", "KeyJ", "KeyK", "KeyL",
    "Semicolon", "Quote",
    "KeyZ", "KeyX", "KeyC", "KeyV", "KeyB", "KeyN", "KeyM", "Comma", "Period", "Slash",
  ],
  upper: [
    "KeyQ", "KeyW", "KeyE", "KeyR", "KeyT", "KeyY", "KeyU", "KeyI", "KeyO",
    "KeyP", "BracketLeft", "BracketRight", "Backslash",
  ],
};

/** KeyboardEvent.code -> step, for the manuals present in the layout. */
export function buildKeyMap(layout: LayoutJson): Map<string, number> {
  const map = new Map<string, number>();
  for (const manual of layout.manuals) {
    const zone = ZONES[manual.name] ?? [];
    const steps = manual.rows
      .flatMap((row) => row.keys.map((key) => key.step))
      .sort((a, b) => a - b);
    steps.slice(0, zone.length).forEach((step, i) => map.set(zone[i], step));
  }
  return map;
}
