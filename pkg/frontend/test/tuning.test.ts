import { describe, expect, it } from "vitest";

import { centsBetween, stepFrequency } from "../src/tuning.js";

describe("stepFrequency", () => {
  it("returns the base for step 1", () => {
    expect(stepFrequency(261.626, 53, 1)).toBe(261.626);
    expect(stepFrequency(440, 12, 1)).toBe(440);
  });

  it("matches the closed formula within half a cent everywhere", () => {
    for (let step = 1; step <= 53; step++) {
      const expected = 261.626 * Math.pow(2, (step - 1) / 53);
      const cents = Math.abs(centsBetween(expected, stepFrequency(261.626, 53, step)));
      expect(cents).toBeLessThan(0.5);
    }
  });

  it("applies the octave register", () => {
    expect(stepFrequency(261.626, 53, 1, 1)).toBeCloseTo(523.252, 9);
    expect(stepFrequency(261.626, 53, 1, -1)).toBeCloseTo(130.813, 9);
  });

  it("places step 32 a near-pure fifth above step 1", () => {
    const f1 = stepFrequency(261.626, 53, 1);
    const f32 = stepFrequency(261.626, 53, 32);
    expect(f32).toBeCloseTo(392.4235, 3);
    // tempered fifth: 31/53 octave exactly
    expect(Math.abs(centsBetween(f1, f32) - (31 * 1200) / 53)).toBeLessThan(1e-9);
    // and 0.068 c from the pure 3/2, comfortably inside 0.07 c
    expect(Math.abs(centsBetween(f1, f32) - centsBetween(1, 1.5))).toBeLessThan(0.07);
  });

  it("rejects bad input", () => {
    expect(() => stepFrequency(0, 53, 1)).toThrow();
    expect(() => stepFrequency(440, 53, 0)).toThrow();
    expect(() => stepFrequency(440, 53, 54)).toThrow();
  });
});
