// Equal-temperament frequency math shared by the synth and the tests.

export const DEFAULT_BASE_FREQUENCY = 261.626; // close to middle C
export const MIN_BASE_FREQUENCY = 110;
export const MAX_BASE_FREQUENCY = 880;

/** Frequency of step n (1..divisions), `register` octaves from the base. */
export function stepFrequency(
  base: number,
  divisions: number,
  step: number,
  register = 0,
): number {
  if (base <= 0) throw new Error(`base frequency must be positive, got ${base}`);
  if (step < 1 || step > divisions) {
    throw new Error(`step ${step} out of range 1..${divisions}`);
  }
  return base * Math.pow(2, register + (step - 1) / divisions);
}

/** Signed interval between two frequencies in cents. */
export function centsBetween(low: number, high: number): number {
  return 1200 * Math.log2(high / low);
}
