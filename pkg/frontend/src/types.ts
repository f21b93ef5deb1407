// Layout JSON schema as produced by `edo53 layout export --format json`.

export const SUPPORTED_SCHEMA_VERSION = 1;

export interface KeyJson {
  step: number;
  x: number;
  color: "white" | "black";
}

export interface RowJson {
  kind: "front" | "back";
  keys: KeyJson[];
}

export interface ManualJson {
  name: "lower" | "middle" | "upper";
  rows: RowJson[];
}

export interface LayoutJson {
  schema_version: number;
  variant_id: string;
  system: { divisions: number; step_cents: number };
  manuals: ManualJson[];
  labels?: Record<string, string[]>;
  annotations?: Record<string, { diatonic: string | null; overtone: string | null }>;
}

export type HighlightMode = "none" | "subsystem-29" | "subsystem-41" | "overtones";

/**
 * Check a parsed document against the layout schema.
 * Returns an error message, or null when the layout is usable.
 */
export function validateLayout(doc: unknown): string | null {
  if (typeof doc !== "object" || doc === null) {
    return "layout is not a JSON object";
  }
  const layout = doc as Partial<LayoutJson>;
  if (layout.schema_version !== SUPPORTED_SCHEMA_VERSION) {
    return `unsupported schema_version ${layout.schema_version}`;
  }
  if (typeof layout.variant_id !== "string" || !layout.variant_id) {
    return "missing variant_id";
  }
  const divisions = layout.system?.divisions;
  if (typeof divisions !== "number" || !Number.isInteger(divisions) || divisions < 1) {
    return "system.divisions must be a positive integer";
  }
  if (!Array.isArray(layout.manuals) || layout.manuals.length === 0) {
    return "layout has no manuals";
  }
  const seen = new Set<number>();
  for (const manual of layout.manuals) {
    if (!manual || !Array.isArray(manual.rows)) {
      return "manual without rows";
    }
    for (const row of manual.rows) {
      if (!row || !Array.isArray(row.keys)) {
        return "row without keys";
      }
      for (const key of row.keys) {
        if (typeof key.step !== "number" || key.step < 1 || key.step > divisions) {
          return `key step ${key?.step} out of range 1..${divisions}`;
        }
        if (seen.has(key.step)) {
          return `duplicate key step ${key.step}`;
        }
        seen.add(key.step);
      }
    }
  }
  if (seen.size !== divisions) {
    return `layout has ${seen.size} keys, expected ${divisions}`;
  }
  return null;
}

export function parseLayout(text: string): { layout: LayoutJson | null; error: string | null } {
  let doc: unknown;
  try {
    doc = JSON.parse(text);
  } catch (err) {
    return { layout: null, error: `not valid JSON: ${(err as Error).message}` };
  }
  const problem = validateLayout(doc);
  return problem ? { layout: null, error: problem } : { layout: doc as LayoutJson, error: null };
}
