// Polyphonic two-partial synth on the Web Audio graph.
//
// All scheduling goes through AudioParam automation, so the audio thread
// never waits on UI work; the UI only posts note on/off boundaries.

export const MAX_POLYPHONY = 16;
export const ATTACK_SECONDS = 0.005;
export const RELEASE_SECONDS = 0.08;
const VOICE_PEAK = 0.18;
const SECOND_PARTIAL_GAIN = 0.3;

export type Timbre = "dual" | "sine";

// Minimal structural slice of (Base)AudioContext, so tests can inject a fake.
export interface AudioParamLike {
  value: number;
  setValueAtTime(value: number, time: number): unknown;
  linearRampToValueAtTime(value: number, time: number): unknown;
  cancelScheduledValues(time: number): unknown;
}

export interface OscillatorLike {
  type: string;
  frequency: { value: number };
  connect(target: unknown): unknown;
  start(when?: number): void;
  stop(when?: number): void;
}

export interface GainLike {
  gain: AudioParamLike;
  connect(target: unknown): unknown;
}

export interface AudioContextLike {
  currentTime: number;
  destination: unknown;
  createOscillator(): OscillatorLike;
  createGain(): GainLike;
}

interface Voice {
  frequency: number;
  oscillators: OscillatorLike[];
  envelope: GainLike;
  startedAt: number;
}

export class Synth {
  timbre: Timbre = "dual";

  private readonly ctx: AudioContextLike;
  private readonly master: GainLike;
  private readonly voices = new Map<string, Voice>();
  private order: string[] = []; // oldest first, for stealing

  constructor(ctx: AudioContextLike) {
    this.ctx = ctx;
    this.master = ctx.createGain();
    this.master.gain.value = 0.9;
    this.master.connect(ctx.destination);
  }

  /** Start a voice for `key`; steals the oldest voice when the pool is full. */
  noteOn(key: string, frequency: number): void {
    if (this.voices.has(key)) {
      this.noteOff(key);
    }
    if (this.voices.size >= MAX_POLYPHONY) {
      const oldest = this.order[0];
      if (oldest !== undefined) this.noteOff(oldest);
    }
    const now = this.ctx.currentTime;
    const envelope = this.ctx.createGain();
    envelope.gain.value = 0;
    envelope.gain.setValueAtTime(0, now);
    envelope.gain.linearRampToValueAtTime(VOICE_PEAK, now + ATTACK_SECONDS);
    envelope.connect(this.master);

    const oscillators: OscillatorLike[] = [];
    const fundamental = this.ctx.createOscillator();
    fundamental.type = "sine";
    fundamental.frequency.value = frequency;
    fundamental.connect(envelope);
    fundamental.start(now);
    oscillators.push(fundamental);

    if (this.timbre === "dual") {
      // a touch of second harmonic keeps fifths' purity audible
      const partialGain = this.ctx.createGain();
      partialGain.gain.value = SECOND_PARTIAL_GAIN;
      partialGain.connect(envelope);
      const partial = this.ctx.createOscillator();
      partial.type = "sine";
      partial.frequency.value = 2 * frequency;
      partial.connect(partialGain);
      partial.start(now);
      oscillators.push(partial);
    }

    this.voices.set(key, { frequency, oscillators, envelope, startedAt: now });
    this.order.push(key);
  }

  /** Release `key`'s voice with the configured release ramp. */
  noteOff(key: string): void {
    const voice = this.voices.get(key);
    if (!voice) return;
    this.voices.delete(key);
    this.order = this.order.filter((k) => k !== key);
    const now = this.ctx.currentTime;
    voice.envelope.gain.cancelScheduledValues(now);
    voice.envelope.gain.setValueAtTime(voice.envelope.gain.value || VOICE_PEAK, now);
    voice.envelope.gain.linearRampToValueAtTime(0, now + RELEASE_SECONDS);
    for (const osc of voice.oscillators) {
      osc.stop(now + RELEASE_SECONDS + 0.02);
    }
  }

  allNotesOff(): void {
    for (const key of [...this.voices.keys()]) {
      this.noteOff(key);
    }
  }

  activeKeys(): string[] {
    return [...this.order];
  }

  activeFrequency(key: string): number | undefined {
    return this.voices.get(key)?.frequency;
  }

  get polyphony(): number {
    return this.voices.size;
  }
}
