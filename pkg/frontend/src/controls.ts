/** Strategy control surface: presets-first with an advanced 8-slider
 * panel of generator coordinates.  Sliders serialize to the params wire
 * form, so every submitted strategy is unitary by construction; raw
 * matrix entry is deliberately CLI-only. */

import type { MixedWire, StrategyWire } from "./types.js";

export const SLIDER_COUNT = 8;
export const SLIDER_LIMIT = Math.PI;
export const HALF_PI = Math.PI / 2;

export type SwitchMode = "switch" | "stay";

export interface StrategyControl {
  mode: "preset" | "sliders";
  preset: string;
  sliders: number[]; // 8 generator coordinates in [-pi, pi]
  switchMode: SwitchMode;
}

export function defaultControl(): StrategyControl {
  return {
    mode: "preset",
    preset: "identity",
    sliders: new Array<number>(SLIDER_COUNT).fill(0),
    switchMode: "stay",
  };
}

export function clampSlider(value: number): number {
  if (!Number.isFinite(value)) return 0;
  return Math.min(Math.max(value, -SLIDER_LIMIT), SLIDER_LIMIT);
}

/** Serialize the control to the strategy wire form. */
export function controlToWire(control: StrategyControl): StrategyWire {
  if (control.mode === "preset") {
    return control.preset;
  }
  if (control.sliders.length !== SLIDER_COUNT) {
    throw new Error(`need ${SLIDER_COUNT} slider values`);
  }
  return { params: control.sliders.map(clampSlider) };
}

export function gammaOf(control: StrategyControl): number {
  return control.switchMode === "stay" ? HALF_PI : 0;
}

/** The opponent mixture the live preview queries are evaluated against.
 * For the adaptive policy the last revealed operator is the declared
 * strategy; before any reveal it plays the identity. */
export function opponentMixture(
  policy: string,
  lastRevealed: StrategyWire | null,
): MixedWire {
  switch (policy) {
    case "identity":
      return "identity";
    case "fair-h":
      return "fair-h";
    case "uniform-shuffle":
      return {
        mixture: [
          { strategy: "identity", weight: 1 / 3 },
          { strategy: "shuffle1", weight: 1 / 3 },
          { strategy: "shuffle2", weight: 1 / 3 },
        ],
      };
    case "adaptive-counter":
      return lastRevealed ?? "identity";
    default:
      throw new Error(`unknown policy ${policy}`);
  }
}

export interface Debounced<A extends unknown[]> {
  (...args: A): void;
  cancel(): void;
}

/** Trailing-edge debounce used for slider-drag payoff previews. */
export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  waitMs: number,
): Debounced<A> {
  let timer: ReturnType<typeof setTimeout> | null = null;
  const wrapped = (...args: A) => {
    if (timer !== null) clearTimeout(timer);
    timer = setTimeout(() => {
      timer = null;
      fn(...args);
    }, waitMs);
  };
  wrapped.cancel = () => {
    if (timer !== null) clearTimeout(timer);
    timer = null;
  };
  return wrapped;
}
