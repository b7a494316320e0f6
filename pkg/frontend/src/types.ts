/** Wire types mirroring the server's JSON formats.  The client never
 * computes payoffs or samples outcomes; every number shown in the UI is
 * taken verbatim from one of these shapes. */

export type Complex = [number, number]; // [re, im]
export type MatrixWire = Complex[][];   // 3x3

export type Regime = "unentangled" | "entangled";
export type PayoffMode = "incoherent" | "coherent";

export type StrategyWire =
  | string
  | { preset: string; of?: StrategyWire }
  | { params: number[] }
  | { matrix: MatrixWire };

export interface MixtureComponentWire {
  strategy: StrategyWire;
  weight: number;
}

export type MixedWire = StrategyWire | { mixture: MixtureComponentWire[] };

export interface PayoffWire {
  bob: number;
  alice: number;
  final_norm2: number;
  regime: Regime;
  mode: PayoffMode;
}

export interface PresetInfo {
  name: string;
  description: string;
}

export interface PolicyInfo {
  name: string;
  description: string;
  hint: string;
}

export interface PresetsResponse {
  strategies: PresetInfo[];
  policies: PolicyInfo[];
}

export interface BestResponseWire {
  theta: number[];
  gamma_branch: number;
  value: number;
  starts: number;
  evaluations: number;
  strategy: { matrix: MatrixWire };
}

export interface OutcomeWire {
  o: number;
  b: number;
  a: number;
  bob_wins: boolean;
  expected_bob: number;
  stream: number;
}

export interface RoundEntryWire {
  round: number;
  bob: StrategyWire;
  gamma: number;
  alice_revealed: { matrix: MatrixWire };
  outcome: OutcomeWire;
  expected_payoff: number;
  scores: { bob: number; alice: number };
}

export interface SessionStateWire {
  session_id: string;
  regime: Regime;
  mode: PayoffMode;
  alice_policy: string;
  round: number;
  scores: { bob: number; alice: number };
  history: RoundEntryWire[];
}

export interface ErrorWire {
  error: { code: string; message: string };
}
