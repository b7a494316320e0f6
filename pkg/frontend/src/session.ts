/** Client-side session store.  Mirrors the server's session state and
 * never computes payoffs locally: scores, outcomes and expected payoffs
 * are copied from server responses.  At most one round submission is in
 * flight; a 409 round conflict triggers a state resync. */

import { ApiClient, ApiError } from "./api.js";
import type {
  Regime,
  RoundEntryWire,
  SessionStateWire,
  StrategyWire,
} from "./types.js";

export interface UiSession {
  sessionId: string;
  regime: Regime;
  policy: string;
  seed: number;
  nextRound: number;
  scores: { bob: number; alice: number };
  history: RoundEntryWire[];
}

export class RoundConflictError extends Error {
  constructor(readonly resyncedRound: number) {
    super(`round conflict; resynced to round ${resyncedRound}`);
    this.name = "RoundConflictError";
  }
}

export class SessionStore {
  private session: UiSession | null = null;
  private inFlight = false;

  constructor(private readonly api: ApiClient) {}

  get current(): UiSession | null {
    return this.session;
  }

  get lastRevealed(): StrategyWire | null {
    const history = this.session?.history ?? [];
    const last = history[history.length - 1];
    return last ? { matrix: last.alice_revealed.matrix } : null;
  }

  async create(regime: Regime, policy: string, seed: number): Promise<UiSession> {
    const { session_id } = await this.api.createSession({
      regime,
      alice_policy: policy,
      seed,
    });
    this.session = {
      sessionId: session_id,
      regime,
      policy,
      seed,
      nextRound: 1,
      scores: { bob: 0, alice: 0 },
      history: [],
    };
    return this.session;
  }

  /** Submit one round.  Rejects while a submission is in flight; on a
   * server 409 the store resyncs from the server and raises
   * RoundConflictError so the caller can re-drive the UI. */
  async submitRound(bob: StrategyWire, gamma: number): Promise<RoundEntryWire> {
    const session = this.requireSession();
    if (this.inFlight) {
      throw new Error("a round submission is already in flight");
    }
    this.inFlight = true;
    try {
      const entry = await this.api.playRound(session.sessionId, {
        round: session.nextRound,
        bob,
        gamma,
      });
      session.history.push(entry);
      session.scores = { ...entry.scores };
      session.nextRound = entry.round + 1;
      return entry;
    } catch (err) {
      if (err instanceof ApiError && err.status === 409) {
        const state = await this.resync();
        throw new RoundConflictError(state.round + 1);
      }
      throw err;
    } finally {
      this.inFlight = false;
    }
  }

  async resync(): Promise<SessionStateWire> {
    const session = this.requireSession();
    const state = await this.api.sessionState(session.sessionId);
    session.history = state.history.slice();
    session.scores = { ...state.scores };
    session.nextRound = state.round + 1;
    return state;
  }

  private requireSession(): UiSession {
    if (this.session === null) {
      throw new Error("no active session");
    }
    return this.session;
  }
}
