/** Scripted session against recorded fixtures: entangled regime,
 * identity banker, identity + stay every round — the assured-win line
 * the round screen walks a new player through. */

import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { RoundConflictError, SessionStore } from "../src/session.js";
import { replayFetch } from "./replay.js";

const HALF_PI = Math.PI / 2;

function store(): SessionStore {
  return new SessionStore(new ApiClient(replayFetch()));
}

describe("scripted stay session", () => {
  it("identity + stay wins five rounds straight", async () => {
    const s = store();
    await s.create("entangled", "identity", 7);
    for (let round = 1; round <= 5; round++) {
      const entry = await s.submitRound("identity", HALF_PI);
      expect(entry.round).toBe(round);
      expect(entry.outcome.bob_wins).toBe(true);
      expect(entry.outcome.b).toBe(entry.outcome.a);
      expect(entry.expected_payoff).toBe(1.0); // server value, verbatim
    }
    expect(s.current?.scores).toEqual({ bob: 5, alice: 0 });
    expect(s.current?.history).toHaveLength(5);
    expect(s.current?.nextRound).toBe(6);
  });

  it("mirrors the server session state after play", async () => {
    const s = store();
    await s.create("entangled", "identity", 7);
    for (let round = 1; round <= 5; round++) {
      await s.submitRound("identity", HALF_PI);
    }
    const state = await s.resync();
    expect(state.scores).toEqual(s.current?.scores);
    expect(state.round).toBe(5);
    expect(state.history).toHaveLength(5);
  });

  it("exposes the opponent's revealed operator after each round", async () => {
    const s = store();
    await s.create("entangled", "identity", 7);
    await s.submitRound("identity", HALF_PI);
    const revealed = s.lastRevealed as { matrix: [number, number][][] };
    expect(revealed.matrix).toHaveLength(3);
    // identity policy: the revealed operator is the identity matrix
    for (let i = 0; i < 3; i++) {
      for (let j = 0; j < 3; j++) {
        expect(revealed.matrix[i]![j]![0]).toBeCloseTo(i === j ? 1 : 0, 12);
        expect(revealed.matrix[i]![j]![1]).toBeCloseTo(0, 12);
      }
    }
  });
});

describe("round conflicts", () => {
  it("a stale round counter resyncs from the server", async () => {
    const s = store();
    await s.create("entangled", "identity", 7);
    for (let round = 1; round <= 5; round++) {
      await s.submitRound("identity", HALF_PI);
    }
    // simulate a stale tab replaying round 1
    s.current!.nextRound = 1;
    await expect(s.submitRound("identity", HALF_PI)).rejects.toBeInstanceOf(
      RoundConflictError,
    );
    expect(s.current?.nextRound).toBe(6); // resynced
    expect(s.current?.scores).toEqual({ bob: 5, alice: 0 });
  });
});

describe("guards", () => {
  it("refuses to submit without a session", async () => {
    await expect(store().submitRound("identity", 0)).rejects.toThrow(
      /no active session/,
    );
  });
});
