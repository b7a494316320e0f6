/** Thin typed client for the game service.  The fetch implementation is
 * injectable so the test suite can replay recorded server fixtures. */

import type {
  BestResponseWire,
  MixedWire,
  PayoffMode,
  PayoffWire,
  PresetsResponse,
  Regime,
  RoundEntryWire,
  SessionStateWire,
  StrategyWire,
} from "./types.js";

export type FetchLike = (
  input: string,
  init?: RequestInit,
) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export interface PayoffRequest {
  regime: Regime;
  alice: MixedWire;
  bob: MixedWire;
  gamma: number;
  mode?: PayoffMode;
}

export interface BestResponseRequest {
  regime: Regime;
  respond_as: "alice" | "bob";
  opponent: MixedWire;
  gamma?: number;
  starts?: number;
  seed?: number;
}

export interface CreateSessionRequest {
  regime: Regime;
  alice_policy: string;
  seed: number;
}

export interface PlayRoundRequest {
  round: number;
  bob: StrategyWire;
  gamma: number;
}

export class ApiClient {
  constructor(
    private readonly fetchImpl: FetchLike,
    private readonly base: string = "",
  ) {}

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
    signal?: AbortSignal,
  ): Promise<T> {
    const init: RequestInit = { method, signal };
    if (body !== undefined) {
      init.headers = { "content-type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const res = await this.fetchImpl(this.base + path, init);
    const payload = await res.json();
    if (!res.ok) {
      const err = payload?.error ?? {};
      throw new ApiError(
        res.status,
        err.code ?? "Unknown",
        err.message ?? `request failed with status ${res.status}`,
      );
    }
    return payload as T;
  }

  presets(): Promise<PresetsResponse> {
    return this.request("GET", "/api/presets");
  }

  payoff(req: PayoffRequest, signal?: AbortSignal): Promise<PayoffWire> {
    return this.request("POST", "/api/payoff", req, signal);
  }

  bestResponse(
    req: BestResponseRequest,
    signal?: AbortSignal,
  ): Promise<BestResponseWire> {
    return this.request("POST", "/api/best-response", req, signal);
  }

  createSession(req: CreateSessionRequest): Promise<{ session_id: string }> {
    return this.request("POST", "/api/session", req);
  }

  playRound(sessionId: string, req: PlayRoundRequest): Promise<RoundEntryWire> {
    return this.request("POST", `/api/session/${sessionId}/round`, req);
  }

  sessionState(sessionId: string): Promise<SessionStateWire> {
    return this.request("GET", `/api/session/${sessionId}`);
  }

  deleteSession(sessionId: string): Promise<{ deleted: string }> {
    return this.request("DELETE", `/api/session/${sessionId}`);
  }
}
