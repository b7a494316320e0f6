/** Live expected-payoff preview with cancel-on-new-input semantics: a
 * new query aborts the in-flight one, so stale slider positions can
 * never overwrite a fresher readout. */

import { ApiClient, PayoffRequest } from "./api.js";

export class PayoffPreviewer {
  private controller: AbortController | null = null;

  constructor(private readonly api: ApiClient) {}

  /** Resolve to the server's Bob payoff, or null if superseded. */
  async query(req: PayoffRequest): Promise<number | null> {
    this.controller?.abort();
    const controller = new AbortController();
    this.controller = controller;
    try {
      const res = await this.api.payoff(req, controller.signal);
      return controller.signal.aborted ? null : res.bob;
    } catch (err) {
      if (controller.signal.aborted) return null;
      throw err;
    }
  }

  cancel(): void {
    this.controller?.abort();
    this.controller = null;
  }
}
