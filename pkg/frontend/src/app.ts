/** Screen wiring: setup -> round -> what-if.  All DOM is built here; the
 * modules it drives (api, session, controls, preview) are DOM-free and
 * covered by the test suite. */

import { ApiClient, ApiError } from "./api.js";
import {
  StrategyControl,
  SLIDER_COUNT,
  SLIDER_LIMIT,
  controlToWire,
  debounce,
  defaultControl,
  gammaOf,
  opponentMixture,
} from "./controls.js";
import { PayoffPreviewer } from "./preview.js";
import { RoundConflictError, SessionStore } from "./session.js";
import type { PolicyInfo, Regime, RoundEntryWire } from "./types.js";

const PREVIEW_DEBOUNCE_MS = 150;
const PLAYER_PRESETS = ["identity", "shuffle1", "shuffle2", "fair-h"];

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export class App {
  private readonly api: ApiClient;
  private readonly store: SessionStore;
  private readonly previewer: PayoffPreviewer;
  private policies: PolicyInfo[] = [];
  private control: StrategyControl = defaultControl();
  private regime: Regime = "entangled";
  private policy = "identity";
  private whatIfAbort: AbortController | null = null;

  constructor(private readonly root: HTMLElement, api?: ApiClient) {
    this.api = api ?? new ApiClient((input, init) => fetch(input, init));
    this.store = new SessionStore(this.api);
    this.previewer = new PayoffPreviewer(this.api);
  }

  async start(): Promise<void> {
    try {
      const presets = await this.api.presets();
      this.policies = presets.policies;
    } catch {
      this.root.replaceChildren(
        el("div", "banner error", "service unreachable — start it with: quantum-monty serve"),
      );
      return;
    }
    this.renderSetup();
  }

  // ---- setup screen -----------------------------------------------------

  private renderSetup(): void {
    const screen = el("section", "screen setup");
    screen.append(el("h1", undefined, "quantum monty"));
    screen.append(el("p", "tagline",
      "three boxes, qutrit strategies; you play the contestant"));

    const form = el("form");
    const regimeSel = el("select");
    for (const r of ["entangled", "unentangled"]) {
      regimeSel.append(new Option(r, r));
    }
    const policySel = el("select");
    for (const p of this.policies) {
      policySel.append(new Option(`${p.name} — ${p.description}`, p.name));
    }
    const hint = el("p", "hint");
    const updateHint = () => {
      const info = this.policies.find((p) => p.name === policySel.value);
      hint.textContent = info ? info.hint : "";
    };
    policySel.addEventListener("change", updateHint);
    updateHint();

    const seedInput = el("input");
    seedInput.type = "text";
    seedInput.value = "0";
    const seedError = el("span", "field-error");
    const submit = el("button", "primary", "start session");
    submit.type = "submit";
    const validateSeed = () => {
      const ok = /^\d+$/.test(seedInput.value.trim());
      seedError.textContent = ok ? "" : "seed must be a non-negative integer";
      submit.disabled = !ok;
      return ok;
    };
    seedInput.addEventListener("input", validateSeed);

    form.append(
      labelled("regime", regimeSel),
      labelled("opponent policy", policySel),
      hint,
      labelled("seed", seedInput),
      seedError,
      submit,
    );
    form.addEventListener("submit", async (ev) => {
      ev.preventDefault();
      if (!validateSeed()) return;
      this.regime = regimeSel.value as Regime;
      this.policy = policySel.value;
      try {
        await this.store.create(this.regime, this.policy, Number(seedInput.value));
      } catch (err) {
        seedError.textContent = describeError(err);
        return;
      }
      this.renderRound();
    });
    screen.append(form);
    this.root.replaceChildren(screen);
  }

  // ---- round screen -----------------------------------------------------

  private renderRound(statusText = ""): void {
    const session = this.store.current;
    if (!session) return;
    const screen = el("section", "screen round");
    screen.append(el("h1", undefined,
      `round ${session.nextRound} — you ${session.scores.bob} : ${session.scores.alice} banker`));
    screen.append(el("p", "meta",
      `${session.regime} regime · opponent ${session.policy} · payoff mode: incoherent (pinned)`));
    if (statusText) screen.append(el("p", "banner", statusText));

    const readout = el("p", "payoff-readout", "expected payoff: —");
    const errorLine = el("p", "field-error");

    const refreshPreview = debounce(() => {
      void this.updatePreview(readout, errorLine);
    }, PREVIEW_DEBOUNCE_MS);

    // preset row
    const presetRow = el("div", "preset-row");
    for (const name of PLAYER_PRESETS) {
      const btn = el("button", "preset", name);
      btn.type = "button";
      btn.addEventListener("click", () => {
        this.control.mode = "preset";
        this.control.preset = name;
        markActive(presetRow, btn);
        refreshPreview();
      });
      presetRow.append(btn);
    }

    // advanced slider panel
    const advanced = el("details", "advanced");
    advanced.append(el("summary", undefined, "advanced: 8 generator coordinates"));
    const sliderPanel = el("div", "sliders");
    for (let i = 0; i < SLIDER_COUNT; i++) {
      const slider = el("input");
      slider.type = "range";
      slider.min = String(-SLIDER_LIMIT);
      slider.max = String(SLIDER_LIMIT);
      slider.step = "0.001";
      slider.value = String(this.control.sliders[i] ?? 0);
      slider.addEventListener("input", () => {
        this.control.mode = "sliders";
        this.control.sliders[i] = Number(slider.value);
        markActive(presetRow, null);
        refreshPreview();
      });
      sliderPanel.append(labelled(`θ${i + 1}`, slider));
    }
    advanced.append(sliderPanel);

    // switch / stay
    const switchRow = el("div", "switch-row");
    for (const mode of ["stay", "switch"] as const) {
      const btn = el("button", mode === this.control.switchMode ? "toggle active" : "toggle", mode);
      btn.type = "button";
      btn.addEventListener("click", () => {
        this.control.switchMode = mode;
        for (const other of switchRow.children) other.classList.remove("active");
        btn.classList.add("active");
        refreshPreview();
      });
      switchRow.append(btn);
    }

    const submit = el("button", "primary", "play round");
    submit.type = "button";
    submit.addEventListener("click", async () => {
      submit.disabled = true;
      try {
        const entry = await this.store.submitRound(
          controlToWire(this.control), gammaOf(this.control));
        this.renderOutcome(entry);
      } catch (err) {
        submit.disabled = false;
        if (err instanceof RoundConflictError) {
          this.renderRound("state was out of date — resynced with the server");
          return;
        }
        errorLine.textContent = describeError(err);
      }
    });

    screen.append(presetRow, advanced, switchRow, readout, errorLine, submit);
    screen.append(this.renderWhatIf(), this.renderHistory(session.history));
    this.root.replaceChildren(screen);
    refreshPreview();
  }

  private async updatePreview(readout: HTMLElement, errorLine: HTMLElement): Promise<void> {
    try {
      const value = await this.previewer.query({
        regime: this.regime,
        alice: opponentMixture(this.policy, this.store.lastRevealed),
        bob: controlToWire(this.control),
        gamma: gammaOf(this.control),
        mode: "incoherent",
      });
      if (value !== null) {
        readout.textContent = `expected payoff: ${value.toFixed(4)}`;
        errorLine.textContent = "";
      }
    } catch (err) {
      errorLine.textContent = describeError(err);
    }
  }

  private renderOutcome(entry: RoundEntryWire): void {
    const session = this.store.current;
    if (!session) return;
    const screen = el("section", "screen outcome");
    const { o, b, a, bob_wins } = entry.outcome;
    screen.append(el("h1", undefined, bob_wins ? "you won the round" : "you lost the round"));
    screen.append(el("p", undefined,
      `opened box ${o}, you held box ${b}, prize was in box ${a}`));
    screen.append(el("p", undefined,
      `expected payoff this round: ${entry.expected_payoff.toFixed(4)}`));
    screen.append(el("p", undefined,
      `score — you ${entry.scores.bob} : ${entry.scores.alice} banker`));
    screen.append(el("p", "meta", "opponent's revealed operator:"));
    screen.append(renderMatrix(entry.alice_revealed.matrix));
    const next = el("button", "primary", "next round");
    next.type = "button";
    next.addEventListener("click", () => this.renderRound());
    screen.append(next);
    this.root.replaceChildren(screen);
  }

  // ---- what-if advisory -------------------------------------------------

  private renderWhatIf(): HTMLElement {
    const session = this.store.current;
    const panel = el("details", "whatif");
    panel.append(el("summary", undefined, "what if? (counter-strategy advice)"));
    if (!session || session.history.length === 0) {
      panel.append(el("p", "hint", "play at least one round to reveal the opponent"));
      return panel;
    }
    const status = el("p", "hint");
    const run = el("button", undefined, "search for a counter");
    run.type = "button";
    const cancel = el("button", undefined, "cancel");
    cancel.type = "button";
    cancel.disabled = true;
    const result = el("div", "advice");

    run.addEventListener("click", async () => {
      run.disabled = true;
      cancel.disabled = false;
      status.textContent = "searching SU(3)…";
      this.whatIfAbort = new AbortController();
      try {
        const advice = await this.api.bestResponse({
          regime: this.regime,
          respond_as: "bob",
          opponent: opponentMixture(this.policy, this.store.lastRevealed),
          seed: session.seed,
        }, this.whatIfAbort.signal);
        const branch = advice.gamma_branch === 0 ? "switch" : "stay";
        result.replaceChildren(
          el("p", undefined,
            `advised: custom operator + ${branch}, value ${advice.value.toFixed(4)}`),
        );
        const adopt = el("button", undefined, "adopt into controls");
        adopt.type = "button";
        adopt.addEventListener("click", () => {
          this.control = {
            mode: "sliders",
            preset: this.control.preset,
            sliders: advice.theta.slice(),
            switchMode: branch,
          };
          this.renderRound("advised strategy loaded into the sliders");
        });
        result.append(adopt);
        status.textContent = "";
      } catch (err) {
        // a cancelled search leaves the controls and advice untouched
        status.textContent = this.whatIfAbort?.signal.aborted
          ? "search cancelled"
          : describeError(err);
      } finally {
        run.disabled = false;
        cancel.disabled = true;
        this.whatIfAbort = null;
      }
    });
    cancel.addEventListener("click", () => this.whatIfAbort?.abort());

    panel.append(run, cancel, status, result);
    return panel;
  }

  private renderHistory(history: RoundEntryWire[]): HTMLElement {
    const list = el("div", "history");
    list.append(el("h2", undefined, "history"));
    for (const entry of history) {
      list.append(el("p", entry.outcome.bob_wins ? "win" : "loss",
        `round ${entry.round}: ${entry.outcome.bob_wins ? "win" : "loss"} ` +
        `(o=${entry.outcome.o}, you=${entry.outcome.b}, prize=${entry.outcome.a})`));
    }
    return list;
  }
}

function labelled(text: string, input: HTMLElement): HTMLElement {
  const wrap = el("label", "field");
  wrap.append(el("span", undefined, text), input);
  return wrap;
}

function markActive(row: HTMLElement, active: HTMLElement | null): void {
  for (const child of row.children) child.classList.remove("active");
  active?.classList.add("active");
}

function renderMatrix(matrix: [number, number][][]): HTMLElement {
  const table = el("table", "matrix");
  for (const row of matrix) {
    const tr = el("tr");
    for (const [re, im] of row) {
      const sign = im < 0 ? "−" : "+";
      tr.append(el("td", undefined,
        `${re.toFixed(3)} ${sign} ${Math.abs(im).toFixed(3)}i`));
    }
    table.append(tr);
  }
  return table;
}

function describeError(err: unknown): string {
  if (err instanceof ApiError) return `${err.code}: ${err.message}`;
  return err instanceof Error ? err.message : String(err);
}
