/**
 * What-if weight exploration. Sliders (0.01 steps) drive a debounced,
 * never-persisted re-ranking of the current pool; a badge appears when the
 * what-if order differs from the persisted run, and "apply and re-run"
 * persists through the selection endpoint. Invalid weight sums suppress the
 * call and highlight the sum indicator. In-flight requests are superseded
 * latest-wins. The router asks before leaving unapplied edits behind.
 */

import { ApiError, RunDoc } from "../api.js";
import { el, fmtScore } from "../dom.js";
import type { AppContext } from "../app.js";
import { notice, periodSelector, problemNotice } from "./shared.js";
import { rememberRun } from "./seleksi.js";

const DEFAULT_WEIGHTS = [0.4, 0.3, 0.1, 0.2];
const SUM_TOLERANCE = 1e-6;
const DEBOUNCE_MS = 250;

export async function renderWhatIf(ctx: AppContext): Promise<void> {
  ctx.main.append(el("h2", {}, ctx.t("whatif.title")));
  const { node, period } = await periodSelector(ctx, () => void ctx.navigate("whatIf"));
  ctx.main.append(node);
  if (!period) return;

  let baseline: RunDoc | null = null;
  try {
    baseline = await ctx.api.latestSelection(period.year, period.kind);
    rememberRun(ctx, baseline);
  } catch (err) {
    if (!(err instanceof ApiError && err.problem.code === "no_run_yet")) {
      ctx.main.append(problemNotice(ctx, err));
      return;
    }
  }

  const labels = baseline
    ? baseline.criteria.map((c) => `${c.id} ${c.name}`)
    : DEFAULT_WEIGHTS.map((_, i) => `C${i + 1}`);
  const initial = baseline ? [...baseline.weights] : [...DEFAULT_WEIGHTS];
  const weights = initial.map((w) => Math.round(w * 100) / 100);

  let dirty = false;
  let timer: ReturnType<typeof setTimeout> | null = null;
  let inflight: AbortController | null = null;
  let requestSeq = 0;

  ctx.dirtyGuard.check = () => dirty;
  ctx.dirtyGuard.message = ctx.t("whatif.leave");

  const sliders: HTMLInputElement[] = [];
  const valueLabels: HTMLElement[] = [];
  const sumIndicator = el("span", { id: "weight-sum", class: "sum-indicator" });
  const badge = el("span", { id: "whatif-badge", class: "badge", hidden: true }, ctx.t("whatif.badge"));
  const message = el("div", { id: "whatif-message" });
  const rankingBox = el("section", { id: "whatif-ranking" });

  const sliderRows = weights.map((w, i) => {
    const slider = el("input", {
      type: "range",
      min: "0",
      max: "1",
      step: "0.01",
      value: String(w),
      id: `weight-${i}`,
    }) as HTMLInputElement;
    const valueLabel = el("span", { class: "weight-value" }, w.toFixed(2));
    sliders.push(slider);
    valueLabels.push(valueLabel);
    slider.addEventListener("input", () => {
      weights[i] = Number(slider.value);
      valueLabel.textContent = weights[i].toFixed(2);
      dirty = true;
      updateSum();
      schedule();
    });
    return el("div", { class: "slider-row" }, el("label", { for: `weight-${i}` }, labels[i]), slider, valueLabel);
  });

  const distributeButton = el(
    "button",
    {
      id: "distribute-remainder",
      onclick: () => {
        const sum = weights.reduce((a, b) => a + b, 0);
        let deficit = Math.round((1 - sum) * 100); // in 0.01 steps
        for (let i = 0; i < weights.length && deficit !== 0; i++) {
          const step = Math.trunc(deficit / (weights.length - i)) || Math.sign(deficit);
          const units = Math.max(0, Math.round(weights[i] * 100) + step);
          deficit -= units - Math.round(weights[i] * 100);
          weights[i] = units / 100;
          sliders[i].value = String(weights[i]);
          valueLabels[i].textContent = weights[i].toFixed(2);
        }
        dirty = true;
        updateSum();
        schedule();
      },
    },
    ctx.t("whatif.distribute"),
  );

  const applyButton = el(
    "button",
    {
      id: "apply-rerun",
      onclick: () => {
        void (async () => {
          message.replaceChildren();
          if (!sumValid()) return;
          try {
            const run = await ctx.api.runSelection(period!.year, period!.kind, [...weights]);
            baseline = run;
            rememberRun(ctx, run);
            dirty = false;
            renderRanking(run);
            updateBadge(run);
          } catch (err) {
            message.append(problemNotice(ctx, err));
          }
        })();
      },
    },
    ctx.t("whatif.apply"),
  );

  ctx.main.append(
    el("section", { id: "whatif-panel" }, ...sliderRows,
      el("div", { class: "whatif-actions" },
        el("span", {}, ctx.t("whatif.sum") + ": ", sumIndicator),
        distributeButton,
        applyButton,
        badge,
      ),
      message,
    ),
    rankingBox,
  );

  function sumOf(): number {
    return weights.reduce((a, b) => a + b, 0);
  }

  function sumValid(): boolean {
    return Math.abs(sumOf() - 1) <= SUM_TOLERANCE;
  }

  function updateSum(): void {
    sumIndicator.textContent = sumOf().toFixed(2);
    sumIndicator.className = sumValid() ? "sum-indicator valid" : "sum-indicator invalid";
    if (!sumValid()) {
      message.replaceChildren(notice("error", ctx.t("whatif.invalid")));
    } else {
      message.replaceChildren();
    }
  }

  function schedule(): void {
    if (timer) clearTimeout(timer);
    if (!sumValid()) return; // suppressed: indicator already highlighted
    timer = setTimeout(() => void refresh(), DEBOUNCE_MS);
  }

  async function refresh(): Promise<void> {
    if (!sumValid()) return;
    if (inflight) inflight.abort();
    inflight = new AbortController();
    const seq = ++requestSeq;
    try {
      const run = await ctx.api.whatIf(
        { year: period!.year, kind: period!.kind, weights: [...weights] },
        inflight.signal,
      );
      if (seq !== requestSeq) return; // superseded by a newer slider state
      renderRanking(run);
      updateBadge(run);
    } catch (err) {
      if (err instanceof Error && err.name === "AbortError") return;
      if (seq !== requestSeq) return;
      rankingBox.replaceChildren();
      rankingBox.append(problemNotice(ctx, err));
    }
  }

  function renderRanking(run: RunDoc): void {
    rankingBox.replaceChildren();
    const body = el("tbody");
    run.rows.forEach((row) => {
      body.append(
        el(
          "tr",
          { class: row.recipient ? "recipient" : "" },
          el("td", {}, String(row.rank)),
          el("td", {}, row.nim),
          el("td", {}, row.name),
          el("td", { class: "score" }, fmtScore(row.score)),
        ),
      );
    });
    rankingBox.append(
      el(
        "table",
        { class: "whatif-table" },
        el(
          "thead",
          {},
          el(
            "tr",
            {},
            ...[ctx.t("common.rank"), "NIM", ctx.t("form.nama"), ctx.t("common.score")].map((h) =>
              el("th", {}, h),
            ),
          ),
        ),
        body,
      ),
    );
  }

  function updateBadge(run: RunDoc): void {
    if (!baseline) {
      badge.hidden = true;
      return;
    }
    const persisted = baseline.ranking.entries.map((e) => e.alternative).join(",");
    const current = run.ranking.entries.map((e) => e.alternative).join(",");
    badge.hidden = persisted === current;
  }

  updateSum();
  if (baseline) {
    renderRanking(baseline);
    updateBadge(baseline);
  } else {
    rankingBox.append(el("p", { class: "empty-state" }, ctx.t("seleksi.norun")));
  }
}
