/**
 * Selection workbench: pool summary, run trigger, and the two result tables
 * (crisp-score table with columns Nama/NIM/Nilai/C1..Cn, then the final
 * score table with recipients highlighted). Re-runs append to a session-side
 * history dropdown. Every displayed number comes from the API response.
 */

import { ApiError, RunDoc } from "../api.js";
import { el, fmtScore } from "../dom.js";
import type { AppContext } from "../app.js";
import { notice, periodSelector, problemNotice } from "./shared.js";

function historyKey(period: { year: number; kind: string }): string {
  return `${period.year}|${period.kind}`;
}

export function rememberRun(ctx: AppContext, run: RunDoc): void {
  if (!run.period || !run.run_id) return;
  const key = historyKey(run.period);
  const runs = ctx.runHistory.get(key) ?? [];
  if (!runs.some((r) => r.run_id === run.run_id)) {
    runs.push(run);
    ctx.runHistory.set(key, runs);
  }
}

function rawNilai(run: RunDoc, row: { raw: Record<string, number> }): string {
  const criterion = run.criteria.find((c) => c.attribute === "nilai") ?? run.criteria[0];
  const value = row.raw[criterion.id];
  return value === undefined ? "" : String(value);
}

/** The crisp-score table and the final-score table for one run. */
export function buildRunTables(ctx: AppContext, run: RunDoc): HTMLElement {
  const wrap = el("section", { class: "run-tables" });

  const meta = el(
    "p",
    { class: "run-meta" },
    `${run.run_id ?? "(what-if)"}  ·  ${run.timestamp ?? ""}  ·  W = [${run.weights.join(", ")}]`,
  );
  wrap.append(meta);

  const crispHead = [
    ctx.t("common.no"),
    ctx.t("form.nama"),
    "NIM",
    ctx.t("form.nilai"),
    ...run.matrix.criteria,
  ];
  const crispBody = el("tbody");
  run.rows.forEach((row, i) => {
    crispBody.append(
      el(
        "tr",
        {},
        el("td", {}, String(i + 1)),
        el("td", {}, row.name),
        el("td", {}, row.nim),
        el("td", {}, rawNilai(run, row)),
        ...row.crisp.map((v) => el("td", {}, String(v))),
      ),
    );
  });
  wrap.append(
    el("h3", {}, ctx.t("seleksi.fmadm")),
    el(
      "table",
      { class: "fmadm-table" },
      el("thead", {}, el("tr", {}, ...crispHead.map((h) => el("th", {}, h)))),
      crispBody,
    ),
  );

  const scoreBody = el("tbody");
  run.rows.forEach((row, i) => {
    scoreBody.append(
      el(
        "tr",
        { class: row.recipient ? "recipient" : "" },
        el("td", {}, String(i + 1)),
        el("td", {}, row.nim),
        el("td", {}, row.name),
        el("td", {}, rawNilai(run, row)),
        el("td", { class: "score" }, fmtScore(row.score)),
        el("td", {}, String(row.rank)),
      ),
    );
  });
  wrap.append(
    el("h3", {}, ctx.t("seleksi.hasil")),
    el(
      "table",
      { class: "hasil-table" },
      el(
        "thead",
        {},
        el(
          "tr",
          {},
          ...[
            ctx.t("common.no"),
            "NIM",
            ctx.t("form.nama"),
            ctx.t("form.nilai"),
            ctx.t("common.score"),
            ctx.t("common.rank"),
          ].map((h) => el("th", {}, h)),
        ),
      ),
      scoreBody,
    ),
  );

  if (run.ineligible.length > 0) {
    const list = el("ul", { class: "ineligible" });
    for (const row of run.ineligible) {
      list.append(el("li", {}, `${row.nim}: ${row.reason}`));
    }
    wrap.append(el("h3", {}, ctx.t("seleksi.ineligible")), list);
  }
  return wrap;
}

export async function renderSeleksi(ctx: AppContext): Promise<void> {
  ctx.main.append(el("h2", {}, ctx.t("nav.seleksi")));
  const { node, period } = await periodSelector(ctx, () => void ctx.navigate("seleksi"));
  ctx.main.append(node);
  if (!period) return;

  const controls = el("div", { class: "workbench-controls" });
  const results = el("div", { id: "run-results" });
  ctx.main.append(controls, results);

  let poolSize = 0;
  try {
    const { applicants } = await ctx.api.periodApplicants(period.year, period.kind);
    poolSize = applicants.length;
  } catch (err) {
    ctx.main.append(problemNotice(ctx, err));
    return;
  }

  // seed history with the latest persisted run, if any
  try {
    rememberRun(ctx, await ctx.api.latestSelection(period.year, period.kind));
  } catch (err) {
    if (!(err instanceof ApiError && err.problem.code === "no_run_yet")) {
      results.append(problemNotice(ctx, err));
    }
  }

  const runButton = el(
    "button",
    { id: "run-selection", disabled: poolSize === 0 || period.status === "closed" },
    ctx.t("seleksi.run"),
  ) as HTMLButtonElement;
  const historySelect = el("select", { id: "run-history" }) as HTMLSelectElement;
  controls.append(
    el("p", {}, `${ctx.t("seleksi.pool")}: ${poolSize}`),
    runButton,
    el("label", { class: "history" }, ctx.t("seleksi.history") + ": ", historySelect),
  );

  function refreshHistory(selected?: string | null): void {
    historySelect.replaceChildren();
    const runs = ctx.runHistory.get(historyKey(period!)) ?? [];
    for (const run of runs) {
      historySelect.append(el("option", { value: run.run_id ?? "" }, run.run_id ?? ""));
    }
    if (selected) historySelect.value = selected;
  }

  function showRun(run: RunDoc | undefined): void {
    results.replaceChildren();
    if (!run) {
      results.append(el("p", { class: "empty-state" }, ctx.t("seleksi.norun")));
      return;
    }
    results.append(buildRunTables(ctx, run));
  }

  historySelect.addEventListener("change", () => {
    const runs = ctx.runHistory.get(historyKey(period!)) ?? [];
    showRun(runs.find((r) => r.run_id === historySelect.value));
  });

  runButton.addEventListener("click", () => {
    void (async () => {
      results.replaceChildren(notice("info", "…"));
      try {
        const run = await ctx.api.runSelection(period!.year, period!.kind);
        rememberRun(ctx, run);
        refreshHistory(run.run_id);
        showRun(run);
      } catch (err) {
        results.replaceChildren();
        results.append(problemNotice(ctx, err));
      }
    })();
  });

  const runs = ctx.runHistory.get(historyKey(period)) ?? [];
  refreshHistory(runs.length ? runs[runs.length - 1].run_id : null);
  showRun(runs.length ? runs[runs.length - 1] : undefined);
}

export async function renderHasilSeleksi(ctx: AppContext): Promise<void> {
  ctx.main.append(el("h2", {}, ctx.t("nav.hasilSeleksi")));
  const { node, period } = await periodSelector(ctx, () => void ctx.navigate("hasilSeleksi"));
  ctx.main.append(node);
  if (!period) return;
  try {
    const run = await ctx.api.latestSelection(period.year, period.kind);
    rememberRun(ctx, run);
    ctx.main.append(buildRunTables(ctx, run));
  } catch (err) {
    if (err instanceof ApiError && err.problem.code === "no_run_yet") {
      ctx.main.append(el("p", { class: "empty-state" }, ctx.t("seleksi.norun")));
    } else {
      ctx.main.append(problemNotice(ctx, err));
    }
  }
}
