/** Bits shared between pages: period selector, problem notices. */

import { ApiError, PeriodInfo } from "../api.js";
import { el } from "../dom.js";
import type { AppContext } from "../app.js";

export function notice(kind: "error" | "success" | "info", text: string): HTMLElement {
  return el("div", { class: `notice ${kind}` }, text);
}

export function problemNotice(ctx: AppContext, err: unknown): HTMLElement {
  if (err instanceof ApiError) {
    const box = notice("error", `${ctx.t("common.error")}: ${err.problem.message}`);
    if (Array.isArray(err.problem.details)) {
      const list = el("ul");
      for (const item of err.problem.details) {
        list.append(el("li", {}, typeof item === "string" ? item : JSON.stringify(item)));
      }
      box.append(list);
    }
    return box;
  }
  return notice("error", ctx.t("common.error"));
}

/**
 * Dropdown over the known periods, bound to ctx.state.selectedPeriod.
 * Falls back to the first period when none is selected yet.
 */
export async function periodSelector(
  ctx: AppContext,
  onChange: () => void,
): Promise<{ node: HTMLElement; period: PeriodInfo | null }> {
  const { periods } = await ctx.api.listPeriods();
  if (periods.length === 0) {
    return { node: notice("info", ctx.t("periode.none")), period: null };
  }
  const keyOf = (p: { year: number; kind: string }) => `${p.year}|${p.kind}`;
  let current = ctx.state.selectedPeriod
    ? periods.find((p) => keyOf(p) === keyOf(ctx.state.selectedPeriod!)) ?? periods[0]
    : periods[0];
  if (
    !ctx.state.selectedPeriod ||
    keyOf(ctx.state.selectedPeriod) !== keyOf(current)
  ) {
    ctx.state.selectedPeriod = { year: current.year, kind: current.kind };
    ctx.state.save();
  }
  const select = el("select", { id: "period-select" }) as HTMLSelectElement;
  for (const p of periods) {
    const option = el("option", { value: keyOf(p) }, `${p.year} — ${p.kind} (${p.status})`);
    select.append(option);
  }
  select.value = keyOf(current);
  select.addEventListener("change", () => {
    const [year, kind] = select.value.split("|");
    ctx.state.selectedPeriod = { year: Number(year), kind };
    ctx.state.save();
    onChange();
  });
  const node = el("label", { class: "period-picker" }, ctx.t("nav.periode") + ": ", select);
  return { node, period: current };
}
