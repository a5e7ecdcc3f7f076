/** Period management: list, create, quota edit, status advance, pick. */

import { PeriodInfo } from "../api.js";
import { el } from "../dom.js";
import type { AppContext } from "../app.js";
import { problemNotice } from "./shared.js";

const NEXT_STATUS: Record<string, string | undefined> = {
  open: "selected",
  selected: "closed",
};

export async function renderPeriode(ctx: AppContext): Promise<void> {
  const container = el("section", { id: "periode" });
  ctx.main.append(el("h2", {}, ctx.t("nav.periode")), container);
  await refresh();

  async function refresh(): Promise<void> {
    container.replaceChildren();
    let periods: PeriodInfo[];
    try {
      periods = (await ctx.api.listPeriods()).periods;
    } catch (err) {
      container.append(problemNotice(ctx, err));
      return;
    }
    container.append(buildTable(periods), buildCreateForm());
  }

  function buildTable(periods: PeriodInfo[]): HTMLElement {
    if (periods.length === 0) {
      return el("p", { class: "empty-state" }, ctx.t("periode.none"));
    }
    const head = el(
      "tr",
      {},
      ...[
        ctx.t("periode.year"),
        ctx.t("periode.kind"),
        ctx.t("periode.quota"),
        ctx.t("periode.status"),
        ctx.t("periode.applicants"),
        "",
      ].map((h) => el("th", {}, h)),
    );
    const body = el("tbody");
    for (const period of periods) {
      const quotaInput = el("input", {
        class: "quota-input",
        inputmode: "numeric",
        value: period.quota === null ? "" : String(period.quota),
        placeholder: "-",
      }) as HTMLInputElement;
      const saveButton = el(
        "button",
        {
          class: "save-quota",
          onclick: async () => {
            const raw = quotaInput.value.trim();
            try {
              await ctx.api.patchPeriod(
                period.year,
                { quota: raw === "" ? null : Number(raw) },
                period.kind,
              );
              await refresh();
            } catch (err) {
              container.prepend(problemNotice(ctx, err));
            }
          },
        },
        ctx.t("periode.save"),
      );
      const next = NEXT_STATUS[period.status];
      const advanceButton = el(
        "button",
        {
          class: "advance-status",
          disabled: next === undefined,
          onclick: async () => {
            if (!next) return;
            try {
              await ctx.api.patchPeriod(period.year, { status: next }, period.kind);
              await refresh();
            } catch (err) {
              container.prepend(problemNotice(ctx, err));
            }
          },
        },
        `${ctx.t("periode.advance")} → ${next ?? "-"}`,
      );
      const pickButton = el(
        "button",
        {
          class: "pick-period",
          onclick: () => {
            ctx.state.selectedPeriod = { year: period.year, kind: period.kind };
            ctx.state.save();
            void refresh();
          },
        },
        ctx.t("periode.pick"),
      );
      const selected =
        ctx.state.selectedPeriod?.year === period.year &&
        ctx.state.selectedPeriod?.kind === period.kind;
      const row = el(
        "tr",
        { class: selected ? "selected-period" : "" },
        el("td", {}, String(period.year)),
        el("td", {}, period.kind),
        el("td", {}, quotaInput, " ", saveButton),
        el("td", {}, period.status),
        el("td", {}, String(period.applicants ?? "")),
        el("td", {}, pickButton, " ", advanceButton),
      );
      body.append(row);
    }
    return el("table", { class: "periods" }, el("thead", {}, head), body);
  }

  function buildCreateForm(): HTMLElement {
    const year = el("input", { id: "new-year", inputmode: "numeric" }) as HTMLInputElement;
    const kind = el("input", { id: "new-kind", value: "bidik misi" }) as HTMLInputElement;
    const quota = el("input", { id: "new-quota", inputmode: "numeric" }) as HTMLInputElement;
    const form = el(
      "form",
      { id: "create-period" },
      el("h3", {}, ctx.t("periode.create")),
      el("label", {}, ctx.t("periode.year"), year),
      el("label", {}, ctx.t("periode.kind"), kind),
      el("label", {}, ctx.t("periode.quota"), quota),
      el("button", { type: "submit" }, ctx.t("periode.create")),
    );
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      void (async () => {
        try {
          await ctx.api.createPeriod({
            year: Number(year.value),
            kind: kind.value.trim(),
            quota: quota.value.trim() === "" ? null : Number(quota.value),
          });
          await refresh();
        } catch (err) {
          container.prepend(problemNotice(ctx, err));
        }
      })();
    });
    return form;
  }
}
