/** Public recipients page: the latest run's recipients, rank order. */

import { ApiError } from "../api.js";
import { el, fmtScore, table } from "../dom.js";
import type { AppContext } from "../app.js";
import { periodSelector, problemNotice } from "./shared.js";

export async function renderPenerima(ctx: AppContext): Promise<void> {
  ctx.main.append(el("h2", {}, ctx.t("penerima.title")));
  const { node, period } = await periodSelector(ctx, () => void ctx.navigate("penerima"));
  ctx.main.append(node);
  if (!period) return;

  const box = el("section", { id: "recipients" });
  ctx.main.append(box);
  try {
    const doc = await ctx.api.recipients(period.year, period.kind);
    box.append(
      table(
        [ctx.t("common.no"), "NIM", ctx.t("form.nama"), ctx.t("common.score")],
        doc.recipients.map((r, i) => [String(i + 1), r.nim, r.name, fmtScore(r.score)]),
        "recipients-table",
      ),
    );
  } catch (err) {
    if (err instanceof ApiError && err.problem.code === "no_run_yet") {
      box.append(el("p", { class: "empty-state" }, ctx.t("penerima.norun")));
    } else if (err instanceof ApiError && err.problem.status === 404) {
      box.append(el("p", { class: "empty-state" }, ctx.t("common.emptyState")));
    } else {
      box.append(problemNotice(ctx, err));
    }
  }
}
