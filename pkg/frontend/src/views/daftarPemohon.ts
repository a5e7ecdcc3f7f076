/** Admin list of everyone registered in the selected period. */

import { el, table } from "../dom.js";
import type { AppContext } from "../app.js";
import { periodSelector, problemNotice } from "./shared.js";

export async function renderDaftarPemohon(ctx: AppContext): Promise<void> {
  ctx.main.append(el("h2", {}, ctx.t("nav.daftarPemohon")));
  const { node, period } = await periodSelector(ctx, () => void ctx.navigate("daftarPemohon"));
  ctx.main.append(node);
  if (!period) return;

  const box = el("section", { id: "pool" });
  ctx.main.append(box);
  try {
    const { applicants } = await ctx.api.periodApplicants(period.year, period.kind);
    if (applicants.length === 0) {
      box.append(el("p", { class: "empty-state" }, ctx.t("seleksi.empty")));
      return;
    }
    box.append(
      table(
        [
          ctx.t("form.nama"),
          "NIM",
          ctx.t("form.jurusan"),
          "SMT",
          ctx.t("form.tahun"),
          ctx.t("form.nilai"),
          ctx.t("form.penghasilan"),
          ctx.t("form.tanggungan"),
        ],
        applicants.map((a) => [
          a.name,
          a.nim,
          a.program,
          String(a.semester),
          String(a.period_year),
          String(a.nilai),
          String(a.income),
          String(a.dependents),
        ]),
        "pool-table",
      ),
    );
  } catch (err) {
    box.append(problemNotice(ctx, err));
  }
}
