import { el } from "../dom.js";
import type { AppContext } from "../app.js";

export function renderIndex(ctx: AppContext): void {
  ctx.main.append(
    el(
      "section",
      { class: "hero" },
      el("h2", {}, ctx.t("app.title")),
      el("p", {}, ctx.t("index.welcome")),
    ),
    el(
      "section",
      {},
      el("h3", {}, ctx.t("index.profil")),
      el(
        "p",
        { class: "placeholder" },
        "Universitas Bina Darma Palembang — program beasiswa bidik misi.",
      ),
      el("h3", {}, ctx.t("index.visi")),
      el(
        "p",
        { class: "placeholder" },
        "Membantu mahasiswa berprestasi dari keluarga kurang mampu menyelesaikan studi.",
      ),
    ),
    el(
      "section",
      { class: "quick-links" },
      el("a", { href: "#/pendaftaran", class: "button" }, ctx.t("nav.pendaftaran")),
      el("a", { href: "#/penerima", class: "button" }, ctx.t("nav.penerima")),
    ),
  );
}
