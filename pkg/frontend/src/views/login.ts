import { ApiError } from "../api.js";
import { el } from "../dom.js";
import type { AppContext } from "../app.js";
import { notice } from "./shared.js";

export function renderLogin(ctx: AppContext): void {
  const message = el("div", { id: "login-message" });
  if (ctx.state.afterLogin) message.append(notice("info", ctx.t("login.required")));

  const username = el("input", { id: "login-username", autocomplete: "username" }) as HTMLInputElement;
  const password = el("input", {
    id: "login-password",
    type: "password",
    autocomplete: "current-password",
  }) as HTMLInputElement;

  const form = el(
    "form",
    { id: "login-form" },
    el("label", {}, ctx.t("login.username"), username),
    el("label", {}, ctx.t("login.password"), password),
    el("button", { type: "submit" }, ctx.t("login.submit")),
  );

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    void (async () => {
      message.replaceChildren();
      try {
        const session = await ctx.api.login(username.value, password.value);
        ctx.state.token = session.token;
        ctx.api.token = session.token;
        ctx.state.save();
        const next = ctx.state.afterLogin ?? "periode";
        ctx.state.afterLogin = null;
        await ctx.navigate(next);
      } catch (err) {
        if (err instanceof ApiError) {
          message.append(notice("error", err.problem.message));
        } else {
          message.append(notice("error", ctx.t("common.error")));
        }
      }
    })();
  });

  ctx.main.append(el("h2", {}, ctx.t("nav.login")), message, form);
}
