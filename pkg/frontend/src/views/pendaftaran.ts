/**
 * Public registration form (the online application page).
 *
 * Client-side checks mirror the server rules: nim and name required, integer
 * semester/year/dependants, finite non-negative money. Server-side 422
 * details land next to their fields; a duplicate nim shows inline at the nim
 * field; network failures keep the form content intact.
 */

import { ApiError, ApplicantPayload } from "../api.js";
import { el } from "../dom.js";
import type { AppContext } from "../app.js";
import { notice } from "./shared.js";

interface Field {
  name: string;
  labelKey: string;
  input: HTMLInputElement;
  error: HTMLElement;
}

const INTEGER = /^-?\d+$/;

export function renderPendaftaran(ctx: AppContext): void {
  const banner = el("div", { id: "register-banner" });
  const fields = new Map<string, Field>();

  function makeField(name: string, labelKey: string, attrs: Record<string, string> = {}): HTMLElement {
    const input = el("input", { id: `f-${name}`, name, ...attrs }) as HTMLInputElement;
    const error = el("span", { class: "field-error", "data-err": name });
    fields.set(name, { name, labelKey, input, error });
    return el("label", { class: "field" }, ctx.t(labelKey), input, error);
  }

  const form = el(
    "form",
    { id: "register-form", novalidate: true },
    makeField("name", "form.nama"),
    makeField("nim", "form.nim"),
    makeField("program", "form.jurusan"),
    makeField("semester", "form.semester", { inputmode: "numeric" }),
    makeField("period_year", "form.tahun", { inputmode: "numeric", value: String(new Date().getFullYear()) }),
    makeField("kind", "form.jenis", { value: "bidik misi" }),
    makeField("nilai", "form.nilai", { inputmode: "decimal" }),
    makeField("income", "form.penghasilan", { inputmode: "numeric" }),
    makeField("dependents", "form.tanggungan", { inputmode: "numeric" }),
    el("button", { type: "submit" }, ctx.t("form.submit")),
  );

  function setError(name: string, message: string): void {
    const field = fields.get(name);
    if (field) field.error.textContent = message;
  }

  function clearErrors(): void {
    for (const field of fields.values()) field.error.textContent = "";
    banner.replaceChildren();
  }

  function validate(): ApplicantPayload | null {
    const value = (name: string) => fields.get(name)!.input.value.trim();
    let ok = true;
    const fail = (name: string, message: string) => {
      setError(name, message);
      ok = false;
    };

    if (!value("nim")) fail("nim", "wajib diisi");
    if (!value("name")) fail("name", "wajib diisi");
    if (!INTEGER.test(value("semester"))) fail("semester", "harus bilangan bulat");
    if (!INTEGER.test(value("period_year"))) fail("period_year", "harus bilangan bulat");
    const nilai = Number(value("nilai"));
    if (value("nilai") === "" || !Number.isFinite(nilai)) fail("nilai", "harus angka");
    const income = Number(value("income").replace(/[, ]/g, "").replace(/^[Rr]p/, ""));
    if (!Number.isFinite(income) || income < 0) fail("income", "harus angka >= 0");
    if (!INTEGER.test(value("dependents")) || Number(value("dependents")) < 0) {
      fail("dependents", "harus bilangan bulat >= 0");
    }
    if (!ok) return null;
    return {
      nim: value("nim"),
      name: value("name"),
      program: value("program"),
      semester: Number(value("semester")),
      period_year: Number(value("period_year")),
      nilai,
      income,
      dependents: Number(value("dependents")),
      kind: value("kind") || null,
    };
  }

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    clearErrors();
    const payload = validate();
    if (!payload) return;
    void (async () => {
      try {
        await ctx.api.registerApplicant(payload);
        banner.append(notice("success", ctx.t("form.success")));
        for (const field of fields.values()) {
          if (!["period_year", "kind"].includes(field.name)) field.input.value = "";
        }
      } catch (err) {
        if (!(err instanceof ApiError)) {
          banner.append(notice("error", ctx.t("common.error")));
          return;
        }
        const problem = err.problem;
        if (problem.code === "duplicate_nim") {
          setError("nim", problem.message);
        } else if (problem.code === "validation_error" && Array.isArray(problem.details)) {
          for (const detail of problem.details as { field: string; message: string }[]) {
            setError(detail.field, detail.message);
          }
        } else {
          // period_not_open, unknown_period, network failure: keep the form
          banner.append(notice("error", problem.message));
        }
      }
    })();
  });

  ctx.main.append(el("h2", {}, ctx.t("nav.pendaftaran")), banner, form);
}
