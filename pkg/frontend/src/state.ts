/** Session-scoped view state: active page, token, locale, selected period. */

import type { Locale } from "./i18n.js";

export type Page =
  | "index"
  | "pendaftaran"
  | "periode"
  | "daftarPemohon"
  | "seleksi"
  | "hasilSeleksi"
  | "penerima"
  | "whatIf"
  | "login";

export interface PeriodRef {
  year: number;
  kind: string;
}

const STORAGE_KEY = "sawselect-ui";

export class ViewState {
  page: Page = "index";
  token: string | null = null;
  locale: Locale = "id";
  selectedPeriod: PeriodRef | null = null;
  afterLogin: Page | null = null;

  load(): void {
    try {
      const raw = sessionStorage.getItem(STORAGE_KEY);
      if (!raw) return;
      const doc = JSON.parse(raw);
      this.token = doc.token ?? null;
      this.locale = doc.locale === "en" ? "en" : "id";
      this.selectedPeriod = doc.selectedPeriod ?? null;
    } catch {
      // no storage available or corrupt blob: start fresh
    }
  }

  save(): void {
    try {
      sessionStorage.setItem(
        STORAGE_KEY,
        JSON.stringify({
          token: this.token,
          locale: this.locale,
          selectedPeriod: this.selectedPeriod,
        }),
      );
    } catch {
      // ignore: state just won't survive a reload
    }
  }
}
