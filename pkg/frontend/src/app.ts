/**
 * Application shell: header, navigation, hash router.
 *
 * Admin pages are unreachable without a session token (the router bounces
 * to the login page), any 401 from the API drops the session the same way,
 * and a view may register a dirty-guard so navigation away from unsaved
 * edits needs confirmation.
 */

import { ApiClient, RunDoc } from "./api.js";
import { clear, el } from "./dom.js";
import { translate } from "./i18n.js";
import { Page, ViewState } from "./state.js";
import { renderDaftarPemohon } from "./views/daftarPemohon.js";
import { renderHasilSeleksi, renderSeleksi } from "./views/seleksi.js";
import { renderIndex } from "./views/index.js";
import { renderLogin } from "./views/login.js";
import { renderPendaftaran } from "./views/pendaftaran.js";
import { renderPenerima } from "./views/penerima.js";
import { renderPeriode } from "./views/periode.js";
import { renderWhatIf } from "./views/whatif.js";

export interface AppContext {
  api: ApiClient;
  state: ViewState;
  main: HTMLElement;
  /** Resolves once the initial page has rendered. */
  ready: Promise<void>;
  navigate(page: Page): Promise<void>;
  /** Detach window listeners (used when embedding or testing). */
  dispose(): void;
  t(key: string): string;
  /** Views with unsaved edits set this; the router asks before leaving. */
  dirtyGuard: { check: (() => boolean) | null; message: string };
  confirmFn: (message: string) => boolean;
  /** Runs seen this session, newest last, keyed by "year-kind". */
  runHistory: Map<string, RunDoc[]>;
  refreshNav(): void;
}

interface Route {
  hash: string;
  admin: boolean;
  render(ctx: AppContext): Promise<void> | void;
}

const ROUTES: Record<Page, Route> = {
  index: { hash: "#/", admin: false, render: renderIndex },
  pendaftaran: { hash: "#/pendaftaran", admin: false, render: renderPendaftaran },
  periode: { hash: "#/periode", admin: true, render: renderPeriode },
  daftarPemohon: { hash: "#/daftar-pemohon", admin: true, render: renderDaftarPemohon },
  seleksi: { hash: "#/seleksi", admin: true, render: renderSeleksi },
  hasilSeleksi: { hash: "#/hasil-seleksi", admin: true, render: renderHasilSeleksi },
  penerima: { hash: "#/penerima", admin: false, render: renderPenerima },
  whatIf: { hash: "#/whatif", admin: true, render: renderWhatIf },
  login: { hash: "#/login", admin: false, render: renderLogin },
};

const PUBLIC_NAV: Page[] = ["index", "pendaftaran", "penerima"];
const ADMIN_NAV: Page[] = ["periode", "daftarPemohon", "seleksi", "hasilSeleksi", "whatIf"];

function pageForHash(hash: string): Page {
  for (const [page, route] of Object.entries(ROUTES)) {
    if (route.hash === hash) return page as Page;
  }
  return "index";
}

export interface AppOptions {
  confirmFn?: (message: string) => boolean;
}

export function createApp(root: HTMLElement, api: ApiClient, options: AppOptions = {}): AppContext {
  const state = new ViewState();
  state.load();
  api.token = state.token;

  const nav = el("nav");
  const main = el("main", { id: "view" });
  const header = el(
    "header",
    {},
    el("h1", { id: "app-title" }),
    el("div", { class: "header-actions" }, nav),
  );
  clear(root);
  root.append(header, main);

  let appliedHash = "";

  const ctx: AppContext = {
    api,
    state,
    main,
    ready: Promise.resolve(),
    navigate,
    dispose: () => window.removeEventListener("hashchange", onHashChange),
    t: (key) => translate(state.locale, key),
    dirtyGuard: { check: null, message: "" },
    confirmFn: options.confirmFn ?? ((message) => window.confirm(message)),
    runHistory: new Map(),
    refreshNav,
  };

  api.onUnauthorized = () => {
    state.token = null;
    api.token = null;
    state.save();
    void navigate("login");
  };

  function navLink(page: Page): HTMLElement {
    const link = el("a", { href: ROUTES[page].hash }, ctx.t(`nav.${page}`));
    if (state.page === page) link.className = "active";
    return link;
  }

  function refreshNav(): void {
    clear(nav);
    for (const page of PUBLIC_NAV) nav.append(navLink(page));
    if (state.token) {
      for (const page of ADMIN_NAV) nav.append(navLink(page));
      nav.append(
        el(
          "button",
          {
            id: "logout",
            class: "linklike",
            onclick: async () => {
              try {
                await api.logout();
              } catch {
                // token may already be dead; drop it regardless
              }
              state.token = null;
              api.token = null;
              state.save();
              void navigate("index");
            },
          },
          ctx.t("nav.logout"),
        ),
      );
    } else {
      nav.append(navLink("login"));
    }
    nav.append(
      el(
        "button",
        {
          id: "locale-toggle",
          class: "linklike",
          onclick: () => {
            state.locale = state.locale === "id" ? "en" : "id";
            state.save();
            refreshNav();
            void renderPage(state.page);
          },
        },
        state.locale === "id" ? "EN" : "ID",
      ),
    );
    const title = root.querySelector("#app-title");
    if (title) title.textContent = ctx.t("app.title");
  }

  async function renderPage(page: Page): Promise<void> {
    let target = page;
    if (ROUTES[target].admin && !state.token) {
      state.afterLogin = target;
      target = "login";
    }
    state.page = target;
    state.save();
    appliedHash = ROUTES[target].hash;
    if (window.location.hash !== appliedHash) {
      window.location.hash = appliedHash;
    }
    refreshNav();
    clear(main);
    await ROUTES[target].render(ctx);
  }

  async function navigate(page: Page): Promise<void> {
    if (ctx.dirtyGuard.check && ctx.dirtyGuard.check()) {
      if (!ctx.confirmFn(ctx.dirtyGuard.message || ctx.t("whatif.leave"))) {
        // stay put; make sure the address bar agrees
        if (window.location.hash !== appliedHash) window.location.hash = appliedHash;
        return;
      }
    }
    ctx.dirtyGuard.check = null;
    await renderPage(page);
  }

  function onHashChange(): void {
    if (window.location.hash === appliedHash) return;
    void navigate(pageForHash(window.location.hash));
  }
  window.addEventListener("hashchange", onHashChange);

  const initial = window.location.hash ? pageForHash(window.location.hash) : "index";
  ctx.ready = renderPage(initial);
  return ctx;
}
