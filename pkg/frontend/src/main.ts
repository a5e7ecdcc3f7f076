import { ApiClient } from "./api.js";
import { createApp } from "./app.js";

const root = document.getElementById("app");
if (root) {
  // same-origin API when served by the selection service itself
  createApp(root, new ApiClient(""));
}
