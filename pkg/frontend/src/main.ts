/** Browser entry point: mount the console on #app against the same origin
 * the page was served from. */

import { createApp } from "./app.js";

const root = document.getElementById("app");
if (root === null) throw new Error("missing #app mount point");
const app = createApp(root, { baseUrl: "" });
void app.refresh();
