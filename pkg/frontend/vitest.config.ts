import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "jsdom",
    include: ["tests/**/*.test.ts", "e2e/**/*.test.ts"],
    testTimeout: 60000,
    hookTimeout: 60000,
    // the e2e suite drives one shared live service; keep runs serial
    fileParallelism: false,
  },
});
