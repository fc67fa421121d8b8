import { readFileSync } from "node:fs";
import { fileURLToPath } from "node:url";
import { dirname, join } from "node:path";

/** Recorded service responses live next to the test sources, not in dist. */
export function fixture<T>(name: string): T {
  const here = dirname(fileURLToPath(import.meta.url));
  const path = join(here, "..", "..", "test", "fixtures", name);
  return JSON.parse(readFileSync(path, "utf-8")) as T;
}
