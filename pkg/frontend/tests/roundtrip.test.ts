/**
 * Live round-trip check: submitting a query through the HTTP client must
 * return byte-for-byte the same JSON document the command-line `search
 * --json` produces for the same query.
 *
 * Golden files under tests/golden/ are captured from the CLI (see
 * README).  The suite is skipped unless ONTOCLIR_API_URL points at a
 * running service, so the unit tests stay self-contained.
 */

import { readFileSync, readdirSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";

const baseUrl = process.env.ONTOCLIR_API_URL ?? "";

interface Golden {
  query: string;
  lang: string;
  expected: unknown;
}

const goldenDir = join(dirname(fileURLToPath(import.meta.url)), "golden");

function loadGoldens(): [string, Golden][] {
  try {
    return readdirSync(goldenDir)
      .filter((name) => name.endsWith(".json"))
      .sort()
      .map((name) => [
        name,
        JSON.parse(readFileSync(join(goldenDir, name), "utf-8")) as Golden,
      ]);
  } catch {
    return [];
  }
}

describe.skipIf(!baseUrl)("API round-trip against golden CLI output", () => {
  const goldens = loadGoldens();

  it("has golden captures to compare against", () => {
    expect(goldens.length).toBeGreaterThan(0);
  });

  for (const [name, golden] of goldens) {
    it(`${name}: UI query matches CLI JSON`, async () => {
      const client = new ApiClient(baseUrl);
      const response = await client.query(golden.query, golden.lang);
      expect(response).toEqual(golden.expected);
    });
  }
});
