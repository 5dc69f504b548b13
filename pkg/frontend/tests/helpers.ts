// Shared test plumbing: fixture loading and a recording fake fetch.
// Fixtures were captured from a live service run (scripts/record-fixtures.py).

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

const fixtureDir = join(dirname(fileURLToPath(import.meta.url)), "fixtures");

export function fixtureText(name: string): string {
  return readFileSync(join(fixtureDir, name), "utf8");
}

export function fixtureJson<T>(name: string): T {
  return JSON.parse(fixtureText(name)) as T;
}

export interface FetchCall {
  url: string;
  method: string;
  body: unknown;
}

export type FakeRoute =
  | { status?: number; json: unknown }
  | { status?: number; text: string }
  | undefined;

export function fakeFetch(handler: (call: FetchCall) => FakeRoute) {
  const calls: FetchCall[] = [];
  const fn = async (input: string, init?: RequestInit): Promise<Response> => {
    const call: FetchCall = {
      url: input,
      method: init?.method ?? "GET",
      body: typeof init?.body === "string" ? JSON.parse(init.body) : undefined,
    };
    calls.push(call);
    const route = handler(call);
    if (route === undefined) {
      throw new Error(`unhandled request: ${call.method} ${call.url}`);
    }
    const status = route.status ?? 200;
    if ("text" in route) return new Response(route.text, { status });
    return new Response(JSON.stringify(route.json), {
      status,
      headers: { "content-type": "application/json" },
    });
  };
  return { fn, calls };
}

/** Let pending promise chains settle (real timers only). */
export const flush = () => new Promise<void>((resolve) => setTimeout(resolve, 0));
