/**
 * Session state for the search page.
 *
 * The page is a small state machine:
 *
 *     idle --submit--> querying --success--> rendered
 *                        |
 *                        +------failure---> error
 *
 * rendered and error both return to idle-like readiness for the next
 * submission (modelled as allowing submit again).  No other transitions
 * exist, at most one query is in flight at a time, and the draft survives
 * an error so the user can retry or edit.
 */

import type { QueryResponse } from "./api.js";

export type Phase = "idle" | "querying" | "rendered" | "error";

export interface HistoryEntry {
  query: string;
  language: string;
  searchLanguage: string | null;
  resultCount: number;
}

export class SessionState {
  phase: Phase = "idle";
  chosenLanguage: string;
  draft = "";
  lastResponse: QueryResponse | null = null;
  lastError: string | null = null;
  private readonly entries: HistoryEntry[] = [];

  constructor(language = "en") {
    this.chosenLanguage = language;
  }

  /** History is exposed read-only; entries are only ever appended. */
  get history(): readonly HistoryEntry[] {
    return this.entries;
  }

  get canSubmit(): boolean {
    return this.phase !== "querying" && this.draft.trim().length > 0;
  }

  selectLanguage(code: string): void {
    if (this.phase === "querying") {
      throw new Error("cannot change language while a query is in flight");
    }
    this.chosenLanguage = code;
  }

  setDraft(text: string): void {
    if (this.phase === "querying") {
      throw new Error("cannot edit the draft while a query is in flight");
    }
    this.draft = text.normalize("NFC");
  }

  beginQuery(): string {
    if (!this.canSubmit) {
      throw new Error("nothing to submit");
    }
    this.phase = "querying";
    this.lastError = null;
    return this.draft;
  }

  succeed(query: string, response: QueryResponse): void {
    if (this.phase !== "querying") {
      throw new Error("no query in flight");
    }
    this.phase = "rendered";
    this.lastResponse = response;
    this.entries.push({
      query,
      language: response.query_analysis.query_language,
      searchLanguage: response.query_analysis.search_language,
      resultCount: response.ranked.length,
    });
  }

  fail(message: string): void {
    if (this.phase !== "querying") {
      throw new Error("no query in flight");
    }
    this.phase = "error";
    this.lastError = message;
    // The draft is deliberately left untouched so the user can retry.
  }
}
