/**
 * Thin typed client for the search service's JSON API.
 *
 * The fetch implementation is injectable so the client can be exercised in
 * tests without a browser.
 */

export interface QueryAnalysis {
  query_language: string;
  keywords: string[];
  matched_nodes: string[];
  search_language: string;
  expansion_terms: string[];
  search_terms: string[];
  dropped_keywords: string[];
}

export interface RankedDoc {
  doc_id: string;
  term_score: number;
  pagerank_score: number;
  combined: number;
  rank: number;
}

export interface AnswerPassage {
  doc_id: string;
  sentence_index: number;
  text: string;
  matched_terms: string[];
}

export interface Answer {
  passages: AnswerPassage[];
  answer_language: string;
  translated: boolean;
  untranslated_terms: string[];
}

export interface QueryResponse {
  query_analysis: QueryAnalysis;
  ranked: RankedDoc[];
  answer: Answer;
}

export interface ApiErrorBody {
  code: string;
  message: string;
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const resp = await this.fetchImpl(this.baseUrl + path, init);
    const body = await resp.json();
    if (!resp.ok) {
      const err = body as ApiErrorBody;
      throw new ApiError(resp.status, err.code ?? "Error", err.message ?? "request failed");
    }
    return body as T;
  }

  languages(): Promise<string[]> {
    return this.request<{ languages: string[] }>("/api/languages").then(
      (b) => b.languages,
    );
  }

  query(text: string, lang?: string): Promise<QueryResponse> {
    // NFC before the wire so the draft round-trips byte-identically.
    const payload: { text: string; lang?: string } = {
      text: text.normalize("NFC"),
    };
    if (lang) {
      payload.lang = lang;
    }
    return this.request<QueryResponse>("/api/query", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  ontologySearch(term: string, lang: string): Promise<string[]> {
    const qs = new URLSearchParams({ term, lang });
    return this.request<{ nodes: string[] }>(
      "/api/ontology/search?" + qs.toString(),
    ).then((b) => b.nodes);
  }
}
