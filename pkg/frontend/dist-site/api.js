/**
 * Thin typed client for the search service's JSON API.
 *
 * The fetch implementation is injectable so the client can be exercised in
 * tests without a browser.
 */
export class ApiError extends Error {
    constructor(status, code, message) {
        super(message);
        this.status = status;
        this.code = code;
    }
}
export class ApiClient {
    constructor(baseUrl = "", fetchImpl = (input, init) => fetch(input, init)) {
        this.baseUrl = baseUrl;
        this.fetchImpl = fetchImpl;
    }
    async request(path, init) {
        const resp = await this.fetchImpl(this.baseUrl + path, init);
        const body = await resp.json();
        if (!resp.ok) {
            const err = body;
            throw new ApiError(resp.status, err.code ?? "Error", err.message ?? "request failed");
        }
        return body;
    }
    languages() {
        return this.request("/api/languages").then((b) => b.languages);
    }
    query(text, lang) {
        // NFC before the wire so the draft round-trips byte-identically.
        const payload = {
            text: text.normalize("NFC"),
        };
        if (lang) {
            payload.lang = lang;
        }
        return this.request("/api/query", {
            method: "POST",
            headers: { "content-type": "application/json" },
            body: JSON.stringify(payload),
        });
    }
    ontologySearch(term, lang) {
        const qs = new URLSearchParams({ term, lang });
        return this.request("/api/ontology/search?" + qs.toString()).then((b) => b.nodes);
    }
}
