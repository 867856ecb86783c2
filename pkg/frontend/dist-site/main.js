/**
 * Page wiring: language picker, virtual keyboard, query box, results.
 *
 * All rendering goes through render(), driven by the SessionState machine;
 * event handlers only mutate state and call render() again.
 */
import { ApiClient, ApiError } from "./api.js";
import { LAYOUT, backspace, pressKey } from "./keyboard.js";
import { SessionState } from "./state.js";
const api = new ApiClient("");
const state = new SessionState("en");
let languageCodes = ["en", "ta"];
function el(tag, className, text) {
    const node = document.createElement(tag);
    if (className)
        node.className = className;
    if (text !== undefined)
        node.textContent = text;
    return node;
}
function $(id) {
    const node = document.getElementById(id);
    if (!node)
        throw new Error(`missing #${id}`);
    return node;
}
function renderLanguagePicker() {
    const holder = $("language-picker");
    holder.textContent = "";
    for (const code of languageCodes) {
        const btn = el("button", "lang-btn", code.toUpperCase());
        if (code === state.chosenLanguage)
            btn.classList.add("active");
        btn.addEventListener("click", () => {
            if (state.phase === "querying")
                return;
            state.selectLanguage(code);
            render();
        });
        holder.appendChild(btn);
    }
}
function renderKeyboard() {
    const holder = $("keyboard");
    holder.textContent = "";
    // The English layout is the user's own keyboard; only Tamil gets keys.
    holder.hidden = state.chosenLanguage !== "ta";
    if (holder.hidden)
        return;
    for (const row of LAYOUT) {
        const rowEl = el("div", "key-row");
        for (const key of row) {
            const btn = el("button", "key", key.label);
            btn.addEventListener("click", () => {
                if (state.phase === "querying")
                    return;
                state.setDraft(pressKey(state.draft, key));
                render();
            });
            rowEl.appendChild(btn);
        }
        holder.appendChild(rowEl);
    }
    const rowEl = el("div", "key-row");
    const back = el("button", "key key-wide", "⌫");
    back.addEventListener("click", () => {
        if (state.phase === "querying")
            return;
        state.setDraft(backspace(state.draft));
        render();
    });
    rowEl.appendChild(back);
    holder.appendChild(rowEl);
}
function badge(text, cls) {
    return el("span", `badge ${cls}`, text);
}
function renderResponse(resp) {
    const out = $("results");
    out.textContent = "";
    const analysis = resp.query_analysis;
    const head = el("div", "analysis");
    head.appendChild(badge(`query: ${analysis.query_language.toUpperCase()}`, "badge-query"));
    head.appendChild(badge(`search: ${analysis.search_language.toUpperCase()}`, "badge-search"));
    out.appendChild(head);
    if (analysis.expansion_terms.length > 0) {
        const exp = el("div", "expansion");
        exp.appendChild(el("span", "label", "related terms:"));
        for (const term of analysis.expansion_terms) {
            const chip = el("button", "chip", term);
            chip.title = "add to query";
            chip.addEventListener("click", () => {
                if (state.phase === "querying")
                    return;
                const sep = state.draft.length > 0 && !state.draft.endsWith(" ") ? " " : "";
                state.setDraft(state.draft + sep + term);
                render();
            });
            exp.appendChild(chip);
        }
        out.appendChild(exp);
    }
    const list = el("ol", "ranked");
    for (const doc of resp.ranked) {
        const item = el("li");
        item.appendChild(el("span", "doc-id", doc.doc_id));
        item.appendChild(el("span", "score", doc.combined.toFixed(4)));
        list.appendChild(item);
    }
    out.appendChild(list);
    const answer = el("div", "answer");
    answer.appendChild(el("h3", undefined, "answer"));
    const untranslated = new Set(resp.answer.untranslated_terms);
    for (const passage of resp.answer.passages) {
        const p = el("p", "passage");
        for (const piece of passage.text.split(/(\s+)/)) {
            if (untranslated.has(piece)) {
                p.appendChild(el("mark", "untranslated", piece));
            }
            else {
                p.appendChild(document.createTextNode(piece));
            }
        }
        p.appendChild(el("span", "source", ` — ${passage.doc_id}`));
        answer.appendChild(p);
    }
    out.appendChild(answer);
}
function renderHistory() {
    const holder = $("history");
    holder.textContent = "";
    if (state.history.length === 0) {
        holder.hidden = true;
        return;
    }
    holder.hidden = false;
    holder.appendChild(el("h3", undefined, "history"));
    const list = el("ul");
    for (const entry of state.history) {
        const item = el("li");
        const link = el("a", undefined, entry.query);
        link.href = "#";
        link.addEventListener("click", (event) => {
            event.preventDefault();
            if (state.phase === "querying")
                return;
            state.setDraft(entry.query);
            render();
        });
        item.appendChild(link);
        item.appendChild(el("span", "meta", ` (${entry.language} → ${entry.searchLanguage}, ${entry.resultCount} docs)`));
        list.appendChild(item);
    }
    holder.appendChild(list);
}
function render() {
    const input = $("query-input");
    if (input.value !== state.draft)
        input.value = state.draft;
    input.disabled = state.phase === "querying";
    const submit = $("submit");
    submit.disabled = !state.canSubmit;
    submit.textContent = state.phase === "querying" ? "searching…" : "search";
    const banner = $("error-banner");
    banner.hidden = state.phase !== "error";
    if (state.phase === "error") {
        banner.textContent = state.lastError ?? "something went wrong";
    }
    renderLanguagePicker();
    renderKeyboard();
    renderHistory();
}
async function submitQuery() {
    const query = state.beginQuery();
    render();
    try {
        const resp = await api.query(query, state.chosenLanguage);
        state.succeed(query, resp);
        renderResponse(resp);
    }
    catch (err) {
        if (err instanceof ApiError) {
            state.fail(`${err.code}: ${err.message}`);
        }
        else {
            state.fail("network error — is the service running?");
        }
    }
    render();
}
async function boot() {
    const input = $("query-input");
    input.addEventListener("input", () => {
        if (state.phase === "querying")
            return;
        state.setDraft(input.value);
        render();
    });
    input.addEventListener("keydown", (event) => {
        if (event.key === "Enter" && state.canSubmit)
            void submitQuery();
    });
    $("submit").addEventListener("click", () => {
        if (state.canSubmit)
            void submitQuery();
    });
    try {
        languageCodes = await api.languages();
        render();
    }
    catch {
        render();
        const banner = $("error-banner");
        banner.hidden = false;
        banner.textContent = "could not reach the search service";
    }
}
void boot();
