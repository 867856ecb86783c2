/**
 * Tamil on-screen keyboard model.
 *
 * The keyboard is purely additive: every key emits one or more Unicode
 * codepoints which are appended to the current input buffer and the result
 * is normalised to NFC.  Vowel signs therefore combine with the preceding
 * consonant the way native input methods do, without the keyboard having
 * to track any composition state of its own.
 *
 * Backspace is cluster-aware: it removes the trailing consonant together
 * with any dependent signs attached to it, so one press of backspace
 * undoes one visible letter rather than one codepoint.
 */
/** Independent vowels (uyir). */
export const VOWELS = [
    "அ", "ஆ", "இ", "ஈ", "உ", "ஊ", "எ", "ஏ", "ஐ", "ஒ", "ஓ", "ஔ",
].map((c) => ({ label: c, output: c }));
/** Consonants (mei with inherent a). */
export const CONSONANTS = [
    "க", "ங", "ச", "ஞ", "ட", "ண", "த", "ந", "ப", "ம",
    "ய", "ர", "ல", "வ", "ழ", "ள", "ற", "ன",
].map((c) => ({ label: c, output: c }));
/**
 * Dependent vowel signs plus the pulli (virama).  The label shows the sign
 * on a dotted-circle placeholder so an empty combining mark is still
 * visible on the key cap.
 */
export const VOWEL_SIGNS = [
    "ா", // ா
    "ி", // ி
    "ீ", // ீ
    "ு", // ு
    "ூ", // ூ
    "ெ", // ெ
    "ே", // ே
    "ை", // ை
    "ொ", // ொ
    "ோ", // ோ
    "ௌ", // ௌ
    "்", // ் pulli
].map((c) => ({ label: "◌" + c, output: c }));
/** Extra keys that do not fit the three letter groups. */
export const EXTRAS = [
    { label: "ஃ", output: "ஃ" },
    { label: "ஸ்ரீ", output: "ஸ்ரீ" },
    { label: "␣", output: " " },
];
/** Rows in display order, used by the UI to lay the keyboard out. */
export const LAYOUT = [
    VOWELS,
    CONSONANTS.slice(0, 10),
    CONSONANTS.slice(10),
    VOWEL_SIGNS,
    EXTRAS,
];
/** Append the output of one key to the buffer and renormalise. */
export function pressKey(buffer, key) {
    const out = typeof key === "string" ? key : key.output;
    return (buffer + out).normalize("NFC");
}
/** Convenience wrapper used by tests: press a whole sequence of keys. */
export function composeSequence(keys) {
    let buffer = "";
    for (const key of keys) {
        buffer = pressKey(buffer, key);
    }
    return buffer;
}
/**
 * The full consonant × vowel-sign composition table.  Each cluster is just
 * the NFC concatenation of the pair; the table exists so the UI (and the
 * tests) can enumerate every combination the keyboard can produce.
 */
export function compositionRules() {
    const rules = [];
    for (const consonant of CONSONANTS) {
        for (const sign of VOWEL_SIGNS) {
            rules.push({
                consonant: consonant.output,
                sign: sign.output,
                cluster: (consonant.output + sign.output).normalize("NFC"),
            });
        }
    }
    return rules;
}
function isTamilMark(cp) {
    // Dependent vowel signs, pulli, and the AU length mark.
    return (cp >= 0x0bbe && cp <= 0x0bcd) || cp === 0x0bd7;
}
/**
 * Remove the last visible letter from the buffer.
 *
 * Trailing combining marks are stripped together with the base character
 * they attach to, so "பொ" collapses to "" in one press instead of leaving
 * a bare "ப" behind.
 */
export function backspace(buffer) {
    if (buffer.length === 0) {
        return buffer;
    }
    const cps = Array.from(buffer);
    let end = cps.length;
    while (end > 0 && isTamilMark(cps[end - 1].codePointAt(0))) {
        end -= 1;
    }
    if (end > 0) {
        end -= 1; // the base character (or a lone non-mark character)
    }
    return cps.slice(0, end).join("");
}
