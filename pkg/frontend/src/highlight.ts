/** Maps the service's trigger lemmas back to surface words for display.
 *
 * The service explains a match with lemmas ("weapon", "torture"); the
 * description contains surface forms ("weapons", "tortured"). For display
 * only, the same suffix rules the service documents are re-run here to
 * decide which words to highlight; a word whose lemma is unknown still
 * highlights when it equals a trigger exactly. All authoritative reasoning
 * stays server-side.
 */

const LEMMA_EXCEPTIONS: Record<string, string> = {
  was: "be",
  has: "have",
  does: "do",
  men: "man",
  women: "woman",
  children: "child",
  feet: "foot",
  during: "during",
  molestation: "molestation",
  weapon: "weapon",
  brutality: "brutality",
  violently: "violently",
  surprise: "surprise",
  torture: "torture",
  kill: "kill",
};

const E_RESTORE_STEMS = new Set([
  "us", "hav", "tortur", "surpris", "desecrat", "defil", "believ",
  "creat", "describ", "serv", "sav", "achiev", "receiv", "produc",
  "introduc", "celebrat", "decorat", "observ", "carv", "engrav",
  "shap", "stor", "trad", "captur", "restor", "besieg",
]);

function endsWithAny(word: string, suffixes: string[]): boolean {
  return suffixes.some((s) => word.endsWith(s));
}

function applySuffixRules(word: string): string {
  if (word.endsWith("ies") && word.length > 4) return word.slice(0, -3) + "y";
  if (word.endsWith("sses")) return word.slice(0, -2);
  if (word.endsWith("s") && !endsWithAny(word, ["ss", "us", "is"])) {
    word = word.slice(0, -1);
  }
  if (word.endsWith("ing") && word.length > 4) {
    const stem = word.slice(0, -3);
    if (stem.length >= 2) return E_RESTORE_STEMS.has(stem) ? stem + "e" : stem;
  }
  if (word.endsWith("ed") && word.length > 3) {
    const stem = word.slice(0, -2);
    if (stem.length >= 2) return E_RESTORE_STEMS.has(stem) ? stem + "e" : stem;
  }
  return word;
}

/** Display-only lemma of a single surface token. */
export function lemmaOf(token: string): string {
  const folded = token.toLowerCase();
  return LEMMA_EXCEPTIONS[folded] ?? applySuffixRules(folded);
}

export interface Segment {
  text: string;
  highlighted: boolean;
}

/** Split a description into segments, flagging words that match a trigger
 * lemma (or, as a fallback, a trigger string exactly). */
export function highlightSegments(
  description: string,
  triggers: Iterable<string>,
): Segment[] {
  const triggerSet = new Set(triggers);
  const segments: Segment[] = [];
  const push = (text: string, highlighted: boolean) => {
    if (!text) return;
    const last = segments[segments.length - 1];
    if (last && last.highlighted === highlighted) {
      last.text += text;
    } else {
      segments.push({ text, highlighted });
    }
  };

  const wordPattern = /[A-Za-z]+/g;
  let cursor = 0;
  for (const match of description.matchAll(wordPattern)) {
    const word = match[0];
    const start = match.index ?? 0;
    push(description.slice(cursor, start), false);
    const hit =
      triggerSet.has(lemmaOf(word)) || triggerSet.has(word.toLowerCase());
    push(word, hit);
    cursor = start + word.length;
  }
  push(description.slice(cursor), false);
  return segments;
}

/** Flatten an explanation's per-parent trigger maps into one lemma list. */
export function triggerTerms(explanations: {
  emotions: Record<string, string[]>;
  values: Record<string, string[]>;
}[]): string[] {
  const terms = new Set<string>();
  for (const explanation of explanations) {
    for (const group of [explanation.emotions, explanation.values]) {
      for (const list of Object.values(group)) {
        for (const term of list) terms.add(term);
      }
    }
  }
  return [...terms].sort();
}
