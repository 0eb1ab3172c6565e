import { describe, expect, it } from "vitest";

import { highlightSegments, lemmaOf, triggerTerms } from "../src/highlight.js";

function highlighted(description: string, triggers: string[]): string[] {
  return highlightSegments(description, triggers)
    .filter((s) => s.highlighted)
    .map((s) => s.text);
}

describe("lemmaOf", () => {
  it("applies the documented suffix rules", () => {
    expect(lemmaOf("weapons")).toBe("weapon");
    expect(lemmaOf("armies")).toBe("army");
    expect(lemmaOf("glasses")).toBe("glass");
    expect(lemmaOf("tortured")).toBe("torture");
    expect(lemmaOf("torturing")).toBe("torture");
    expect(lemmaOf("building")).toBe("build");
  });

  it("honours the exception table and case folding", () => {
    expect(lemmaOf("Women")).toBe("woman");
    expect(lemmaOf("has")).toBe("have");
    expect(lemmaOf("Molestation")).toBe("molestation");
  });
});

describe("highlightSegments", () => {
  it("highlights trigger lemmas in surface form", () => {
    const text = "Siege weapons were used violently; torture followed.";
    expect(highlighted(text, ["weapon", "torture", "violently"])).toEqual([
      "weapons",
      "violently",
      "torture",
    ]);
  });

  it("matches the catapult example exactly", () => {
    const text =
      "A siege weapon built for the molestation of fortified city walls.";
    expect(highlighted(text, ["molestation", "weapon"])).toEqual([
      "weapon",
      "molestation",
    ]);
  });

  it("reassembles the original text unchanged", () => {
    const text = "Stone-throwing engines, used c. 70 CE!";
    const segments = highlightSegments(text, ["engine"]);
    expect(segments.map((s) => s.text).join("")).toBe(text);
  });

  it("falls back to exact string match for unknown lemmas", () => {
    expect(highlighted("the corpus of texts", ["corpus"])).toEqual(["corpus"]);
  });

  it("returns one unhighlighted segment when nothing matches", () => {
    const segments = highlightSegments("nothing to see", ["weapon"]);
    expect(segments).toEqual([{ text: "nothing to see", highlighted: false }]);
  });
});

describe("triggerTerms", () => {
  it("flattens emotion and value columns into a sorted set", () => {
    const terms = triggerTerms([
      {
        emotions: { disgust: ["molestation"] },
        values: { degradation: ["weapon"] },
      },
      { emotions: { awe: ["molestation", "kill"] }, values: {} },
    ]);
    expect(terms).toEqual(["kill", "molestation", "weapon"]);
  });
});
