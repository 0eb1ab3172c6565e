import { describe, expect, it } from "vitest";

import { ExplorationSession } from "../src/session.js";

describe("ExplorationSession", () => {
  it("starts empty", () => {
    const session = new ExplorationSession();
    expect(session.empty).toBe(true);
    expect(session.trail).toEqual([]);
    expect(session.footprint().size).toBe(0);
  });

  it("appends visits in order and never removes them", () => {
    const session = new ExplorationSession();
    session.visit("catapult", ["degradation-disgust"]);
    session.visit("bar-kochva-rebellion", ["sanctity-awe"]);
    session.visit("catapult", ["degradation-disgust"]);
    expect(session.trail).toEqual([
      "catapult",
      "bar-kochva-rebellion",
      "catapult",
    ]);
  });

  it("recomputes the footprint from the whole trail", () => {
    const session = new ExplorationSession();
    session.visit("catapult", ["degradation-disgust"]);
    expect(session.footprint()).toEqual(new Map([["sanctity:vice", 1]]));

    session.visit("bar-kochva-rebellion", ["sanctity-awe"]);
    const footprint = session.footprint();
    expect(footprint.get("sanctity:vice")).toBe(1);
    expect(footprint.get("sanctity:virtue")).toBe(1);
  });

  it("counts revisits as repeated poles", () => {
    const session = new ExplorationSession();
    session.visit("catapult", ["degradation-disgust"]);
    session.visit("catapult", ["degradation-disgust"]);
    expect(session.footprint().get("sanctity:vice")).toBe(2);
  });

  it("contributes nothing for unlabeled items", () => {
    const session = new ExplorationSession();
    session.visit("oil-lamps", []);
    expect(session.empty).toBe(false);
    expect(session.footprint().size).toBe(0);
  });
});
