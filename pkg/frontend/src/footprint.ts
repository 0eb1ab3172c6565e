/** Value-footprint bookkeeping: which moral-value poles a visitor has
 * encountered along their exploration trail.
 *
 * A compound label is "<value>-<emotion>" (e.g. "degradation-disgust");
 * its value part maps to one of ten poles (five foundations, virtue or
 * vice) via a static table mirroring the service's exported mapping.
 */

export const FOUNDATIONS = [
  "care",
  "fairness",
  "loyalty",
  "authority",
  "sanctity",
] as const;
export type Foundation = (typeof FOUNDATIONS)[number];

export const POLARITIES = ["virtue", "vice"] as const;
export type Polarity = (typeof POLARITIES)[number];

export interface Pole {
  foundation: Foundation;
  polarity: Polarity;
}

export const POLE_BY_VALUE: Record<string, Pole> = {
  care: { foundation: "care", polarity: "virtue" },
  harm: { foundation: "care", polarity: "vice" },
  fairness: { foundation: "fairness", polarity: "virtue" },
  cheating: { foundation: "fairness", polarity: "vice" },
  loyalty: { foundation: "loyalty", polarity: "virtue" },
  betrayal: { foundation: "loyalty", polarity: "vice" },
  authority: { foundation: "authority", polarity: "virtue" },
  subversion: { foundation: "authority", polarity: "vice" },
  sanctity: { foundation: "sanctity", polarity: "virtue" },
  degradation: { foundation: "sanctity", polarity: "vice" },
};

/** The value part of a compound label ("degradation-disgust" -> "degradation"). */
export function valuePart(label: string): string {
  const dash = label.indexOf("-");
  return dash === -1 ? label : label.slice(0, dash);
}

export function poleForLabel(label: string): Pole | undefined {
  return POLE_BY_VALUE[valuePart(label)];
}

export function poleKey(pole: Pole): string {
  return `${pole.foundation}:${pole.polarity}`;
}

/** Multiset of poles for a list of labels, keyed "foundation:polarity".
 * Labels whose value part is not one of the ten poles are ignored. */
export function footprintFromLabels(labels: string[]): Map<string, number> {
  const footprint = new Map<string, number>();
  for (const label of labels) {
    const pole = poleForLabel(label);
    if (!pole) continue;
    const key = poleKey(pole);
    footprint.set(key, (footprint.get(key) ?? 0) + 1);
  }
  return footprint;
}
