/** One visitor's exploration session: an append-only trail of visited
 * items whose value footprint is always recomputable from the trail plus
 * the items' classifications.
 */

import { footprintFromLabels } from "./footprint.js";

export class ExplorationSession {
  private readonly visited: string[] = [];
  private readonly labelsById = new Map<string, string[]>();

  /** Append a visit; revisits append again (the footprint is a multiset). */
  visit(itemId: string, labels: string[]): void {
    this.visited.push(itemId);
    this.labelsById.set(itemId, [...labels]);
  }

  get trail(): readonly string[] {
    return this.visited;
  }

  get empty(): boolean {
    return this.visited.length === 0;
  }

  /** Pole multiset over the whole trail, keyed "foundation:polarity". */
  footprint(): Map<string, number> {
    const labels: string[] = [];
    for (const itemId of this.visited) {
      labels.push(...(this.labelsById.get(itemId) ?? []));
    }
    return footprintFromLabels(labels);
  }
}
