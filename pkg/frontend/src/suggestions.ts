/** Suggestion rows: parsing the service's rendered lines, selection state.
 *
 * The service renders one line per category; the UI parses them for layout
 * but keeps every displayed value verbatim (the score strings shown are
 * byte-for-byte what the service sent).
 */

/** Shown while suggestions are on screen but none has been picked yet. */
export const BANNER_TEXT =
  "Remember that you haven't yet selected a category from the vocabularies";

export interface SuggestionRow {
  code: string;
  label: string;
  matchedKeywords: string[];
  hin: number;
  hinDisplay: string;
  relMax: string; // percent text as rendered by the service, e.g. "2.9%"
  relTot: string;
  line: string;
  selected: boolean;
}

const LINE = /^(\S+) - (.+?) \(keywords:((?: '[^']+')*)\) \(Hin Value: (\d+(?:\.\d)?)\) Relevance: \(max:(\d+(?:\.\d)?%) \| \(Tot:(\d+(?:\.\d)?%)\)$/;

export function parseSuggestionLine(line: string): SuggestionRow {
  const match = LINE.exec(line);
  if (!match) {
    throw new Error(`unrecognized suggestion line: ${line}`);
  }
  const [, code, label, keywordBlob, hin, relMax, relTot] = match;
  const matchedKeywords = [...keywordBlob!.matchAll(/'([^']+)'/g)].map((m) => m[1]!);
  return {
    code: code!,
    label: label!,
    matchedKeywords,
    hin: Number(hin),
    hinDisplay: hin!,
    relMax: relMax!,
    relTot: relTot!,
    line,
    selected: false,
  };
}

export function parseSuggestions(lines: string[]): SuggestionRow[] {
  return lines.map(parseSuggestionLine);
}

/** Rows plus the single-selection invariant (at most one selected). */
export class SuggestionList {
  private rows: SuggestionRow[] = [];

  get all(): readonly SuggestionRow[] {
    return this.rows;
  }

  get selected(): SuggestionRow | null {
    return this.rows.find((row) => row.selected) ?? null;
  }

  /** Replace rows with fresh results, keeping the selection only when the
   * selected code is still present. */
  update(lines: string[]): void {
    const keep = this.selected?.code;
    this.rows = parseSuggestions(lines);
    if (keep) {
      const row = this.rows.find((r) => r.code === keep);
      if (row) row.selected = true;
    }
  }

  select(code: string): void {
    for (const row of this.rows) {
      row.selected = row.code === code;
    }
  }

  clear(): void {
    this.rows = [];
  }
}
