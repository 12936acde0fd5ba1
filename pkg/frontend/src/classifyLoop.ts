/** Debounced live classification with stale-response protection.
 *
 * Input changes are debounced (400 ms); each request carries a sequence
 * number and only the latest one may update the view, so a slow early
 * response can never overwrite a newer one.
 */

export interface ClassifyOutcome {
  kind: 'results' | 'empty-text' | 'error' | 'idle';
  lines: string[];
  message?: string;
}

type ClassifyFn = (title: string, description: string) => Promise<string[]>;

export class ClassifyLoop {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private sequence = 0;

  constructor(
    private readonly classify: ClassifyFn,
    private readonly onOutcome: (outcome: ClassifyOutcome) => void,
    private readonly debounceMs: number = 400,
    private readonly isZeroKeywords: (err: unknown) => boolean = () => false,
  ) {}

  /** Schedule a classification for the current input. */
  input(title: string, description: string): void {
    if (this.timer !== null) clearTimeout(this.timer);
    if (!title.trim() && !description.trim()) {
      this.sequence += 1; // invalidate anything in flight
      this.onOutcome({ kind: 'idle', lines: [] });
      return;
    }
    this.timer = setTimeout(() => void this.fire(title, description), this.debounceMs);
  }

  /** Issue the request immediately (used by tests and retry buttons). */
  async fire(title: string, description: string): Promise<void> {
    const ticket = ++this.sequence;
    try {
      const lines = await this.classify(title, description);
      if (ticket !== this.sequence) return; // stale
      this.onOutcome({ kind: 'results', lines });
    } catch (err) {
      if (ticket !== this.sequence) return;
      if (this.isZeroKeywords(err)) {
        this.onOutcome({ kind: 'empty-text', lines: [], message: 'enter more text' });
      } else {
        this.onOutcome({
          kind: 'error',
          lines: [],
          message: err instanceof Error ? err.message : String(err),
        });
      }
    }
  }
}
