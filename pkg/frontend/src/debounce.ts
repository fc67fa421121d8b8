/** Coalescing scheduler for what-if edits.
 *
 * Rapid edits within the window merge into one request; at most one request
 * is in flight, and an edit arriving mid-flight is queued and sent (merged)
 * when the current one settles.
 */

export const EDIT_DEBOUNCE_MS = 150;

export class EditScheduler<T> {
  private pending: T | null = null;
  private timer: ReturnType<typeof setTimeout> | null = null;
  private inFlight = false;

  constructor(
    private readonly send: (batch: T) => Promise<void>,
    private readonly merge: (a: T, b: T) => T,
    private readonly delayMs: number = EDIT_DEBOUNCE_MS,
  ) {}

  submit(edit: T): void {
    this.pending = this.pending === null ? edit : this.merge(this.pending, edit);
    if (this.timer !== null) {
      clearTimeout(this.timer);
    }
    this.timer = setTimeout(() => void this.flush(), this.delayMs);
  }

  async flush(): Promise<void> {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    if (this.inFlight || this.pending === null) {
      return;
    }
    const batch = this.pending;
    this.pending = null;
    this.inFlight = true;
    try {
      await this.send(batch);
    } finally {
      this.inFlight = false;
      if (this.pending !== null) {
        await this.flush();
      }
    }
  }

  get busy(): boolean {
    return this.inFlight || this.pending !== null;
  }
}
