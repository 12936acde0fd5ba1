import { afterEach, beforeEach, describe, expect, it, vi } from 'vitest';

import { ClassifyLoop, ClassifyOutcome } from '../src/classifyLoop.js';

describe('ClassifyLoop', () => {
  beforeEach(() => vi.useFakeTimers());
  afterEach(() => vi.useRealTimers());

  function collector() {
    const outcomes: ClassifyOutcome[] = [];
    return { outcomes, push: (o: ClassifyOutcome) => outcomes.push(o) };
  }

  it('debounces input by 400 ms and sends only the final text', async () => {
    const calls: string[] = [];
    const sink = collector();
    const loop = new ClassifyLoop(async (title) => {
      calls.push(title);
      return [`${title} - L (keywords: 'x') (Hin Value: 100) Relevance: (max:1.0% | (Tot:1.0%)`];
    }, sink.push);

    loop.input('a', '');
    vi.advanceTimersByTime(200);
    loop.input('ab', '');
    vi.advanceTimersByTime(399);
    expect(calls).toHaveLength(0); // still inside the debounce window
    await vi.advanceTimersByTimeAsync(1);
    expect(calls).toEqual(['ab']);
    expect(sink.outcomes.at(-1)?.kind).toBe('results');
  });

  it('discards stale responses: the latest request wins', async () => {
    const sink = collector();
    const resolvers: ((lines: string[]) => void)[] = [];
    const loop = new ClassifyLoop(
      () => new Promise((resolve) => resolvers.push(resolve)),
      sink.push,
    );

    void loop.fire('first', '');
    void loop.fire('second', '');
    // the slow first response arrives after the second was issued
    resolvers[1]!(['second-line']);
    await Promise.resolve();
    resolvers[0]!(['first-line']);
    await Promise.resolve();

    const results = sink.outcomes.filter((o) => o.kind === 'results');
    expect(results).toHaveLength(1);
    expect(results[0]!.lines).toEqual(['second-line']);
  });

  it('maps the zero-keyword failure to the enter-more-text hint', async () => {
    const sink = collector();
    const loop = new ClassifyLoop(
      async () => {
        throw new Error('zero');
      },
      sink.push,
      400,
      () => true,
    );
    await loop.fire('the', '');
    expect(sink.outcomes.at(-1)).toMatchObject({ kind: 'empty-text', message: 'enter more text' });
  });

  it('reports network failures as retryable errors', async () => {
    const sink = collector();
    const loop = new ClassifyLoop(
      async () => {
        throw new Error('connection refused');
      },
      sink.push,
    );
    await loop.fire('t', 'd');
    expect(sink.outcomes.at(-1)).toMatchObject({ kind: 'error', message: 'connection refused' });
  });

  it('clearing both fields resets to idle without a request', () => {
    const sink = collector();
    const classify = vi.fn(async () => []);
    const loop = new ClassifyLoop(classify, sink.push);
    loop.input('', '  ');
    vi.advanceTimersByTime(1000);
    expect(classify).not.toHaveBeenCalled();
    expect(sink.outcomes.at(-1)?.kind).toBe('idle');
  });
});
