import { describe, expect, it } from 'vitest';

import { ExchangeClient } from '../src/api.js';
import { runExportFlow } from '../src/exportFlow.js';
import { defaultFormValues } from '../src/lomForm.js';
import { parseSuggestions, SuggestionList } from '../src/suggestions.js';
import recorded from './fixtures/recorded.json';

// End-to-end against a real service (start one with:
//   llotax serve --port 8080 --rng-seed 7
// and run LLOTAX_SERVICE_URL=http://127.0.0.1:8080 npm test).
const serviceUrl = process.env.LLOTAX_SERVICE_URL;

describe.skipIf(!serviceUrl)('live service flow', () => {
  it('classifies, selects, saves, and downloads over the real API', async () => {
    const client = new ExchangeClient(serviceUrl!);
    await client.openSession('moodle.example.edu', 'admin', 'admin123');

    const { suggestions } = await client.classify(recorded.title, recorded.description);
    const rows = parseSuggestions(suggestions);
    expect(rows.length).toBeGreaterThan(0);
    expect(rows[0]!.hinDisplay).toBe('100');

    const list = new SuggestionList();
    list.update(suggestions);
    list.select('541.2');
    expect(list.selected?.code).toBe('541.2');

    const items = await client.searchItems('slide');
    const values = defaultFormValues();
    values.title = 'Moodledata Upload';
    values.size = '0'; // recomputed server-side from the staged files
    values.format = 'pdf';
    const result = await runExportFlow(
      client,
      items.map((item) => item.id),
      recorded.title,
      recorded.description,
      '541.2',
      values,
    );
    expect(result.manifest).toContain('Title: Moodledata Upload');
    expect(result.manifest).toContain('File: Chem101_Slides_Lecture1.pdf|');
    expect(result.fileName).toBe('moodledata-upload.llo');
  });
});
