/** The save-and-export chain: stage, classify with the chosen category,
 * save with the LOM overrides, export the manifest.
 *
 * Returns the manifest text exactly as the service sent it; the caller
 * turns it into a file download.
 */

import { ExchangeClient } from './api.js';
import { manifestFileName } from './download.js';
import { LomFormValues, toLomOverrides, validateForm } from './lomForm.js';

export interface ExportResult {
  lloId: string;
  manifest: string;
  fileName: string;
}

export async function runExportFlow(
  client: ExchangeClient,
  itemIds: string[],
  title: string,
  description: string,
  chosenCode: string,
  form: LomFormValues,
): Promise<ExportResult> {
  const errors = validateForm(form);
  if (Object.keys(errors).length > 0) {
    throw new Error(`form has errors: ${Object.values(errors).join('; ')}`);
  }
  const staged = await client.stage(itemIds);
  await client.attachClassification(staged.staging_id, title, description, chosenCode);
  const saved = await client.save(staged.staging_id, toLomOverrides(form));
  const exported = await client.exportLlo(saved.id);
  return {
    lloId: saved.id,
    manifest: exported.manifest,
    fileName: manifestFileName(form.title),
  };
}
