/** DOM wiring for the cataloging page.
 *
 * Panel 1: connect (token or credentials) and pick repository items.
 * Panel 2: title/description with live scored suggestions and selection.
 * Panel 3: LOM form, save, manifest download.
 */

import { ApiError, ExchangeClient, RepoItem } from './api.js';
import { ClassifyLoop } from './classifyLoop.js';
import { downloadText } from './download.js';
import { runExportFlow } from './exportFlow.js';
import { defaultFormValues, LomFormValues, validateForm } from './lomForm.js';
import { BANNER_TEXT, SuggestionList } from './suggestions.js';

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
};

const client = new ExchangeClient(
  (window as { LLOTAX_SERVICE_URL?: string }).LLOTAX_SERVICE_URL ?? 'http://127.0.0.1:8080',
);
const suggestions = new SuggestionList();
let items: RepoItem[] = [];

function setStatus(id: string, text: string, kind: 'ok' | 'error' | '' = ''): void {
  const el = $(id);
  el.textContent = text;
  el.className = `status ${kind}`;
}

function renderItems(): void {
  const tbody = $('item-rows');
  tbody.innerHTML = '';
  for (const item of items) {
    const row = document.createElement('tr');
    row.innerHTML = `
      <td><input type="checkbox" class="item-check" data-id="${item.id}"></td>
      <td>${item.course}</td>
      <td>${item.filename}</td>
      <td>${item.author}</td>`;
    tbody.appendChild(row);
  }
}

function selectedItemIds(): string[] {
  return [...document.querySelectorAll<HTMLInputElement>('.item-check:checked')].map(
    (box) => box.dataset.id ?? '',
  );
}

function renderSuggestions(): void {
  const tbody = $('suggestion-rows');
  tbody.innerHTML = '';
  for (const row of suggestions.all) {
    const tr = document.createElement('tr');
    tr.className = row.selected ? 'selected' : '';
    tr.innerHTML = `
      <td><input type="radio" name="category" ${row.selected ? 'checked' : ''}></td>
      <td>${row.code}</td>
      <td>${row.label}</td>
      <td>${row.matchedKeywords.map((k) => `'${k}'`).join(' ')}</td>
      <td>${row.hinDisplay}</td>
      <td>max:${row.relMax} | Tot:${row.relTot}</td>`;
    tr.querySelector('input')!.addEventListener('change', () => {
      suggestions.select(row.code);
      renderSuggestions();
    });
    tbody.appendChild(tr);
  }
  const banner = $('banner');
  banner.textContent = suggestions.selected ? '' : BANNER_TEXT;
  banner.style.display = suggestions.selected || suggestions.all.length === 0 ? 'none' : 'block';
  ($('export-button') as HTMLButtonElement).disabled = suggestions.selected === null;
  $('form-panel').classList.toggle('disabled', suggestions.selected === null);
}

const loop = new ClassifyLoop(
  async (title, description) => (await client.classify(title, description)).suggestions,
  (outcome) => {
    if (outcome.kind === 'results') {
      suggestions.update(outcome.lines);
      setStatus('classify-status', '');
    } else if (outcome.kind === 'empty-text') {
      suggestions.clear();
      setStatus('classify-status', 'enter more text to get suggestions');
    } else if (outcome.kind === 'error') {
      setStatus('classify-status', `suggestion request failed (${outcome.message}) — retrying on next edit`, 'error');
    } else {
      suggestions.clear();
      setStatus('classify-status', '');
    }
    renderSuggestions();
  },
  400,
  (err) => err instanceof ApiError && err.code === 'zero_keywords',
);

function formValues(): LomFormValues {
  const values = defaultFormValues();
  for (const key of Object.keys(values) as (keyof LomFormValues)[]) {
    const field = document.querySelector<HTMLInputElement | HTMLSelectElement>(`[name="${key}"]`);
    if (field) values[key] = field.value;
  }
  return values;
}

function showFormErrors(errors: Record<string, string>): void {
  document.querySelectorAll('.field-error').forEach((el) => (el.textContent = ''));
  for (const [field, message] of Object.entries(errors)) {
    const slot = document.querySelector(`[data-error-for="${field}"]`);
    if (slot) slot.textContent = message;
  }
}

function wire(): void {
  $('connect-button').addEventListener('click', async () => {
    const token = ($('token-input') as HTMLInputElement).value.trim();
    try {
      if (token) {
        client.setToken(token);
      } else {
        await client.openSession(
          ($('domain-input') as HTMLInputElement).value,
          ($('user-input') as HTMLInputElement).value,
          ($('password-input') as HTMLInputElement).value,
        );
      }
      items = await client.searchItems(($('search-input') as HTMLInputElement).value);
      renderItems();
      setStatus('connect-status', `${items.length} item(s) found`, 'ok');
    } catch (err) {
      setStatus('connect-status', err instanceof Error ? err.message : String(err), 'error');
    }
  });

  const onTextInput = () => {
    loop.input(
      ($('title-input') as HTMLInputElement).value,
      ($('description-input') as HTMLTextAreaElement).value,
    );
  };
  $('title-input').addEventListener('input', onTextInput);
  $('description-input').addEventListener('input', onTextInput);

  $('export-button').addEventListener('click', async () => {
    const selected = suggestions.selected;
    if (!selected) return;
    const values = formValues();
    const errors = validateForm(values);
    showFormErrors(errors as Record<string, string>);
    if (Object.keys(errors).length > 0) return; // no request leaves the page
    const itemIds = selectedItemIds();
    if (itemIds.length === 0) {
      setStatus('export-status', 'pick at least one repository item first', 'error');
      return;
    }
    try {
      const result = await runExportFlow(
        client,
        itemIds,
        ($('title-input') as HTMLInputElement).value,
        ($('description-input') as HTMLTextAreaElement).value,
        selected.code,
        values,
      );
      downloadText(result.fileName, result.manifest);
      setStatus('export-status', `saved as ${result.lloId}; manifest downloaded`, 'ok');
    } catch (err) {
      setStatus('export-status', err instanceof Error ? err.message : String(err), 'error');
    }
  });
}

wire();
renderSuggestions();
