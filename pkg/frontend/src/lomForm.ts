/** LOM form model: field definitions, client-side checks, override payload.
 *
 * Validation here only guards what can be decided without the server
 * (vocabulary membership, non-negative size, required title); everything
 * else is left to the service, whose per-field errors render inline.
 */

export const STRUCTURES = ['atomic', 'collection', 'networked', 'hierarchical', 'linear'] as const;
export const STATUSES = ['draft', 'final', 'revised', 'unavailable'] as const;
export const INTERACTIVITY_TYPES = ['active', 'expositive', 'mixed'] as const;
export const LEVELS = ['very low', 'low', 'medium', 'high', 'very high'] as const;
export const END_USER_ROLES = ['teacher', 'author', 'learner', 'manager'] as const;
export const CONTEXTS = ['school', 'higher education', 'training', 'other'] as const;
export const COPYRIGHT_FLAGS = ['yes', 'no'] as const;

export interface LomFormValues {
  title: string;
  description: string;
  authors: string; // semicolon-separated in the input field
  language: string;
  keyword: string;
  structure: string;
  status: string;
  format: string;
  size: string; // raw input text, validated to an integer
  interactivityType: string;
  learningResourceType: string;
  interactivityLevel: string;
  semanticDensity: string;
  intendedEndUserRole: string;
  context: string;
  educationalLanguage: string;
  copyright: string;
}

export type FieldErrors = Partial<Record<keyof LomFormValues, string>>;

export function validateForm(values: LomFormValues): FieldErrors {
  const errors: FieldErrors = {};
  if (!values.title.trim()) errors.title = 'title is required';
  const size = Number(values.size);
  if (values.size.trim() === '' || !Number.isInteger(size)) {
    errors.size = 'size must be an integer';
  } else if (size < 0) {
    errors.size = 'size must not be negative';
  }
  if (!/^[a-zA-Z]{2}$/.test(values.language)) errors.language = 'use a 2-letter code';
  if (!/^[a-zA-Z]{2}$/.test(values.educationalLanguage)) {
    errors.educationalLanguage = 'use a 2-letter code';
  }
  const vocabulary: [keyof LomFormValues, readonly string[]][] = [
    ['structure', STRUCTURES],
    ['status', STATUSES],
    ['interactivityType', INTERACTIVITY_TYPES],
    ['interactivityLevel', LEVELS],
    ['semanticDensity', LEVELS],
    ['intendedEndUserRole', END_USER_ROLES],
    ['context', CONTEXTS],
    ['copyright', COPYRIGHT_FLAGS],
  ];
  for (const [field, allowed] of vocabulary) {
    if (!allowed.includes(values[field])) errors[field] = `must be one of: ${allowed.join(', ')}`;
  }
  return errors;
}

/** Nested override payload for POST /staging/{id}/save. */
export function toLomOverrides(values: LomFormValues): object {
  return {
    general: {
      title: values.title.trim(),
      description: values.description.trim(),
      authors: values.authors.split(';').map((a) => a.trim()).filter(Boolean),
      language: values.language,
      keyword: values.keyword.trim(),
      structure: values.structure,
    },
    lifecycle: { status: values.status },
    technical: { format: values.format.trim(), size: Number(values.size) },
    educational: {
      interactivity_type: values.interactivityType,
      learning_resource_type: values.learningResourceType.trim(),
      interactivity_level: values.interactivityLevel,
      semantic_density: values.semanticDensity,
      intended_end_user_role: values.intendedEndUserRole,
      context: values.context,
      language: values.educationalLanguage,
    },
    rights: { copyright: values.copyright },
  };
}

export function defaultFormValues(): LomFormValues {
  return {
    title: '',
    description: '',
    authors: '',
    language: 'en',
    keyword: '',
    structure: 'atomic',
    status: 'draft',
    format: '',
    size: '0',
    interactivityType: 'expositive',
    learningResourceType: 'lecture',
    interactivityLevel: 'medium',
    semanticDensity: 'medium',
    intendedEndUserRole: 'learner',
    context: 'higher education',
    educationalLanguage: 'en',
    copyright: 'no',
  };
}
