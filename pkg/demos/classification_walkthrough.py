"""Walk through the classification pipeline on a real abstract.

Shows each stage: normalization, tokenization, stopword removal, stemming,
and finally the ranked category suggestions with their scores.

Run:  python demos/classification_walkthrough.py
"""

from llotax import cli, scoring, taxonomy, textpipe

TITLE = (
    "Coupling Quantum Interpretative Techniques: Another Look at Chemical "
    "Mechanisms in Organic Reactions"
)
DESCRIPTION = (
    "A cross ELF/NCI analysis is tested over prototypical organic reactions. "
    "The synergetic use of ELF and NCI enables the understanding of reaction "
    "mechanisms since each method can respectively identify regions of strong "
    "and weak electron pairing. Noncovalent interactions are found to foresee "
    "the evolution of the reaction from the initial steps. Strong convergences "
    "through the reaction paths between ELF and NCI critical points enable "
    "identification of key interactions at the origin of the bond formation."
)

print("=== 1. Normalization ===")
snippet = "ELF/NCI (analysis) is Tested!"
print(f"  raw:        {snippet!r}")
print(f"  normalized: {textpipe.normalize_text(snippet)!r}")

print("\n=== 2. Keyword extraction ===")
keywords = textpipe.extract_keywords(TITLE, DESCRIPTION)
print(f"  {keywords.total} valid keywords after stopword removal and stemming")
frequent = sorted(keywords.counts.items(), key=lambda kv: (-kv[1], kv[0]))[:8]
for token, count in frequent:
    print(f"    {token:<14} x{count}")

print("\n=== 3. The taxonomy forest ===")
forest = taxonomy.load_taxonomy_file(cli.sample_taxonomy_path())
print(f"  {len(forest)} categories, {len(forest.roots)} roots")
print(f"  path to 541.2: {' -> '.join(taxonomy.path_to_root(forest, '541.2'))}")
sample = forest.get("541.2")
print(f"  thesaurus of 541.2: {sorted(syn.phrase for syn in sample.thesaurus)}")

print("\n=== 4. Per-synonym scoring ===")
syn = taxonomy.Synonym(("molecular", "bond"))
match = scoring.match_synonym(syn, keywords)
print(f"  'molecular bond': words={match.word_count} hits={match.occurrences} covered={match.covered}")
print(f"  inherence = {scoring.synonym_inherence(match):.4f}")
print(f"  pertinence = {scoring.pertinence(match, keywords.total):.4f}")

print("\n=== 5. Ranked suggestions ===")
for line in scoring.render_suggestions(scoring.rank_categories(forest, keywords))[:8]:
    print(f"  {line}")
