"""Run the whole federated exchange flow against an in-process hub.

Session, search, staging, automatic classification, save, export — the
same operations the HTTP service exposes, driven directly.

Run:  python demos/exchange_walkthrough.py
"""

from llotax import cli, exchange, taxonomy

forest = taxonomy.load_taxonomy_file(cli.sample_taxonomy_path())
fixture = exchange.load_fixture_file(cli.sample_fixture_path())
hub = exchange.ExchangeHub(forest, fixture, rng_seed=42)

print("=== 1. Open a session ===")
session = hub.open_session("moodle.example.edu", "admin", "admin123")
print(f"  token: {session.token} (expires {session.expires_at - session.issued_at:.0f}s after issue)")

print("\n=== 2. Search the remote store ===")
hits = hub.search_items(session.token, "slide")
for item in hits:
    print(f"  [{item.course}] {item.filename}  by {item.author}")

print("\n=== 3. Stage the selection ===")
staged = hub.stage_items(session.token, [item.id for item in hits])
print(f"  staging id: {staged.staging_id}")
print(f"  shared course becomes the folder: {staged.folder!r}")

print("\n=== 4. Attach classification ===")
updated, suggestions = hub.attach_classification(
    session.token,
    staged.staging_id,
    title="Reaction kinetics with quantum corrections",
    description="Quantum analysis of elementary reaction mechanisms.",
)
print(f"  top suggestions:")
for score in suggestions[:3]:
    print(f"    {score.code} {score.label} (hin {score.hin:.1f})")
print(f"  auto-attached: {updated.classification[0].code} {updated.classification[0].label}")

print("\n=== 5. Save as a linkable object ===")
llo_id = hub.save_llo(
    session.token,
    staged.staging_id,
    {"general": {"title": "Chemistry Slides", "keyword": "kinetics"}},
)
print(f"  stored as {llo_id}; staging entry consumed")

print("\n=== 6. Export ===")
manifest, payload_refs = hub.export_llo(session.token, llo_id)
print("  " + manifest.replace("\n", "\n  ").rstrip())
print(f"  payload refs: {[ref['payload_ref'] for ref in payload_refs]}")
