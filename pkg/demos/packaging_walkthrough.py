"""Build a linkable learning object and serialize its manifest.

Run:  python demos/packaging_walkthrough.py
"""

from llotax import lom

print("=== 1. LOM record ===")
record = lom.LomRecord(
    general=lom.General(
        title="Moodledata Upload",
        description="Slide delle lezioni disponibili per il download",
        authors=("Sergio TASSO",),
        language="en",
        keyword="test",
        structure="atomic",
    ),
    lifecycle=lom.LifeCycle(status="draft"),
    technical=lom.Technical(format="pdf", size=2034664),
    educational=lom.Educational(
        interactivity_type="active",
        learning_resource_type="exercise",
        interactivity_level="very low",
        semantic_density="very low",
        intended_end_user_role="teacher",
        context="school",
        language="en",
    ),
    rights=lom.Rights(copyright="no"),
)
print(f"  title: {record.general.title!r}, size: {record.technical.size}")

print("\n=== 2. Classification and files ===")
classification = lom.ClassificationEntry(
    code="541.2",
    label="Theoretical Chemistry",
    matched_keywords=("reaction", "molecular bond"),
)
files = [
    lom.FileEntry(
        name=lom.resolve_name("slides.pdf", folder="Lesson1"),
        author="Sergio TASSO",
        format="pdf",
        description="week 1",
        last_modified=1580000000,
        size=2034664,
    )
]
print(f"  stored file name: {files[0].name!r} (folder rule applied)")

print("\n=== 3. Manifest ===")
package = lom.build_llo(record, files=files, classification=[classification])
manifest = lom.serialize_manifest(package)
print("  " + manifest.replace("\n", "\n  ").rstrip())

print("=== 4. Roundtrip ===")
restored = lom.parse_manifest(manifest)
print(f"  parse(serialize(pkg)) == pkg: {restored == package}")
print(f"  repeated export byte-identical: {lom.serialize_manifest(restored) == manifest}")
