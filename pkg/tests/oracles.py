"""Independent single-pass recounts used to check the analyzer."""

from __future__ import annotations

# pillar -> theme ids, written out from the table rather than derived
PILLAR_RANGES = {
    "Humans": range(1, 8),
    "Data": range(8, 14),
    "Process": range(14, 17),
    "System": range(17, 20),
    "Governance": range(20, 24),
}


def brute_coverage(stories):
    covered = {t for t in range(1, 24) if any(t in s.themes for s in stories)}
    pillars = {
        name: (sum(1 for t in ids if t in covered), len(ids)) for name, ids in PILLAR_RANGES.items()
    }
    return covered, set(range(1, 24)) - covered, pillars


def brute_distribution(stories):
    counts = {}
    for story in stories:
        for dim in {t.dimension for t in story.attributes}:
            counts[dim] = counts.get(dim, 0) + 1
    return counts


def brute_conflicts(stories, registry):
    found = []
    for a in range(1, 24):
        for b in range(a + 1, 24):
            if not registry.contains(a, b):
                continue
            refs_a = [s.span for s in stories if a in s.themes]
            refs_b = [s.span for s in stories if b in s.themes]
            if refs_a and refs_b:
                found.append(((a, b), refs_a, refs_b))
    return found
