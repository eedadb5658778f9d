"""Process-wide counter of pairwise distance evaluations.

Kernel wrappers add the number of point pairs they evaluate; the benchmark
harness snapshots the counter around each seeding call to report per-method
costs without a profiler. Not thread-safe; the harness runs sequentially.
"""

_count = 0


def add(pairs):
    global _count
    _count += int(pairs)


def value():
    return _count


def reset():
    global _count
    _count = 0
