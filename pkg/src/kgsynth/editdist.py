"""Edit-distance backend selection.

Prefers the compiled extension and falls back to the pure-Python kernel when
the extension was not built. ``BACKEND`` records which one is active so logs,
tests, and the benchmark can report it.
"""

try:
    from kgsynth import _editdist_c as _impl

    BACKEND = "c"
except ImportError:  # extension not built; pure Python is ~100x slower
    from kgsynth import _editdist_py as _impl  # type: ignore[no-redef]

    BACKEND = "python"

levenshtein = _impl.levenshtein
levenshtein_capped = _impl.levenshtein_capped
