"""Reset the in-process memo tables.

Caches only hold deterministic values, so clearing is never required for
correctness; it releases memory in long research sessions that sweep many
shapes.
"""

from . import hwv, plethystic, polytabloid, tableaux


def clear_caches() -> None:
    polytabloid.clear_straighten_cache()
    hwv._SPACES.clear()
    plethystic._ALPHABET_CACHE.clear()
    plethystic._CONTENT_CACHE.clear()
    plethystic._CAP_CACHE.clear()
    plethystic._COUNT_CACHE.clear()
    plethystic._MAXIMAL_CACHE.clear()
    plethystic._COMPOSITION_ARRAYS.clear()
    tableaux.kostka.cache_clear()
