"""Label utilities: a total order over mixed label types and fresh-label generation.

Objects in the finite categories here carry hashable labels (ints, strings,
tuples, frozensets of labels). Deterministic output requires iterating
elements in a reproducible order even when label types are mixed, so
`label_key` ranks by type first and value second.
"""

from __future__ import annotations


_TYPE_RANK = {bool: 0, int: 1, str: 2, tuple: 3, frozenset: 4}


def label_key(x):
    """Total-order sort key over the label universe.

    Supports bool, int, str, tuple (recursively), frozenset (recursively),
    and falls back to (type name, repr) for anything else so sorting never
    raises. bool ranks before int to keep False/True stable and distinct
    from 0/1 in ordering (they compare equal as values but we key on type).
    """
    t = type(x)
    if t is bool:
        return (0, x)
    if t is int:
        return (1, x)
    if t is str:
        return (2, x)
    if t is tuple:
        return (3, tuple(label_key(v) for v in x))
    if t is frozenset:
        return (4, tuple(sorted(label_key(v) for v in x)))
    return (5, t.__name__, repr(x))


def sorted_labels(xs):
    """Sort an iterable of labels deterministically."""
    return sorted(xs, key=label_key)


def fresh_label(base, taken):
    """Return `base` if unused, else append prime marks until free.

    Used when pushout class labels collide: the class keeps the smallest
    original label; a second class wanting the same label gets 1', 1'', ...
    Non-string bases are stringified before priming.
    """
    if base not in taken:
        return base
    cand = str(base) + "′"
    while cand in taken:
        cand = cand + "′"
    return cand


def jsonable_label(x):
    """Convert a label to a JSON-serializable form (tuples/frozensets to lists)."""
    if isinstance(x, tuple):
        return [jsonable_label(v) for v in x]
    if isinstance(x, frozenset):
        return sorted((jsonable_label(v) for v in x), key=_json_key)
    return x


def _json_key(v):
    return label_key(_unjson(v))


def _unjson(v):
    if isinstance(v, list):
        return tuple(_unjson(u) for u in v)
    return v


def table_to_json(on):
    """Serialize a mapping table of labels.

    Emits the compact object form {"x": y, ...} when every key stringifies
    uniquely (ints and strings in practice); falls back to a sorted pair
    list [[k, v], ...] for structured labels such as pullback pairs.
    """
    keys = sorted(on, key=label_key)
    strkeys = [str(k) for k in keys]
    simple = all(isinstance(k, (int, str, bool)) for k in keys)
    if simple and len(set(strkeys)) == len(strkeys):
        return {str(k): jsonable_label(on[k]) for k in keys}
    return [[jsonable_label(k), jsonable_label(on[k])] for k in keys]
