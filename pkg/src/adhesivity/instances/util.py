"""Shared quotient machinery for colimit construction.

Pushouts and coequalizers are quotients of a (tagged) disjoint union by a
generated equivalence.  Classes are named canonically: each class takes the
smallest original label it contains, and a collision between two classes
wanting the same label is resolved by appending prime marks to the later
class (later in the deterministic class order).  The member partition is
retained as provenance so witnesses can replay the construction.
"""

from __future__ import annotations

from ..labels import fresh_label, label_key


def partition(items, pairs):
    """Partition `items` by the equivalence generated by `pairs`.

    Returns a list of classes (each a frozenset), in deterministic order by
    smallest member.  Plain union-find; items must be hashable.
    """
    parent = {x: x for x in items}

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    classes = {}
    for x in items:
        classes.setdefault(find(x), set()).add(x)
    out = [frozenset(members) for members in classes.values()]
    out.sort(key=lambda members: min(_member_key(x) for x in members))
    return out


def _member_key(member):
    # Members are either bare labels or ("a"|"b", label) tags.
    if isinstance(member, tuple) and len(member) == 2 and member[0] in ("a", "b"):
        return (member[0], label_key(member[1]))
    return ("", label_key(member))


def original_label(member):
    if isinstance(member, tuple) and len(member) == 2 and member[0] in ("a", "b"):
        return member[1]
    return member


def name_classes(classes):
    """Assign canonical labels to quotient classes.

    Returns (label_of: member -> label, members_of: label -> sorted member
    tuple).  Each class gets the smallest original label among its members;
    later classes colliding on a taken label get prime marks appended.
    """
    label_of = {}
    members_of = {}
    taken = set()
    for members in classes:
        base = min((original_label(x) for x in members), key=label_key)
        label = fresh_label(base, taken)
        taken.add(label)
        members_of[label] = tuple(sorted(members, key=_member_key))
        for x in members:
            label_of[x] = label
    return label_of, members_of


def merge_partition(classes, pairs):
    """Coarsen a partition: merge classes containing related members.

    `pairs` relate class indices; returns the coarsened list of classes in
    deterministic order.
    """
    idx_items = list(range(len(classes)))
    merged = partition(idx_items, pairs)
    out = []
    for group in merged:
        members = frozenset().union(*(classes[i] for i in group))
        out.append(members)
    out.sort(key=lambda members: min(_member_key(x) for x in members))
    return out
