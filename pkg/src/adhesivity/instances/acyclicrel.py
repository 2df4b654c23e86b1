"""Sets with a reflexive, acyclic binary relation.

Objects are reflexive relations in which every cycle x1 R x2 R ... R xn R x1
is constant; equivalently, the relation minus the diagonal has no directed
cycles.  Limits restrict from the binary-relation category (substructures
and componentwise relations of acyclic objects are acyclic).  Colimits are
computed there and then reflected: strongly connected components of the
off-diagonal relation are collapsed, re-inducing the relation, until the
result is acyclic.
"""

from __future__ import annotations

from ..core import PushoutData
from ..errors import NotComposable
from .relset import RelHom, RelObj, RelSetCat, quotient_relation
from .util import merge_partition, name_classes, partition


def _reachability(elems, rel):
    """Transitive closure of the off-diagonal part of rel."""
    reach = {x: set() for x in elems}
    for x, y in rel:
        if x != y:
            reach[x].add(y)
    changed = True
    while changed:
        changed = False
        for x in reach:
            grow = set()
            for y in reach[x]:
                grow |= reach[y]
            if not grow <= reach[x]:
                reach[x] |= grow
                changed = True
    return reach


def offdiag_cycle_free(elems, rel):
    """No directed cycles in the relation with diagonal pairs removed."""
    reach = _reachability(elems, rel)
    return all(x not in reach[x] for x in elems)


def scc_merge_pairs(labels, rel):
    """Pairs of labels that are mutually reachable through the
    off-diagonal relation (the nontrivial strongly connected parts)."""
    reach = _reachability(labels, rel)
    return [(x, y) for x in labels for y in reach[x] if x in reach[y] and x != y]


class AcyclicRelObj(RelObj):
    """A reflexive relation with no nontrivial cycles."""

    __slots__ = ()

    def __init__(self, elems, rel):
        super().__init__(elems, rel)
        for x in self.elems:
            assert (x, x) in self.rel, "relation must be reflexive"
        assert offdiag_cycle_free(self.elems, self.rel), "relation must be acyclic"


class AcyclicRelCat(RelSetCat):
    """The acyclic reflexive-relation category; colimits via the reflector.

    Every morphism is pushout-admissible: the binary-relation pushout is
    followed by the reflector.
    """

    name = "acyclicrel"
    obj_cls = AcyclicRelObj
    hom_cls = RelHom

    def reflect(self, obj):
        """Reflection of a reflexive RelObj into this category.

        Repeatedly collapses strongly connected components of the
        off-diagonal relation and re-induces the relation until acyclic.
        Returns (reflected object, quotient morphism from obj).
        """
        classes = partition([("b", x) for x in obj.elems], [])
        while True:
            label_of, members_of = name_classes(classes)
            labels = list(members_of)
            rel = {(label_of[("b", x)], label_of[("b", y)]) for x, y in obj.rel}
            merges = scc_merge_pairs(labels, rel)
            if not merges:
                break
            index = {label: i for i, label in enumerate(labels)}
            classes = merge_partition(classes, [(index[x], index[y]) for x, y in merges])
        reflected = self._mk_obj(labels, rel)
        q = RelHom(obj, reflected, {x: label_of[("b", x)] for x in obj.elems})
        return reflected, q

    def pushout(self, m, f):
        if m.dom != f.dom:
            raise NotComposable("pushout needs a span: dom(m) != dom(f)")
        A, B = m.cod, f.cod
        tagged = [("a", x) for x in A] + [("b", y) for y in B]
        glue = [(("a", m(c)), ("b", f(c))) for c in m.dom]
        classes = partition(tagged, glue)
        while True:
            label_of, members_of = name_classes(classes)
            labels = list(members_of)
            rel = quotient_relation(A, B, label_of)
            merges = scc_merge_pairs(labels, rel)
            if not merges:
                break
            index = {label: i for i, label in enumerate(labels)}
            classes = merge_partition(classes, [(index[x], index[y]) for x, y in merges])
        D = self._mk_obj(labels, rel)
        g = self._mk_hom(A, D, {x: label_of[("a", x)] for x in A})
        n = self._mk_hom(B, D, {y: label_of[("b", y)] for y in B})
        return PushoutData(D, g, n, members_of)

    def coequalizer(self, u, v):
        if u.dom != v.dom or u.cod != v.cod:
            raise NotComposable("coequalizer needs a parallel pair")
        Y = u.cod
        classes = partition([("b", y) for y in Y], [(("b", u(x)), ("b", v(x))) for x in u.dom])
        while True:
            label_of, members_of = name_classes(classes)
            labels = list(members_of)
            rel = {(label_of[("b", x)], label_of[("b", y)]) for x, y in Y.rel}
            merges = scc_merge_pairs(labels, rel)
            if not merges:
                break
            index = {label: i for i, label in enumerate(labels)}
            classes = merge_partition(classes, [(index[x], index[y]) for x, y in merges])
        Q = self._mk_obj(labels, rel)
        return Q, self._mk_hom(Y, Q, {y: label_of[("b", y)] for y in Y})

    # -- bounded enumeration -------------------------------------------

    def objects_upto(self, bound):
        out = []
        for k in range(bound + 1):
            carrier = tuple(range(k))
            diag = frozenset((x, x) for x in carrier)
            for rel in self._relations_on(carrier):
                full = frozenset(rel)
                if not diag <= full:
                    continue
                if offdiag_cycle_free(carrier, full):
                    out.append(self._mk_obj(carrier, full))
        return out


ACYCLICREL = AcyclicRelCat()
