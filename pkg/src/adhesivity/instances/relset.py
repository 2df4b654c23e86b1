"""Sets equipped with a binary relation; relation-preserving functions.

Pullbacks carry the componentwise relation; pushouts carry the union of
the images of the two relations (no closure), which is the colimit
relation in this category.  All pushouts exist, so the declared
pushout-admissible class is every morphism.
"""

from __future__ import annotations

import itertools

from ..core import Category, PullbackData, PushoutData
from ..errors import NotComposable
from ..labels import jsonable_label, label_key, sorted_labels, table_to_json
from .util import name_classes, partition


class RelObj:
    """A finite set with a binary relation on it."""

    __slots__ = ("elems", "rel", "_key")

    def __init__(self, elems, rel):
        self.elems = frozenset(elems)
        self.rel = frozenset((x, y) for x, y in rel)
        for x, y in self.rel:
            assert x in self.elems and y in self.elems, "relation must lie on the carrier"
        self._key = (
            tuple(sorted_labels(self.elems)),
            tuple(sorted(self.rel, key=lambda p: (label_key(p[0]), label_key(p[1])))),
        )

    def key(self):
        return self._key

    def __len__(self):
        return len(self.elems)

    def __iter__(self):
        return iter(self._key[0])

    def related(self, x, y):
        return (x, y) in self.rel

    def induced(self, subset):
        """Relation induced on a carrier subset."""
        s = frozenset(subset)
        return frozenset(p for p in self.rel if p[0] in s and p[1] in s)

    def __eq__(self, other):
        if not isinstance(other, RelObj):
            return NotImplemented
        return (self.elems, self.rel) == (other.elems, other.rel)

    def __hash__(self):
        return hash((RelObj, self.elems, self.rel))

    def to_json(self):
        return {
            "elems": [jsonable_label(x) for x in self._key[0]],
            "rel": [[jsonable_label(x), jsonable_label(y)] for x, y in self._key[1]],
        }

    def __repr__(self):
        return "RelObj(%r, %r)" % (sorted(map(str, self.elems)), sorted(map(str, map(tuple, self.rel))))


class RelHom:
    """A relation-preserving function: x R y implies f(x) R' f(y)."""

    __slots__ = ("dom", "cod", "on", "_key")

    def __init__(self, dom, cod, on):
        assert isinstance(dom, RelObj) and isinstance(cod, RelObj)
        assert set(on) == dom.elems, "mapping table must be total on the domain"
        assert all(v in cod.elems for v in on.values()), "image must lie in the codomain"
        for x, y in dom.rel:
            assert (on[x], on[y]) in cod.rel, "map does not preserve the relation"
        self.dom = dom
        self.cod = cod
        self.on = dict(on)
        self._key = tuple((x, on[x]) for x in dom)

    def __call__(self, x):
        return self.on[x]

    def key(self):
        return self._key

    def is_relation_reflecting(self):
        """Does (f(x), f(y)) in R' imply (x, y) in R?  With injectivity this
        characterizes the regular monos of this category."""
        for x in self.dom:
            for y in self.dom:
                if (self.on[x], self.on[y]) in self.cod.rel and (x, y) not in self.dom.rel:
                    return False
        return True

    def __eq__(self, other):
        if not isinstance(other, RelHom):
            return NotImplemented
        return (self.dom, self.cod, self._key) == (other.dom, other.cod, other._key)

    def __hash__(self):
        return hash((RelHom, self.dom, self.cod, self._key))

    def to_json(self):
        return {
            "dom": self.dom.to_json(),
            "cod": self.cod.to_json(),
            "on": table_to_json(self.on),
        }

    def __repr__(self):
        return "RelHom(%r -> %r, %r)" % (self.dom, self.cod, dict(self._key))


def quotient_relation(A, B, label_of):
    """Union of the images of the relations of A ('a' side) and B ('b'
    side) under a tagged-member labeling."""
    rel = set()
    for x, y in A.rel:
        rel.add((label_of[("a", x)], label_of[("a", y)]))
    for x, y in B.rel:
        rel.add((label_of[("b", x)], label_of[("b", y)]))
    return rel


class RelSetCat(Category):
    """Sets-with-a-binary-relation; every morphism is pushout-admissible."""

    name = "relset"
    obj_cls = RelObj
    hom_cls = RelHom

    def _mk_obj(self, elems, rel):
        return self.obj_cls(elems, rel)

    def _mk_hom(self, dom, cod, on):
        return self.hom_cls(dom, cod, on)

    def identity(self, obj):
        return self._mk_hom(obj, obj, {x: x for x in obj})

    def compose(self, g, f):
        if f.cod != g.dom:
            raise NotComposable("cod(f) != dom(g)")
        return self._mk_hom(f.dom, g.cod, {x: g.on[f.on[x]] for x in f.dom})

    def is_mono(self, f):
        return len(set(f.on.values())) == len(f.on)

    def is_epi(self, f):
        return set(f.on.values()) == f.cod.elems

    def inverse(self, f):
        if not (self.is_mono(f) and self.is_epi(f)):
            return None
        if not f.is_relation_reflecting():
            return None
        return self._mk_hom(f.cod, f.dom, {v: k for k, v in f.on.items()})

    def obj_size(self, obj):
        return len(obj)

    # -- limits --------------------------------------------------------

    def terminal(self):
        return self._mk_obj({"*"}, {("*", "*")})

    def initial(self):
        return self._mk_obj((), ())

    def pullback(self, f, g):
        if f.cod != g.cod:
            raise NotComposable("pullback needs a cospan: cod(f) != cod(g)")
        A, B = f.dom, g.dom
        elems = [(x, y) for x in A for y in B if f(x) == g(y)]
        rel = [
            (p, q)
            for p in elems
            for q in elems
            if (p[0], q[0]) in A.rel and (p[1], q[1]) in B.rel
        ]
        P = self._mk_obj(elems, rel)
        p1 = self._mk_hom(P, A, {p: p[0] for p in elems})
        p2 = self._mk_hom(P, B, {p: p[1] for p in elems})
        return PullbackData(P, p1, p2)

    def pullback_mediator(self, pb, m, f):
        P = pb.obj
        table = {}
        for c in m.dom:
            pair = (m(c), f(c))
            assert pair in P.elems, "cone does not commute into the pullback"
            table[c] = pair
        return self._mk_hom(m.dom, P, table)

    def equalizer(self, u, v):
        if u.dom != v.dom or u.cod != v.cod:
            raise NotComposable("equalizer needs a parallel pair")
        X = u.dom
        carrier = frozenset(x for x in X if u(x) == v(x))
        E = self._mk_obj(carrier, X.induced(carrier))
        return E, self._mk_hom(E, X, {x: x for x in carrier})

    # -- colimits ------------------------------------------------------

    def admissible(self, m):
        return True

    def pushout(self, m, f):
        if m.dom != f.dom:
            raise NotComposable("pushout needs a span: dom(m) != dom(f)")
        A, B = m.cod, f.cod
        tagged = [("a", x) for x in A] + [("b", y) for y in B]
        glue = [(("a", m(c)), ("b", f(c))) for c in m.dom]
        classes = partition(tagged, glue)
        label_of, members_of = name_classes(classes)
        D = self._mk_obj(members_of, quotient_relation(A, B, label_of))
        g = self._mk_hom(A, D, {x: label_of[("a", x)] for x in A})
        n = self._mk_hom(B, D, {y: label_of[("b", y)] for y in B})
        return PushoutData(D, g, n, members_of)

    def pushout_along(self, m, f):
        return self.pushout(m, f)

    def pushout_mediator(self, po, g, n):
        table = {}
        for label, members in po.classes.items():
            vals = {g(x) if tag == "a" else n(x) for tag, x in members}
            assert len(vals) == 1, "cocone does not commute out of the pushout"
            table[label] = vals.pop()
        return self._mk_hom(po.obj, g.cod, table)

    def coequalizer(self, u, v):
        if u.dom != v.dom or u.cod != v.cod:
            raise NotComposable("coequalizer needs a parallel pair")
        Y = u.cod
        tagged = [("b", y) for y in Y]
        glue = [(("b", u(x)), ("b", v(x))) for x in u.dom]
        label_of, members_of = name_classes(partition(tagged, glue))
        rel = {(label_of[("b", x)], label_of[("b", y)]) for x, y in Y.rel}
        Q = self._mk_obj(members_of, rel)
        return Q, self._mk_hom(Y, Q, {y: label_of[("b", y)] for y in Y})

    # -- bounded enumeration -------------------------------------------

    def _relations_on(self, carrier):
        pairs = [(x, y) for x in carrier for y in carrier]
        pairs.sort(key=lambda p: (label_key(p[0]), label_key(p[1])))
        for r in range(len(pairs) + 1):
            for combo in itertools.combinations(pairs, r):
                yield combo

    def objects_upto(self, bound):
        out = []
        for k in range(bound + 1):
            carrier = tuple(range(k))
            for rel in self._relations_on(carrier):
                out.append(self._mk_obj(carrier, rel))
        return out

    def homs(self, A, B):
        return self.homs_extending(A, B, {})

    def homs_extending(self, A, B, forced):
        free = [x for x in A if x not in forced]
        out = []
        for images in itertools.product(list(B), repeat=len(free)):
            table = dict(forced)
            table.update(zip(free, images))
            if all((table[x], table[y]) in B.rel for x, y in A.rel):
                out.append(self._mk_hom(A, B, table))
        return out


RELSET = RelSetCat()
