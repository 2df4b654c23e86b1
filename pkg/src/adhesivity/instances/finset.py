"""Finite sets and total functions."""

from __future__ import annotations

import itertools

from ..core import Category, PullbackData, PushoutData
from ..errors import NotAdmissible, NotComposable
from ..labels import jsonable_label, label_key, sorted_labels, table_to_json
from .util import name_classes, partition


class FinSetObj:
    """A finite set of hashable labels."""

    __slots__ = ("elems", "_key")

    def __init__(self, elems):
        self.elems = frozenset(elems)
        self._key = tuple(sorted_labels(self.elems))

    def key(self):
        return self._key

    def __len__(self):
        return len(self.elems)

    def __iter__(self):
        return iter(self._key)

    def __contains__(self, x):
        return x in self.elems

    def __eq__(self, other):
        if not isinstance(other, FinSetObj):
            return NotImplemented
        return self.elems == other.elems

    def __hash__(self):
        return hash((FinSetObj, self.elems))

    def to_json(self):
        return {"elems": [jsonable_label(x) for x in self._key]}

    def __repr__(self):
        return "FinSetObj(%r)" % (set(self._key) if self._key else set(),)


class FinFn:
    """A total function between finite sets, given by its table."""

    __slots__ = ("dom", "cod", "on", "_key")

    def __init__(self, dom, cod, on):
        assert isinstance(dom, FinSetObj) and isinstance(cod, FinSetObj)
        assert set(on) == dom.elems, "mapping table must be total on the domain"
        assert all(v in cod.elems for v in on.values()), "image must lie in the codomain"
        self.dom = dom
        self.cod = cod
        self.on = dict(on)
        self._key = tuple((x, on[x]) for x in dom)

    def __call__(self, x):
        return self.on[x]

    def key(self):
        return self._key

    def __eq__(self, other):
        if not isinstance(other, FinFn):
            return NotImplemented
        return (self.dom, self.cod, self._key) == (other.dom, other.cod, other._key)

    def __hash__(self):
        return hash((FinFn, self.dom, self.cod, self._key))

    def to_json(self):
        return {
            "dom": self.dom.to_json(),
            "cod": self.cod.to_json(),
            "on": table_to_json(self.on),
        }

    def __repr__(self):
        return "FinFn(%r -> %r, %r)" % (set(self.dom._key or ()), set(self.cod._key or ()), dict(self._key))


class FinSetCat(Category):
    """The category of finite sets; pushouts admissible along monos."""

    name = "finset"

    def identity(self, obj):
        return FinFn(obj, obj, {x: x for x in obj})

    def compose(self, g, f):
        if f.cod != g.dom:
            raise NotComposable("cod(f) != dom(g)")
        return FinFn(f.dom, g.cod, {x: g.on[f.on[x]] for x in f.dom})

    def is_mono(self, f):
        return len(set(f.on.values())) == len(f.on)

    def is_epi(self, f):
        return set(f.on.values()) == f.cod.elems

    def inverse(self, f):
        if not (self.is_mono(f) and self.is_epi(f)):
            return None
        return FinFn(f.cod, f.dom, {v: k for k, v in f.on.items()})

    def obj_size(self, obj):
        return len(obj)

    # -- limits --------------------------------------------------------

    def terminal(self):
        return FinSetObj({"*"})

    def initial(self):
        return FinSetObj(())

    def pullback(self, f, g):
        if f.cod != g.cod:
            raise NotComposable("pullback needs a cospan: cod(f) != cod(g)")
        elems = [(x, y) for x in f.dom for y in g.dom if f(x) == g(y)]
        P = FinSetObj(elems)
        p1 = FinFn(P, f.dom, {p: p[0] for p in elems})
        p2 = FinFn(P, g.dom, {p: p[1] for p in elems})
        return PullbackData(P, p1, p2)

    def pullback_mediator(self, pb, m, f):
        P = pb.obj
        table = {}
        for c in m.dom:
            pair = (m(c), f(c))
            assert pair in P, "cone does not commute into the pullback"
            table[c] = pair
        return FinFn(m.dom, P, table)

    def equalizer(self, u, v):
        if u.dom != v.dom or u.cod != v.cod:
            raise NotComposable("equalizer needs a parallel pair")
        E = FinSetObj(x for x in u.dom if u(x) == v(x))
        return E, FinFn(E, u.dom, {x: x for x in E})

    # -- colimits ------------------------------------------------------

    def admissible(self, m):
        return self.is_mono(m)

    def pushout(self, m, f):
        if m.dom != f.dom:
            raise NotComposable("pushout needs a span: dom(m) != dom(f)")
        tagged = [("a", x) for x in m.cod] + [("b", y) for y in f.cod]
        glue = [(("a", m(c)), ("b", f(c))) for c in m.dom]
        classes = partition(tagged, glue)
        label_of, members_of = name_classes(classes)
        D = FinSetObj(members_of)
        g = FinFn(m.cod, D, {x: label_of[("a", x)] for x in m.cod})
        n = FinFn(f.cod, D, {y: label_of[("b", y)] for y in f.cod})
        return PushoutData(D, g, n, members_of)

    def pushout_along(self, m, f):
        if not self.admissible(m):
            raise NotAdmissible("finset pushouts are declared along monos only")
        return self.pushout(m, f)

    def pushout_mediator(self, po, g, n):
        table = {}
        for label, members in po.classes.items():
            vals = {g(x) if tag == "a" else n(x) for tag, x in members}
            assert len(vals) == 1, "cocone does not commute out of the pushout"
            table[label] = vals.pop()
        return FinFn(po.obj, g.cod, table)

    def coequalizer(self, u, v):
        if u.dom != v.dom or u.cod != v.cod:
            raise NotComposable("coequalizer needs a parallel pair")
        tagged = [("b", y) for y in u.cod]
        glue = [(("b", u(x)), ("b", v(x))) for x in u.dom]
        label_of, members_of = name_classes(partition(tagged, glue))
        Q = FinSetObj(members_of)
        return Q, FinFn(u.cod, Q, {y: label_of[("b", y)] for y in u.cod})

    # -- bounded enumeration -------------------------------------------

    def objects_upto(self, bound):
        return [FinSetObj(range(k)) for k in range(bound + 1)]

    def homs(self, A, B):
        xs = list(A)
        out = []
        for images in itertools.product(list(B), repeat=len(xs)):
            out.append(FinFn(A, B, dict(zip(xs, images))))
        return out

    def homs_extending(self, A, B, forced):
        xs = [x for x in A if x not in forced]
        base = dict(forced)
        assert all(k in A.elems and v in B.elems for k, v in base.items())
        out = []
        for images in itertools.product(list(B), repeat=len(xs)):
            table = dict(base)
            table.update(zip(xs, images))
            out.append(FinFn(A, B, table))
        return out


FINSET = FinSetCat()
