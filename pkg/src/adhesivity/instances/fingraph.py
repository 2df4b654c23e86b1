"""Finite directed multigraphs and their homomorphisms.

A graph is two carriers (vertices, edges) with source/target maps; a
homomorphism is a pair of functions commuting with source and target.
Limits and colimits are computed per sort, with source/target induced.
"""

from __future__ import annotations

import itertools

from ..core import Category, PullbackData, PushoutData
from ..errors import NotAdmissible, NotComposable
from ..labels import jsonable_label, sorted_labels, table_to_json
from .util import name_classes, partition


class GraphObj:
    """A finite multigraph: vertex set, edge set, source and target maps."""

    __slots__ = ("V", "E", "src", "tgt", "_key")

    def __init__(self, V, E, src, tgt):
        self.V = frozenset(V)
        self.E = frozenset(E)
        assert set(src) == self.E and set(tgt) == self.E, "src/tgt must be total on edges"
        assert all(v in self.V for v in src.values()), "src must land in V"
        assert all(v in self.V for v in tgt.values()), "tgt must land in V"
        self.src = dict(src)
        self.tgt = dict(tgt)
        es = tuple(sorted_labels(self.E))
        self._key = (
            tuple(sorted_labels(self.V)),
            tuple((e, self.src[e], self.tgt[e]) for e in es),
        )

    def key(self):
        return self._key

    def vertices(self):
        return self._key[0]

    def edges(self):
        return tuple(e for e, _, _ in self._key[1])

    def __eq__(self, other):
        if not isinstance(other, GraphObj):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash((GraphObj, self._key))

    def to_json(self):
        return {
            "V": [jsonable_label(v) for v in self.vertices()],
            "E": [jsonable_label(e) for e in self.edges()],
            "src": table_to_json(self.src),
            "tgt": table_to_json(self.tgt),
        }

    def __repr__(self):
        return "GraphObj(V=%r, E=%r)" % (sorted(map(str, self.V)), sorted(map(str, self.E)))


class GraphHom:
    """A graph homomorphism: vertex map and edge map commuting with src/tgt."""

    __slots__ = ("dom", "cod", "onV", "onE", "_key")

    def __init__(self, dom, cod, onV, onE):
        assert isinstance(dom, GraphObj) and isinstance(cod, GraphObj)
        assert set(onV) == dom.V and all(v in cod.V for v in onV.values())
        assert set(onE) == dom.E and all(e in cod.E for e in onE.values())
        for e in dom.E:
            assert cod.src[onE[e]] == onV[dom.src[e]], "source map does not commute"
            assert cod.tgt[onE[e]] == onV[dom.tgt[e]], "target map does not commute"
        self.dom = dom
        self.cod = cod
        self.onV = dict(onV)
        self.onE = dict(onE)
        self._key = (
            tuple((v, onV[v]) for v in dom.vertices()),
            tuple((e, onE[e]) for e in dom.edges()),
        )

    def key(self):
        return self._key

    def __eq__(self, other):
        if not isinstance(other, GraphHom):
            return NotImplemented
        return (self.dom, self.cod, self._key) == (other.dom, other.cod, other._key)

    def __hash__(self):
        return hash((GraphHom, self.dom, self.cod, self._key))

    def to_json(self):
        return {
            "dom": self.dom.to_json(),
            "cod": self.cod.to_json(),
            "onV": table_to_json(self.onV),
            "onE": table_to_json(self.onE),
        }

    def __repr__(self):
        return "GraphHom(%r -> %r)" % (self.dom, self.cod)


class FinGraphCat(Category):
    """Finite multigraphs; pushouts admissible along monos.

    Carrier bounds are per sort: an object is within bound b when it has
    at most b vertices and at most b edges.
    """

    name = "fingraph"

    def identity(self, obj):
        return GraphHom(obj, obj, {v: v for v in obj.V}, {e: e for e in obj.E})

    def compose(self, g, f):
        if f.cod != g.dom:
            raise NotComposable("cod(f) != dom(g)")
        return GraphHom(
            f.dom,
            g.cod,
            {v: g.onV[f.onV[v]] for v in f.dom.V},
            {e: g.onE[f.onE[e]] for e in f.dom.E},
        )

    def is_mono(self, f):
        return len(set(f.onV.values())) == len(f.onV) and len(set(f.onE.values())) == len(f.onE)

    def is_epi(self, f):
        return set(f.onV.values()) == f.cod.V and set(f.onE.values()) == f.cod.E

    def inverse(self, f):
        if not (self.is_mono(f) and self.is_epi(f)):
            return None
        return GraphHom(
            f.cod,
            f.dom,
            {v: k for k, v in f.onV.items()},
            {e: k for k, e in f.onE.items()},
        )

    def obj_size(self, obj):
        return max(len(obj.V), len(obj.E))

    # -- limits --------------------------------------------------------

    def terminal(self):
        return GraphObj({"*"}, {"*"}, {"*": "*"}, {"*": "*"})

    def initial(self):
        return GraphObj((), (), {}, {})

    def pullback(self, f, g):
        if f.cod != g.cod:
            raise NotComposable("pullback needs a cospan: cod(f) != cod(g)")
        A, B = f.dom, g.dom
        V = [(x, y) for x in A.V for y in B.V if f.onV[x] == g.onV[y]]
        E = [(d, e) for d in A.E for e in B.E if f.onE[d] == g.onE[e]]
        src = {(d, e): (A.src[d], B.src[e]) for d, e in E}
        tgt = {(d, e): (A.tgt[d], B.tgt[e]) for d, e in E}
        P = GraphObj(V, E, src, tgt)
        p1 = GraphHom(P, A, {p: p[0] for p in V}, {p: p[0] for p in E})
        p2 = GraphHom(P, B, {p: p[1] for p in V}, {p: p[1] for p in E})
        return PullbackData(P, p1, p2)

    def pullback_mediator(self, pb, m, f):
        P = pb.obj
        onV = {}
        for c in m.dom.V:
            pair = (m.onV[c], f.onV[c])
            assert pair in P.V, "cone does not commute into the pullback"
            onV[c] = pair
        onE = {}
        for c in m.dom.E:
            pair = (m.onE[c], f.onE[c])
            assert pair in P.E, "cone does not commute into the pullback"
            onE[c] = pair
        return GraphHom(m.dom, P, onV, onE)

    def equalizer(self, u, v):
        if u.dom != v.dom or u.cod != v.cod:
            raise NotComposable("equalizer needs a parallel pair")
        X = u.dom
        V = {x for x in X.V if u.onV[x] == v.onV[x]}
        E = {e for e in X.E if u.onE[e] == v.onE[e]}
        # agreeing edges have agreeing endpoints, so E's endpoints lie in V
        sub = GraphObj(V, E, {e: X.src[e] for e in E}, {e: X.tgt[e] for e in E})
        return sub, GraphHom(sub, X, {x: x for x in V}, {e: e for e in E})

    # -- colimits ------------------------------------------------------

    def admissible(self, m):
        return self.is_mono(m)

    def pushout(self, m, f):
        if m.dom != f.dom:
            raise NotComposable("pushout needs a span: dom(m) != dom(f)")
        A, B, C = m.cod, f.cod, m.dom
        taggedV = [("a", x) for x in A.V] + [("b", y) for y in B.V]
        taggedE = [("a", x) for x in A.E] + [("b", y) for y in B.E]
        glueV = [(("a", m.onV[c]), ("b", f.onV[c])) for c in C.V]
        glueE = [(("a", m.onE[c]), ("b", f.onE[c])) for c in C.E]
        labV, classesV = name_classes(partition(taggedV, glueV))
        labE, classesE = name_classes(partition(taggedE, glueE))
        src = {}
        tgt = {}
        for label, members in classesE.items():
            ends = set()
            for tag, e in members:
                g = A if tag == "a" else B
                ends.add((labV[(tag, g.src[e])], labV[(tag, g.tgt[e])]))
            assert len(ends) == 1, "glued edges disagree on endpoints"
            src[label], tgt[label] = ends.pop()
        D = GraphObj(classesV, classesE, src, tgt)
        g_ = GraphHom(A, D, {x: labV[("a", x)] for x in A.V}, {x: labE[("a", x)] for x in A.E})
        n_ = GraphHom(B, D, {y: labV[("b", y)] for y in B.V}, {y: labE[("b", y)] for y in B.E})
        return PushoutData(D, g_, n_, {"V": classesV, "E": classesE})

    def pushout_along(self, m, f):
        if not self.admissible(m):
            raise NotAdmissible("fingraph pushouts are declared along monos only")
        return self.pushout(m, f)

    def pushout_mediator(self, po, g, n):
        onV = {}
        for label, members in po.classes["V"].items():
            vals = {g.onV[x] if tag == "a" else n.onV[x] for tag, x in members}
            assert len(vals) == 1, "cocone does not commute out of the pushout"
            onV[label] = vals.pop()
        onE = {}
        for label, members in po.classes["E"].items():
            vals = {g.onE[x] if tag == "a" else n.onE[x] for tag, x in members}
            assert len(vals) == 1, "cocone does not commute out of the pushout"
            onE[label] = vals.pop()
        return GraphHom(po.obj, g.cod, onV, onE)

    def coequalizer(self, u, v):
        if u.dom != v.dom or u.cod != v.cod:
            raise NotComposable("coequalizer needs a parallel pair")
        Y = u.cod
        labV, classesV = name_classes(
            partition([("b", y) for y in Y.V], [(("b", u.onV[x]), ("b", v.onV[x])) for x in u.dom.V])
        )
        labE, classesE = name_classes(
            partition([("b", y) for y in Y.E], [(("b", u.onE[x]), ("b", v.onE[x])) for x in u.dom.E])
        )
        src = {}
        tgt = {}
        for label, members in classesE.items():
            ends = {(labV[("b", Y.src[e])], labV[("b", Y.tgt[e])]) for _, e in members}
            assert len(ends) == 1, "glued edges disagree on endpoints"
            src[label], tgt[label] = ends.pop()
        Q = GraphObj(classesV, classesE, src, tgt)
        q = GraphHom(Y, Q, {y: labV[("b", y)] for y in Y.V}, {e: labE[("b", e)] for e in Y.E})
        return Q, q

    # -- bounded enumeration -------------------------------------------

    def objects_upto(self, bound):
        out = []
        for nv in range(bound + 1):
            vs = list(range(nv))
            for ne in range(bound + 1):
                if ne > 0 and nv == 0:
                    continue
                es = list(range(ne))
                for srcs in itertools.product(vs, repeat=ne):
                    for tgts in itertools.product(vs, repeat=ne):
                        out.append(GraphObj(vs, es, dict(zip(es, srcs)), dict(zip(es, tgts))))
        return out

    def homs(self, A, B):
        return self.homs_extending(A, B, ({}, {}))

    def homs_extending(self, A, B, forced):
        forcedV, forcedE = forced
        freeV = [v for v in A.vertices() if v not in forcedV]
        out = []
        bv = list(B.vertices())
        edge_index = {}
        for e in B.edges():
            edge_index.setdefault((B.src[e], B.tgt[e]), []).append(e)
        aes = list(A.edges())
        for images in itertools.product(bv, repeat=len(freeV)):
            onV = dict(forcedV)
            onV.update(zip(freeV, images))
            cand = []
            ok = True
            for e in aes:
                want = (onV[A.src[e]], onV[A.tgt[e]])
                if e in forcedE:
                    eb = forcedE[e]
                    if (B.src[eb], B.tgt[eb]) != want:
                        ok = False
                        break
                    cand.append([eb])
                else:
                    choices = edge_index.get(want, [])
                    if not choices:
                        ok = False
                        break
                    cand.append(choices)
            if not ok:
                continue
            for combo in itertools.product(*cand):
                out.append(GraphHom(A, B, onV, dict(zip(aes, combo))))
        return out


FINGRAPH = FinGraphCat()
