"""Diagram machinery: squares, cubes, witnesses, and universal-property checkers.

Orientation convention, used everywhere and worth stating once: a Square
holds four morphisms

        C --f--> B
        |        |
        m        n
        v        v
        A --g--> D

so m: C->A is the left edge, f: C->B the top edge, g: A->D the bottom edge,
n: B->D the right edge, and commutativity means n.f = g.m.  As a pullback,
C is the corner over the cospan (g, n); as a pushout, D is the corner under
the span (m, f).

Universal properties are decided by canonical-construction-plus-comparison:
the category computes its canonical pullback/pushout and the checker tests
whether the comparison morphism is invertible.  Raw quantification over
probe objects is kept in the test suite as an independent oracle.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import (
    EdgeMismatch,
    InvalidSquare,
    NotComposable,
    UnsupportedColimit,
    UnsupportedLimit,
)


class PullbackData(NamedTuple):
    """Canonical pullback corner with its two projections."""

    obj: object
    p1: object
    p2: object


class PushoutData(NamedTuple):
    """Canonical pushout corner, its two injections, and the quotient
    classes (canonical label -> sorted tuple of tagged members) retained
    as provenance."""

    obj: object
    g: object
    n: object
    classes: dict


class Witness:
    """Machine-readable verdict: pass, or fail with replayable diagram data.

    `data` must be JSON-ready (dicts/lists/strings/numbers only), so a fail
    Witness can be written out, reloaded, and replayed.
    """

    __slots__ = ("ok", "kind", "data", "bound")

    def __init__(self, ok, kind, data=None, bound=None):
        self.ok = bool(ok)
        self.kind = kind
        self.data = {} if data is None else data
        self.bound = bound

    def __bool__(self):
        return self.ok

    @property
    def verdict(self):
        return "pass" if self.ok else "fail"

    def to_json(self):
        out = {"verdict": self.verdict, "kind": self.kind, "data": self.data}
        if self.bound is not None:
            out["bound"] = self.bound
        return out

    def __repr__(self):
        return "Witness(%s, %r)" % (self.verdict, self.kind)


def ok_witness(kind, data=None, bound=None):
    return Witness(True, kind, data, bound)


def fail_witness(kind, data=None, bound=None):
    return Witness(False, kind, data, bound)


class Square:
    """Commuting square (m: C->A, f: C->B, g: A->D, n: B->D); n.f = g.m."""

    __slots__ = ("m", "f", "g", "n")

    def __init__(self, m, f, g, n):
        if m.dom != f.dom:
            raise NotComposable("m and f must share their domain C")
        if m.cod != g.dom:
            raise NotComposable("cod(m) must equal dom(g)")
        if f.cod != n.dom:
            raise NotComposable("cod(f) must equal dom(n)")
        if g.cod != n.cod:
            raise NotComposable("g and n must share their codomain D")
        self.m = m
        self.f = f
        self.g = g
        self.n = n

    @property
    def C(self):
        return self.m.dom

    @property
    def A(self):
        return self.m.cod

    @property
    def B(self):
        return self.f.cod

    @property
    def D(self):
        return self.g.cod

    def commutes(self, cat):
        return cat.compose(self.g, self.m) == cat.compose(self.n, self.f)

    def check(self, cat):
        """Raise InvalidSquare unless the square commutes."""
        if not self.commutes(cat):
            raise InvalidSquare("square does not commute: g.m != n.f")
        return self

    def __eq__(self, other):
        if not isinstance(other, Square):
            return NotImplemented
        return (self.m, self.f, self.g, self.n) == (other.m, other.f, other.g, other.n)

    def __hash__(self):
        return hash((Square, self.m, self.f, self.g, self.n))

    def to_json(self):
        return {
            "C": self.C.to_json(),
            "A": self.A.to_json(),
            "B": self.B.to_json(),
            "D": self.D.to_json(),
            "m": self.m.to_json(),
            "f": self.f.to_json(),
            "g": self.g.to_json(),
            "n": self.n.to_json(),
        }

    def __repr__(self):
        return "Square(m=%r, f=%r, g=%r, n=%r)" % (self.m, self.f, self.g, self.n)


class Cube:
    """Commuting cube over a bottom square.

    bottom = (m, f, g, n), top = (m', f', g', n'), verticals a: A'->A,
    b: B'->B, c: C'->C, d: D'->D.  Face extractors return the four side
    faces in the Square orientation:

      left  = Square(m', c, a, m)   (commutes iff m.c  = a.m')
      back  = Square(f', c, b, f)   (commutes iff f.c  = b.f')
      front = Square(g', a, d, g)   (commutes iff g.a  = d.g')
      right = Square(n', b, d, n)   (commutes iff n.b  = d.n')
    """

    __slots__ = ("bottom", "top", "a", "b", "c", "d")

    def __init__(self, bottom, top, a, b, c, d):
        if a.dom != top.A or a.cod != bottom.A:
            raise NotComposable("vertical a must map top A' to bottom A")
        if b.dom != top.B or b.cod != bottom.B:
            raise NotComposable("vertical b must map top B' to bottom B")
        if c.dom != top.C or c.cod != bottom.C:
            raise NotComposable("vertical c must map top C' to bottom C")
        if d.dom != top.D or d.cod != bottom.D:
            raise NotComposable("vertical d must map top D' to bottom D")
        self.bottom = bottom
        self.top = top
        self.a = a
        self.b = b
        self.c = c
        self.d = d

    def left_face(self):
        return Square(self.top.m, self.c, self.a, self.bottom.m)

    def back_face(self):
        return Square(self.top.f, self.c, self.b, self.bottom.f)

    def front_face(self):
        return Square(self.top.g, self.a, self.d, self.bottom.g)

    def right_face(self):
        return Square(self.top.n, self.b, self.d, self.bottom.n)

    def check(self, cat):
        """Raise InvalidSquare unless all six faces commute."""
        self.bottom.check(cat)
        self.top.check(cat)
        for name, face in (
            ("left", self.left_face()),
            ("back", self.back_face()),
            ("front", self.front_face()),
            ("right", self.right_face()),
        ):
            if not face.commutes(cat):
                raise InvalidSquare("cube %s face does not commute" % name)
        return self

    def to_json(self):
        return {
            "bottom": self.bottom.to_json(),
            "top": self.top.to_json(),
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "c": self.c.to_json(),
            "d": self.d.to_json(),
        }

    def __repr__(self):
        return "Cube(bottom=%r, top=%r)" % (self.bottom, self.top)


class Category:
    """Uniform contract for concrete computable categories.

    Subclasses provide composition, identities, mono/epi predicates,
    canonical pullbacks/equalizers, canonical pushouts/coequalizers with a
    declared pushout-admissible class, mediator construction into/out of
    the canonical (co)limits, and bounded object/hom enumeration.
    """

    name = "abstract"

    # -- structure -----------------------------------------------------

    def identity(self, obj):
        raise NotImplementedError

    def compose(self, g, f):
        """Composite g.f (apply f first); cod(f) must equal dom(g)."""
        raise NotImplementedError

    def is_mono(self, f):
        raise NotImplementedError

    def is_epi(self, f):
        raise NotImplementedError

    def inverse(self, f):
        """Two-sided inverse of f, or None if f is not invertible."""
        raise NotImplementedError

    def is_iso(self, f):
        return self.inverse(f) is not None

    def obj_size(self, obj):
        """Total carrier size (graphs: vertices plus edges)."""
        raise NotImplementedError

    # -- limits --------------------------------------------------------

    def terminal(self):
        raise UnsupportedLimit("%s has no terminal object" % self.name)

    def pullback(self, f, g):
        """Canonical pullback of the cospan (f: A->D, g: B->D).

        Returns (P, p1: P->A, p2: P->B) with P carried by pairs (x, y),
        f(x) = g(y), structure induced componentwise.
        """
        raise UnsupportedLimit("%s cannot compute pullbacks" % self.name)

    def pullback_mediator(self, pb, m, f):
        """Unique u with p1.u = m and p2.u = f into canonical pullback pb."""
        raise UnsupportedLimit("%s cannot compute pullbacks" % self.name)

    def equalizer(self, u, v):
        """Canonical equalizer (E, e: E->X) of a parallel pair u, v: X->Y."""
        raise UnsupportedLimit("%s cannot compute equalizers" % self.name)

    # -- colimits ------------------------------------------------------

    def initial(self):
        raise UnsupportedColimit("%s has no initial object" % self.name)

    def admissible(self, m):
        """Is m in the declared pushout-admissible class?"""
        raise NotImplementedError

    def pushout(self, m, f):
        """Canonical pushout of the span (m: C->A, f: C->B), total.

        Returns (D, g: A->D, n: B->D).  Quotient classes are named by the
        smallest original label they contain (ties broken with prime
        marks); the provenance map is retained on the returned data.
        """
        raise UnsupportedColimit("%s cannot compute pushouts" % self.name)

    def pushout_along(self, m, f):
        """Pushout restricted to the declared admissible class of m."""
        raise UnsupportedColimit("%s cannot compute pushouts" % self.name)

    def pushout_mediator(self, po, g, n):
        """Unique v with v.g0 = g and v.n0 = n out of canonical pushout po."""
        raise UnsupportedColimit("%s cannot compute pushouts" % self.name)

    def coequalizer(self, u, v):
        """Canonical coequalizer (Q, q: Y->Q) of u, v: X->Y."""
        raise UnsupportedColimit("%s cannot compute coequalizers" % self.name)

    # -- bounded enumeration -------------------------------------------

    def objects_upto(self, bound):
        """All canonical objects of carrier size <= bound, in canonical
        order (size, structure size, structure table)."""
        raise NotImplementedError

    def homs(self, A, B):
        """All morphisms A -> B in deterministic canonical order."""
        raise NotImplementedError

    def homs_extending(self, A, B, forced):
        """All morphisms A -> B whose table extends the partial map
        `forced` (graphs: a pair of partial maps)."""
        raise NotImplementedError


def is_pullback(cat, sq):
    """Does sq satisfy the pullback universal property over the cospan (g, n)?

    Verified by computing the canonical pullback of (g, n) and testing the
    comparison morphism from C for invertibility.
    """
    sq.check(cat)
    pb = cat.pullback(sq.g, sq.n)
    u = cat.pullback_mediator(pb, sq.m, sq.f)
    if cat.inverse(u) is not None:
        return ok_witness("pullback")
    return fail_witness(
        "pullback",
        {
            "category": cat.name,
            "square": sq.to_json(),
            "canonical_corner": pb[0].to_json(),
            "comparison": u.to_json(),
        },
    )


def is_pushout(cat, sq):
    """Does sq satisfy the pushout universal property under the span (m, f)?

    Verified by computing the canonical pushout of (m, f) and testing the
    comparison morphism into D for invertibility.
    """
    sq.check(cat)
    po = cat.pushout(sq.m, sq.f)
    v = cat.pushout_mediator(po, sq.g, sq.n)
    if cat.inverse(v) is not None:
        return ok_witness("pushout")
    return fail_witness(
        "pushout",
        {
            "category": cat.name,
            "square": sq.to_json(),
            "canonical_corner": po[0].to_json(),
            "comparison": v.to_json(),
        },
    )


def hpaste(cat, left, right):
    """Horizontal composite of two squares sharing the middle vertical edge.

    Requires left.n == right.m (the right edge of `left` is the left edge
    of `right`).  The composite rectangle keeps the outer boundary:
    Square(m=left.m, f=right.f . left.f, g=right.g . left.g, n=right.n).
    """
    if left.n != right.m:
        raise EdgeMismatch("shared edge mismatch: left.n != right.m")
    comp_f = cat.compose(right.f, left.f)
    comp_g = cat.compose(right.g, left.g)
    return Square(left.m, comp_f, comp_g, right.n)


def paste_check(cat, left, right, mode):
    """Pasting/cancellation law on two horizontally pasted squares.

    mode='pullback': when the right square is a pullback, the left square
    is a pullback exactly when the composite rectangle is one.
    mode='pushout': dually, when the left square is a pushout, the right
    square is a pushout exactly when the composite rectangle is one.

    Passes when the stated biconditional holds for the given instance; when
    the hypothesis square fails its universal property the law is vacuous
    and the Witness passes with a note.
    """
    if mode not in ("pullback", "pushout"):
        raise ValueError("mode must be 'pullback' or 'pushout'")
    left.check(cat)
    right.check(cat)
    comp = hpaste(cat, left, right)
    if mode == "pullback":
        hypothesis = bool(is_pullback(cat, right))
        inner = bool(is_pullback(cat, left))
        outer = bool(is_pullback(cat, comp))
    else:
        hypothesis = bool(is_pushout(cat, left))
        inner = bool(is_pushout(cat, right))
        outer = bool(is_pushout(cat, comp))
    data = {
        "category": cat.name,
        "mode": mode,
        "hypothesis_holds": hypothesis,
        "inner": inner,
        "outer": outer,
    }
    if not hypothesis:
        data["note"] = "hypothesis square fails its universal property; law vacuous"
        return ok_witness("paste-" + mode, data)
    if inner == outer:
        return ok_witness("paste-" + mode, data)
    data["left"] = left.to_json()
    data["right"] = right.to_json()
    return fail_witness("paste-" + mode, data)
