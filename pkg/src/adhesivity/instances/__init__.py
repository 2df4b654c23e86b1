"""Concrete finite categories: sets, graphs, relations, acyclic relations."""

from .acyclicrel import ACYCLICREL, AcyclicRelCat, AcyclicRelObj
from .fingraph import FINGRAPH, FinGraphCat, GraphHom, GraphObj
from .finset import FINSET, FinFn, FinSetCat, FinSetObj
from .relset import RELSET, RelHom, RelObj, RelSetCat

BY_NAME = {
    "finset": FINSET,
    "fingraph": FINGRAPH,
    "relset": RELSET,
    "acyclicrel": ACYCLICREL,
}


def by_name(name):
    try:
        return BY_NAME[name]
    except KeyError:
        raise KeyError("unknown category instance: %r (choose from %s)" % (name, ", ".join(sorted(BY_NAME))))
