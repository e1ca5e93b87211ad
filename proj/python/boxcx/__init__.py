"""Box complexes, neighborhood complexes and Kronecker double covers of finite graphs."""

import json as _json

from ._boxcx import (
    FormatError,
    Graph,
    ValidationError,
    b0_complex_json,
    betti_numbers,
    box_complex_json,
    bprime_complex_json,
    chromatic_number,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    desargues,
    example_pair,
    generalized_petersen,
    graph_isomorphism,
    graph_to_dot,
    is_bipartite,
    is_connected,
    is_odd_involution,
    is_stiff,
    kronecker_cover,
    looped_vertex,
    neighborhood_complex_json,
    odd_involutions,
    path_graph,
    petersen,
    quotient,
)
from . import _boxcx


def _text(doc):
    return doc if isinstance(doc, str) else _json.dumps(doc)


def graph_to_dict(g):
    return _json.loads(_boxcx.graph_to_json(g))


def graph_from_dict(doc):
    return _boxcx.graph_from_json(_text(doc))


def box_complex(g):
    """B(G) as a poset document with its involution."""
    return _json.loads(box_complex_json(g))


def b0_complex(x):
    return _json.loads(b0_complex_json(x))


def neighborhood_complex(g):
    return _json.loads(neighborhood_complex_json(g))


def bprime_complex(g):
    return _json.loads(bprime_complex_json(g))


def order_complex(poset):
    return _json.loads(_boxcx.order_complex_json(_text(poset)))


def poset_isomorphism(p, q):
    """Element map as a dict, or None."""
    w = _boxcx.poset_isomorphism(_text(p), _text(q))
    return None if w is None else dict(w)


def z2_poset_isomorphism(p, q):
    w = _boxcx.z2_poset_isomorphism(_text(p), _text(q))
    return None if w is None else dict(w)


def complex_isomorphism(k, l):
    w = _boxcx.complex_isomorphism(_text(k), _text(l))
    return None if w is None else dict(w)


def reconstruct_bipartite(poset):
    return _boxcx.reconstruct_bipartite(_text(poset))


def reconstruct_graph(poset):
    return _boxcx.reconstruct_graph(_text(poset))


def betti(complex_doc):
    return betti_numbers(_text(complex_doc))


def verify_prop_1_2(n, m):
    return _json.loads(_boxcx.verify_prop_1_2_json(n, m))


def verify_pair(g, h):
    return _json.loads(_boxcx.verify_pair_json(g, h))


def verify_all(seed=1):
    return _json.loads(_boxcx.verify_all_json(seed))
