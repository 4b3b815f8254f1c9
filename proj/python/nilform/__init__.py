"""Anosov automorphisms of rational nilpotent Lie algebras, exactly.

JSON-shaped values (algebras, matrices, certificates, bundles) go in and come
out as plain Python objects; rationals are "p/q" strings throughout.
"""

import json

from . import _nilform
from ._nilform import NilformError, check_type_constraints, solve_pell

__all__ = [
    "NilformError",
    "error_code",
    "run_cli",
    "certify",
    "algebra_type",
    "check_jacobi",
    "check_type_constraints",
    "is_integer_like",
    "pfaffian",
    "pfaffian_form",
    "classify_type42",
    "scheuneman_dual",
    "n_k_algebra",
    "h_k_algebra",
    "solve_pell",
    "verify_field",
    "search_units",
    "is_unit_pisot",
    "recipe_z4_example",
    "recipe_count",
    "recipe_laur",
    "recipe_csig",
    "recipe_last",
    "heisenberg",
]


def _d(x):
    return x if isinstance(x, str) else json.dumps(x)


def _opt(x):
    return None if x is None else _d(x)


def error_code(exc):
    """'NotPisot' from a NilformError."""
    return str(exc).split(":", 1)[0]


def run_cli(*args):
    code, out, err = _nilform.run_cli([str(a) for a in args])
    return code, out, err


def heisenberg():
    return {"field": "Q", "dim": 3, "brackets": [[0, 1, 2, "1"]]}


def certify(algebra, matrix):
    return json.loads(_nilform.certify(_d(algebra), _d(matrix)))


def algebra_type(algebra):
    return _nilform.algebra_type(_d(algebra))


def check_jacobi(algebra):
    return _nilform.check_jacobi(_d(algebra))


def is_integer_like(matrix):
    return _nilform.is_integer_like(_d(matrix))


def pfaffian(matrix):
    return _nilform.pfaffian(_d(matrix))


def pfaffian_form(algebra):
    return _nilform.pfaffian_form(_d(algebra))


def classify_type42(algebra):
    out = json.loads(_nilform.classify_type42(_d(algebra)))
    out["k"] = int(out["k"])
    return out


def scheuneman_dual(algebra):
    return json.loads(_nilform.scheuneman_dual(_d(algebra)))


def n_k_algebra(k):
    return json.loads(_nilform.n_k_algebra(k))


def h_k_algebra(k):
    return json.loads(_nilform.h_k_algebra(k))


def verify_field(field):
    return json.loads(_nilform.verify_field(field))


def search_units(field, height, powers=1, pisot_cone=False):
    return json.loads(_nilform.search_units(field, height, powers, pisot_cone))


def is_unit_pisot(field, element):
    return _nilform.is_unit_pisot(field, _d(element))


def recipe_z4_example():
    return json.loads(_nilform.recipe_z4_example())


def recipe_count(k, l, lam=None):
    return json.loads(_nilform.recipe_count(k, l, _opt(lam)))


def recipe_laur(algebra, grading, field, lam):
    return json.loads(_nilform.recipe_laur(_d(algebra), list(grading), field, _d(lam)))


def recipe_csig(field, lam=None, c=2):
    return json.loads(_nilform.recipe_csig(field, _opt(lam), c))


def recipe_last(field, lam=None, c=2):
    return json.loads(_nilform.recipe_last(field, _opt(lam), c))
