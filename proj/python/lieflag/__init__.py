"""Flag varieties, Weyl group cosets and motivic decomposition bookkeeping.

Polynomials are lists of Python ints, constant term first.  Node sets are
lists of 1-based Bourbaki node numbers.
"""

from __future__ import annotations

import json
from typing import Optional, Sequence

from . import _lieflag
from ._lieflag import Error, InvalidArgument, NotSpecifiedBySource

__all__ = [
    "Error",
    "InvalidArgument",
    "NotSpecifiedBySource",
    "af_killing_form_e7",
    "conditions",
    "conormed_poincare",
    "dim_flag",
    "divides_ring",
    "divides_semiring",
    "double_cosets",
    "enumerate_admissible",
    "eval_rational",
    "express_residual",
    "fundamental_degrees",
    "magic_square",
    "poincare_poly",
    "root_system",
    "run_verify",
    "tate_skeleton",
    "tits_index",
    "upper_motive_poly",
    "weyl_order",
]

Poly = list[int]


def _to_ints(coeffs: Sequence[str]) -> Poly:
    return [int(c) for c in coeffs]


def _to_strs(poly: Sequence[int]) -> list[str]:
    return [str(int(c)) for c in poly]


def weyl_order(cartan_type: str) -> int:
    return int(_lieflag.weyl_order(cartan_type))


def fundamental_degrees(cartan_type: str) -> list[int]:
    return _lieflag.fundamental_degrees(cartan_type)


def root_system(cartan_type: str) -> dict:
    return json.loads(_lieflag.root_system_json(cartan_type))


def double_cosets(cartan_type: str, left: Sequence[int], right: Sequence[int],
                  star: Optional[Sequence[int]] = None) -> list[dict]:
    """Cells of W_left \\ W / W_right; `star` is the node permutation as
    images of 1..rank."""
    doc = _lieflag.double_cosets_json(cartan_type, list(left), list(right),
                                      None if star is None else list(star))
    return json.loads(doc)["cells"]


def poincare_poly(cartan_type: str, circled: Sequence[int]) -> Poly:
    return _to_ints(_lieflag.poincare_poly(cartan_type, list(circled)))


def conormed_poincare(cartan_type: str, circled: Sequence[int]) -> Poly:
    return _to_ints(_lieflag.conormed_poincare(cartan_type, list(circled)))


def dim_flag(cartan_type: str, circled: Sequence[int]) -> int:
    return _lieflag.dim_flag(cartan_type, list(circled))


def divides_ring(p: Sequence[int], q: Sequence[int]) -> Optional[Poly]:
    r = _lieflag.divides_ring(_to_strs(p), _to_strs(q))
    return None if r is None else _to_ints(r)


def divides_semiring(p: Sequence[int], q: Sequence[int]) -> Optional[Poly]:
    r = _lieflag.divides_semiring(_to_strs(p), _to_strs(q))
    return None if r is None else _to_ints(r)


def eval_rational(numerator: Sequence[Sequence[int]],
                  denominator: Sequence[Sequence[int]] = ()) -> Poly:
    return _to_ints(_lieflag.eval_rational([_to_strs(f) for f in numerator],
                                           [_to_strs(f) for f in denominator]))


def upper_motive_poly(group: str, values: Sequence[int]) -> Poly:
    return _to_ints(_lieflag.upper_motive_poly(group, list(values)))


def enumerate_admissible(group: str) -> list[list[int]]:
    return _lieflag.enumerate_admissible(group)


def tate_skeleton(ambient: str, kernel: Sequence[int], circled: Sequence[int],
                  star: Optional[Sequence[int]] = None) -> list[int]:
    """Shifts of the Tate summands; the star action defaults to the
    opposition involution."""
    return _lieflag.tate_skeleton(ambient, list(kernel), list(circled),
                                  None if star is None else list(star))


def express_residual(residual: Sequence[int], blocks: Sequence[Sequence[int]],
                     min_shift: int = 0) -> Optional[list[tuple[int, int, int]]]:
    """(block index, shift, multiplicity) triples, or None."""
    return _lieflag.express_residual(_to_strs(residual), [_to_strs(b) for b in blocks],
                                     min_shift)


def af_killing_form_e7(q_definite: bool, o_definite: bool,
                       gamma: Sequence[int] = (1, 1, 1)) -> dict:
    return json.loads(_lieflag.af_killing_form_e7(q_definite, o_definite, list(gamma)))


def magic_square() -> list[dict]:
    return json.loads(_lieflag.magic_square_json())


def conditions(group: str) -> dict:
    return json.loads(_lieflag.conditions_json(group))


def tits_index(rost: str) -> dict:
    return json.loads(_lieflag.tits_index_json(rost))


def run_verify(filter: Optional[str] = None) -> dict:
    return json.loads(_lieflag.run_verify_json(filter))
