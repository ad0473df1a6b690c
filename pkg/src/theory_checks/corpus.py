"""
Builtin group identifiers and the construction corpus the suites run on.

A builtin identifier names one construction, for example ``cyclic:6``,
``abelian:2x4``, ``dih:3x3``, ``sym:4``, ``psl:7``, ``Gn:1`` or
``extraspecial:27:exp9``. Identifiers joined by ``*`` build direct products,
as in ``cyclic:2*sym:3``.
"""
import logging
from typing import Callable, Dict, List

from sympy.ntheory import factorint

from src import config
from src.group_core.table import GroupTable
from src.group_core.abelian import AbelianType
from src.group_core.constructions import (
    alternating_group,
    build_abelian,
    build_cyclic,
    build_permutation_group,
    direct_product,
    generalized_dihedral,
    projective_special_linear,
    symmetric_group,
)
from src.pc_presenter.collector import instantiate
from src.pc_presenter.families import BUILTIN_SOURCES, build_Gn, builtin_presentation

logger = logging.getLogger(__name__)

# PSL(2,7) = GL(3,2) on the nonzero vectors of F_2^3, vector v at point v - 1
PSL27_DEGREE7_GENERATORS = [
    [1, 3, 5, 0, 2, 4, 6],
    [0, 2, 1, 3, 4, 6, 5],
]

# Every finite group with maol at most 3, up to isomorphism
REFERENCE_GROUPS = ["cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:6", "abelian:2x2", "sym:3"]

GOLDEN_MAOL = {
    "cyclic:1": 1,
    "cyclic:2": 1,
    "cyclic:3": 2,
    "cyclic:4": 2,
    "cyclic:6": 2,
    "abelian:2x2": 3,
    "sym:3": 3,
    "abelian:2x4": 4,
    "abelian:4x4": 12,
    "abelian:3x3": 8,
    "alt:5": 24,
}

CLASSIFICATION_CORPUS: List[str] = (
    [f"cyclic:{m}" for m in range(1, 25)]
    + ["abelian:2x2", "abelian:2x2x2", "abelian:2x2x2x2", "abelian:2x4", "abelian:4x4",
       "abelian:2x8", "abelian:2x2x4", "abelian:3x3", "abelian:2x6", "abelian:3x9",
       "abelian:3x3x3", "abelian:5x5"]
    + [f"dih:{m}" for m in range(3, 13)]
    + ["dih:2x2", "dih:3x3", "dih:2x4"]
    + ["sym:3", "sym:4", "sym:5", "alt:4", "alt:5"]
    + ["quaternion", "extraspecial:27:exp3", "extraspecial:27:exp9"]
    + ["cyclic:2*sym:3", "cyclic:3*sym:3", "quaternion*cyclic:3", "cyclic:2*alt:4", "cyclic:2*quaternion"]
)

SIMPLE_CORPUS: List[str] = ["alt:5", "alt:6", "alt:7", "psl:7:deg7", "psl:7", "psl:8", "psl:11"]

EXTRASPECIAL_27 = ["extraspecial:27:exp3", "extraspecial:27:exp9"]


def _positive(text: str, spec: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise ValueError(f"{spec!r}: expected a positive integer, got {text!r}") from None
    if value < 1:
        raise ValueError(f"{spec!r}: expected a positive integer, got {value}")
    return value


def abelian_types_from_orders(orders: List[int]) -> List[AbelianType]:
    """Primary types of Z/m_1 x ... x Z/m_k."""
    exponents: Dict[int, List[int]] = {}
    for m in orders:
        for p, e in factorint(m).items():
            exponents.setdefault(p, []).append(e)
    return [AbelianType(p, exps) for p, exps in sorted(exponents.items())]


def _abelian(argument: str, spec: str, cap: int) -> GroupTable:
    orders = [_positive(part, spec) for part in argument.split("x")]
    return build_abelian(abelian_types_from_orders(orders), cap=cap)


def _presented(name: str, cap: int) -> GroupTable:
    return instantiate(builtin_presentation(name), cap=cap, name=name)


def _gn(argument: str, spec: str, cap: int) -> GroupTable:
    n = _positive(argument, spec)
    return instantiate(build_Gn(n), cap=cap, name=f"G_{n}")


def _psl(argument: str, spec: str, cap: int) -> GroupTable:
    if argument == "7:deg7":
        return build_permutation_group(7, PSL27_DEGREE7_GENERATORS, cap=cap, name="PSL(2,7) on 7 points")
    return projective_special_linear(_positive(argument, spec), cap=cap)


_FAMILIES: Dict[str, Callable[[str, str, int], GroupTable]] = {
    "cyclic": lambda arg, spec, cap: build_cyclic(_positive(arg, spec), cap=cap),
    "sym": lambda arg, spec, cap: symmetric_group(_positive(arg, spec), cap=cap),
    "alt": lambda arg, spec, cap: alternating_group(_positive(arg, spec), cap=cap),
    "abelian": _abelian,
    "dih": lambda arg, spec, cap: generalized_dihedral(_abelian(arg, spec, cap), cap=cap),
    "psl": _psl,
    "Gn": _gn,
}


def _build_factor(spec: str, cap: int) -> GroupTable:
    if spec in BUILTIN_SOURCES:
        return _presented(spec, cap)
    family, _, argument = spec.partition(":")
    builder = _FAMILIES.get(family)
    if builder is None or not argument:
        raise ValueError(f"unknown builtin group {spec!r}")
    return builder(argument, spec, cap)


def build_group(spec: str, cap: int = config.MAX_GROUP_ORDER) -> GroupTable:
    """
    Construct a builtin group from its identifier.

    Raises:
        ValueError: If the identifier is not recognised.
        ResourceLimitError: If the group would exceed cap.
    """
    factors = [part.strip() for part in spec.split("*")]
    group = _build_factor(factors[0], cap)
    for part in factors[1:]:
        group = direct_product(group, _build_factor(part, cap), cap=cap)
    logger.debug(f"built {spec}: order {group.order}")
    return group
