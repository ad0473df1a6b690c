"""
Named presentations: the 2-groups G_n, the quaternion group and the
extraspecial groups of order 27.
"""
import logging
from typing import Dict, Optional, Tuple

import numpy as np

from src import config
from src.errors import AutomorphismError
from src.group_core.table import GroupTable
from src.group_core.subgroups import Subgroup, generate
from src.aut_engine.automorphism import Automorphism, is_automorphism
from src.pc_presenter.collector import instantiate
from src.pc_presenter.models.presentation import CollectedWord, PcPresentation
from src.pc_presenter.parsers.presentation_parser import parse_presentation

logger = logging.getLogger(__name__)

QUATERNION_SOURCE = """\
# quaternion group of order 8
gens i,j,z
orders 2,2,2
pow i^2 = z
pow j^2 = z
comm [i,j] = z
"""

EXTRASPECIAL_27_EXP3_SOURCE = """\
# Heisenberg group mod 3
gens x,y,z
orders 3,3,3
comm [x,y] = z
"""

EXTRASPECIAL_27_EXP9_SOURCE = """\
gens x,y,z
orders 3,3,3
pow x^3 = z
comm [x,y] = z
"""

BUILTIN_SOURCES: Dict[str, str] = {
    "quaternion": QUATERNION_SOURCE,
    "extraspecial:27:exp3": EXTRASPECIAL_27_EXP3_SOURCE,
    "extraspecial:27:exp9": EXTRASPECIAL_27_EXP9_SOURCE,
}


def builtin_presentation(name: str) -> PcPresentation:
    try:
        source = BUILTIN_SOURCES[name]
    except KeyError:
        raise ValueError(f"unknown builtin presentation {name!r}; choose from {sorted(BUILTIN_SOURCES)}") from None
    return parse_presentation(source)


def _gn_size(n: int) -> int:
    if not 1 <= n <= config.GN_MAX_INDEX:
        raise ValueError(f"G_n is available for 1 <= n <= {config.GN_MAX_INDEX}, got {n}")
    return 2 ** n + 1


def build_Gn(n: int) -> PcPresentation:
    """
    Presentation of G_n on x_1, ..., x_(2^n+1), a, b.

    All generators have relative order 2. x_1^2 = x_(2^n+1)^2 = b, and the
    only nontrivial commutators are [x_(2i-1), x_(2i)] = a and
    [x_(2i), x_(2i+1)] = b for 1 <= i <= 2^(n-1). The group has order
    2^(2^n+3) and centre <a, b>.

    Raises:
        ValueError: If n is outside 1..GN_MAX_INDEX.
    """
    size = _gn_size(n)
    names = [f"x{k}" for k in range(1, size + 1)] + ["a", "b"]
    total = len(names)
    a, b = size, size + 1
    word_a = CollectedWord.generator(total, a)
    word_b = CollectedWord.generator(total, b)
    power_rhs = {0: word_b, size - 1: word_b}
    comm_rhs: Dict[Tuple[int, int], CollectedWord] = {}
    for i in range(1, 2 ** (n - 1) + 1):
        comm_rhs[(2 * i - 2, 2 * i - 1)] = word_a
        comm_rhs[(2 * i - 1, 2 * i)] = word_b
    presentation = PcPresentation(names, [2] * total, power_rhs, comm_rhs)
    logger.debug(f"G_{n}: {total} generators, order {presentation.order}")
    return presentation


def gn_index(presentation: PcPresentation) -> int:
    """The n with presentation == build_Gn(n)."""
    size = presentation.n - 2
    n = size.bit_length() - 1
    if size < 3 or 2 ** n + 1 != size or presentation != build_Gn(n):
        raise ValueError(f"{presentation!r} is not a G_n presentation")
    return n


def _generator_elements(presentation: PcPresentation) -> list:
    return [presentation.index_of(CollectedWord.generator(presentation.n, k)) for k in range(presentation.n)]


def alpha_n(presentation: PcPresentation, table: Optional[GroupTable] = None) -> Automorphism:
    """
    The automorphism of G_n sending x_(2^n) to x_(2^n) x_(2^n+1) and fixing
    every other generator.

    The map is extended along normal forms, x_1^t_1 ... x_m^t_m going to the
    product of the generator images in the same order, and the result is
    checked on all pairs.

    Raises:
        AutomorphismError: If the extension is not an automorphism.
    """
    n = gn_index(presentation)
    table = table if table is not None else instantiate(presentation)
    gens = _generator_elements(presentation)
    moved = 2 ** n - 1
    images = list(gens)
    images[moved] = table.product(gens[moved], gens[moved + 1])

    perm = np.zeros(table.order, dtype=np.int32)
    for index in range(table.order):
        word = presentation.normal_form_of(index)
        x = 0
        for k, t in enumerate(word.exponents):
            for _ in range(t):
                x = table.rows[x][images[k]]
        perm[index] = x
    if not is_automorphism(table, perm, exhaustive_limit=max(table.order, config.AUT_FULL_LIST_LIMIT)):
        raise AutomorphismError(f"alpha_{n} does not extend to an automorphism")
    return Automorphism(perm)


def gn_characteristic_subgroups(n: int, table: Optional[GroupTable] = None) -> Tuple[Subgroup, Subgroup]:
    """The subgroups <x_1, C_n> and <x_(2^n+1), C_n> of G_n, where C_n = <a, b>."""
    presentation = build_Gn(n)
    table = table if table is not None else instantiate(presentation)
    gens = _generator_elements(presentation)
    size = _gn_size(n)
    a, b = gens[size], gens[size + 1]
    return generate(table, [gens[0], a, b]), generate(table, [gens[size - 1], a, b])
