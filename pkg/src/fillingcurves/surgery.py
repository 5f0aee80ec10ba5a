"""Genus-raising surgery on (2,4,k) dessins and the seed families it grows from."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass

from .curve import is_filling_curve
from .dessin import Dessin, genus, is_uniform, new_dessin, passport
from .errors import DessinError
from .perm import Permutation, compose, from_cycles, power

log = logging.getLogger(__name__)

SAME_FACE = "same_face"
DIFFERENT_FACES = "different_faces"


@dataclass(frozen=True)
class SurgeryOutcome:
    result: Dessin
    case: str
    a: int
    b: int
    # (old degree, new degree) for every face whose degree changed
    face_degree_delta: tuple

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "case": self.case,
            "face_degree_delta": [list(p) for p in self.face_degree_delta],
            "result": self.result.to_dict(),
        }


def _check_24(d: Dessin) -> None:
    p = passport(d)
    if set(p.white_degrees) != {2} or set(p.black_degrees) != {4}:
        raise DessinError(
            "surgery needs all white degrees 2 and all black degrees 4", code="bad_passport"
        )


def candidate_pairs(d: Dessin) -> list[tuple[int, int]]:
    """sigma0 transpositions (a, b), a < b, whose ends lie on different black vertices."""
    black = _cycle_index(d.sigma1)
    return [
        (a, d.sigma0(a))
        for a in range(1, d.degree + 1)
        if a < d.sigma0(a) and black[a] != black[d.sigma0(a)]
    ]


def _cycle_index(p: Permutation) -> dict[int, int]:
    return {v: i for i, cyc in enumerate(p.cycles()) for v in cyc}


def _surgery_pair(d: Dessin, a: int, b: int) -> tuple[Permutation, Permutation]:
    E = d.degree
    s0 = [c for c in d.sigma0.cycles() if len(c) > 1 and a not in c]
    s0 += [(a, E + 5), (E + 1, E + 6), (E + 2, E + 7), (E + 3, E + 8), (E + 4, b)]
    s1 = [c for c in d.sigma1.cycles() if len(c) > 1]
    s1 += [(E + 5, E + 1, E + 3, E + 7), (E + 4, E + 2, E + 6, E + 8)]
    return from_cycles(E + 8, s0), from_cycles(E + 8, s1)


def _extend(p: Permutation, n: int) -> Permutation:
    return Permutation(list(p.images) + list(range(p.degree + 1, n + 1)))


def apply_surgery(d: Dessin, a: int, b: int) -> SurgeryOutcome:
    _check_24(d)
    E = d.degree
    if not (1 <= a <= E and 1 <= b <= E) or a == b or d.sigma0(a) != b:
        raise DessinError(f"({a},{b}) is not a 2-cycle of sigma0", code="bad_pair")
    black = _cycle_index(d.sigma1)
    if black[a] == black[b]:
        raise DessinError(f"{a} and {b} lie in the same sigma1 cycle", code="bad_pair")

    faces = _cycle_index(d.sigma_inf)
    case = SAME_FACE if faces[a] == faces[b] else DIFFERENT_FACES

    s0, s1 = _surgery_pair(d, a, b)
    result = Dessin(s0, s1)

    # product identity: s1~ s0~ is conjugate to s1 s0 (a,E+5,E+6,E+3,E+2,E+1,E+8)(b,E+4,E+7)
    tail = from_cycles(E + 8, [(a, E + 5, E + 6, E + 3, E + 2, E + 1, E + 8), (b, E + 4, E + 7)])
    expected = compose(compose(_extend(d.sigma1, E + 8), _extend(d.sigma0, E + 8)), tail)
    if compose(s1, s0).cycle_type() != expected.cycle_type():
        raise DessinError("surgery product identity violated", code="internal")

    delta = _face_delta(d, result, a, b)
    _check_outcome(d, result, case, delta)
    return SurgeryOutcome(result, case, a, b, delta)


def _face_delta(d: Dessin, result: Dessin, a: int, b: int) -> tuple:
    # faces correspond through the old labels they contain
    old_faces = [c for c in d.sigma_inf.cycles() if a in c or b in c]
    new_faces = [c for c in result.sigma_inf.cycles() if a in c or b in c]
    if len(old_faces) != len(new_faces):
        raise DessinError("surgery merged or split the faces at a and b", code="internal")
    rest_old = Counter(len(c) for c in d.sigma_inf.cycles() if c not in old_faces)
    rest_new = Counter(len(c) for c in result.sigma_inf.cycles() if c not in new_faces)
    if rest_old != rest_new:
        raise DessinError("surgery changed a face away from a and b", code="internal")
    pairs = []
    for label in (a, b):
        before = next(len(c) for c in old_faces if label in c)
        after = next(len(c) for c in new_faces if label in c)
        pairs.append((before, after))
    if len(old_faces) == 1:
        pairs = pairs[:1]
    return tuple(pairs)


def _straight_cycles(d: Dessin) -> int:
    return compose(power(d.sigma1, 2), d.sigma0).num_cycles()


def _check_outcome(d: Dessin, result: Dessin, case: str, delta: tuple) -> None:
    problems = []
    if genus(result) != genus(d) + 1:
        problems.append("genus did not increase by one")
    if result.sigma_inf.num_cycles() != d.sigma_inf.num_cycles():
        problems.append("face count changed")
    steps = sorted(new - old for old, new in delta)
    if case == SAME_FACE and steps != [8]:
        problems.append(f"same-face case changed face degrees by {steps}")
    if case == DIFFERENT_FACES and steps != [2, 6]:
        problems.append(f"different-faces case changed face degrees by {steps}")
    if _straight_cycles(result) != _straight_cycles(d):
        problems.append("cycle count of sigma1^2 sigma0 changed")
    if problems:
        raise DessinError("; ".join(problems), code="internal")


# -- seeds ----------------------------------------------------------------------

_SEEDS = {
    (2, 1): (
        12,
        "(1,12)(2,11)(3,10)(4,9)(5,8)(6,7)",
        "(1,4,7,10)(2,6,12,8)(3,5,11,9)",
    ),
    (2, 2): (
        16,
        "(1,16)(2,15)(3,14)(4,13)(5,12)(6,11)(7,10)(8,9)",
        "(1,6,9,12)(2,10,16,8)(3,13,15,5)(4,7,14,11)",
    ),
    (3, 2): (
        24,
        "(1,13)(2,24)(3,23)(4,22)(5,21)(6,20)(7,19)(8,18)(9,17)(10,16)(11,15)(12,14)",
        "(1,3,14,24)(2,4,13,23)(5,9,22,18)(6,16,21,11)(7,17,20,10)(8,15,19,12)",
    ),
    (4, 3): (
        36,
        "".join(f"({i},{i + 1})" for i in range(1, 36, 2)),
        "(1,3,9,5)(2,4,6,7)(8,11,17,13)(10,12,19,15)(14,21,29,23)(16,25,24,27)"
        "(18,26,31,20)(22,33,35,28)(30,32,34,36)",
    ),
}


def seed_dessin(g: int, n: int) -> Dessin:
    try:
        degree, s0, s1 = _SEEDS[(g, n)]
    except KeyError:
        raise DessinError(
            f"no seed for genus {g} with {n} faces; available: {sorted(_SEEDS)}", code="no_seed"
        ) from None
    return new_dessin(degree, s0, s1)


# -- induction ---------------------------------------------------------------------


def _valid_curve(d: Dessin, n: int) -> bool:
    return is_uniform(d) and d.sigma_inf.num_cycles() == n and is_filling_curve(d)


def _block_length(n: int) -> int:
    return {1: 1, 2: 2, 3: 3}.get(n, 0)


def grow(d: Dessin, target_genus: int, n: int) -> Dessin:
    """Apply surgeries until ``target_genus``, keeping a uniform filling curve with n faces.

    Surgeries are grouped in blocks of n (one per face); the first candidate
    sequence in lexicographic pair order whose block result is uniform and
    filling is kept.
    """
    block = _block_length(n)
    if not block:
        raise DessinError(f"grow supports n in (1, 2, 3), got {n}", code="bad_parameter")
    if not _valid_curve(d, n):
        raise DessinError("start dessin must be a uniform filling curve with n faces", code="bad_start")
    _check_24(d)
    g = genus(d)
    if target_genus <= g:
        raise DessinError(f"target genus {target_genus} must exceed {g}", code="bad_parameter")
    if (target_genus - g) % block:
        raise DessinError(
            f"with {n} faces the genus grows in steps of {block}", code="bad_parameter"
        )
    while g < target_genus:
        k_new = passport(d).face_degrees[0] + 8 * block // n
        nxt = _search_block(d, block, k_new)
        if nxt is None:
            raise DessinError(
                f"no surgery sequence keeps genus {g + block} uniform and filling",
                code="search_exhausted",
            )
        d = nxt
        g += block
        log.debug("grown to genus %d, face degree %d", g, k_new)
        if genus(d) != g or not _valid_curve(d, n):
            raise DessinError("grown dessin failed its invariants", code="internal")
        if 8 * g - 8 != n * (k_new - 4):
            raise DessinError("grown dessin violates 8g-8 = n(k-4)", code="internal")
    return d


def _search_block(d: Dessin, steps: int, k_new: int) -> Dessin | None:
    if steps == 0:
        return d if set(d.sigma_inf.cycle_type()) == {k_new} and is_filling_curve(d) else None
    for a, b in candidate_pairs(d):
        out = apply_surgery(d, a, b).result
        if max(out.sigma_inf.cycle_type()) > k_new:
            continue
        found = _search_block(out, steps - 1, k_new)
        if found is not None:
            return found
    return None
