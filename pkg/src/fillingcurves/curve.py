"""From uniform dessins to multicurves: components, filling test, duality, medial surgery."""

from __future__ import annotations

from dataclasses import dataclass

from .dessin import Dessin, is_clean, passport
from .errors import DessinError
from .perm import Permutation, compose, from_cycles, power


@dataclass(frozen=True)
class CurveSystem:
    """Edge sequences of the closed curves traced straight through every vertex.

    ``m`` and ``l`` are the black and white half-degrees; ``l == 1`` for clean dessins.
    """

    components: tuple
    m: int
    l: int

    @property
    def r(self) -> int:
        return len(self.components)

    def lengths(self) -> list[int]:
        return sorted(len(c) for c in self.components)

    def component_of(self) -> dict[int, int]:
        return {e: i for i, comp in enumerate(self.components) for e in comp}

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "m": self.m,
            "l": self.l,
            "components": [list(c) for c in self.components],
        }


def _half_degrees(d: Dessin) -> tuple[int, int]:
    p = passport(d)
    for name, degs in (("white", p.white_degrees), ("black", p.black_degrees), ("face", p.face_degrees)):
        if len(set(degs)) != 1:
            raise DessinError(f"dessin is not uniform ({name} degrees {list(degs)})", code="not_uniform")
    white, black = p.white_degrees[0], p.black_degrees[0]
    if white % 2 or black % 2:
        raise DessinError(
            f"vertex degrees ({white}, {black}) must be even to go straight through",
            code="odd_degree",
        )
    return black // 2, white // 2


def straight_step(d: Dessin) -> Permutation:
    """sigma1^m o sigma0^l, the two-edge step of the straight-through walk."""
    m, l = _half_degrees(d)
    return compose(power(d.sigma1, m), power(d.sigma0, l))


def decompose(d: Dessin) -> CurveSystem:
    m, l = _half_degrees(d)
    turn_white = power(d.sigma0, l)
    turn_black = power(d.sigma1, m)
    used = set()
    components = []
    for start in range(1, d.degree + 1):
        if start in used:
            continue
        comp = []
        e = start
        while True:
            f = turn_white(e)
            comp.extend((e, f))
            e = turn_black(f)
            if e == start:
                break
        if used.intersection(comp) or len(set(comp)) != len(comp):
            raise DessinError("straight-through walk revisits an edge", code="internal")
        used.update(comp)
        components.append(tuple(comp))
    return CurveSystem(tuple(components), m, l)


def is_filling_curve(d: Dessin) -> bool:
    if not is_clean(d):
        raise DessinError("filling-curve test needs a clean dessin", code="not_clean")
    step = straight_step(d)
    return step.cycle_type() == (d.degree // 2, d.degree // 2) and d.degree % 2 == 0


def is_general_position(d: Dessin) -> bool:
    if not is_clean(d):
        raise DessinError("general-position test needs a clean dessin", code="not_clean")
    return all(b == 4 for b in d.sigma1.cycle_type())


def dual(d: Dessin) -> Dessin:
    """Swap black vertices and faces: (sigma0, sigma_infinity)."""
    if not is_clean(d):
        raise DessinError("dual is defined here for clean dessins", code="not_clean")
    return Dessin(d.sigma0, d.sigma_inf)


def medial(dstar: Dessin) -> Dessin:
    """Insert a white vertex in every edge and turn all old vertices black.

    Old edge e splits into labels e (black end) and E + e (white end).
    """
    n = dstar.degree
    s0 = from_cycles(2 * n, [(e, n + e) for e in range(1, n + 1)])
    images = list(dstar.sigma1.images) + [n + dstar.sigma0(e) for e in range(1, n + 1)]
    return Dessin(s0, Permutation(images))
