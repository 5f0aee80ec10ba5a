"""Dessins d'enfants as transitive permutation pairs (sigma0, sigma1)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import lcm
from typing import Sequence

from .errors import DessinError
from .perm import (
    Permutation,
    compose,
    from_cycles,
    group_order,
    inverse,
    is_transitive,
    parse_permutation,
)


class Dessin:
    """A dessin of degree E given by its white and black rotations.

    Faces are the cycles of ``sigma_infinity = inverse(sigma1 o sigma0)``.
    """

    def __init__(self, sigma0: Permutation, sigma1: Permutation, check: bool = True):
        if sigma0.degree != sigma1.degree:
            raise DessinError(
                f"degree mismatch: sigma0 has {sigma0.degree}, sigma1 has {sigma1.degree}",
                code="degree_mismatch",
            )
        if check and not is_transitive([sigma0, sigma1]):
            raise DessinError(
                "sigma0 and sigma1 generate an intransitive group (disconnected graph)",
                code="intransitive",
            )
        self.sigma0 = sigma0
        self.sigma1 = sigma1

    @property
    def degree(self) -> int:
        return self.sigma0.degree

    @cached_property
    def sigma_inf(self) -> Permutation:
        return inverse(compose(self.sigma1, self.sigma0))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Dessin)
            and self.sigma0 == other.sigma0
            and self.sigma1 == other.sigma1
        )

    def __hash__(self) -> int:
        return hash((self.sigma0, self.sigma1))

    def __repr__(self) -> str:
        return f"Dessin(E={self.degree}, sigma0={self.sigma0}, sigma1={self.sigma1})"

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "sigma0": [c for c in self.sigma0.cycles() if len(c) > 1],
            "sigma1": [c for c in self.sigma1.cycles() if len(c) > 1],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Dessin":
        if not isinstance(data, dict):
            raise DessinError("dessin JSON must be an object", code="schema")
        unknown = set(data) - {"degree", "sigma0", "sigma1"}
        if unknown:
            raise DessinError(f"unknown keys in dessin JSON: {sorted(unknown)}", code="schema")
        missing = {"degree", "sigma0", "sigma1"} - set(data)
        if missing:
            raise DessinError(f"missing keys in dessin JSON: {sorted(missing)}", code="schema")
        degree = data["degree"]
        if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
            raise DessinError("'degree' must be a positive integer", code="schema")
        perms = []
        for key in ("sigma0", "sigma1"):
            cycles = data[key]
            if not isinstance(cycles, list) or not all(
                isinstance(c, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in c)
                for c in cycles
            ):
                raise DessinError(f"'{key}' must be a list of integer lists", code="schema")
            perms.append(from_cycles(degree, cycles))
        return cls(*perms)


def new_dessin(degree: int, sigma0, sigma1) -> Dessin:
    """Build a validated dessin from permutations, cycle lists or cycle strings."""
    return Dessin(_coerce(degree, sigma0), _coerce(degree, sigma1))


def _coerce(degree: int, value) -> Permutation:
    if isinstance(value, Permutation):
        if value.degree != degree:
            raise DessinError(
                f"degree mismatch: expected {degree}, got {value.degree}", code="degree_mismatch"
            )
        return value
    if isinstance(value, str):
        return parse_permutation(degree, value)
    return from_cycles(degree, value)


def sigma_infinity(d: Dessin) -> Permutation:
    return d.sigma_inf


@dataclass(frozen=True)
class Passport:
    white_degrees: tuple
    black_degrees: tuple
    face_degrees: tuple
    type_triple: tuple
    degree: int

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "white_degrees": list(self.white_degrees),
            "black_degrees": list(self.black_degrees),
            "face_degrees": list(self.face_degrees),
            "type": list(self.type_triple),
        }


def passport(d: Dessin) -> Passport:
    white = d.sigma0.cycle_type()
    black = d.sigma1.cycle_type()
    faces = d.sigma_inf.cycle_type()
    return Passport(white, black, faces, (lcm(*white), lcm(*black), lcm(*faces)), d.degree)


def genus(d: Dessin) -> int:
    euler = d.degree - d.sigma0.num_cycles() - d.sigma1.num_cycles() - d.sigma_inf.num_cycles()
    if euler % 2:
        raise DessinError("E - W - B - F is odd; corrupted dessin", code="internal")
    g = euler // 2 + 1
    if g < 0:
        raise DessinError("negative genus; corrupted dessin", code="internal")
    return g


@dataclass(frozen=True)
class DessinClassification:
    genus: int
    is_clean: bool
    is_uniform: bool
    is_regular: bool
    monodromy_order: int

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "is_clean": self.is_clean,
            "is_uniform": self.is_uniform,
            "is_regular": self.is_regular,
            "monodromy_order": self.monodromy_order,
        }


def _constant(xs: Sequence[int]) -> bool:
    return len(set(xs)) <= 1


def is_uniform(d: Dessin) -> bool:
    p = passport(d)
    return _constant(p.white_degrees) and _constant(p.black_degrees) and _constant(p.face_degrees)


def is_clean(d: Dessin) -> bool:
    return all(c == 2 for c in d.sigma0.cycle_type())


def monodromy_order(d: Dessin) -> int:
    return group_order([d.sigma0, d.sigma1])


def classify(d: Dessin) -> DessinClassification:
    order = monodromy_order(d)
    return DessinClassification(
        genus=genus(d),
        is_clean=is_clean(d),
        is_uniform=is_uniform(d),
        is_regular=order == d.degree,
        monodromy_order=order,
    )


# -- equivalence --------------------------------------------------------------


def _rebased_code(s0: Sequence[int], s1: Sequence[int], base: int) -> tuple:
    # breadth-first relabelling from ``base``; sigma0 is followed before sigma1
    label = {base: 0}
    order = [base]
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for w in (s0[v], s1[v]):
            if w not in label:
                label[w] = len(order)
                order.append(w)
    return tuple([label[s0[v]] for v in order] + [label[s1[v]] for v in order])


def canonical_code(d: Dessin) -> tuple:
    s0, s1 = d.sigma0._img, d.sigma1._img
    return min(_rebased_code(s0, s1, b) for b in range(d.degree))


def canonical_form(d: Dessin) -> bytes:
    """Relabelling-invariant byte encoding; equal iff the dessins are equivalent."""
    code = canonical_code(d)
    width = 1 if d.degree < 256 else 2
    return d.degree.to_bytes(4, "big") + b"".join(v.to_bytes(width, "big") for v in code)


def canonical_dessin(d: Dessin) -> Dessin:
    """The representative whose labels are the canonical relabelling."""
    code = canonical_code(d)
    n = d.degree
    return Dessin(
        Permutation._from0(code[:n]), Permutation._from0(code[n:]), check=False
    )


def are_equivalent(d1: Dessin, d2: Dessin) -> bool:
    return d1.degree == d2.degree and canonical_form(d1) == canonical_form(d2)


def conjugate(d: Dessin, tau: Permutation) -> Dessin:
    """The relabelled dessin (tau s0 tau^-1, tau s1 tau^-1)."""
    ti = inverse(tau)
    return Dessin(
        compose(tau, compose(d.sigma0, ti)),
        compose(tau, compose(d.sigma1, ti)),
        check=False,
    )
