"""Permutations of the labels ``{1, ..., E}``.

Every public function speaks 1-based labels.  Internally a permutation keeps
a 0-based image tuple, so ``p._img[i] == p(i + 1) - 1``.

Composition follows the functional convention: ``compose(p, q)`` applies
``q`` first and then ``p``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import lcm
from typing import Iterable, Sequence

from .errors import DessinError


class Permutation:
    """An immutable bijection of ``{1, ..., degree}``."""

    __slots__ = ("_img", "_hash")

    def __init__(self, images: Sequence[int]):
        img = tuple(int(v) - 1 for v in images)
        n = len(img)
        if n < 1:
            raise DessinError("a permutation needs degree >= 1")
        if sorted(img) != list(range(n)):
            raise DessinError(f"images {list(images)} are not a bijection of 1..{n}")
        self._img = img
        self._hash = None

    @classmethod
    def _from0(cls, img: Sequence[int]) -> "Permutation":
        # trusted constructor for internal 0-based tuples
        p = cls.__new__(cls)
        p._img = tuple(img)
        p._hash = None
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise DessinError("a permutation needs degree >= 1")
        return cls._from0(range(degree))

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(v + 1 for v in self._img)

    def __call__(self, label: int) -> int:
        if not 1 <= label <= len(self._img):
            raise DessinError(f"label {label} out of range 1..{len(self._img)}")
        return self._img[label - 1] + 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._img == other._img

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._img)
        return self._hash

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, n: int) -> "Permutation":
        return power(self, n)

    def __invert__(self) -> "Permutation":
        return inverse(self)

    def __repr__(self) -> str:
        return f"Permutation({self.degree}, {to_cycle_string(self)!r})"

    def __str__(self) -> str:
        return to_cycle_string(self)

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self._img))

    def cycles(self) -> list[list[int]]:
        return cycle_decomposition(self).cycles

    def cycle_type(self) -> tuple[int, ...]:
        return cycle_decomposition(self).cycle_type

    def num_cycles(self) -> int:
        return _num_cycles(self._img)

    def order(self) -> int:
        return lcm(*self.cycle_type())


@dataclass(frozen=True)
class CycleStructure:
    """Canonical disjoint-cycle form, fixed points included as 1-cycles.

    Each cycle starts at its smallest label and cycles are sorted by that
    label.  ``cycle_type`` is the sorted tuple of cycle lengths.
    """

    cycles: list
    cycle_type: tuple

    def __len__(self) -> int:
        return len(self.cycles)


def from_cycles(degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
    if degree < 1:
        raise DessinError("a permutation needs degree >= 1")
    img = list(range(degree))
    seen = set()
    for cyc in cycles:
        cyc = [int(v) for v in cyc]
        for v in cyc:
            if not 1 <= v <= degree:
                raise DessinError(f"label {v} out of range 1..{degree}")
            if v in seen:
                raise DessinError(f"label {v} repeated in cycle list")
            seen.add(v)
        for i, v in enumerate(cyc):
            img[v - 1] = cyc[(i + 1) % len(cyc)] - 1
    return Permutation._from0(img)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[list[int]]:
    """Read cycle notation such as ``"(1,16)(2, 15)"`` into a list of cycles."""
    stripped = re.sub(r"\s+", "", text)
    if stripped in ("", "()"):
        return []
    if _CYCLE_RE.sub("", stripped):
        raise DessinError(f"cannot parse cycle notation {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        if not body:
            continue
        try:
            cycles.append([int(tok) for tok in body.split(",")])
        except ValueError:
            raise DessinError(f"cannot parse cycle notation {text!r}") from None
    return cycles


def parse_permutation(degree: int, text: str) -> Permutation:
    return from_cycles(degree, parse_cycles(text))


def to_cycle_string(p: Permutation, fixed_points: bool = True) -> str:
    cycles = cycle_decomposition(p).cycles
    if not fixed_points:
        cycles = [c for c in cycles if len(c) > 1]
    if not cycles:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


def _check_same_degree(*perms: Permutation) -> None:
    degrees = {p.degree for p in perms}
    if len(degrees) > 1:
        raise DessinError(f"degree mismatch: {sorted(degrees)}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p o q``: first ``q``, then ``p``."""
    _check_same_degree(p, q)
    pi = p._img
    return Permutation._from0(pi[v] for v in q._img)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, v in enumerate(p._img):
        inv[v] = i
    return Permutation._from0(inv)


def power(p: Permutation, n: int) -> Permutation:
    base = inverse(p) if n < 0 else p
    n = abs(n)
    result = Permutation.identity(p.degree)
    # square-and-multiply; powers of one permutation commute
    while n:
        if n & 1:
            result = compose(base, result)
        base = compose(base, base)
        n >>= 1
    return result


def cycle_decomposition(p: Permutation) -> CycleStructure:
    img = p._img
    seen = [False] * len(img)
    cycles = []
    for start in range(len(img)):
        if seen[start]:
            continue
        cyc = []
        j = start
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = img[j]
        cycles.append(cyc)
    return CycleStructure(cycles, tuple(sorted(len(c) for c in cycles)))


def _num_cycles(img: Sequence[int]) -> int:
    seen = [False] * len(img)
    count = 0
    for start in range(len(img)):
        if not seen[start]:
            count += 1
            j = start
            while not seen[j]:
                seen[j] = True
                j = img[j]
    return count


def orbits(generators: Sequence[Permutation]) -> list[frozenset[int]]:
    """Orbit partition of ``{1..E}`` under the group generated by ``generators``.

    Orbits are listed by increasing minimal label.
    """
    if not generators:
        raise DessinError("orbits() needs at least one generator")
    _check_same_degree(*generators)
    n = generators[0].degree
    imgs = [g._img for g in generators]
    seen = [False] * n
    result = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        orbit = []
        while stack:
            v = stack.pop()
            orbit.append(v + 1)
            for img in imgs:
                w = img[v]
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        result.append(frozenset(orbit))
    return result


def is_transitive(generators: Sequence[Permutation]) -> bool:
    return len(orbits(generators)) == 1


# -- stabilizer chain -------------------------------------------------------
#
# Knuth-style Sims table on 0-based image tuples.  Level k holds the
# permutations of the group fixing 0..k-1; transversal[k] maps a point j in
# the orbit of k to an element sending k to j.


def _c(p, q):
    return tuple(p[v] for v in q)


def _inv(p):
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


class _SimsTable:
    def __init__(self, n: int):
        self.n = n
        ident = tuple(range(n))
        self.gens = [[] for _ in range(n)]
        self.trans = [{k: ident} for k in range(n)]

    def contains(self, k: int, g) -> bool:
        for i in range(k, self.n):
            t = self.trans[i].get(g[i])
            if t is None:
                return False
            g = _c(_inv(t), g)
        return True

    def add(self, k: int, g) -> None:
        if k >= self.n or self.contains(k, g):
            return
        self.gens[k].append(g)
        for t in list(self.trans[k].values()):
            self._close(k, _c(g, t))

    def _close(self, k: int, g) -> None:
        stack = [g]
        trans = self.trans[k]
        while stack:
            h = stack.pop()
            j = h[k]
            t = trans.get(j)
            if t is not None:
                self.add(k + 1, _c(_inv(t), h))
            else:
                trans[j] = h
                stack.extend(_c(s, h) for s in self.gens[k])

    def order(self) -> int:
        result = 1
        for t in self.trans:
            result *= len(t)
        return result


def group_order(generators: Sequence[Permutation]) -> int:
    """Exact order of the subgroup of S_E generated by ``generators``."""
    if not generators:
        raise DessinError("group_order() needs at least one generator")
    _check_same_degree(*generators)
    table = _SimsTable(generators[0].degree)
    for g in generators:
        table.add(0, g._img)
    return table.order()
