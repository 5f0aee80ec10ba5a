"""Exhaustive classification of uniform clean dessins of type (2, 2m, k) and genus g.

sigma1 is fixed to (1,...,2m)(2m+1,...,4m)... and sigma0 ranges over
fixed-point-free involutions.  Labels are assigned in discovery order: when
sigma0 of the smallest unmatched label leaves the blocks seen so far, it
must land on the first label of the next block.  Every rooted dessin has
exactly one such labelling, so the search visits each class at most E times
instead of once per element of the centralizer of sigma1.  Partial faces
(chains of sigma1 o sigma0) are pruned as soon as they exceed k or close
early.  Survivors are deduplicated by canonical form.
"""

from __future__ import annotations

import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .curve import decompose, is_filling_curve, straight_step
from .dessin import Dessin, canonical_dessin, canonical_form, genus, passport
from .errors import DessinError
from .hypgeom import is_hyperbolic_type, min_length_clean
from .perm import Permutation


def degree_for(type_triple, g: int) -> int:
    a, b, k = type_triple
    if a != 2 or b % 2:
        raise DessinError(f"type {tuple(type_triple)} is not of the form (2, 2m, k)", code="bad_type")
    if not is_hyperbolic_type(a, b, k):
        raise DessinError(f"type {tuple(type_triple)} is not hyperbolic", code="not_hyperbolic")
    if g < 0:
        raise DessinError("genus must be non-negative", code="bad_parameter")
    E = Fraction(2 * g - 2) / (1 - Fraction(1, 2) - Fraction(1, b) - Fraction(1, k))
    if E.denominator != 1 or E <= 0 or E % b or E % k:
        raise DessinError(
            f"no uniform dessin of type {tuple(type_triple)} in genus {g} (E = {E})",
            code="no_solution",
        )
    return int(E)


@dataclass(frozen=True)
class EnumerationResult:
    type_triple: tuple
    genus: int
    degree: int
    classes: tuple
    filling_count: int
    component_histogram: dict

    def to_dict(self) -> dict:
        return {
            "type": list(self.type_triple),
            "genus": self.genus,
            "degree": self.degree,
            "count": len(self.classes),
            "filling_count": self.filling_count,
            "component_histogram": {str(r): n for r, n in sorted(self.component_histogram.items())},
            "classes": [d.to_dict() for d in self.classes],
        }


def _search(E: int, block: int, k: int, first: int | None = None) -> list[tuple[int, ...]]:
    """All discovery-ordered sigma0 (0-based images) with every face of length k.

    ``first`` restricts sigma0(0) to one value, which splits the tree for workers.
    """
    s1 = [(i // block) * block + (i % block + 1) % block for i in range(E)]
    s1_inv = [0] * E
    for i, v in enumerate(s1):
        s1_inv[v] = i
    s0 = [-1] * E
    found = []
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * E + 100))

    def chain_ok(e: int) -> bool:
        # the face chain through e: forward along s1 o s0, then backward
        n = 1
        x = e
        while True:
            y = s0[x]
            if y < 0:
                break
            x = s1[y]
            if x == e:
                return n == k
            n += 1
            if n > k:
                return False
        x = e
        while True:
            y = s0[s1_inv[x]]
            if y < 0:
                return True
            x = y
            n += 1
            if n > k:
                return False

    def extend(e: int, discovered: int) -> None:
        while e < E and s0[e] >= 0:
            e += 1
        if e == E:
            found.append(tuple(s0))
            return
        if e >= discovered:
            return  # disconnected: nothing reaches the remaining blocks
        choices = [u for u in range(e + 1, discovered) if s0[u] < 0]
        if discovered < E:
            choices.append(discovered)
        if e == 0 and first is not None:
            choices = [u for u in choices if u == first]
        for u in choices:
            s0[e] = u
            s0[u] = e
            if chain_ok(e) and chain_ok(u):
                extend(e + 1, discovered + block if u == discovered else discovered)
            s0[e] = s0[u] = -1

    extend(0, block)
    return found


def _first_choices(E: int, block: int) -> list[int]:
    return list(range(1, min(block, E))) + ([block] if block < E else [])


def _subtree(args) -> list[bytes]:
    E, block, k, first = args
    s1 = Permutation._from0([(i // block) * block + (i % block + 1) % block for i in range(E)])
    out = set()
    for s0 in _search(E, block, k, first):
        out.add(canonical_form(Dessin(Permutation._from0(s0), s1, check=False)))
    return sorted(out)


def _decode(form: bytes) -> Dessin:
    E = int.from_bytes(form[:4], "big")
    width = 1 if E < 256 else 2
    body = form[4:]
    code = [int.from_bytes(body[i : i + width], "big") for i in range(0, len(body), width)]
    return Dessin(Permutation._from0(code[:E]), Permutation._from0(code[E:]))


def enumerate_uniform(
    type_triple,
    g: int,
    jobs: int = 1,
    progress: Callable[[int, int], None] | None = None,
) -> EnumerationResult:
    type_triple = tuple(type_triple)
    E = degree_for(type_triple, g)
    _, block, k = type_triple
    tasks = [(E, block, k, first) for first in _first_choices(E, block)]
    forms: set[bytes] = set()
    if jobs <= 1:
        for i, task in enumerate(tasks):
            forms.update(_subtree(task))
            if progress:
                progress(i + 1, len(tasks))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for i, part in enumerate(pool.map(_subtree, tasks)):
                forms.update(part)
                if progress:
                    progress(i + 1, len(tasks))
    classes = tuple(_decode(f) for f in sorted(forms))
    for d in classes:
        if genus(d) != g or passport(d).type_triple != type_triple:
            raise DessinError("enumerated dessin has the wrong genus or type", code="internal")
    filling = sum(1 for d in classes if is_filling_curve(d))
    hist = Counter(decompose(d).r for d in classes)
    return EnumerationResult(type_triple, g, E, classes, filling, dict(hist))


def summarize(res: EnumerationResult) -> list[dict]:
    rows = []
    for d in res.classes:
        p = passport(d)
        cs = decompose(d)
        m = p.black_degrees[0] // 2
        rows.append(
            {
                "canonical_form": canonical_form(d).hex(),
                "dessin": canonical_dessin(d).to_dict(),
                "passport": p.to_dict(),
                "straight_step_cycle_type": list(straight_step(d).cycle_type()),
                "r": cs.r,
                "filling": is_filling_curve(d),
                "min_length": float(f"{min_length_clean(m, p.face_degrees[0], d.degree // 2).total:.15g}"),
            }
        )
    return rows
