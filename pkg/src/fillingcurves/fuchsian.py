"""Words in the triangle group generators x, y, z and the subgroup K of a dessin.

A word acts on edge labels from the right: letters are scanned left to right
with x -> sigma0, y -> sigma1, z -> sigma_infinity.  Its matrix is the product
of generator matrices in the same order, so both evaluations are
homomorphisms of the same kind and K (words fixing label 1) maps into a
Fuchsian group.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .dessin import Dessin, genus, is_clean, is_uniform, passport
from .errors import DessinError
from .hypgeom import Isometry, TriangleGroup, classify_isometry, triangle_group_matrices
from .perm import Permutation, power

GENERATORS = ("x", "y", "z")
_TOKEN = re.compile(r"([xyz])(\^?-?\d+)?")


@dataclass(frozen=True)
class Word:
    letters: tuple = ()

    def __post_init__(self):
        out: list[tuple[str, int]] = []
        for g, e in self.letters:
            if g not in GENERATORS:
                raise DessinError(f"unknown generator {g!r}", code="bad_word")
            if out and out[-1][0] == g:
                e += out.pop()[1]
            if e:
                out.append((g, int(e)))
        object.__setattr__(self, "letters", tuple(out))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        parts = []
        for g, e in self.letters:
            parts.append(g if e == 1 else f"{g}{e}" if e > 0 else f"{g}^{e}")
        return "".join(parts)


def parse_word(text: str) -> Word:
    """Read "xz5xz6" style words; exponents may be written "z^-2" or "z-2"."""
    text = "".join(text.split())
    letters = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise DessinError(f"unexpected character {text[pos]!r} at position {pos}", code="bad_word")
        exp = 1
        if m.group(2):
            exp = int(m.group(2).lstrip("^"))
            if exp == 0:
                raise DessinError(f"zero exponent at position {pos}", code="bad_word")
        letters.append((m.group(1), exp))
        pos = m.end()
    return Word(tuple(letters))


def _generator_perms(d: Dessin) -> dict[str, Permutation]:
    return {"x": d.sigma0, "y": d.sigma1, "z": d.sigma_inf}


def eval_word_perm(w: Word, d: Dessin) -> Permutation:
    gens = _generator_perms(d)
    img = list(range(d.degree))
    for g, e in w.letters:
        step = power(gens[g], e)._img
        img = [step[v] for v in img]
    return Permutation._from0(img)


def in_K(w: Word, d: Dessin, base: int = 1) -> bool:
    if not 1 <= base <= d.degree:
        raise DessinError(f"base label {base} outside 1..{d.degree}", code="bad_label")
    return eval_word_perm(w, d)(base) == base


def _matrix_power(M: np.ndarray, e: int) -> np.ndarray:
    if e < 0:
        # inverse of an SL(2) matrix
        M = np.array([[M[1, 1], -M[0, 1]], [-M[1, 0], M[0, 0]]])
        e = -e
    return np.linalg.matrix_power(M, e)


def word_matrix(w: Word, T: TriangleGroup) -> np.ndarray:
    M = np.eye(2)
    for g, e in w.letters:
        M = M @ _matrix_power(T.generator(g), e)
    return M


def eval_word_matrix(w: Word, T: TriangleGroup, type_triple=None) -> Isometry:
    if type_triple is not None and tuple(type_triple) != T.type_triple:
        raise DessinError(
            f"word is for type {tuple(type_triple)}, matrices are for {T.type_triple}",
            code="type_mismatch",
        )
    return classify_isometry(word_matrix(w, T))


# -- spanning tree and Schreier generators ------------------------------------------


@dataclass(frozen=True)
class SpanningTree:
    """Words reaching every label from label 1, and the tree edges used.

    Each newly reached label brings its whole face (z-orbit) along, and faces
    are joined across x.  The tiles of one face therefore sit around a common
    centre and consecutive tiles share a side.
    """

    words: tuple  # words[i - 1] carries 1 to i
    edges: frozenset  # (label, generator) pairs used by the tree
    parent: tuple  # parent[i - 1] = (parent label, generator) or None for the root


def spanning_tree(d: Dessin) -> SpanningTree:
    gens = _generator_perms(d)
    E = d.degree
    words: list[Word | None] = [None] * (E + 1)
    parent: list = [None] * (E + 1)
    edges = set()
    words[1] = Word()
    queue = []

    def close_face(v: int) -> None:
        queue.append(v)
        u = v
        while True:
            nxt = gens["z"](u)
            if words[nxt] is not None:
                return
            words[nxt] = words[u] * Word((("z", 1),))
            parent[nxt] = (u, "z")
            edges.add((u, "z"))
            queue.append(nxt)
            u = nxt

    close_face(1)
    i = 0
    while i < len(queue):
        v = queue[i]
        i += 1
        j = gens["x"](v)
        if words[j] is None:
            words[j] = words[v] * Word((("x", 1),))
            parent[j] = (v, "x")
            edges.add((v, "x"))
            close_face(j)
    if any(w is None for w in words[1:]):
        raise DessinError("x and z do not reach every label", code="intransitive")
    return SpanningTree(tuple(words[1:]), frozenset(edges), tuple(parent[1:]))


@dataclass(frozen=True, eq=False)
class SidePairing:
    side_pair: tuple  # (label, label)
    generator: str
    word: Word
    matrix: Isometry

    def to_dict(self) -> dict:
        return {
            "side_pair": list(self.side_pair),
            "generator": self.generator,
            "word": str(self.word),
            **self.matrix.to_dict(),
        }


def _check_fuchsian_input(d: Dessin) -> tuple[int, int, int]:
    if not is_clean(d) or not is_uniform(d):
        raise DessinError("side pairings need a uniform clean dessin", code="bad_input")
    if genus(d) < 2:
        raise DessinError("side pairings need genus at least 2", code="bad_input")
    return passport(d).type_triple


def side_pairings(d: Dessin, T: TriangleGroup | None = None) -> list[SidePairing]:
    """Schreier generators of K: one per (label, generator) adjacency outside the tree."""
    type_triple = _check_fuchsian_input(d)
    if T is None:
        T = triangle_group_matrices(*type_triple)
    elif T.type_triple != type_triple:
        raise DessinError(f"matrices for {T.type_triple}, dessin has type {type_triple}", code="type_mismatch")
    tree = spanning_tree(d)
    gens = _generator_perms(d)
    out = []
    for i in range(1, d.degree + 1):
        for g in GENERATORS:
            if (i, g) in tree.edges:
                continue
            j = gens[g](i)
            w = tree.words[i - 1] * Word(((g, 1),)) * tree.words[j - 1].inverse()
            if not in_K(w, d):
                raise DessinError(f"Schreier word {w} does not fix label 1", code="internal")
            iso = eval_word_matrix(w, T)
            if iso.kind in ("elliptic", "parabolic"):
                raise DessinError(f"Schreier word {w} gives a {iso.kind} element", code="torsion")
            out.append(SidePairing((i, j), g, w, iso))
    return out
