"""Invariant suite run by ``fillingcurves verify``."""

from __future__ import annotations

from dataclasses import dataclass, field

from .curve import decompose, straight_step
from .dessin import Dessin, genus, is_clean, is_uniform, passport
from .errors import DessinError
from .fuchsian import in_K, parse_word, side_pairings
from .hypgeom import is_hyperbolic_type, min_length_bipartite, min_length_clean
from .io import load_fixture
from .perm import is_transitive

PASS, FAIL, SKIP = "pass", "fail", "skip"

# Reference generators of K for the genus-2 (2,4,8) fixture; each must fix label 1.
KNOWN_K_WORDS = ("xz5xz6", "xz3xz3", "xz6xz6x", "z6xz7", "xz7xz4", "xz4xz7x", "z3xz")
KNOWN_K_FIXTURE = "genus2_type248"


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class VerifyReport:
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def add(self, name: str, ok: bool | None, detail: str = "") -> None:
        self.checks.append(Check(name, SKIP if ok is None else PASS if ok else FAIL, detail))

    def to_dict(self) -> dict:
        return {"passed": self.passed, "checks": [c.to_dict() for c in self.checks]}


def _even_uniform(d: Dessin) -> bool:
    p = passport(d)
    return is_uniform(d) and p.white_degrees[0] % 2 == 0 and p.black_degrees[0] % 2 == 0


def verify(d: Dessin) -> VerifyReport:
    rep = VerifyReport()
    p = passport(d)
    rep.add("transitive", is_transitive([d.sigma0, d.sigma1]))

    euler = d.degree - d.sigma0.num_cycles() - d.sigma1.num_cycles() - d.sigma_inf.num_cycles()
    rep.add("euler_parity", euler % 2 == 0 and euler >= -2, f"E-W-B-F = {euler}")
    g = genus(d) if euler % 2 == 0 else None

    if is_clean(d) and set(p.black_degrees) == {4} and len(set(p.face_degrees)) == 1 and g is not None:
        n, k = len(p.face_degrees), p.face_degrees[0]
        rep.add("face_count_relation", 8 * g - 8 == n * (k - 4), f"8g-8 = {8 * g - 8}, n(k-4) = {n * (k - 4)}")
    else:
        rep.add("face_count_relation", None, "needs a clean dessin with black degrees 4 and equal faces")

    if _even_uniform(d):
        walk = decompose(d).r
        cycles = straight_step(d).num_cycles()
        rep.add("component_count_two_ways", 2 * walk == cycles, f"traversal r = {walk}, cycles = {cycles}")
    else:
        rep.add("component_count_two_ways", None, "needs a uniform dessin with even vertex degrees")

    a, b, k = p.type_triple
    if is_clean(d) and _even_uniform(d) and is_hyperbolic_type(a, b, k):
        m, arcs = b // 2, d.degree // 2
        try:
            total = min_length_clean(m, k, arcs).total
            ok, detail = True, f"total = {total:.15g}"
        except DessinError as exc:
            ok, detail = False, str(exc)
        rep.add("length_closed_forms", ok, detail)
        if k % 2 == 0 and is_hyperbolic_type(b, b, k // 2):
            alt = min_length_bipartite(m, m, k // 2, arcs).total
            rel = abs(alt - total) / total
            rep.add("length_medial_identity", rel <= 1e-12, f"relative gap {rel:.2e}")
    else:
        rep.add("length_closed_forms", None, "needs a uniform clean dessin of hyperbolic type")

    if is_clean(d) and is_uniform(d) and g is not None and g >= 2 and is_hyperbolic_type(a, b, k):
        try:
            sp = side_pairings(d)
            kinds = sorted({s.matrix.kind for s in sp})
            rep.add("schreier_generators_torsion_free", True, f"{len(sp)} generators, kinds {kinds}")
        except DessinError as exc:
            rep.add("schreier_generators_torsion_free", False, str(exc))

    if d == load_fixture(KNOWN_K_FIXTURE):
        bad = [w for w in KNOWN_K_WORDS if not in_K(parse_word(w), d)]
        rep.add("known_words_in_K", not bad, "all fix label 1" if not bad else f"failing: {bad}")
    return rep
