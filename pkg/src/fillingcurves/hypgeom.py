"""Closed-form length minima and a numeric realization of triangle groups.

Triangle groups are built in the unit disk (face centre of the base
quadrilateral at the origin) and stored as real SL(2, R) matrices acting on
the upper half-plane; ``to_disk`` / ``from_disk`` conjugate by the Cayley map.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DessinError

IDENTITY_TOL = 1e-12
MATRIX_TOL = 1e-9
TRACE_EPS = 1e-7

_CAYLEY = np.array([[1, -1j], [1, 1j]], dtype=complex)  # z -> (z - i) / (z + i)
_CAYLEY_INV = np.linalg.inv(_CAYLEY)


def is_hyperbolic_type(a: int, b: int, c: int) -> bool:
    return Fraction(1, a) + Fraction(1, b) + Fraction(1, c) < 1


def _require_hyperbolic(a: int, b: int, c: int) -> None:
    if min(a, b, c) < 1:
        raise DessinError(f"type ({a},{b},{c}) has a non-positive entry", code="bad_parameter")
    if not is_hyperbolic_type(a, b, c):
        raise DessinError(f"type ({a},{b},{c}) is not hyperbolic", code="not_hyperbolic")


@dataclass(frozen=True)
class LengthReport:
    m: int
    k: int
    d: int
    edge_length: float
    total: float
    formula_used: str
    l: int | None = None
    j: int | None = None

    def to_dict(self) -> dict:
        out = {"formula": self.formula_used, "m": self.m, "k": self.k, "d": self.d}
        if self.formula_used == "bipartite":
            out.update(l=self.l, j=self.j)
        out["edge_length"] = float(f"{self.edge_length:.15g}")
        out["total"] = float(f"{self.total:.15g}")
        return out


def _check_counts(**params) -> None:
    for name, v in params.items():
        if v < 1:
            raise DessinError(f"{name}={v} must be >= 1", code="bad_parameter")


def arc_cosh_argument(m: int, k: int) -> float:
    """cosh of the length of one arc (two dessin edges) for type (2, 2m, k)."""
    s = math.sin(math.pi / (2 * m))
    return (math.cos(math.pi / (2 * m)) ** 2 + math.cos(2 * math.pi / k)) / (s * s)


def edge_cosh_argument(m: int, k: int) -> float:
    """cosh of the edge of the (pi/2, pi/2m, pi/k) triangle opposite pi/k."""
    return math.cos(math.pi / k) / math.sin(math.pi / (2 * m))


def min_length_clean(m: int, k: int, d: int) -> LengthReport:
    _check_counts(m=m, k=k, d=d)
    _require_hyperbolic(2, 2 * m, k)
    arc_form = d * math.acosh(arc_cosh_argument(m, k))
    edge = math.acosh(edge_cosh_argument(m, k))
    edge_form = 2 * d * edge
    if abs(arc_form - edge_form) > IDENTITY_TOL * abs(arc_form):
        raise DessinError(
            f"closed forms disagree for (m={m}, k={k}): {arc_form!r} vs {edge_form!r}",
            code="internal",
        )
    return LengthReport(m=m, k=k, d=d, edge_length=edge, total=arc_form, formula_used="clean")


def min_length_bipartite(l: int, m: int, j: int, d: int) -> LengthReport:
    _check_counts(l=l, m=m, j=j, d=d)
    _require_hyperbolic(2 * l, 2 * m, j)
    cm, cl = math.cos(math.pi / (2 * m)), math.cos(math.pi / (2 * l))
    sm, sl = math.sin(math.pi / (2 * m)), math.sin(math.pi / (2 * l))
    arc = math.acosh((cm * cl + math.cos(math.pi / j)) / (sm * sl))
    return LengthReport(
        m=m, k=2 * j, d=d, edge_length=arc / 2, total=d * arc, formula_used="bipartite", l=l, j=j
    )


def face_constraint(g: int, n: int) -> int:
    """Common face degree k of a uniform general-position curve with n faces in genus g."""
    if g < 2 or n < 1:
        raise DessinError(f"need g >= 2 and n >= 1, got g={g}, n={n}", code="bad_parameter")
    q, r = divmod(8 * g - 8, n)
    if r:
        raise DessinError(
            f"8g-8={8 * g - 8} is not divisible by n={n}: no uniform general-position curve",
            code="no_solution",
        )
    return q + 4


@dataclass(frozen=True)
class Bound:
    value: float
    strict: bool = True

    def to_dict(self) -> dict:
        return {"bound": float(f"{self.value:.15g}"), "strict": self.strict}


def nonuniform_upper_bound(m: int, k: int, d: int) -> Bound:
    """Strict upper bound for the minimum of a non-uniform curve with d arcs of type (2,2m,k)."""
    return Bound(min_length_clean(m, k, d).total, strict=True)


# -- isometries -------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Isometry:
    matrix: np.ndarray
    kind: str
    translation_length: float | None = None

    @property
    def trace(self) -> float:
        return float(np.trace(self.matrix))

    def to_dict(self) -> dict:
        out = {
            "matrix": [[float(f"{v:.15g}") for v in row] for row in self.matrix],
            "trace": float(f"{self.trace:.15g}"),
            "kind": self.kind,
        }
        if self.translation_length is not None:
            out["translation_length"] = float(f"{self.translation_length:.15g}")
        return out


def classify_isometry(M) -> Isometry:
    M = np.asarray(M, dtype=float)
    if M.shape != (2, 2):
        raise DessinError("isometry must be a 2x2 matrix", code="bad_parameter")
    det = np.linalg.det(M)
    if abs(det - 1) >= MATRIX_TOL:
        raise DessinError(f"matrix has determinant {det!r}, expected 1", code="not_unimodular")
    if np.allclose(M, np.eye(2), atol=MATRIX_TOL) or np.allclose(M, -np.eye(2), atol=MATRIX_TOL):
        return Isometry(M, "identity")
    t = abs(np.trace(M))
    if t < 2 - TRACE_EPS:
        return Isometry(M, "elliptic")
    if t <= 2 + TRACE_EPS:
        return Isometry(M, "parabolic")
    return Isometry(M, "hyperbolic", 2 * math.acosh(t / 2))


def equal_up_to_sign(A, B, tol: float = MATRIX_TOL) -> bool:
    A, B = np.asarray(A), np.asarray(B)
    return bool(np.max(np.abs(A - B)) < tol or np.max(np.abs(A + B)) < tol)


def is_projective_identity(A, tol: float = MATRIX_TOL) -> bool:
    return equal_up_to_sign(A, np.eye(2), tol)


def to_disk(M) -> np.ndarray:
    """SL(2,R) half-plane matrix -> SU(1,1) disk matrix."""
    return _CAYLEY @ np.asarray(M, dtype=complex) @ _CAYLEY_INV


def from_disk(M) -> np.ndarray:
    R = _CAYLEY_INV @ np.asarray(M, dtype=complex) @ _CAYLEY
    if np.max(np.abs(R.imag)) > 1e-9:
        raise DessinError("disk matrix is not in SU(1,1)", code="internal")
    return R.real.copy()


def mobius(M, z: complex) -> complex:
    return (M[0][0] * z + M[0][1]) / (M[1][0] * z + M[1][1])


def disk_distance(z: complex, w: complex) -> float:
    num = 2 * abs(z - w) ** 2
    den = (1 - abs(z) ** 2) * (1 - abs(w) ** 2)
    return math.acosh(1 + num / den)


def disk_point(distance: float, angle: float) -> complex:
    """Point of the disk at hyperbolic ``distance`` from 0 in direction ``angle``."""
    return math.tanh(distance / 2) * complex(math.cos(angle), math.sin(angle))


def disk_rotation(center: complex, angle: float) -> np.ndarray:
    """SU(1,1) matrix of the counterclockwise rotation by ``angle`` about ``center``."""
    s = 1 / math.sqrt(1 - abs(center) ** 2)
    T = s * np.array([[1, center], [center.conjugate(), 1]], dtype=complex)
    Tinv = s * np.array([[1, -center], [-center.conjugate(), 1]], dtype=complex)
    R = np.diag([np.exp(0.5j * angle), np.exp(-0.5j * angle)])
    return T @ R @ Tinv


def side_cosh(opposite: float, adj1: float, adj2: float) -> float:
    """Dual cosine rule: cosh of the side opposite the angle ``opposite``."""
    return (math.cos(opposite) + math.cos(adj1) * math.cos(adj2)) / (math.sin(adj1) * math.sin(adj2))


@dataclass(frozen=True, eq=False)
class TriangleGroup:
    """Generators x, y, z of Delta(a, b, c) with xyz = 1, and their fixed points in the disk.

    ``w_c`` is the origin, ``w_a`` lies on the positive real axis and ``w_b``
    at angle pi/c, so (w_a, w_b, w_c) run counterclockwise.
    """

    a: int
    b: int
    c: int
    x: Isometry
    y: Isometry
    z: Isometry
    w_a: complex
    w_b: complex
    w_c: complex

    @property
    def type_triple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def generator(self, letter: str) -> np.ndarray:
        return {"x": self.x, "y": self.y, "z": self.z}[letter].matrix


def triangle_group_matrices(a: int, b: int, c: int) -> TriangleGroup:
    _require_hyperbolic(a, b, c)
    A, B, C = math.pi / a, math.pi / b, math.pi / c
    w_c = 0j
    w_a = disk_point(math.acosh(side_cosh(B, A, C)), 0.0)
    w_b = disk_point(math.acosh(side_cosh(A, B, C)), C)
    # counterclockwise rotations by twice the vertex angles
    X = from_disk(disk_rotation(w_a, 2 * A))
    Y = from_disk(disk_rotation(w_b, 2 * B))
    Z = from_disk(disk_rotation(w_c, 2 * C))
    if not is_projective_identity(X @ Y @ Z):
        raise DessinError("triangle generators fail xyz = 1", code="internal")
    return TriangleGroup(
        a, b, c,
        classify_isometry(X), classify_isometry(Y), classify_isometry(Z),
        w_a, w_b, w_c,
    )
