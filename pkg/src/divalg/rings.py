"""Exact integer arithmetic for (multi)fusion rings and division-algebra classifiers.

A fusion ring is stored as its structure tensor ``fusion[i][j][k]``, the
multiplicity of basis object ``k`` inside ``X_i (x) X_j``, together with the
unit vector and the dual involution.  Objects are identified with their
multiplicity vectors over the basis, so isomorphism is vector equality.
All verdict-bearing arithmetic is exact integer arithmetic; the only
floating-point operation in this module is the diagnostic Perron eigenvalue.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from .errors import PowerIterationError, StructuralError, ZeroObjectError

__all__ = [
    "FusionRing",
    "Violation",
    "ValidationReport",
    "ClassificationReport",
    "validate_ring",
    "tensor",
    "length",
    "is_simple",
    "dual_object",
    "is_left_invertible",
    "is_right_invertible",
    "fp_dimension",
    "classify_internal_end",
]

ALGEBRA_FORMS = ("XtensorXdual", "dualXtensorX", "internal_end_of_module")


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def _as_int_array(data, shape_name: str) -> np.ndarray:
    try:
        arr = np.asarray(data, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise StructuralError(f"{shape_name} is not an integer array: {exc}") from None
    if arr.size and arr.min() < 0:
        raise StructuralError(f"{shape_name} has negative entries")
    return arr


@dataclass(frozen=True)
class FusionRing:
    """Skeleton of a (multi)fusion category over a finite simple-object basis."""

    labels: tuple[str, ...]
    unit: np.ndarray
    dual: tuple[int, ...]
    fusion: np.ndarray

    def __post_init__(self):
        labels = tuple(str(s) for s in self.labels)
        rank = len(labels)
        if rank == 0:
            raise StructuralError("ring must have positive rank")
        if len(set(labels)) != rank:
            raise StructuralError("labels must be distinct")
        unit = _as_int_array(self.unit, "unit")
        fusion = _as_int_array(self.fusion, "fusion")
        dual = tuple(int(d) for d in self.dual)
        if unit.shape != (rank,):
            raise StructuralError(f"unit has shape {unit.shape}, expected ({rank},)")
        if fusion.shape != (rank, rank, rank):
            raise StructuralError(
                f"fusion tensor has shape {fusion.shape}, expected ({rank}, {rank}, {rank})"
            )
        if sorted(dual) != list(range(rank)):
            raise StructuralError("dual is not a permutation of the basis")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "unit", _freeze(unit))
        object.__setattr__(self, "dual", dual)
        object.__setattr__(self, "fusion", _freeze(fusion))

    @property
    def rank(self) -> int:
        return len(self.labels)

    def basis(self, i: int) -> np.ndarray:
        vec = np.zeros(self.rank, dtype=np.int64)
        vec[i] = 1
        return vec

    def vector(self, data) -> np.ndarray:
        """Coerce `data` (label, index sequence, or vector) to a multiplicity vector."""
        if isinstance(data, str):
            if data not in self.labels:
                raise StructuralError(f"unknown object label {data!r}")
            return self.basis(self.labels.index(data))
        vec = _as_int_array(data, "object vector")
        if vec.shape != (self.rank,):
            raise StructuralError(
                f"object vector has length {vec.shape}, expected ({self.rank},)"
            )
        return vec

    def describe(self, vec: np.ndarray) -> str:
        """Human-readable name of a multiplicity vector, e.g. '1 ⊔ tau'."""
        parts = []
        for i, mult in enumerate(vec):
            m = int(mult)
            if m == 1:
                parts.append(self.labels[i])
            elif m > 1:
                parts.append(f"{m}·{self.labels[i]}")
        return " ⊔ ".join(parts) if parts else "0"

    def to_payload(self) -> dict:
        return {
            "labels": list(self.labels),
            "unit": [int(v) for v in self.unit],
            "dual": list(self.dual),
            "fusion": self.fusion.tolist(),
        }

    @classmethod
    def from_payload(cls, payload: dict) -> "FusionRing":
        if not isinstance(payload, dict):
            raise StructuralError("ring data must be a JSON object")
        missing = {"labels", "unit", "dual", "fusion"} - set(payload)
        if missing:
            raise StructuralError(f"ring data missing fields: {sorted(missing)}")
        return cls(
            labels=tuple(payload["labels"]),
            unit=payload["unit"],
            dual=tuple(payload["dual"]),
            fusion=payload["fusion"],
        )


@dataclass(frozen=True)
class Violation:
    axiom: str
    index: tuple[int, ...]
    lhs: int
    rhs: int


@dataclass(frozen=True)
class ValidationReport:
    passed: bool
    violations: tuple[Violation, ...]

    @classmethod
    def from_violations(cls, violations: Iterable[Violation]) -> "ValidationReport":
        vs = tuple(violations)
        return cls(passed=not vs, violations=vs)

    def to_payload(self) -> dict:
        return {
            "passed": self.passed,
            "violations": [
                {"axiom": v.axiom, "index": list(v.index), "lhs": v.lhs, "rhs": v.rhs}
                for v in self.violations
            ],
        }


@dataclass(frozen=True)
class ClassificationReport:
    """Division-algebra verdicts for an internal End algebra.

    The left and right flags are carried separately even though the direct
    classifiers produce equal values for both sides.
    """

    object_vector: tuple[int, ...]
    algebra_form: str
    simplistic_left: bool
    simplistic_right: bool
    essential_left: bool
    essential_right: bool
    algebra_vector: Optional[tuple[int, ...]] = None
    inverse_witness: Optional[tuple[int, ...]] = None
    slot_witnesses: tuple[tuple[int, int], ...] = field(default=())
    unreachable_targets: tuple[tuple[int, ...], ...] = field(default=())

    @property
    def simplistic(self) -> bool:
        return self.simplistic_left and self.simplistic_right

    @property
    def essential(self) -> bool:
        return self.essential_left and self.essential_right

    def to_payload(self) -> dict:
        return {
            "object": list(self.object_vector),
            "algebra": None if self.algebra_vector is None else list(self.algebra_vector),
            "algebra_form": self.algebra_form,
            "simplistic": self.simplistic,
            "simplistic_left": self.simplistic_left,
            "simplistic_right": self.simplistic_right,
            "essential": self.essential,
            "essential_left": self.essential_left,
            "essential_right": self.essential_right,
            "witness": None if self.inverse_witness is None else list(self.inverse_witness),
            "slot_witnesses": [list(p) for p in self.slot_witnesses],
            "unreachable": [list(t) for t in self.unreachable_targets],
        }


def _check_vector(ring: FusionRing, x) -> np.ndarray:
    vec = _as_int_array(x, "object vector")
    if vec.shape != (ring.rank,):
        raise StructuralError(
            f"object vector has shape {vec.shape}, expected ({ring.rank},)"
        )
    return vec


def _require_nonzero(vec: np.ndarray) -> np.ndarray:
    if not vec.any():
        raise ZeroObjectError("the zero object is excluded here")
    return vec


def validate_ring(ring: FusionRing) -> ValidationReport:
    """Check the five axiom families and itemize every violation."""
    N = ring.fusion
    unit = ring.unit
    dual = list(ring.dual)
    r = ring.rank
    eye = np.eye(r, dtype=np.int64)
    violations: list[Violation] = []

    def record(axiom: str, lhs: np.ndarray, rhs: np.ndarray):
        for idx in np.argwhere(lhs != rhs):
            key = tuple(int(v) for v in idx)
            violations.append(Violation(axiom, key, int(lhs[tuple(idx)]), int(rhs[tuple(idx)])))

    record("unit_left", np.einsum("i,ijk->jk", unit, N), eye)
    record("unit_right", np.einsum("i,jik->jk", unit, N), eye)
    record(
        "associativity",
        np.einsum("ijm,mkl->ijkl", N, N),
        np.einsum("jkm,iml->ijkl", N, N),
    )
    dual_target = np.zeros((r, r), dtype=np.int64)
    for i in range(r):
        dual_target[i, dual[i]] = 1
    record("duality_pairing", np.einsum("ijk,k->ij", N, unit), dual_target)
    for i in range(r):
        if dual[dual[i]] != i:
            violations.append(Violation("duality_involution", (i,), dual[dual[i]], i))
    support = {i for i in range(r) if unit[i]}
    if {dual[i] for i in support} != support:
        violations.append(Violation("duality_unit_support", (), 0, 1))
    record("frobenius_left", N, N[dual, :, :].transpose(0, 2, 1))
    record("frobenius_right", N, N[:, dual, :].transpose(2, 1, 0))
    for i in range(r):
        if not N[i].any():
            violations.append(Violation("no_zero_fusion_matrix", (i,), 0, 1))
    return ValidationReport.from_violations(violations)


def tensor(ring: FusionRing, x, y) -> np.ndarray:
    """Bilinear extension of the fusion rules: (x (x) y)_k = sum x_i y_j N_ijk."""
    xv = _check_vector(ring, x)
    yv = _check_vector(ring, y)
    return np.einsum("i,j,ijk->k", xv, yv, ring.fusion)


def length(x) -> int:
    vec = _as_int_array(x, "object vector")
    return int(vec.sum())


def is_simple(ring: FusionRing, x) -> bool:
    vec = _require_nonzero(_check_vector(ring, x))
    return length(vec) == 1


def dual_object(ring: FusionRing, x) -> np.ndarray:
    vec = _check_vector(ring, x)
    return vec[list(ring.dual)]


def _action_matrix(ring: FusionRing, x: np.ndarray, side: str) -> np.ndarray:
    # column i = candidate basis object e_i tensored against x on the given side
    if side == "left":
        return np.einsum("ijk,j->ki", ring.fusion, x)
    return np.einsum("jik,j->ki", ring.fusion, x)


def _solve_inverse(ring: FusionRing, x: np.ndarray, side: str) -> Optional[np.ndarray]:
    """Find nonnegative integer y with y(x)x = unit (side='left') or x(x)y = unit.

    With a simple unit the length inequality forces both x and any witness to
    be simple, so only basis candidates are tried.  With a decomposable unit
    the inequality is unavailable (basis products may vanish) and witnesses
    can be non-simple, e.g. the unit of a matrix-unit ring is its own inverse;
    there the search enumerates the finitely many candidates allowed by the
    componentwise bound y_i * R_ki <= unit_k.
    """
    unit = ring.unit
    if int(unit.sum()) == 1:
        if int(x.sum()) > 1:
            return None
        matrix = _action_matrix(ring, x, side)
        for i in range(ring.rank):
            if np.array_equal(matrix[:, i], unit):
                return ring.basis(i)
        return None

    matrix = _action_matrix(ring, x, side)
    bounds: list[int] = []
    columns: list[int] = []
    for i in range(ring.rank):
        col = matrix[:, i]
        if not col.any():
            continue
        cap = int(min(unit[k] // col[k] for k in range(ring.rank) if col[k]))
        if cap > 0:
            columns.append(i)
            bounds.append(cap)
    total = 1
    for b in bounds:
        total *= b + 1
        if total > 1 << 20:
            raise StructuralError("inverse search space too large for this ring")
    candidates = sorted(
        itertools.product(*(range(b + 1) for b in bounds)),
        key=lambda c: (sum(c), c),
    )
    for coeffs in candidates:
        if not any(coeffs):
            continue
        y = np.zeros(ring.rank, dtype=np.int64)
        for i, c in zip(columns, coeffs):
            y[i] = c
        if np.array_equal(matrix @ y, unit):
            return y
    return None


def is_left_invertible(ring: FusionRing, x) -> Optional[np.ndarray]:
    """Witness y with y (x) x = unit, or None if no inverse exists."""
    vec = _require_nonzero(_check_vector(ring, x))
    return _solve_inverse(ring, vec, "left")


def is_right_invertible(ring: FusionRing, x) -> Optional[np.ndarray]:
    """Witness y with x (x) y = unit, or None if no inverse exists."""
    vec = _require_nonzero(_check_vector(ring, x))
    return _solve_inverse(ring, vec, "right")


def _strong_components(P: np.ndarray) -> list[list[int]]:
    """Strongly connected components of the support digraph of P."""
    n = P.shape[0]
    closure = ((P > 0) | np.eye(n, dtype=bool)).astype(np.int64)
    for _ in range(max(1, n.bit_length())):
        closure = np.clip(closure @ closure, 0, 1)
    groups: dict[int, list[int]] = {}
    assigned: list[int] = []
    for i in range(n):
        for root in assigned:
            if closure[root, i] and closure[i, root]:
                groups[root].append(i)
                break
        else:
            groups[i] = [i]
            assigned.append(i)
    return list(groups.values())


def fp_dimension(ring: FusionRing, x, tol: float = 1e-9, max_iter: int = 10_000) -> float:
    """Perron eigenvalue of the multiplication matrix of x, by power iteration.

    Diagnostic output only; verdicts never depend on it.  The matrix of a
    multifusion object can be reducible with nilpotent coupling between its
    diagonal blocks, where plain iteration stalls, so the Perron root is
    taken as the maximum over the strongly connected components; on each
    component the iteration runs on the primitive matrix P + I and converges
    geometrically.
    """
    xv = _check_vector(ring, x)
    P = np.einsum("i,ijk->kj", xv, ring.fusion)
    best = 0.0
    for component in _strong_components(P):
        block = P[np.ix_(component, component)].astype(float)
        if len(component) == 1 and block[0, 0] == 0:
            continue
        Q = block + np.eye(len(component))
        v = np.ones(len(component))
        for _ in range(max_iter):
            w = Q @ v
            lam = float(v @ w) / float(v @ v)
            v = w / w.max()
            if np.abs(Q @ v - lam * v).max() <= tol * max(1.0, abs(lam)):
                best = max(best, lam - 1.0)
                break
        else:
            raise PowerIterationError(
                f"no convergence to {tol} within {max_iter} iterations"
            )
    return best


def classify_internal_end(ring: FusionRing, x, side: str = "left") -> ClassificationReport:
    """Classify the endomorphism algebra of x built from x and its dual.

    side='left' classifies x (x) x*, whose essential verdict is left
    invertibility of x; side='right' classifies *x (x) x and right
    invertibility.  Both simplistic flags reduce to simplicity of x.
    """
    if side not in ("left", "right"):
        raise StructuralError(f"side must be 'left' or 'right', got {side!r}")
    vec = _require_nonzero(_check_vector(ring, x))
    simple = length(vec) == 1
    if side == "left":
        algebra = tensor(ring, vec, dual_object(ring, vec))
        witness = _solve_inverse(ring, vec, "left")
        form = "XtensorXdual"
    else:
        algebra = tensor(ring, dual_object(ring, vec), vec)
        witness = _solve_inverse(ring, vec, "right")
        form = "dualXtensorX"
    essential = witness is not None
    unreachable: tuple[tuple[int, ...], ...] = ()
    if not essential:
        # no inverse: the unit object lies outside the image of tensoring with x
        unreachable = (tuple(int(v) for v in ring.unit),)
    return ClassificationReport(
        object_vector=tuple(int(v) for v in vec),
        algebra_form=form,
        simplistic_left=simple,
        simplistic_right=simple,
        essential_left=essential,
        essential_right=essential,
        algebra_vector=tuple(int(v) for v in algebra),
        inverse_witness=None if witness is None else tuple(int(v) for v in witness),
        unreachable_targets=unreachable,
    )
