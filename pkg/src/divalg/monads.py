"""Pointwise-computable monads on monoidal categories of finite sets.

Objects are finite ordinals ``0..n-1`` and morphisms are tuples of image
positions, so both ambient monoidal structures are strict: disjoint union
concatenates blocks (right block offset by the left size) and cartesian
product uses row-major indexing.  Every monad supplies its object map,
morphism map, multiplication and unit as explicit tables, plus an optional
left strength table.  All verdicts quantify over carriers up to a stated
bound; table and candidate sizes are held under a configurable budget.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import (
    BudgetExceededError,
    DegenerateMonadError,
    StructuralError,
)
from .rings import ValidationReport, Violation

__all__ = [
    "DisjointUnion",
    "CartesianProduct",
    "FiniteMonad",
    "CoproductException",
    "FreeVectorF2",
    "maybe_monad",
    "identity_monad",
    "builtin_monad",
    "EmAlgebra",
    "AdjunctionVerdict",
    "StrengthIsoVerdict",
    "MonoidAlgebra",
    "AlgebraModule",
    "validate_monad",
    "enumerate_em_algebras",
    "free_algebra",
    "em_isomorphic",
    "check_adjunction_trivial",
    "check_strength",
    "is_very_strong",
    "algebra_from_strength",
    "enumerate_modules",
    "free_module",
    "module_isomorphic",
    "check_mon_ess_agreement",
    "check_comparison_fully_faithful",
]

DEFAULT_BUDGET = 2_000_000

BOUNDED_NOTE = "verdict quantifies over algebras with carrier size <= bound only"


def _budget(value: Optional[int]) -> int:
    if value is not None:
        return int(value)
    return int(os.environ.get("DIVALG_BUDGET", str(DEFAULT_BUDGET)))


def _guard(size: int, budget: int, what: str):
    if size > budget:
        raise BudgetExceededError(f"{what} needs {size} entries, budget is {budget}")


def identity_table(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def compose(g, f) -> tuple[int, ...]:
    """Table of g after f."""
    return tuple(g[v] for v in f)


class DisjointUnion:
    """(FinSet, disjoint union, empty set) on ordinals via block concatenation."""

    kind = "disjoint_union"
    unit_size = 0

    @staticmethod
    def tensor(a: int, b: int) -> int:
        return a + b

    @staticmethod
    def tensor_mor(f, g, a_dst: int, b_dst: int) -> tuple[int, ...]:
        return tuple(f) + tuple(a_dst + v for v in g)


class CartesianProduct:
    """(FinSet, cartesian product, singleton) on ordinals via row-major pairs."""

    kind = "cartesian_product"
    unit_size = 1

    @staticmethod
    def tensor(a: int, b: int) -> int:
        return a * b

    @staticmethod
    def tensor_mor(f, g, a_dst: int, b_dst: int) -> tuple[int, ...]:
        b_src = len(g)
        out = []
        for x in range(len(f)):
            base = f[x] * b_dst
            for y in range(b_src):
                out.append(base + g[y])
        return tuple(out)


class FiniteMonad:
    """Base class: a monad on finite ordinals given by explicit tables."""

    name: str
    ambient = DisjointUnion
    has_strength = False

    def t_size(self, n: int) -> int:
        raise NotImplementedError

    def t_mor(self, f, dst: int) -> tuple[int, ...]:
        raise NotImplementedError

    def eta(self, n: int) -> tuple[int, ...]:
        raise NotImplementedError

    def mu(self, n: int) -> tuple[int, ...]:
        raise NotImplementedError

    def theta(self, x: int, y: int) -> tuple[int, ...]:
        raise StructuralError(f"monad {self.name} provides no strength")

    def em_structure_candidates(self, carrier: int, budget: int) -> Iterator[tuple[int, ...]]:
        """All structure tables compatible with the unit axiom."""
        tsize = self.t_size(carrier)
        if carrier == 0:
            if tsize == 0:
                yield ()
            return
        eta = self.eta(carrier)
        template: list[int] = [-1] * tsize
        for x in range(carrier):
            if template[eta[x]] not in (-1, x):
                return
            template[eta[x]] = x
        free = [p for p in range(tsize) if template[p] == -1]
        count = carrier ** len(free)
        _guard(count, budget, f"structure-map enumeration at carrier {carrier}")
        for values in itertools.product(range(carrier), repeat=len(free)):
            table = template.copy()
            for p, v in zip(free, values):
                table[p] = v
            yield tuple(table)


class CoproductException(FiniteMonad):
    """T(X) = X + S for a fixed set of marks S, on (FinSet, disjoint union).

    Multiplication folds the two copies of S together and the unit is the
    inclusion.  marks=1 is the maybe monad, marks=0 the identity monad.
    """

    ambient = DisjointUnion
    has_strength = True

    def __init__(self, marks: int, name: Optional[str] = None):
        if marks < 0:
            raise StructuralError("marks must be nonnegative")
        self.marks = marks
        self.name = name if name is not None else f"exception({marks})"

    def t_size(self, n: int) -> int:
        return n + self.marks

    def t_mor(self, f, dst: int) -> tuple[int, ...]:
        return tuple(f) + tuple(dst + j for j in range(self.marks))

    def eta(self, n: int) -> tuple[int, ...]:
        return tuple(range(n))

    def mu(self, n: int) -> tuple[int, ...]:
        s = self.marks
        return tuple(range(n + s)) + tuple(n + j for j in range(s))

    def theta(self, x: int, y: int) -> tuple[int, ...]:
        # X + (Y + S) and (X + Y) + S coincide position by position
        return identity_table(x + y + self.marks)


class FreeVectorF2(FiniteMonad):
    """T(X) = all maps X -> {0,1}, on (FinSet, cartesian product).

    Elements of T(X) are bitmasks over X; the unit sends x to the delta mask
    and the multiplication XOR-folds a set of masks.  The canonical strength
    shifts a mask into the block of its first coordinate.
    """

    ambient = CartesianProduct
    has_strength = True
    name = "freevec2"

    def t_size(self, n: int) -> int:
        return 1 << n

    def t_mor(self, f, dst: int) -> tuple[int, ...]:
        src = len(f)
        out = [0] * (1 << src)
        for mask in range(1, 1 << src):
            low_bit = mask & -mask
            out[mask] = out[mask ^ low_bit] ^ (1 << f[low_bit.bit_length() - 1])
        return tuple(out)

    def eta(self, n: int) -> tuple[int, ...]:
        return tuple(1 << x for x in range(n))

    def mu(self, n: int) -> tuple[int, ...]:
        tsize = 1 << n
        out = [0] * (1 << tsize)
        for mask in range(1, 1 << tsize):
            low_bit = mask & -mask
            out[mask] = out[mask ^ low_bit] ^ (low_bit.bit_length() - 1)
        return tuple(out)

    def theta(self, x: int, y: int) -> tuple[int, ...]:
        ty = 1 << y
        out = []
        for a in range(x):
            for v in range(ty):
                out.append(v << (a * y))
        return tuple(out)

    def em_structure_candidates(self, carrier: int, budget: int) -> Iterator[tuple[int, ...]]:
        """Structure tables via candidate addition laws.

        The second algebra axiom forces a structure map to be the sum-over-F2
        of its singleton values, so tables are generated from a zero element
        plus a symmetric pairwise sum table.  Candidates that fail the group
        laws are pruned here; survivors still get the full axiom check by the
        enumerator.  Small carriers fall back to the naive generator.
        """
        tsize = 1 << carrier
        naive = carrier ** (tsize - carrier) if carrier else 1
        if carrier == 0 or naive <= 300_000:
            yield from super().em_structure_candidates(carrier, budget)
            return
        pairs = list(itertools.combinations(range(carrier), 2))
        count = carrier ** (len(pairs) + 1)
        _guard(count, budget, f"addition-law enumeration at carrier {carrier}")
        for zero in range(carrier):
            for values in itertools.product(range(carrier), repeat=len(pairs)):
                add = [[zero] * carrier for _ in range(carrier)]
                for (a, b), v in zip(pairs, values):
                    add[a][b] = v
                    add[b][a] = v
                if any(add[zero][x] != x for x in range(carrier)):
                    continue
                if any(
                    add[add[a][b]][c] != add[a][add[b][c]]
                    for a in range(carrier)
                    for b in range(carrier)
                    for c in range(carrier)
                ):
                    continue
                table = [zero] * tsize
                for mask in range(1, tsize):
                    low_bit = mask & -mask
                    low = low_bit.bit_length() - 1
                    rest = mask ^ low_bit
                    table[mask] = low if rest == 0 else add[table[rest]][low]
                yield tuple(table)


def maybe_monad() -> CoproductException:
    return CoproductException(1, name="maybe")


def identity_monad() -> CoproductException:
    return CoproductException(0, name="identity")


def builtin_monad(name: str, marks: Optional[int] = None) -> FiniteMonad:
    if name == "maybe":
        return maybe_monad()
    if name == "identity":
        return identity_monad()
    if name == "exception":
        if marks is None:
            raise StructuralError("exception monad needs a number of marks")
        return CoproductException(marks)
    if name == "freevec2":
        return FreeVectorF2()
    raise StructuralError(f"unknown builtin monad {name!r}")


def validate_monad(monad: FiniteMonad, max_size: int, budget: Optional[int] = None) -> ValidationReport:
    """Pointwise monad laws on every carrier up to max_size.

    A law at a given carrier is only evaluated when its tables fit the
    budget; for the free-vector monad the associativity law involves T^3 and
    is therefore checked on small carriers only.
    """
    budget = _budget(budget)
    violations: list[Violation] = []
    for n in range(max_size + 1):
        tn = monad.t_size(n)
        if monad.t_size(tn) > budget:
            continue
        mu_n = monad.mu(n)
        unit_left = compose(mu_n, monad.t_mor(monad.eta(n), tn))
        unit_right = compose(mu_n, monad.eta(tn))
        ident = identity_table(tn)
        for p in range(tn):
            if unit_left[p] != ident[p]:
                violations.append(Violation("monad_unit_left", (n, p), unit_left[p], ident[p]))
            if unit_right[p] != ident[p]:
                violations.append(Violation("monad_unit_right", (n, p), unit_right[p], ident[p]))
        ttn = monad.t_size(tn)
        if monad.t_size(ttn) > budget:
            continue
        lhs = compose(mu_n, monad.t_mor(mu_n, tn))
        rhs = compose(mu_n, monad.mu(tn))
        for p in range(len(lhs)):
            if lhs[p] != rhs[p]:
                violations.append(Violation("monad_associativity", (n, p), lhs[p], rhs[p]))
    return ValidationReport.from_violations(violations)


@dataclass(frozen=True)
class EmAlgebra:
    """An Eilenberg-Moore algebra: carrier size plus structure table T(Y) -> Y."""

    monad_name: str
    carrier: int
    structure: tuple[int, ...]

    def to_payload(self) -> dict:
        return {
            "carrier": self.carrier,
            "structure": list(self.structure),
        }


def _transform_structure(monad: FiniteMonad, carrier: int, structure, perm) -> tuple[int, ...]:
    t_perm = monad.t_mor(perm, carrier)
    out = [0] * len(structure)
    for p, val in enumerate(structure):
        out[t_perm[p]] = perm[val]
    return tuple(out)


def _canonical_structure(monad: FiniteMonad, carrier: int, structure) -> tuple[int, ...]:
    return min(
        _transform_structure(monad, carrier, structure, perm)
        for perm in itertools.permutations(range(carrier))
    ) if carrier else tuple(structure)


def enumerate_em_algebras(
    monad: FiniteMonad, max_carrier: int, budget: Optional[int] = None
) -> list[EmAlgebra]:
    """All structure maps satisfying both algebra axioms, one per isoclass.

    Deduplication is up to carrier relabeling; the stored representative is
    the lexicographically minimal structure table over all relabelings.
    """
    budget = _budget(budget)
    found: list[EmAlgebra] = []
    seen: set[tuple[int, tuple[int, ...]]] = set()
    for carrier in range(max_carrier + 1):
        tsize = monad.t_size(carrier)
        ttsize = monad.t_size(tsize)
        _guard(ttsize, budget, f"algebra axiom tables at carrier {carrier}")
        mu = monad.mu(carrier)
        eta = monad.eta(carrier)
        for structure in monad.em_structure_candidates(carrier, budget):
            if any(structure[eta[x]] != x for x in range(carrier)):
                continue
            t_structure = monad.t_mor(structure, carrier)
            if any(structure[t_structure[p]] != structure[mu[p]] for p in range(ttsize)):
                continue
            canon = _canonical_structure(monad, carrier, structure)
            key = (carrier, canon)
            if key not in seen:
                seen.add(key)
                found.append(EmAlgebra(monad.name, carrier, canon))
    found.sort(key=lambda a: (a.carrier, a.structure))
    return found


def free_algebra(monad: FiniteMonad, n: int) -> EmAlgebra:
    """Free algebra on an n-element set: carrier T(n), structure map mu."""
    return EmAlgebra(monad.name, monad.t_size(n), tuple(monad.mu(n)))


def em_isomorphic(monad: FiniteMonad, a: EmAlgebra, b: EmAlgebra) -> Optional[tuple[int, ...]]:
    """A carrier bijection commuting with the structure maps, if one exists."""
    if a.carrier != b.carrier:
        return None
    for perm in itertools.permutations(range(a.carrier)):
        t_perm = monad.t_mor(perm, a.carrier)
        if all(perm[a.structure[p]] == b.structure[t_perm[p]] for p in range(len(t_perm))):
            return perm
    return None


@dataclass(frozen=True)
class AdjunctionVerdict:
    """Bounded adjunction-triviality verdict for a monad.

    ``applicable`` records whether at least two algebra isoclasses exist
    within the bound; without that the notion degenerates just like division
    algebras degenerate at the zero algebra, and ``trivial_up_to_bound``
    is left undecided.
    """

    monad_name: str
    bound: int
    applicable: bool
    isoclass_count: int
    trivial_up_to_bound: Optional[bool]
    counterexample: Optional[EmAlgebra]
    free_witnesses: tuple[tuple[EmAlgebra, int], ...]
    note: str = BOUNDED_NOTE

    def to_payload(self) -> dict:
        return {
            "monad": self.monad_name,
            "bound": self.bound,
            "applicable": self.applicable,
            "isoclass_count": self.isoclass_count,
            "trivial_up_to_bound": self.trivial_up_to_bound,
            "counterexample": None if self.counterexample is None else self.counterexample.to_payload(),
            "free_witnesses": [
                {"algebra": alg.to_payload(), "generator_size": size}
                for alg, size in self.free_witnesses
            ],
            "note": self.note,
        }


def _generator_sizes(size_fn, target: int, cap: int) -> list[int]:
    out = []
    n = 0
    while n <= cap:
        size = size_fn(n)
        if size > target:
            break
        if size == target:
            out.append(n)
        n += 1
    return out


STAR_PROBE_EXTRA = 2


def check_adjunction_trivial(
    monad: FiniteMonad, max_carrier: int, budget: Optional[int] = None
) -> AdjunctionVerdict:
    """Is every algebra with carrier <= max_carrier isomorphic to a free one?

    Since the comparison embedding of free algebras is fully faithful,
    equivalence of the two canonical adjunction categories reduces to every
    algebra being isomorphic to a free algebra.  Applicability needs two
    algebra isoclasses; they are probed slightly beyond the bound so that a
    small bound on a non-degenerate monad does not render the verdict
    inapplicable.
    """
    budget = _budget(budget)
    algebras = enumerate_em_algebras(monad, max_carrier, budget)
    applicable = len(algebras) >= 2
    if not applicable:
        try:
            probe = enumerate_em_algebras(monad, max_carrier + STAR_PROBE_EXTRA, budget)
        except BudgetExceededError:
            probe = algebras
        applicable = len(probe) >= 2
    witnesses: list[tuple[EmAlgebra, int]] = []
    counterexample: Optional[EmAlgebra] = None
    for alg in algebras:
        matched: Optional[int] = None
        for n in _generator_sizes(monad.t_size, alg.carrier, alg.carrier + 1):
            if em_isomorphic(monad, alg, free_algebra(monad, n)) is not None:
                matched = n
                break
        if matched is None:
            if counterexample is None:
                counterexample = alg
        else:
            witnesses.append((alg, matched))
    trivial: Optional[bool] = None
    if applicable:
        trivial = counterexample is None
    return AdjunctionVerdict(
        monad_name=monad.name,
        bound=max_carrier,
        applicable=applicable,
        isoclass_count=len(algebras),
        trivial_up_to_bound=trivial,
        counterexample=counterexample,
        free_witnesses=tuple(witnesses),
    )


def check_strength(monad: FiniteMonad, max_size: int, budget: Optional[int] = None) -> ValidationReport:
    """Pointwise check of the four left-strength axioms on sizes <= max_size."""
    if not monad.has_strength:
        raise StructuralError(f"monad {monad.name} provides no strength")
    budget = _budget(budget)
    amb = monad.ambient
    violations: list[Violation] = []
    sizes = range(max_size + 1)

    for x in sizes:
        # theta at the unit object must be the identity on T(x)
        table = monad.theta(amb.unit_size, x)
        for p, val in enumerate(table):
            if val != p:
                violations.append(Violation("strength_ii", (x, p), val, p))

    for x in sizes:
        for y in sizes:
            ty = monad.t_size(y)
            txy = monad.t_size(amb.tensor(x, y))

            lhs = compose(monad.theta(x, y), amb.tensor_mor(identity_table(x), monad.eta(y), x, ty))
            rhs = monad.eta(amb.tensor(x, y))
            for p in range(len(lhs)):
                if lhs[p] != rhs[p]:
                    violations.append(Violation("strength_iv", (x, y, p), lhs[p], rhs[p]))

            _guard(monad.t_size(amb.tensor(x, ty)), budget, f"strength tables at sizes ({x}, {y})")
            _guard(monad.t_size(txy), budget, f"strength tables at sizes ({x}, {y})")
            lhs = compose(monad.theta(x, y), amb.tensor_mor(identity_table(x), monad.mu(y), x, ty))
            rhs = compose(
                monad.mu(amb.tensor(x, y)),
                compose(monad.t_mor(monad.theta(x, y), txy), monad.theta(x, ty)),
            )
            for p in range(len(lhs)):
                if lhs[p] != rhs[p]:
                    violations.append(Violation("strength_iii", (x, y, p), lhs[p], rhs[p]))

    for x in sizes:
        for y in sizes:
            for z in sizes:
                tz = monad.t_size(z)
                tyz = monad.t_size(amb.tensor(y, z))
                lhs = compose(
                    monad.theta(x, amb.tensor(y, z)),
                    amb.tensor_mor(identity_table(x), monad.theta(y, z), x, tyz),
                )
                rhs = monad.theta(amb.tensor(x, y), z)
                for p in range(len(lhs)):
                    if lhs[p] != rhs[p]:
                        violations.append(Violation("strength_i", (x, y, z, p), lhs[p], rhs[p]))

    return ValidationReport.from_violations(violations)


@dataclass(frozen=True)
class StrengthIsoVerdict:
    very_strong: bool
    x_size: Optional[int] = None
    y_size: Optional[int] = None
    domain: Optional[int] = None
    codomain: Optional[int] = None
    reason: Optional[str] = None

    def to_payload(self) -> dict:
        return {
            "very_strong": self.very_strong,
            "witness": None
            if self.very_strong
            else {
                "x_size": self.x_size,
                "y_size": self.y_size,
                "domain": self.domain,
                "codomain": self.codomain,
                "reason": self.reason,
            },
        }


def is_very_strong(monad: FiniteMonad, max_size: int) -> StrengthIsoVerdict:
    """True when every strength component on sizes <= max_size is a bijection.

    On failure the witness is a cardinality mismatch between X (x) T(Y) and
    T(X (x) Y), or a same-size component that is not bijective.
    """
    if not monad.has_strength:
        raise StructuralError(f"monad {monad.name} provides no strength")
    amb = monad.ambient
    for x in range(max_size + 1):
        for y in range(max_size + 1):
            domain = amb.tensor(x, monad.t_size(y))
            codomain = monad.t_size(amb.tensor(x, y))
            if domain != codomain:
                return StrengthIsoVerdict(False, x, y, domain, codomain, "cardinality")
            table = monad.theta(x, y)
            if len(set(table)) != codomain:
                return StrengthIsoVerdict(False, x, y, domain, codomain, "not_bijective")
    return StrengthIsoVerdict(True)


@dataclass(frozen=True)
class MonoidAlgebra:
    """An algebra object in the ambient monoidal category, as explicit tables."""

    name: str
    ambient_kind: str
    carrier: int
    mult: tuple[int, ...]
    unit: tuple[int, ...]

    def to_payload(self) -> dict:
        return {
            "name": self.name,
            "ambient": self.ambient_kind,
            "carrier": self.carrier,
            "mult": list(self.mult),
            "unit": list(self.unit),
        }


def _ambient_of(algebra: MonoidAlgebra):
    return DisjointUnion if algebra.ambient_kind == DisjointUnion.kind else CartesianProduct


def algebra_from_strength(monad: FiniteMonad) -> MonoidAlgebra:
    """The algebra structure on T(unit) induced by the strength.

    Multiplication is mu at the unit object after the strength component at
    (T(unit), unit); the unit map is eta at the unit object.  Associativity
    and unitality are verified pointwise before returning.
    """
    if not monad.has_strength:
        raise StructuralError(f"monad {monad.name} provides no strength")
    amb = monad.ambient
    one = amb.unit_size
    carrier = monad.t_size(one)
    mult = compose(monad.mu(one), monad.theta(carrier, one))
    unit = tuple(monad.eta(one))
    ident = identity_table(carrier)

    left = compose(mult, amb.tensor_mor(mult, ident, carrier, carrier))
    right = compose(mult, amb.tensor_mor(ident, mult, carrier, carrier))
    if left != right:
        raise StructuralError(f"strength of {monad.name} induces a non-associative product")
    unit_left = compose(mult, amb.tensor_mor(unit, ident, carrier, carrier))
    unit_right = compose(mult, amb.tensor_mor(ident, unit, carrier, carrier))
    if unit_left != ident or unit_right != ident:
        raise StructuralError(f"strength of {monad.name} induces a non-unital product")
    return MonoidAlgebra(
        name=f"T(1) of {monad.name}",
        ambient_kind=amb.kind,
        carrier=carrier,
        mult=mult,
        unit=unit,
    )


@dataclass(frozen=True)
class AlgebraModule:
    """A right module over a MonoidAlgebra: carrier plus action table."""

    carrier: int
    action: tuple[int, ...]

    def to_payload(self) -> dict:
        return {"carrier": self.carrier, "action": list(self.action)}


def _module_axioms_hold(algebra: MonoidAlgebra, carrier: int, action) -> bool:
    amb = _ambient_of(algebra)
    a = algebra.carrier
    ident_y = identity_table(carrier)
    ident_a = identity_table(a)
    unit_inc = amb.tensor_mor(ident_y, algebra.unit, carrier, a)
    if compose(action, unit_inc) != ident_y:
        return False
    lhs = compose(action, amb.tensor_mor(action, ident_a, carrier, a))
    rhs = compose(action, amb.tensor_mor(ident_y, algebra.mult, carrier, a))
    return lhs == rhs


def _transform_action(algebra: MonoidAlgebra, carrier: int, action, perm) -> tuple[int, ...]:
    amb = _ambient_of(algebra)
    moved = amb.tensor_mor(perm, identity_table(algebra.carrier), carrier, algebra.carrier)
    out = [0] * len(action)
    for p, val in enumerate(action):
        out[moved[p]] = perm[val]
    return tuple(out)


def enumerate_modules(
    algebra: MonoidAlgebra, max_carrier: int, budget: Optional[int] = None
) -> list[AlgebraModule]:
    """All right modules over the algebra, one per isoclass, carriers <= bound.

    This is the module-theoretic counterpart of the Eilenberg-Moore
    enumeration but runs entirely through the algebra's own tables, so the
    two routes share no verdict logic.
    """
    budget = _budget(budget)
    amb = _ambient_of(algebra)
    a = algebra.carrier
    found: list[AlgebraModule] = []
    seen: set[tuple[int, tuple[int, ...]]] = set()
    for carrier in range(max_carrier + 1):
        dom = amb.tensor(carrier, a)
        if carrier == 0:
            if dom == 0 and _module_axioms_hold(algebra, 0, ()):
                found.append(AlgebraModule(0, ()))
            continue
        unit_inc = amb.tensor_mor(identity_table(carrier), algebra.unit, carrier, a)
        template: list[int] = [-1] * dom
        consistent = True
        for y in range(carrier):
            pos = unit_inc[y]
            if template[pos] not in (-1, y):
                consistent = False
                break
            template[pos] = y
        if not consistent:
            continue
        free = [p for p in range(dom) if template[p] == -1]
        _guard(carrier ** len(free), budget, f"module enumeration at carrier {carrier}")
        for values in itertools.product(range(carrier), repeat=len(free)):
            action = template.copy()
            for p, v in zip(free, values):
                action[p] = v
            action_t = tuple(action)
            if not _module_axioms_hold(algebra, carrier, action_t):
                continue
            canon = min(
                _transform_action(algebra, carrier, action_t, perm)
                for perm in itertools.permutations(range(carrier))
            )
            key = (carrier, canon)
            if key not in seen:
                seen.add(key)
                found.append(AlgebraModule(carrier, canon))
    found.sort(key=lambda m: (m.carrier, m.action))
    return found


def free_module(algebra: MonoidAlgebra, n: int) -> AlgebraModule:
    """Free right module on an n-element set: carrier n (x) A, action id (x) mult."""
    amb = _ambient_of(algebra)
    carrier = amb.tensor(n, algebra.carrier)
    action = amb.tensor_mor(identity_table(n), algebra.mult, n, algebra.carrier)
    return AlgebraModule(carrier, tuple(action))


def module_isomorphic(
    algebra: MonoidAlgebra, m1: AlgebraModule, m2: AlgebraModule
) -> Optional[tuple[int, ...]]:
    if m1.carrier != m2.carrier:
        return None
    amb = _ambient_of(algebra)
    ident_a = identity_table(algebra.carrier)
    for perm in itertools.permutations(range(m1.carrier)):
        moved = amb.tensor_mor(perm, ident_a, m1.carrier, algebra.carrier)
        if all(perm[m1.action[p]] == m2.action[moved[p]] for p in range(len(moved))):
            return perm
    return None


def check_mon_ess_agreement(
    monad: CoproductException, max_carrier: int, budget: Optional[int] = None
) -> bool:
    """Adjunction-triviality against the independent every-module-is-free check.

    The monadic route enumerates Eilenberg-Moore algebras and matches them to
    free algebras; the essential route builds the algebra T(unit) from the
    strength and enumerates its modules through the algebra tables.  Returns
    True when the two bounded verdicts coincide.
    """
    if not isinstance(monad, CoproductException):
        raise StructuralError("the agreement check is defined for coproduct exception monads")
    budget = _budget(budget)
    verdict = check_adjunction_trivial(monad, max_carrier, budget)
    if not verdict.applicable:
        raise DegenerateMonadError(
            f"{monad.name}: fewer than two algebra isoclasses within bound {max_carrier}"
        )
    algebra = algebra_from_strength(monad)
    modules = enumerate_modules(algebra, max_carrier, budget)
    amb = _ambient_of(algebra)
    essential = True
    for module in modules:
        sizes = _generator_sizes(lambda n: amb.tensor(n, algebra.carrier), module.carrier, module.carrier + 1)
        if not any(
            module_isomorphic(algebra, module, free_module(algebra, n)) is not None for n in sizes
        ):
            essential = False
            break
    return bool(verdict.trivial_up_to_bound) == essential


def check_comparison_fully_faithful(
    monad: FiniteMonad, max_size: int, budget: Optional[int] = None
) -> bool:
    """Hom-sets into T(Y) versus algebra morphisms between free algebras.

    For every pair of sizes, transports each map X -> T(Y) to mu after T(-)
    and checks that this lands bijectively on the algebra morphisms from the
    free algebra on X to the free algebra on Y.
    """
    budget = _budget(budget)
    for x in range(max_size + 1):
        for y in range(max_size + 1):
            tx, ty = monad.t_size(x), monad.t_size(y)
            _guard(ty ** tx, budget, f"morphism enumeration at sizes ({x}, {y})")
            mu_x, mu_y = monad.mu(x), monad.mu(y)
            tty = monad.t_size(ty)

            def is_em_morphism(f: tuple[int, ...]) -> bool:
                return compose(f, mu_x) == compose(mu_y, monad.t_mor(f, ty))

            transported = set()
            for g in itertools.product(range(ty), repeat=x):
                kg = compose(mu_y, monad.t_mor(g, ty))
                if not is_em_morphism(kg):
                    return False
                transported.add(kg)
            if len(transported) != ty ** x:
                return False
            em_count = sum(
                1 for f in itertools.product(range(ty), repeat=tx) if is_em_morphism(f)
            )
            if em_count != len(transported):
                return False
    return True
