import itertools

import pytest

import divalg as d
from divalg import monads as M
from divalg.errors import BudgetExceededError, StructuralError


@pytest.fixture(scope="module")
def maybe():
    return d.maybe_monad()


@pytest.fixture(scope="module")
def identity():
    return d.identity_monad()


@pytest.fixture(scope="module")
def exc2():
    return d.CoproductException(2)


@pytest.fixture(scope="module")
def freevec():
    return d.FreeVectorF2()


# -------------------------------------------------------------- monad laws

def test_monad_laws(maybe, identity, exc2, freevec):
    assert d.validate_monad(maybe, 7).passed
    assert d.validate_monad(identity, 5).passed
    assert d.validate_monad(exc2, 5).passed
    assert d.validate_monad(freevec, 2).passed


def test_broken_multiplication_is_reported():
    class BadFold(d.CoproductException):
        def mu(self, n):
            table = list(super().mu(n))
            if n == 0 and self.marks == 2:
                table[-1] = 0
            return tuple(table)

    report = d.validate_monad(BadFold(2), 2)
    assert not report.passed
    assert any(v.axiom.startswith("monad_") for v in report.violations)


# ------------------------------------------------------------- EM algebras

def test_maybe_algebras_are_pointed_sets(maybe):
    algebras = d.enumerate_em_algebras(maybe, 2)
    assert [(a.carrier, a.structure) for a in algebras] == [(1, (0, 0)), (2, (0, 1, 0))]


def test_identity_algebras_are_plain_sets(identity):
    algebras = d.enumerate_em_algebras(identity, 2)
    assert [(a.carrier, a.structure) for a in algebras] == [(0, ()), (1, (0,)), (2, (0, 1))]


def test_two_mark_exception_smallest_algebra(exc2):
    algebras = d.enumerate_em_algebras(exc2, 1)
    assert [(a.carrier, a.structure) for a in algebras] == [(1, (0, 0, 0))]


def test_freevec_algebras_have_power_of_two_carriers(freevec):
    algebras = d.enumerate_em_algebras(freevec, 3)
    assert [(a.carrier, a.structure) for a in algebras] == [(1, (0, 0)), (2, (0, 0, 1, 1))]


def test_freevec_structured_enumeration_matches_at_carrier_four(freevec):
    algebras = d.enumerate_em_algebras(freevec, 4)
    carriers = [a.carrier for a in algebras]
    assert carriers == [1, 2, 4]
    four = algebras[-1]
    assert d.em_isomorphic(freevec, four, d.free_algebra(freevec, 2)) is not None


def test_freevec_raw_structure_count_at_carrier_four(freevec):
    # labeled count oracle: one Klein law per identity choice, so four in total
    mu = freevec.mu(4)
    eta = freevec.eta(4)
    valid = []
    for structure in freevec.em_structure_candidates(4, M.DEFAULT_BUDGET):
        if any(structure[eta[x]] != x for x in range(4)):
            continue
        t_structure = freevec.t_mor(structure, 4)
        if all(structure[t_structure[p]] == structure[mu[p]] for p in range(len(mu))):
            valid.append(structure)
    assert len(valid) == 4
    assert len(set(valid)) == 4


def test_enumeration_budget(freevec):
    with pytest.raises(BudgetExceededError):
        d.enumerate_em_algebras(freevec, 5)


def test_free_algebras(maybe, identity, freevec):
    assert d.free_algebra(maybe, 0) == d.EmAlgebra("maybe", 1, (0, 0))
    assert d.free_algebra(identity, 3).structure == (0, 1, 2)
    assert d.free_algebra(freevec, 1) == d.EmAlgebra("freevec2", 2, (0, 0, 1, 1))


def test_free_algebras_appear_in_enumeration(maybe, identity, exc2, freevec):
    for monad, bound in ((maybe, 4), (identity, 3), (exc2, 4), (freevec, 4)):
        algebras = d.enumerate_em_algebras(monad, bound)
        n = 0
        while monad.t_size(n) <= bound:
            free = d.free_algebra(monad, n)
            assert any(d.em_isomorphic(monad, free, a) is not None for a in algebras), (
                monad.name, n)
            n += 1


@pytest.mark.parametrize("marks,bound", [(1, 3), (2, 2), (0, 2)])
def test_enumeration_matches_unpruned_brute_force(marks, bound):
    """Oracle: filter every map T(Y) -> Y by both axioms, no pruning at all."""
    monad = d.CoproductException(marks)
    expected = []
    for carrier in range(bound + 1):
        tsize = monad.t_size(carrier)
        eta, mu = monad.eta(carrier), monad.mu(carrier)
        seen = set()
        if carrier == 0:
            if tsize == 0:
                seen.add(())
        else:
            for structure in itertools.product(range(carrier), repeat=tsize):
                if any(structure[eta[x]] != x for x in range(carrier)):
                    continue
                t_structure = monad.t_mor(structure, carrier)
                if any(structure[t_structure[p]] != structure[mu[p]]
                       for p in range(len(mu))):
                    continue
                seen.add(M._canonical_structure(monad, carrier, structure))
        expected.extend((carrier, s) for s in sorted(seen))
    got = [(a.carrier, a.structure) for a in d.enumerate_em_algebras(monad, bound)]
    assert got == expected


# ------------------------------------------------------------- isomorphism

def test_pointed_set_isomorphic_to_free(maybe):
    other_mark = d.EmAlgebra("maybe", 2, (0, 1, 0))
    free = d.free_algebra(maybe, 1)
    perm = d.em_isomorphic(maybe, other_mark, free)
    assert perm is not None


def test_size_mismatch_has_no_isomorphism(exc2):
    singleton = d.EmAlgebra(exc2.name, 1, (0, 0, 0))
    assert d.em_isomorphic(exc2, singleton, d.free_algebra(exc2, 0)) is None


def test_self_isomorphism(maybe):
    for algebra in d.enumerate_em_algebras(maybe, 3):
        assert d.em_isomorphic(maybe, algebra, algebra) is not None


def test_em_isomorphic_is_an_equivalence(maybe, exc2):
    for monad, bound in ((maybe, 4), (exc2, 3)):
        algebras = d.enumerate_em_algebras(monad, bound)
        raw = [d.free_algebra(monad, n) for n in range(bound)] + algebras
        raw = [a for a in raw if a.carrier <= bound]
        for a in raw:
            assert d.em_isomorphic(monad, a, a) is not None
        for a, b in itertools.product(raw, repeat=2):
            ab = d.em_isomorphic(monad, a, b)
            ba = d.em_isomorphic(monad, b, a)
            assert (ab is None) == (ba is None)
            if ab is not None:
                for c in raw:
                    bc = d.em_isomorphic(monad, b, c)
                    if bc is not None:
                        assert d.em_isomorphic(monad, a, c) is not None


# ------------------------------------------------------ adjunction verdicts

@pytest.mark.parametrize("bound", [1, 2, 4, 6, 7])
def test_maybe_is_adjunction_trivial_at_every_bound(maybe, bound):
    verdict = d.check_adjunction_trivial(maybe, bound)
    assert verdict.applicable
    assert verdict.trivial_up_to_bound is True
    # every pointed set is matched to the free algebra on one element less
    assert all(alg.carrier - 1 == gen for alg, gen in verdict.free_witnesses)


def test_identity_is_adjunction_trivial(identity):
    verdict = d.check_adjunction_trivial(identity, 3)
    assert verdict.trivial_up_to_bound is True
    assert all(alg.carrier == gen for alg, gen in verdict.free_witnesses)


@pytest.mark.parametrize("marks", [2, 3])
def test_multi_mark_exception_is_not_trivial(marks):
    verdict = d.check_adjunction_trivial(d.CoproductException(marks), 3)
    assert verdict.applicable
    assert verdict.trivial_up_to_bound is False
    assert verdict.counterexample is not None
    assert verdict.counterexample.carrier == 1


def test_freevec_is_trivial_up_to_four(freevec):
    verdict = d.check_adjunction_trivial(freevec, 4)
    assert verdict.trivial_up_to_bound is True


def test_degenerate_monad_is_flagged_inapplicable():
    class Terminal(d.FiniteMonad):
        name = "terminal"
        ambient = M.DisjointUnion

        def t_size(self, n):
            return 1

        def t_mor(self, f, dst):
            return (0,)

        def eta(self, n):
            return tuple(0 for _ in range(n))

        def mu(self, n):
            return (0,)

    verdict = d.check_adjunction_trivial(Terminal(), 3)
    assert not verdict.applicable
    assert verdict.trivial_up_to_bound is None


def test_verdict_note_states_bounded_semantics(maybe):
    verdict = d.check_adjunction_trivial(maybe, 2)
    assert "bound" in verdict.note


# ----------------------------------------------------------------- strength

def test_maybe_strength_axioms(maybe):
    assert d.check_strength(maybe, 3).passed


def test_strength_unit_component_is_identity(maybe, freevec):
    for monad in (maybe, freevec):
        one = monad.ambient.unit_size
        for x in range(4):
            table = monad.theta(one, x)
            assert table == tuple(range(len(table)))


def test_freevec_strength_axioms(freevec):
    assert d.check_strength(freevec, 2).passed


def test_freevec_strength_budget(freevec):
    with pytest.raises(BudgetExceededError):
        d.check_strength(freevec, 3)


def test_broken_strength_is_reported():
    class MarkSwap(d.CoproductException):
        def theta(self, x, y):
            table = list(super().theta(x, y))
            table[-1], table[-2] = table[-2], table[-1]
            return tuple(table)

    report = d.check_strength(MarkSwap(2), 2)
    assert not report.passed
    assert {v.axiom for v in report.violations} <= {
        "strength_i", "strength_ii", "strength_iii", "strength_iv",
    }


def test_missing_strength_raises():
    class Bare(d.FiniteMonad):
        name = "bare"

        def t_size(self, n):
            return n

        def t_mor(self, f, dst):
            return tuple(f)

        def eta(self, n):
            return tuple(range(n))

        def mu(self, n):
            return tuple(range(n))

    with pytest.raises(StructuralError):
        d.check_strength(Bare(), 2)
    with pytest.raises(StructuralError):
        d.is_very_strong(Bare(), 2)


def test_maybe_is_very_strong(maybe, identity, exc2):
    assert d.is_very_strong(maybe, 3).very_strong
    assert d.is_very_strong(identity, 3).very_strong
    assert d.is_very_strong(exc2, 3).very_strong


def test_freevec_is_not_very_strong(freevec):
    verdict = d.is_very_strong(freevec, 3)
    assert not verdict.very_strong
    assert verdict.reason == "cardinality"
    lhs = freevec.ambient.tensor(verdict.x_size, freevec.t_size(verdict.y_size))
    rhs = freevec.t_size(freevec.ambient.tensor(verdict.x_size, verdict.y_size))
    assert lhs == verdict.domain and rhs == verdict.codomain and lhs != rhs


def test_freevec_cardinality_gap_at_three_one(freevec):
    # 3 * 2^1 = 6 maps versus 2^(3*1) = 8 masks
    assert freevec.ambient.tensor(3, freevec.t_size(1)) == 6
    assert freevec.t_size(freevec.ambient.tensor(3, 1)) == 8


# -------------------------------------------------- algebra from strength

def test_maybe_unit_algebra(maybe):
    algebra = d.algebra_from_strength(maybe)
    assert algebra.carrier == 1
    assert algebra.mult == (0, 0)
    assert algebra.unit == ()


def test_identity_unit_algebra(identity):
    algebra = d.algebra_from_strength(identity)
    assert algebra.carrier == 0
    assert algebra.mult == ()


def test_exception_unit_algebra_is_codiagonal(exc2):
    algebra = d.algebra_from_strength(exc2)
    assert algebra.carrier == 2
    assert algebra.mult == (0, 1, 0, 1)


def test_freevec_unit_algebra_is_f2_multiplication(freevec):
    algebra = d.algebra_from_strength(freevec)
    assert algebra.carrier == 2
    assert algebra.mult == (0, 0, 0, 1)
    assert algebra.unit == (1,)


# ------------------------------------------------------- modules over T(1)

def test_module_enumeration_two_marks(exc2):
    algebra = d.algebra_from_strength(exc2)
    modules = d.enumerate_modules(algebra, 2)
    assert [(m.carrier, m.action) for m in modules] == [
        (1, (0, 0, 0)),
        (2, (0, 1, 0, 0)),
        (2, (0, 1, 0, 1)),
    ]
    free = d.free_module(algebra, 0)
    matches = [m for m in modules if d.module_isomorphic(algebra, m, free) is not None]
    assert [(m.carrier, m.action) for m in matches] == [(2, (0, 1, 0, 1))]


def test_free_modules_satisfy_module_axioms(exc2):
    algebra = d.algebra_from_strength(exc2)
    for n in range(3):
        free = d.free_module(algebra, n)
        assert M._module_axioms_hold(algebra, free.carrier, free.action)


@pytest.mark.parametrize("marks,expected", [(0, True), (1, True), (2, True)])
def test_monadic_essential_agreement(marks, expected):
    assert d.check_mon_ess_agreement(d.CoproductException(marks), 4) is expected


def test_agreement_subverdicts_for_two_marks(exc2):
    # both routes must individually say "not every object is free"
    verdict = d.check_adjunction_trivial(exc2, 3)
    assert verdict.trivial_up_to_bound is False
    algebra = d.algebra_from_strength(exc2)
    modules = d.enumerate_modules(algebra, 3)
    free_like = []
    for module in modules:
        gens = [n for n in range(module.carrier + 1)
                if n + algebra.carrier == module.carrier]
        free_like.append(any(
            d.module_isomorphic(algebra, module, d.free_module(algebra, n)) is not None
            for n in gens
        ))
    assert not all(free_like)


def test_agreement_rejects_other_monads(freevec):
    with pytest.raises(StructuralError):
        d.check_mon_ess_agreement(freevec, 2)


# ------------------------------------------------------ comparison functor

def test_comparison_fully_faithful_for_builtins(maybe, identity, exc2, freevec):
    for monad in (maybe, identity, exc2, freevec):
        assert d.check_comparison_fully_faithful(monad, 2)


def test_maybe_hom_counts_match_free_morphism_counts(maybe):
    # |Hom(X, T(Y))| = (|Y|+1)^|X| must equal the brute-forced morphism count
    for x in range(3):
        for y in range(3):
            tx, ty = maybe.t_size(x), maybe.t_size(y)
            mu_x, mu_y = maybe.mu(x), maybe.mu(y)
            count = 0
            for f in itertools.product(range(ty), repeat=tx):
                if M.compose(f, mu_x) == M.compose(mu_y, maybe.t_mor(f, ty)):
                    count += 1
            assert count == (y + 1) ** x


# ------------------------------------------------------------ miscellanea

def test_builtin_monad_factory():
    assert d.builtin_monad("maybe").marks == 1
    assert d.builtin_monad("identity").marks == 0
    assert d.builtin_monad("exception", marks=3).marks == 3
    assert isinstance(d.builtin_monad("freevec2"), d.FreeVectorF2)
    with pytest.raises(StructuralError):
        d.builtin_monad("exception")
    with pytest.raises(StructuralError):
        d.builtin_monad("state")


def test_negative_marks_rejected():
    with pytest.raises(StructuralError):
        d.CoproductException(-1)
