"""Enumeration harness: counts, budgets, definitional predicates, corpus."""

import pytest

from ringspectra.errors import BudgetExceeded
from ringspectra.linalg import F2, F3, GF
from ringspectra.modules import RightModule, simple_modules
from ringspectra.oracle import (Budget, brute_is_compressible,
                                brute_is_monoform, corpus, count_subspaces,
                                enumerate_submodules, enumerate_subspaces,
                                enumerate_two_sided_ideals, gaussian_binomial,
                                standard_modules)


def test_subspace_counts():
    assert len(enumerate_subspaces(F2, 1)) == 2
    assert len(enumerate_subspaces(F2, 2)) == 5            # 1 + 3 + 1
    assert len(enumerate_subspaces(F2, 3)) == 16           # 1 + 7 + 7 + 1
    assert len(enumerate_subspaces(F3, 2)) == 6            # 1 + 4 + 1


def test_subspace_enumeration_matches_gaussian_formula():
    for q, dim in [(2, 4), (3, 3)]:
        subs = enumerate_subspaces(GF(q), dim)
        assert len(subs) == count_subspaces(dim, q)
        by_dim = {}
        for s in subs:
            by_dim[s.dim] = by_dim.get(s.dim, 0) + 1
        for k, n in by_dim.items():
            assert n == gaussian_binomial(dim, k, q)
        assert len(set(subs)) == len(subs)                  # duplicate-free


def test_budget_exceeded_is_loud():
    with pytest.raises(BudgetExceeded):
        enumerate_subspaces(F2, 4, Budget(max_count=10))
    with pytest.raises(BudgetExceeded):
        enumerate_subspaces(F2, 12, Budget(max_ambient_dim=8))
    with pytest.raises(BudgetExceeded):
        enumerate_subspaces(GF(7), 2, Budget(max_field_size=5))


def test_ideal_lattices(corpus_by_name):
    assert len(enumerate_two_sided_ideals(corpus_by_name["trunc2_f2"])) == 3
    assert len(enumerate_two_sided_ideals(corpus_by_name["m2_f2"])) == 2


def test_submodule_count_of_isotypic_square(corpus_by_name):
    ff = corpus_by_name["f2xf2"]
    s = simple_modules(ff)[0].module
    ss = s.direct_sum(s)
    # Submodules of S + S over a split block match subspaces of F2^2.
    assert len(enumerate_submodules(ss)) == 5


def test_brute_predicates_on_basics(corpus_by_name):
    t2 = corpus_by_name["t2_f2"]
    s = simple_modules(t2)[0].module
    assert brute_is_monoform(s)
    reg = RightModule.regular(corpus_by_name["trunc2_f2"])
    assert not brute_is_compressible(reg)          # length-2 uniserial
    from ringspectra.oracle import brute_is_prime
    from ringspectra.ideals import TwoSidedIdeal
    ff = corpus_by_name["f2xf2"]
    assert not brute_is_prime(TwoSidedIdeal.zero(ff))


def test_corpus_contents(algebra_corpus, corpus_by_name):
    assert len(algebra_corpus) >= 40
    assert all(a.dim <= 6 for _n, a in algebra_corpus)
    assert "t2_f2" in corpus_by_name
    assert "quiver.cycle.J2_f2" in corpus_by_name
    names = [n for n, _a in algebra_corpus]
    assert names == [n for n, _a in corpus(0)]      # deterministic


def test_standard_modules_cover_shapes(corpus_by_name):
    mods = dict(standard_modules(corpus_by_name["t2_f2"]))
    assert "reg" in mods and "soc_reg" in mods
    assert any(name.startswith("E(") for name in mods)


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("SPECTRA_BUDGET", "1234")
    assert Budget.from_env().max_count == 1234
    monkeypatch.delenv("SPECTRA_BUDGET")
    assert Budget.from_env().max_count == Budget().max_count
