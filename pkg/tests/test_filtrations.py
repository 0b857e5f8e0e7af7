"""Decreasing filtrations: pair splitting, simultaneous splitting with
certificates, and the extendability criterion."""
import itertools
import random
from fractions import Fraction

import pytest

from _oracles import exhaustive_adapted_basis, grid_candidates, random_filtration
from logflat import matrices as qm
from logflat.filtrations import (AdaptedBasis, Filtration, NotSplittable,
                                 simultaneous_split, split_pair,
                                 toric_extendability)


def line(*v):
    return [[Fraction(c) for c in v]]


def test_filtration_make_normalizes():
    f = Filtration.make(2, [(0, [[1, 0], [2, 0]]), (2, [[1, 0]])])
    # the repeated subspace at index 2 collapses into the step at 0
    assert f.steps == ((0, ((Fraction(1), Fraction(0)),)),)
    assert len(f.subspace(-1)) == 2
    assert len(f.subspace(0)) == 1
    assert len(f.subspace(1)) == 1
    g = Filtration.make(2, [(0, [[1, 0]]), (1, [])])
    assert len(g.subspace(1)) == 0


def test_filtration_rejects_non_nested():
    with pytest.raises(ValueError):
        Filtration(dim=2, steps=((0, ((Fraction(1), Fraction(0)),)),
                                 (1, ((Fraction(0), Fraction(1)),))))


def test_depth():
    f = Filtration.make(3, [(1, [[1, 0, 0], [0, 1, 0]]), (3, [[1, 0, 0]])])
    assert f.depth([1, 0, 0]) == 3
    assert f.depth([0, 1, 0]) == 1
    assert f.depth([0, 0, 1]) == 0
    assert f.depth([1, 1, 1]) == 0


def test_split_pair_random_with_verification():
    rng = random.Random(50)
    for _ in range(30):
        dim = rng.randrange(2, 6)
        f1 = random_filtration(rng, dim)
        f2 = random_filtration(rng, dim)
        basis = split_pair(f1, f2)
        assert isinstance(basis, AdaptedBasis)
        assert basis.verify([f1, f2])


def test_three_distinct_lines_not_splittable():
    fs = [Filtration.make(2, [(1, line(1, 0))]),
          Filtration.make(2, [(1, line(0, 1))]),
          Filtration.make(2, [(1, line(1, 1))])]
    result = simultaneous_split(fs)
    assert isinstance(result, NotSplittable)
    assert not result
    verdict = toric_extendability(fs)
    assert not verdict.extends
    assert isinstance(verdict.witness, NotSplittable)


def test_two_lines_splittable():
    fs = [Filtration.make(2, [(1, line(1, 0))]),
          Filtration.make(2, [(1, line(0, 1))]),
          Filtration.make(2, [(1, line(1, 0))])]
    result = simultaneous_split(fs)
    assert isinstance(result, AdaptedBasis)
    assert result.verify(fs)


def test_simultaneous_split_matches_exhaustive_oracle_dim2():
    lines = [line(1, 0), line(0, 1), line(1, 1), line(1, -1)]
    candidates = grid_candidates(2, bound=2)
    for combo in itertools.product(range(4), repeat=3):
        fs = [Filtration.make(2, [(1, lines[i])]) for i in combo]
        result = simultaneous_split(fs)
        oracle = exhaustive_adapted_basis(fs, candidates)
        if isinstance(result, NotSplittable):
            assert oracle is None
        else:
            assert result.verify(fs)
            assert oracle is not None


def test_simultaneous_split_matches_exhaustive_oracle_dim3():
    chains = [
        [(1, line(1, 0, 0))],
        [(1, line(0, 1, 0))],
        [(1, line(1, 1, 0))],
        [(1, line(0, 0, 1))],
        [(0, [[1, 0, 0], [0, 1, 0]])],
        [(0, [[1, 0, 0], [0, 0, 1]])],
        [(0, [[1, 0, 0], [0, 1, 0]]), (2, line(1, 1, 0))],
        [(0, [[0, 1, 0], [0, 0, 1]]), (2, line(0, 1, 1))],
    ]
    candidates = grid_candidates(3, bound=1)
    census = list(itertools.combinations_with_replacement(range(len(chains)), 3))
    disagreements = []
    for combo in census:
        fs = [Filtration.make(3, chains[i]) for i in combo]
        result = simultaneous_split(fs)
        oracle = exhaustive_adapted_basis(fs, candidates)
        if isinstance(result, NotSplittable):
            if oracle is not None:
                disagreements.append(combo)
        else:
            assert result.verify(fs)
            if oracle is None:
                disagreements.append(combo)
    assert disagreements == []


def test_not_splittable_certificate_contents():
    fs = [Filtration.make(2, [(1, line(1, 0))]),
          Filtration.make(2, [(1, line(0, 1))]),
          Filtration.make(2, [(1, line(1, 1))])]
    cert = simultaneous_split(fs)
    assert isinstance(cert, NotSplittable)
    assert len(cert.multi_index) == 3
    assert cert.detail
    assert cert.dimension_table


def test_adapted_basis_verify_rejects_wrong_depths():
    fs = [Filtration.make(2, [(1, line(1, 0))])]
    bad = AdaptedBasis(vectors=((Fraction(1), Fraction(0)),
                                (Fraction(0), Fraction(1))),
                       depths=((0,), (1,)))
    assert not bad.verify(fs)
