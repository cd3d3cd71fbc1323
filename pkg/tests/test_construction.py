import dataclasses

import pytest

from bidouble.construction import CBRecipe, special_rank2_recipe, verify_recipe
from bidouble.errors import ConsistencyError, DomainError, ExcludedCaseError
from bidouble.geometry import validate_triple
from bidouble.numerics import special_ulrich_targets


def even_triples(max_degree):
    for n1 in range(0, max_degree + 1, 2):
        for n2 in range(max(n1, 2), max_degree + 1, 2):
            for n3 in range(n2, max_degree + 1, 2):
                yield validate_triple((n1, n2, n3))


RECIPE_ORACLES = {
    # triple: (m, M, residue, deg_c, deg_cprime, z_count)
    (2, 2, 2): (3, 12, 0, 3, 1, 12),
    (0, 2, 4): (3, 14, 2, 4, 2, 14),
    (0, 4, 4): (4, 24, 0, 6, 3, 24),
    (2, 2, 4): (4, 22, 2, 6, 3, 22),
    (2, 4, 4): (5, 34, 2, 9, 5, 34),
    (4, 4, 4): (6, 48, 0, 12, 7, 48),
    (2, 4, 6): (6, 50, 2, 13, 8, 50),
}


def test_recipe_oracles():
    for t, (m, big_m, residue, deg_c, deg_cp, z) in RECIPE_ORACLES.items():
        r = special_rank2_recipe(t)
        assert (r.m, r.big_m, r.residue, r.deg_c, r.deg_cprime, r.z_count) == (
            m,
            big_m,
            residue,
            deg_c,
            deg_cp,
            z,
        ), t
        assert r.deg_e1 == 1
        assert (r.tangency_note is not None) == (residue == 2)


def test_recipe_exclusions():
    with pytest.raises(ExcludedCaseError):
        special_rank2_recipe((0, 2, 2))
    with pytest.raises(ExcludedCaseError):
        special_rank2_recipe((2, 0, 2))  # permutations are canonicalized first
    with pytest.raises(DomainError):
        special_rank2_recipe((1, 1, 3))


def test_recipe_dataclass_validation():
    with pytest.raises(DomainError):
        CBRecipe(3, 12, 1, 1, 3, 1, 12, None)
    with pytest.raises(DomainError):
        CBRecipe(3, 14, 0, 1, 4, 2, 14, None)  # residue must be M mod 4
    with pytest.raises(DomainError):
        CBRecipe(3, 12, 0, 2, 3, 1, 12, None)  # E1 is a line
    with pytest.raises(DomainError):
        CBRecipe(3, 12, 0, 1, 3, 1, 12, "spurious tangency")
    with pytest.raises(DomainError):
        CBRecipe(3, 14, 2, 1, 4, 2, 14, None)  # residue 2 requires the note


def test_verify_recipe_passes():
    for t in RECIPE_ORACLES:
        r = special_rank2_recipe(t)
        report = verify_recipe(t, r)
        assert report.passed
        labels = [line.label for line in report.lines]
        assert "c1 coefficient" in labels
        assert "c2 count" in labels
        assert "deg C' positive" in labels
        assert "vanishing inequalities" in labels
        modes = {line.label: line.mode for line in report.lines}
        assert modes["rank-two extension"] == "paper-certified"
        assert modes["c2 count"] == "verified"


def test_verify_recipe_detects_tampering():
    t = (2, 2, 2)
    r = special_rank2_recipe(t)
    broken = dataclasses.replace(r, z_count=r.z_count + 4)
    with pytest.raises(ConsistencyError, match="c2 count"):
        verify_recipe(t, broken)
    broken = dataclasses.replace(r, deg_cprime=r.deg_cprime + 1)
    with pytest.raises(ConsistencyError, match="c1 coefficient"):
        verify_recipe(t, broken)
    # a recipe built for one triple does not verify against another
    with pytest.raises(ConsistencyError, match="recipe matches triple"):
        verify_recipe((0, 4, 4), special_rank2_recipe((2, 2, 2)))


def test_recipe_invariants_to_60():
    for t in even_triples(60):
        if t.as_tuple() == (0, 2, 2):
            continue
        r = special_rank2_recipe(t)
        targets = special_ulrich_targets(t)
        assert r.big_m % 2 == 0
        assert r.z_count == targets.c2
        assert r.deg_e1 + r.deg_c - r.deg_cprime == targets.c1_coefficient
        assert r.deg_cprime >= 1
        assert r.deg_c >= r.m
        assert (r.deg_cprime == 1) == (r.deg_c == r.m)
        if r.residue == 0:
            assert 4 * r.deg_c == r.big_m
        else:
            assert 4 * (r.deg_c - 1) + 2 == r.big_m
        assert 3 * r.big_m >= 4 * r.m**2
        assert r.big_m > 4 * (r.m - 1)


def test_verify_report_title_names_triple():
    report = verify_recipe((2, 4, 6), special_rank2_recipe((2, 4, 6)))
    assert "(2, 4, 6)" in report.title
