import random
from collections import Counter

import pytest

from fillingcurves.curve import is_filling_curve, is_general_position
from fillingcurves.dessin import genus, is_clean, is_uniform, passport
from fillingcurves.enumeration import enumerate_uniform
from fillingcurves.errors import DessinError
from fillingcurves.hypgeom import face_constraint
from fillingcurves.io import load_fixture
from fillingcurves.perm import compose, is_transitive, power
from fillingcurves.surgery import (
    DIFFERENT_FACES,
    SAME_FACE,
    apply_surgery,
    candidate_pairs,
    grow,
    seed_dessin,
)


def straight_cycles(d):
    return compose(power(d.sigma1, 2), d.sigma0).num_cycles()


def test_same_face_case(genus2_248):
    out = apply_surgery(genus2_248, 4, 13)
    assert out.case == SAME_FACE
    assert sorted(out.result.sigma_inf.cycle_type()) == [8, 16]
    assert genus(out.result) == 3
    assert straight_cycles(out.result) == straight_cycles(genus2_248)


def test_different_faces_case(genus2_248):
    out = apply_surgery(genus2_248, 1, 16)
    assert out.case == DIFFERENT_FACES
    assert sorted(out.result.sigma_inf.cycle_type()) == [10, 14]
    assert genus(out.result) == 3
    assert straight_cycles(out.result) == straight_cycles(genus2_248)


def test_rejects_bad_pairs(genus2_248):
    for a, b in [(1, 2), (1, 1), (0, 16), (1, 17)]:
        with pytest.raises(DessinError):
            apply_surgery(genus2_248, a, b)
    with pytest.raises(DessinError):
        apply_surgery(load_fixture("genus2_type266"), 1, 7)


def _pool():
    pool = []
    for t in [(2, 4, 12), (2, 4, 8), (2, 4, 6)]:
        pool.extend(enumerate_uniform(t, 2).classes)
    return pool


def test_random_surgeries():
    rng = random.Random(2024)
    pool = _pool()
    done = 0
    cases = Counter()
    while done < 200:
        d = rng.choice(pool)
        # sometimes chain a second surgery on a previous output
        if rng.random() < 0.3:
            a, b = rng.choice(candidate_pairs(d))
            d = apply_surgery(d, a, b).result
        pairs = candidate_pairs(d)
        a, b = rng.choice(pairs)
        out = apply_surgery(d, a, b)
        r = out.result
        assert r.degree == d.degree + 8
        assert genus(r) == genus(d) + 1
        assert r.sigma_inf.num_cycles() == d.sigma_inf.num_cycles()
        assert set(passport(r).white_degrees) == {2}
        assert set(passport(r).black_degrees) == {4}
        assert is_transitive([r.sigma0, r.sigma1])
        assert straight_cycles(r) == straight_cycles(d)
        steps = sorted(new - old for old, new in out.face_degree_delta)
        assert steps == ([8] if out.case == SAME_FACE else [2, 6])
        # delta matches the face multisets directly
        before, after = Counter(d.sigma_inf.cycle_type()), Counter(r.sigma_inf.cycle_type())
        for old, new in out.face_degree_delta:
            before[old] -= 1
            before[new] += 1
        assert +before == after
        cases[out.case] += 1
        done += 1
    assert cases[SAME_FACE] and cases[DIFFERENT_FACES]


@pytest.mark.parametrize("g,n,degree,faces", [(2, 1, 12, 1), (2, 2, 16, 2), (3, 2, 24, 2), (4, 3, 36, 3)])
def test_seeds(g, n, degree, faces):
    d = seed_dessin(g, n)
    k = face_constraint(g, n)
    assert d.degree == degree and genus(d) == g
    assert is_uniform(d) and is_clean(d) and is_general_position(d) and is_filling_curve(d)
    assert passport(d).type_triple == (2, 4, k)
    assert d.sigma_inf.num_cycles() == faces
    assert d == load_fixture(f"seed_g{g}_n{n}")


def test_unknown_seed():
    with pytest.raises(DessinError) as err:
        seed_dessin(5, 1)
    assert err.value.code == "no_seed"


@pytest.mark.parametrize(
    "g,n,target,k", [(2, 1, 5, 36), (2, 2, 4, 16), (4, 3, 7, 20)]
)
def test_grow_small(g, n, target, k):
    out = grow(seed_dessin(g, n), target, n)
    assert genus(out) == target
    assert is_uniform(out) and is_filling_curve(out)
    assert passport(out).type_triple == (2, 4, k)
    assert out.sigma_inf.num_cycles() == n
    assert k == face_constraint(target, n)


def test_grow_is_deterministic():
    a = grow(seed_dessin(2, 2), 6, 2)
    b = grow(seed_dessin(2, 2), 6, 2)
    assert a == b


def test_grow_rejects_bad_requests():
    with pytest.raises(DessinError):
        grow(seed_dessin(2, 2), 3, 2)  # genus moves in steps of 2 with two faces
    with pytest.raises(DessinError):
        grow(seed_dessin(2, 1), 2, 1)
    with pytest.raises(DessinError):
        grow(seed_dessin(2, 1), 5, 4)
