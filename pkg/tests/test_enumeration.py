import pytest

from fillingcurves.curve import decompose, is_filling_curve
from fillingcurves.dessin import canonical_form, genus, passport
from fillingcurves.enumeration import degree_for, enumerate_uniform, summarize
from fillingcurves.errors import DessinError


def test_degree_for():
    assert degree_for((2, 4, 8), 2) == 16
    assert degree_for((2, 4, 12), 2) == 12
    assert degree_for((2, 4, 6), 2) == 24
    with pytest.raises(DessinError):
        degree_for((2, 4, 4), 2)
    with pytest.raises(DessinError):
        degree_for((2, 3, 7), 2)
    with pytest.raises(DessinError) as err:
        degree_for((2, 4, 7), 2)
    assert err.value.code == "no_solution"


@pytest.mark.parametrize("t,count,filling", [((2, 4, 12), 6, 1), ((2, 4, 8), 19, 4), ((2, 4, 6), 40, 0)])
def test_counts(t, count, filling):
    res = enumerate_uniform(t, 2)
    assert len(res.classes) == count
    assert res.filling_count == filling
    assert sum(res.component_histogram.values()) == count
    forms = [canonical_form(d) for d in res.classes]
    assert forms == sorted(forms) and len(set(forms)) == count
    n_faces = res.degree // t[2]
    for d in res.classes:
        p = passport(d)
        assert genus(d) == 2 and p.type_triple == t
        assert 8 * 2 - 8 == len(p.face_degrees) * (t[2] - 4)
        assert len(p.face_degrees) == n_faces


def test_table_rows_biject_with_classes(table_rows):
    forms = {canonical_form(d): d for d in enumerate_uniform((2, 4, 12), 2).classes}
    hits = [canonical_form(d) for d in table_rows]
    assert set(hits) == set(forms)


def test_worker_count_independence():
    a = enumerate_uniform((2, 4, 6), 2, jobs=1)
    b = enumerate_uniform((2, 4, 6), 2, jobs=3)
    assert [canonical_form(d) for d in a.classes] == [canonical_form(d) for d in b.classes]
    assert a.to_dict() == b.to_dict()


def test_search_order_independence():
    # the raw search with and without the first-choice split finds the same classes
    from fillingcurves.enumeration import _first_choices, _subtree

    E, block, k = 16, 4, 8
    whole = set(_subtree((E, block, k, None)))
    split = set()
    for first in _first_choices(E, block):
        split.update(_subtree((E, block, k, first)))
    assert whole == split


def test_small_exhaustive_oracle():
    """Compare with brute force over all fixed-point-free involutions at degree 12."""
    from itertools import combinations

    from fillingcurves.dessin import Dessin
    from fillingcurves.perm import Permutation, is_transitive

    E, block, k = 12, 4, 12
    s1 = Permutation._from0([(i // block) * block + (i % block + 1) % block for i in range(E)])

    def matchings(rest):
        if not rest:
            yield []
            return
        a = rest[0]
        for i in range(1, len(rest)):
            for m in matchings(rest[1:i] + rest[i + 1:]):
                yield [(a, rest[i])] + m

    found = set()
    for m in matchings(list(range(E))):
        img = [0] * E
        for a, b in m:
            img[a], img[b] = b, a
        s0 = Permutation._from0(img)
        if not is_transitive([s0, s1]):
            continue
        d = Dessin(s0, s1, check=False)
        if set(d.sigma_inf.cycle_type()) == {k}:
            found.add(canonical_form(d))
    assert found == {canonical_form(d) for d in enumerate_uniform((2, 4, 12), 2).classes}


def test_summarize():
    res = enumerate_uniform((2, 4, 12), 2)
    rows = summarize(res)
    assert len(rows) == 6
    for row, d in zip(rows, res.classes):
        assert row["r"] == decompose(d).r
        assert row["filling"] == is_filling_curve(d)
        assert row["min_length"] == pytest.approx(9.977315346351726, rel=1e-12)
    assert sorted(r["r"] for r in rows) == [1, 2, 2, 3, 3, 4]
