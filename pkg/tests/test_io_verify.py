import json
import random

import pytest

from fillingcurves.dessin import canonical_form
from fillingcurves.errors import DessinError
from fillingcurves.io import fixture_names, load_dessin, load_fixture, save
from fillingcurves.verify import verify
from tests.test_dessin import random_dessin


def test_fixtures_present():
    names = fixture_names()
    assert "genus2_type248" in names and len(names) == 13
    for n in names:
        load_fixture(n)
    with pytest.raises(DessinError):
        load_fixture("nope")


def test_load_and_errors(tmp_path, genus2_248):
    p = tmp_path / "d.json"
    save(genus2_248, p)
    assert load_dessin(p) == genus2_248
    # sigma0 written for 16 labels against a 12-label file
    p.write_text(json.dumps({"degree": 12, "sigma0": [[1, 16], [2, 15]], "sigma1": [[1, 2, 3]]}))
    with pytest.raises(DessinError):
        load_dessin(p)
    p.write_text(json.dumps({"degree": 4, "sigma0": [[1, 2]], "sigma1": [[3, 4]]}))
    with pytest.raises(DessinError) as err:
        load_dessin(p)
    assert err.value.code == "intransitive"
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(DessinError) as err:
        load_dessin(bad)
    assert err.value.code == "parse"
    with pytest.raises(DessinError) as err:
        load_dessin(tmp_path / "missing.json")
    assert err.value.code == "io"
    bad.write_text(json.dumps({"degree": 16, "sigma0": [[1, 17]], "sigma1": []}))
    with pytest.raises(DessinError):
        load_dessin(bad)


def test_round_trip_random(tmp_path):
    rng = random.Random(99)
    p = tmp_path / "r.json"
    for _ in range(100):
        d = random_dessin(rng)
        save(d, p)
        back = load_dessin(p)
        assert back == d and canonical_form(back) == canonical_form(d)


def test_verify_fixtures():
    for n in fixture_names():
        rep = verify(load_fixture(n))
        assert rep.passed, (n, rep.to_dict())
    names = {c.name: c.status for c in verify(load_fixture("genus2_type248")).checks}
    assert names["known_words_in_K"] == "pass"
    assert names["face_count_relation"] == "pass"
    assert names["length_medial_identity"] == "pass"
