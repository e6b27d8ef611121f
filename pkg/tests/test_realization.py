"""
Test mappa lineare a tratti canonica, iterazione esatta ed enumerazione dei tag
"""
import json

import pytest

from services.errors import DegenerateOrbit, InconsistentInput, NotEventuallyFixed, OutOfDomain
from services.realization import (
    CanonicalOrbit,
    PLMap,
    base_case_map,
    canonical_map,
    canonical_orbit,
    enumerate_tags,
    interpolate,
    map_from_json,
    map_to_json,
    orbit_from_points,
    tag_bands,
    tag_of_point,
    verify_collapse,
)
from services.rewrite import derivable_set
from services.words import EMPTY, Letter, PatternSet, Word, all_words
from utils.rationals import Q, format_rational, parse_rational, to_q

RLLRL = Word("RLLRL")
RLLRL_TAGS = PatternSet.of("RLLRL", "RLRL", "RLL", "LLRL", "LRL", "RL", "LL", "L", "e")


def test_canonical_orbit():
    orbit = canonical_orbit(RLLRL)
    assert orbit.points == (Q(-1), Q(1, 2), Q(1, 3), Q(-1, 4), Q(1, 5), Q(0))
    orbit.validate()
    assert canonical_orbit(EMPTY).points == (Q(0),)


def test_canonical_map_values():
    f = canonical_map(RLLRL)
    orbit = canonical_orbit(RLLRL).points
    for x, image in zip(orbit, orbit[1:] + orbit[-1:]):
        assert f(x) == image
    assert f(Q(1, 3)) == Q(-1, 4)
    assert f(Q(-1, 4)) == Q(1, 5)
    assert f(Q(1, 10)) == 0
    assert f.domain == (Q(-1), Q(1, 2))


def test_eval_out_of_domain():
    f = canonical_map(RLLRL)
    with pytest.raises(OutOfDomain):
        f(Q(2))
    with pytest.raises(OutOfDomain):
        f(Q(-11, 10))


def test_tag_of_point():
    f = canonical_map(RLLRL)
    assert tag_of_point(f, Q(-1), 10) == RLLRL
    assert tag_of_point(f, Q(-19, 21), 10) == Word("RLL")
    assert tag_of_point(f, Q(-16, 21), 10) == Word("RL")
    assert tag_of_point(f, Q(0), 10) == EMPTY


def test_tag_of_point_not_eventually_fixed():
    # x -> 1 - x scambia 0 e 1
    flip = PLMap(breakpoints=((Q(0), Q(1)), (Q(1), Q(0))))
    with pytest.raises(NotEventuallyFixed):
        tag_of_point(flip, Q(0), 5)


def test_verify_collapse():
    f = canonical_map(RLLRL)
    assert verify_collapse(f, 5)
    assert not verify_collapse(f, 1)


def test_canonical_maps_realize_and_collapse():
    for w in all_words(10):
        f = canonical_map(w)
        x1 = canonical_orbit(w).points[0]
        assert tag_of_point(f, x1, len(w)) == w, w
        assert verify_collapse(f, len(w)), w


def test_enumerate_tags_rllrl():
    enumeration = enumerate_tags(canonical_map(RLLRL), 5)
    assert enumeration.tags == RLLRL_TAGS
    assert Q(-19, 21) in enumeration.partition_points
    assert Q(-16, 21) in enumeration.partition_points


def test_refined_sampling_finds_nothing_new():
    f = canonical_map(RLLRL)
    assert enumerate_tags(f, 5, refine=3).tags == RLLRL_TAGS
    for w in all_words(6):
        assert enumerate_tags(canonical_map(w), len(w), refine=2).tags == derivable_set(w), w


def test_tag_bands_rllrl():
    bands = tag_bands(canonical_map(RLLRL), 5)
    described = [band.describe() for band in bands]
    assert described[:3] == ["[-1, -19/21): RLLRL", "[-19/21, -16/21): RLL", "{-16/21}: RL"]
    assert "{0}: e" in described
    assert bands[1].contains(Q(-19, 21))
    assert not bands[1].contains(Q(-16, 21))
    assert bands[0].left == Q(-1) and bands[-1].right == Q(1, 2)


def test_realization_matches_derivation():
    for w in all_words(8):
        assert enumerate_tags(canonical_map(w), len(w)).tags == derivable_set(w), w


def test_base_case_maps():
    for letter in Letter:
        f = base_case_map(letter)
        assert enumerate_tags(f, 1).tags == PatternSet.of(letter.value, "e")


def test_degenerate_orbit():
    orbit = CanonicalOrbit(word=Word("LL"), points=(Q(1), Q(1), Q(0)))
    with pytest.raises(DegenerateOrbit):
        interpolate(orbit)
    with pytest.raises(DegenerateOrbit):
        orbit.validate()


def test_orbit_from_points():
    orbit = orbit_from_points(Word("RL"), [-3, "1/2", 0])
    assert orbit.points == (Q(-3), Q(1, 2), Q(0))
    with pytest.raises(InconsistentInput):
        orbit_from_points(Word("RL"), [3, "1/2", 0])
    with pytest.raises(InconsistentInput):
        orbit_from_points(Word("RL"), [-1, 0])
    with pytest.raises(TypeError):
        orbit_from_points(Word("R"), [-0.5, 0])


def test_plmap_rejects_invalid_breakpoints():
    with pytest.raises(InconsistentInput):
        PLMap(breakpoints=((Q(0), Q(0)), (Q(0), Q(0))))
    with pytest.raises(InconsistentInput):
        PLMap(breakpoints=((Q(0), Q(2)), (Q(1), Q(0))))
    with pytest.raises(InconsistentInput):
        PLMap(breakpoints=())


def test_map_json_export():
    f = canonical_map(RLLRL)
    payload = json.loads(map_to_json(f))
    assert payload["domain"] == ["-1", "1/2"]
    assert payload["breakpoints"][0] == ["-1", "1/2"]
    assert map_from_json(map_to_json(f)) == f
    with pytest.raises(InconsistentInput):
        map_from_json('{"domain": ["0", "2"], "breakpoints": [["0", "0"], ["1", "1"]]}')


def test_rationals():
    assert format_rational(Q(-19, 21)) == "-19/21"
    assert format_rational(Q(4, 2)) == "2"
    assert parse_rational(" -16/21 ") == Q(-16, 21)
    assert to_q("1/5") == Q(1, 5)


if __name__ == "__main__":
    import sys
    print("🧪 Test realizzazione\n")
    sys.exit(pytest.main([__file__, "-v"]))
