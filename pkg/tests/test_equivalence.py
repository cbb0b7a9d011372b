import os

import pytest

from knotmosaic import equivalence as eq, moves
from knotmosaic.enumeration import enumerate_mosaics
from knotmosaic.errors import CapExceeded, NotAKnotMosaic, SizeMismatch
from knotmosaic.mosaic import Mosaic, inject, parse_tcode, trace

import mosaics as fx

P = parse_tcode

# frozen after the first computation
ORBIT_SIZES_N3 = [1, 19, 1, 1]
ORBIT_COUNT_N4 = 13


def test_orbits_n3():
    part = eq.orbits(3)
    assert part.sizes() == ORBIT_SIZES_N3
    assert part.orbits[0] == (0,)
    assert part.representatives()[0] == Mosaic.blank(3)
    singles = {part.basis[o[0]].tcode() for o in part.orbits if len(o) == 1}
    assert singles == {"000-000-000", "021-274-340", "210-381-034"}


def test_blank_fixed_by_every_generator():
    blank = Mosaic.blank(3)
    assert all(moves.apply(g, blank) == blank for g in moves.generators(3))


def test_orbits_n4():
    part = eq.orbits(4)
    assert len(part.orbits) == ORBIT_COUNT_N4
    assert sorted(i for o in part.orbits for i in o) == list(range(len(part.basis)))
    assert part.orbit_of(P(fx.INTRO_A)) == part.orbit_of(P(fx.INTRO_B))


def test_orbits_are_closed_under_generators():
    for n in (3, 4):
        part = eq.orbits(n)
        for g in moves.generators(n):
            for a, b in moves.as_transpositions(g, part.basis):
                assert part.class_of[a] == part.class_of[b]


def test_component_count_constant_on_orbits():
    for n in (3, 4):
        part = eq.orbits(n)
        for o in part.orbits:
            assert len({trace(part.basis[i]).components for i in o}) == 1


def test_equivalence_relation_n3():
    k3 = enumerate_mosaics(3)
    rel = {(a, b): eq.same_knot_type_n(a, b) for a in k3 for b in k3}
    for a in k3:
        assert rel[a, a]
        for b in k3:
            assert rel[a, b] == rel[b, a]
            for c in k3:
                if rel[a, b] and rel[b, c]:
                    assert rel[a, c]


def test_injection_compatible_n3():
    k3 = enumerate_mosaics(3)
    for a in k3:
        for b in k3:
            if eq.same_knot_type_n(a, b):
                assert eq.same_knot_type_n(inject(a), inject(b))


def test_same_knot_type_n_errors():
    with pytest.raises(SizeMismatch):
        eq.same_knot_type_n(Mosaic.blank(3), Mosaic.blank(4))
    with pytest.raises(NotAKnotMosaic):
        eq.same_knot_type_n(P(fx.NON_KNOT_4), Mosaic.blank(4))


def test_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv("MOSAIC_CACHE_DIR", str(tmp_path))
    fresh = eq.compute_orbits(3)
    eq._orbits.cache_clear()
    first = eq.orbits(3)
    files = list(tmp_path.iterdir())
    assert len(files) == 1 and files[0].name.startswith("orbits-n3-v1-")
    eq._orbits.cache_clear()
    second = eq.orbits(3)
    assert first.orbits == second.orbits == fresh.orbits
    eq._orbits.cache_clear()


def test_corrupt_cache_is_ignored(tmp_path, monkeypatch):
    monkeypatch.setenv("MOSAIC_CACHE_DIR", str(tmp_path))
    table = moves.default_table()
    (tmp_path / f"orbits-n3-{table.key}.txt").write_text("0: 000-000-000\n")
    eq._orbits.cache_clear()
    assert eq.orbits(3).sizes() == ORBIT_SIZES_N3
    eq._orbits.cache_clear()


def test_same_knot_type():
    m = P(fx.TREFOIL_4)
    assert eq.same_knot_type(m, inject(m)) is eq.Verdict.TRUE
    assert eq.same_knot_type(P(fx.INTRO_A), P(fx.INTRO_B), 0) is eq.Verdict.TRUE
    blank, circle = Mosaic.blank(3), P("000-021-034")
    assert eq.same_knot_type(blank, circle, 1) is eq.Verdict.FALSE_UP_TO_BOUND
    assert eq.same_knot_type(blank, circle, 2) is eq.Verdict.UNKNOWN
    assert eq.same_knot_type(P("000-021-034"), P("021-034-000")) is eq.Verdict.TRUE


def test_mosaic_number():
    assert eq.mosaic_number(Mosaic.blank(3), 3) == 1
    assert eq.mosaic_number(P("21-34"), 3) == 2
    assert eq.mosaic_number(P("000-021-034"), 3) == 2
    assert eq.mosaic_number(P(fx.TREFOIL_4), 4) == 4
    assert eq.mosaic_number(P(fx.TREFOIL_4), 3) is None
    assert eq.max_crossings(3) == 1


def test_orbit_cap():
    with pytest.raises(CapExceeded):
        eq.orbits(5)


@pytest.mark.skipif(not os.environ.get("KNOTMOSAIC_SLOW"), reason="set KNOTMOSAIC_SLOW=1 to run")
def test_example_pair_at_n5():
    a, b = (P(c) for c in (fx.R2_EXAMPLE_IN[0], fx.R2_EXAMPLE_OUT[0]))
    assert eq.same_knot_type_n(a, b, allow_large=True)
