import pytest

from gqlrc.codes import code_from_matrix, gq_code
from gqlrc.gf import field_create
from gqlrc.gq import IncidenceStructure, build_gq
from gqlrc.lrc import (
    RepairError,
    RepairProfile,
    check_bounds,
    omega_min,
    repair_availability,
    repair_degree,
    repair_profile,
)


@pytest.fixture(scope="module")
def q42_profile(q42):
    return repair_profile(gq_code(q42), q42)


def test_q42_profile(q42_profile):
    assert (q42_profile.r, q42_profile.a) == (2, 3)
    assert repair_degree(q42_profile)[0] == [2] * 15
    assert repair_availability(q42_profile)[0] == [3] * 15


def test_omega_min_q42(q42, q42_profile):
    for i in range(q42.num_points):
        words = omega_min(q42_profile.words, i)
        assert len(words) == 3
        assert {w[0] for w in words} == {q42.lines[j] for j in q42.lines_through[i]}


def test_omega_min_q43(q43):
    prof = repair_profile(gq_code(q43), q43)
    assert (prof.r, prof.a) == (3, 8)
    for i in (0, 17, 39):
        words = omega_min(prof.words, i)
        assert len(words) == 8
        assert all(w[0] in q43.lines for w in words)


def test_single_line_structure():
    IS = IncidenceStructure("line", field_create(2), ["p"] * 3, [(0, 1, 2)], ["l"])
    prof = repair_profile(gq_code(IS), IS)
    assert prof.r_i == [2, 2, 2] and prof.a_i == [1, 1, 1]
    assert all(len(omega_min(prof.words, i)) == 1 for i in range(3))


@pytest.mark.parametrize("kind,q,r,a", [("te-ovoid", 2, 2, 5), ("t2star", 4, 3, 6), ("w3", 2, 2, 3)])
def test_profiles(kind, q, r, a):
    IS = build_gq(kind, q)
    prof = repair_profile(gq_code(IS), IS)
    assert (prof.r, prof.a) == (r, a)
    assert check_bounds(prof).matches_expected


def test_bounds_binary_tight(q42_profile):
    b = check_bounds(q42_profile)
    assert b.ok and b.tight_r and b.tight_a and b.matches_expected


def test_bounds_q43_not_tight(q43):
    b = check_bounds(repair_profile(gq_code(q43), q43))
    assert b.ok and b.tight_r and not b.tight_a
    assert b.a == 8 > b.t + 1


def test_r_above_s_is_a_violation():
    prof = RepairProfile(r_i=[3, 3], a_i=[3, 3], p=2, s=2, t=2)
    b = check_bounds(prof)
    assert not b.ok and not b.r_le_s
    assert any("r=3 > s=2" in v for v in b.violations)


def test_bounds_need_parameters():
    with pytest.raises(RepairError):
        check_bounds(RepairProfile(r_i=[1], a_i=[1], p=2))


def test_uncovered_position():
    with pytest.raises(RepairError):
        repair_profile(code_from_matrix([[1, 1, 0]], 2))


def test_non_uniform_repair_uses_overall_r():
    # position 3 only sits in the weight-4 word
    code = code_from_matrix([[1, 1, 0, 0], [0, 1, 1, 1]], 2)
    prof = repair_profile(code)
    assert prof.r_i[0] == 1 and prof.r == max(prof.r_i)
    assert prof.notes


def test_profile_json(q42_profile):
    doc = q42_profile.to_json()
    assert doc["gq"] == {"kind": "te-conic", "p": 2, "s": 2, "t": 2}
    assert doc["tight_r"] and doc["tight_a"]
    assert doc["per_symbol"][0] == {"i": 0, "r_i": 2, "a_i": 3}
