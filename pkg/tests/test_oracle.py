import pytest

from pwlie.errors import ResourceLimitExceeded
from pwlie.oracle import diff_report, orbit_bruteforce, string_by_counting, translation_ball
from pwlie.weights import AffineDominant, FiniteWeight


def test_a5_vacuum_rows():
    got = orbit_bruteforce(AffineDominant((1,) + (0,) * 5), 2)
    assert [w.coords for w, _ in got[0]] == [(0,) * 6]
    assert [w.coords for w, _ in got[1]] == [(2, 1, 1, 1, 1, 0)]
    assert [w.coords for w, _ in got[2]] == [(2, 2, 1, 1, 0, 0)]


def test_depth_zero_is_identity():
    for labels in [(1, 2), (1, 1, 3), (2, 1, 1, 1)]:
        lam = AffineDominant(labels)
        assert orbit_bruteforce(lam, 0) == {0: [(lam.finite, 1)]}
    # signs carry no meaning off the strictly dominant case; membership does
    for labels in [(0, 1, 3), (2, 0, 1, 1)]:
        lam = AffineDominant(labels)
        assert [w for w, _ in orbit_bruteforce(lam, 0)[0]] == [lam.finite]


def test_a1_rho_labels_and_signs():
    got = orbit_bruteforce(AffineDominant((1, 1)), 6)
    labels = {w.labels[0]: s for d in got for w, s in got[d]}
    assert labels == {1: 1, 3: -1, 5: 1, 7: -1}


def test_partition_numbers():
    assert string_by_counting(0) == [1]
    assert string_by_counting(5) == [1, 1, 2, 3, 5, 7]
    assert string_by_counting(9) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    assert string_by_counting(100)[100] == 190569292
    with pytest.raises(ValueError):
        string_by_counting(-1)


def test_ball_depths_bounded():
    ball = translation_ball(AffineDominant((1, 1, 0)), 4)
    assert max(ball.depths) <= 4 and min(ball.depths) >= 0
    assert len(set(ball.vectors)) == len(ball.vectors)
    assert all(sum(v) == 0 for v in ball.vectors)


def test_resource_guard():
    with pytest.raises(ResourceLimitExceeded):
        orbit_bruteforce(AffineDominant((1,) * 6), 9, max_points=1000)


def test_diff_report_lines():
    a = FiniteWeight((2, 1, 0))
    b = FiniteWeight((3, 0, 0))
    lines = diff_report({1: {a: 1}}, {1: {a: -1, b: 1}})
    assert len(lines) == 3
    assert any(line.startswith("only-main") and "(2,1)_1" in line for line in lines)
    assert diff_report({0: {a: 1}}, {0: {a: 1}}) == []
