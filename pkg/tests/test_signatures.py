import pytest
from hypothesis import given, strategies as st

from pwlie.errors import NotStrictlyDominant
from pwlie.oracle import orbit_bruteforce
from pwlie.pweights import pweights
from pwlie.signatures import decompose, signature_index, signed_pweights
from pwlie.weights import AffineDominant, AlgebraContext, FiniteWeight, from_dynkin

A5 = AlgebraContext(5)


def test_signature_examples():
    assert signature_index(FiniteWeight((5, 4, 3, 2, 1, 0)), 6, A5) == 1
    assert signature_index(FiniteWeight((7, 5, 4, 3, 2, 0)), 6, A5) == -1
    # residues 1 and 7 collide modulo 6
    assert signature_index(FiniteWeight((13, 7, 3, 2, 1, 0)), 6) == 0


def test_decompose():
    dec = decompose(FiniteWeight((7, 5, 4, 3, 2, 0)), 6)
    assert dec.residues == (1, 5, 4, 3, 2) and dec.quotients == (1, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        decompose(FiniteWeight((1, 0)), 1)


def test_rejects_non_strict():
    with pytest.raises(NotStrictlyDominant):
        signature_index(FiniteWeight((1, 1, 0)), 3)
    with pytest.raises(NotStrictlyDominant):
        signed_pweights(AffineDominant((1, 0, 1)), 2)


def test_signed_rho():
    rows = signed_pweights(AffineDominant((1,) * 6), 1, A5)
    assert [(s.weight.coords, s.sign) for s in rows[0]] == [((5, 4, 3, 2, 1, 0), 1)]
    assert [(s.weight.coords, s.sign) for s in rows[1]] == [((7, 5, 4, 3, 2, 0), -1)]


def test_a1_rho_signs():
    # Dynkin labels 1 + 4n carry +1 and 3 + 4n carry -1
    rows = signed_pweights(AffineDominant((1, 1)), 12)
    seen = {}
    for d, row in rows.items():
        for s in row:
            seen[s.weight.labels[0]] = (d, s.sign)
    assert seen[1] == (0, 1)
    assert seen[3] == (1, -1)
    assert seen[5] == (3, 1)
    assert seen[7] == (6, -1)
    for label, (_, sign) in seen.items():
        assert sign == (1 if label % 4 == 1 else -1)


@pytest.mark.parametrize("labels", [(1, 1, 1), (2, 1, 1), (1, 1, 1, 1), (1, 2, 1, 1), (1, 1, 1, 1, 1)])
def test_signs_match_oracle(labels):
    lam = AffineDominant(labels)
    K = 4
    oracle = orbit_bruteforce(lam, K)
    main = signed_pweights(lam, K)
    for d in range(K + 1):
        assert {(s.weight, s.sign) for s in main[d]} == set(oracle[d])


def test_no_vanishing_sign_inside_strict_sets():
    for labels in [(1,) * 6, (2, 2, 1, 1, 1, 1), (1, 1, 1), (3, 1, 1)]:
        lam = AffineDominant(labels)
        pws = pweights(lam, 5)
        for _, w in pws.items():
            assert signature_index(w, lam.level) != 0


def test_rank_modulus_differs_off_rho():
    # level 7 source of A_5: the N+1 modulus gives wrong signs somewhere
    lam = AffineDominant((2, 1, 1, 1, 1, 1))
    oracle = orbit_bruteforce(lam, 3)
    truth = {w: s for d in oracle for w, s in oracle[d]}
    wrong = [w for w in truth if signature_index(w, 7, modulus="rank") != truth[w]]
    assert wrong
    assert all(signature_index(w, 7) == truth[w] for w in truth)


@given(st.lists(st.integers(1, 4), min_size=2, max_size=5), st.integers(0, 6))
def test_moduli_agree_for_rho_level(gaps, shift):
    # for level N+1 both modulus choices are identical
    labels = tuple(gaps)
    w = from_dynkin(labels)
    n1 = len(labels) + 1
    assert signature_index(w, n1) == signature_index(w, n1, modulus="rank")
