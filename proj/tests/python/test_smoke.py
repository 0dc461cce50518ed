import itertools

import pytest

import grpwl


def brute_is_iso(a, b):
    # Tiny groups only: try every bijection fixing the identity.
    n = a.order
    if b.order != n:
        return False
    rest_a = [x for x in range(n) if x != a.identity]
    rest_b = [y for y in range(n) if y != b.identity]
    for perm in itertools.permutations(rest_b):
        f = {a.identity: b.identity, **dict(zip(rest_a, perm))}
        if all(f[a.mul(x, y)] == b.mul(f[x], f[y]) for x in range(n) for y in range(n)):
            return True
    return False


def test_z3_table():
    g = grpwl.from_table([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
    assert g.order == 3
    assert g.identity == 0
    assert [g.element_order(x) for x in range(3)] == [1, 3, 3]


def test_bad_table_raises():
    with pytest.raises(grpwl.GrpwlError, match="NotLatinSquare"):
        grpwl.from_table([[0, 1], [1, 1]])


def test_text_round_trip():
    g = grpwl.build_group("dih4")
    assert grpwl.parse(g.to_text()) == g


@pytest.mark.parametrize("a,b", [("6", "S3"), ("2x3", "6"), ("4", "2x2"), ("Q8", "dih4")])
def test_oracle_matches_brute_force(a, b):
    ga, gb = grpwl.build_group(a), grpwl.build_group(b)
    assert grpwl.isomorphic(ga, gb) == brute_is_iso(ga, gb)


def test_abelian_invariants():
    assert grpwl.abelian_invariants(grpwl.build_group("2x2x4")) == [2, 2, 4]
    assert grpwl.isomorphic(grpwl.build_group("4x4"), grpwl.build_group("2x8"), "abelian") is False


def test_wl_separates_z6_from_s3():
    v = grpwl.wl_compare(grpwl.build_group("6"), grpwl.build_group("S3"), k=1, version=2)
    assert v["distinguished"]
    assert v["round"] == 0


def test_wl_classes_monotone():
    hist = grpwl.wl_classes(grpwl.build_group("dih5"), k=2)
    assert hist == sorted(hist)


def test_cfi_counts():
    g = grpwl.cfi(grpwl.build_graph("k4"))
    assert (g.num_vertices, g.num_edges) == (40, 60)


def test_mekler_path3():
    path = grpwl.build_graph("path3")
    # 3 vertices plus one non-edge.
    assert grpwl.mekler_order_exponent(path, 3) == 4
    g = grpwl.mekler_group(path, 3)
    assert g.order == 81
    assert all(g.element_order(x) in (1, 3) for x in range(g.order))


def test_canonical_digest_is_relabelling_invariant():
    a = grpwl.build_group("dih4")
    b = grpwl.build_group("Q8")
    assert grpwl.canonical_digest(a) != grpwl.canonical_digest(b)
    t = a.table()
    n = a.order
    perm = [(3 * x + 1) % n for x in range(n)]
    inv = [0] * n
    for x, y in enumerate(perm):
        inv[y] = x
    rows = [[perm[t[inv[i] * n + inv[j]]] for j in range(n)] for i in range(n)]
    assert grpwl.canonical_digest(grpwl.from_table(rows)) == grpwl.canonical_digest(a)


def test_pebble_z4_vs_klein():
    z4, v4 = grpwl.build_group("4"), grpwl.build_group("2x2")
    # Version I: one pebble only sees whether it sits on the identity.
    assert not grpwl.exhaustive_spoiler_wins(z4, v4, budget=2, rounds=3, version=1)
    assert grpwl.exhaustive_spoiler_wins(z4, v4, budget=3, rounds=3, version=1)
    # Version II: one pebble already sees the element order.
    assert grpwl.exhaustive_spoiler_wins(z4, v4, budget=2, rounds=1, version=2)


def test_family_duplicator_survives():
    r = grpwl.family_games(1, 5, budget=1, games=20, rounds=10, seed=7)
    assert r["losses"] == 0
    assert r["invariant_broken"] == 0


def test_acceptance_axioms():
    assert "axioms" in grpwl.acceptance_tags()
    assert grpwl.run_acceptance("axioms")["passed"]
