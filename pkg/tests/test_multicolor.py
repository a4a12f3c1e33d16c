from fractions import Fraction
from itertools import product as iproduct
from math import factorial, prod

import pytest

from ngbounds import (
    Graph,
    GraphFamily,
    Tournament,
    certificate_length,
    certificate_lower_bound,
    count_covering_tuples,
    count_good_sequences,
    emit_coloring,
    good_sequence_certificate,
    multicolor_upper_bound,
    parse_coloring,
    pigeonhole_sequence,
    product_clique_counts,
    sum_clique_counts,
    tournament_blocks,
    tournament_construction,
)
from ngbounds.graphs import edge_list
from ngbounds.multicolor import ColoringFormatError
from ngbounds.oracle import random_tournament, rng_for, sample_random_coloring


def total_coloring(n, r, seed):
    return sample_random_coloring(n, r, seed)


def test_family_validation():
    k2 = Graph.complete(2)
    with pytest.raises(ValueError):
        GraphFamily(2, (k2, k2))  # shared edge
    with pytest.raises(ValueError):
        GraphFamily(2, ())
    with pytest.raises(ValueError):
        GraphFamily(3, (k2,))  # wrong vertex count
    fam = GraphFamily(2, (k2, Graph.empty(2)))
    assert fam.r == 2 and fam.covers_all_edges
    assert fam.color_of(0, 1) == 0


def test_covers_all_edges_flag():
    n = 4
    partial = GraphFamily(n, (Graph.from_edges(n, [(0, 1)]), Graph.from_edges(n, [(2, 3)])))
    assert not partial.covers_all_edges
    assert partial.color_of(0, 2) is None
    fam = total_coloring(5, 3, seed=2)
    assert fam.covers_all_edges


def test_coloring_text_round_trip():
    for seed in range(20):
        fam = sample_random_coloring(6, 3, seed, partial=bool(seed % 2))
        again = parse_coloring(emit_coloring(fam))
        assert again.n == fam.n and again.r == fam.r
        assert all(a == b for a, b in zip(again.members, fam.members))


def test_coloring_parse_errors_carry_line_numbers():
    with pytest.raises(ColoringFormatError) as err:
        parse_coloring("")
    assert "header" in str(err.value)
    with pytest.raises(ColoringFormatError) as err:
        parse_coloring("3 2\n0 1 1\n0 1 2\n")
    assert err.value.line == 3 and "twice" in str(err.value)
    with pytest.raises(ColoringFormatError) as err:
        parse_coloring("3 2\n0 3 1\n")
    assert err.value.line == 2
    with pytest.raises(ColoringFormatError):
        parse_coloring("3 2\n0 1 5\n")
    with pytest.raises(ColoringFormatError):
        parse_coloring("3 2\n1 1 1\n")
    with pytest.raises(ColoringFormatError):
        parse_coloring("3\n")


def test_pigeonhole_sequences():
    assert pigeonhole_sequence(8, 2, 3) == (8, 4, 2)
    assert pigeonhole_sequence(9, 3, 2) == (9, 3)
    assert certificate_length(8, 2) == 3
    assert certificate_length(9, 3) == 2
    assert certificate_length(1, 5) == 0
    assert certificate_lower_bound(8, 2) == Fraction(64, 6)
    assert certificate_lower_bound(9, 3) == Fraction(27, 2)
    assert certificate_lower_bound(1, 2) == 1


def test_certificates_on_random_colorings():
    for seed in range(40):
        rng = rng_for([79, seed])
        n = int(rng.integers(1, 11))
        r = int(rng.integers(2, 4))
        fam = total_coloring(n, r, seed=1000 + seed)
        cert = good_sequence_certificate(fam)
        assert cert.is_valid(fam)
        assert len(cert.vertices) == certificate_length(n, r)
        assert cert.bound <= product_clique_counts(fam)


def test_certificate_fixture_small():
    fam = total_coloring(8, 2, seed=5)
    cert = good_sequence_certificate(fam)
    assert cert.choice_counts == (8, 4, 2)
    assert cert.bound == Fraction(64, 6)
    fam = GraphFamily(1, (Graph.empty(1), Graph.empty(1)))
    cert = good_sequence_certificate(fam)
    assert cert.vertices == () and cert.bound == 1


def test_certificate_length_parameter():
    fam = total_coloring(9, 2, seed=12)  # default length would be 3
    short = good_sequence_certificate(fam, q=2)
    assert len(short.vertices) == 2 and short.is_valid(fam)
    longer = good_sequence_certificate(fam, q=4)  # counts (9,4,2,1) stay positive
    assert len(longer.vertices) == 4 and longer.is_valid(fam)
    with pytest.raises(ValueError):
        good_sequence_certificate(fam, q=9)  # guaranteed choices hit zero


def test_certificate_rejects_partial_colorings():
    partial = GraphFamily(3, (Graph.from_edges(3, [(0, 1)]), Graph.empty(3)))
    with pytest.raises(ValueError):
        good_sequence_certificate(partial)


def test_certificate_validity_catches_corruption():
    fam = total_coloring(6, 2, seed=9)
    cert = good_sequence_certificate(fam)
    broken = type(cert)(cert.vertices, tuple(1 - c for c in cert.colors), cert.choice_counts, cert.bound)
    assert not broken.is_valid(fam) or cert.colors == broken.colors


def test_count_good_sequences_small():
    fam = total_coloring(7, 2, seed=3)
    assert count_good_sequences(fam, 0) == 1
    assert count_good_sequences(fam, 1) == 7
    with pytest.raises(ValueError):
        count_good_sequences(total_coloring(11, 2, seed=0), 2)


def test_good_sequence_sandwich():
    for seed in range(30):
        rng = rng_for([83, seed])
        n = int(rng.integers(2, 9))
        r = int(rng.integers(2, 4))
        q = int(rng.integers(0, min(3, n) + 1))
        fam = total_coloring(n, r, seed=2000 + seed)
        low = prod(pigeonhole_sequence(n, r, q))
        mid = count_good_sequences(fam, q)
        high = factorial(q) * product_clique_counts(fam)
        assert low <= mid <= high


def test_sum_and_product_fixtures():
    n, r = 5, 3
    fam = GraphFamily(n, (Graph.complete(n),) + tuple(Graph.empty(n) for _ in range(r - 1)))
    assert sum_clique_counts(fam) == (r - 1) * (n + 1) + 2**n
    fam2 = GraphFamily(4, (Graph.complete(4), Graph.empty(4)))
    assert product_clique_counts(fam2) == (4 + 1) * 2**4
    empties = GraphFamily(3, (Graph.empty(3), Graph.empty(3)))
    assert product_clique_counts(empties) == 16


def test_covering_tuple_fixtures():
    fam = GraphFamily(2, (Graph.complete(2), Graph.empty(2)))
    assert count_covering_tuples(fam) == 5
    fam = GraphFamily(3, (Graph.empty(3), Graph.empty(3)))
    assert count_covering_tuples(fam) == 0
    for n in (1, 3, 5):
        fam = GraphFamily(n, (Graph.complete(n),))
        assert count_covering_tuples(fam) == 1
        assert multicolor_upper_bound(n, 1) == 2**n
    with pytest.raises(ValueError):
        count_covering_tuples(GraphFamily(9, (Graph.empty(9),)))


def test_covering_tuples_against_direct_enumeration():
    for seed in range(15):
        fam = sample_random_coloring(4, 2, seed, partial=True)
        cliques = []
        for g in fam.members:
            cliques.append([s for s in range(16) if _is_clique_mask(g, s)])
        direct = sum(
            1
            for s1 in cliques[0]
            for s2 in cliques[1]
            if s1 | s2 == 15
        )
        assert count_covering_tuples(fam) == direct


def _is_clique_mask(g, s):
    from ngbounds import is_clique

    return is_clique(g, s)


def test_multicolor_upper_bound_fixtures():
    assert multicolor_upper_bound(4, 2) == 36 * 4 * 16 == 2304
    # dominates the exhaustive product maximum over total 3-colorings of 4 vertices
    best = 0
    slots = edge_list(4)
    for colors in iproduct(range(3), repeat=len(slots)):
        rows = [[0] * 4 for _ in range(3)]
        for (u, v), c in zip(slots, colors):
            rows[c][u] |= 1 << v
            rows[c][v] |= 1 << u
        fam = GraphFamily(4, tuple(Graph(4, tuple(rs)) for rs in rows))
        best = max(best, product_clique_counts(fam))
    assert best <= multicolor_upper_bound(4, 3)


def test_tournament_validation():
    with pytest.raises(ValueError):
        Tournament(3, frozenset({(0, 1), (1, 0), (1, 2)}))
    with pytest.raises(ValueError):
        Tournament(3, frozenset({(0, 1)}))
    t = Tournament.cyclic(3)
    assert t.beats == frozenset({(0, 1), (1, 2), (2, 0)})
    assert t.winner(0, 1) == 0 and t.winner(2, 0) == 2
    assert Tournament.transitive(4).winner(3, 1) == 1


def test_tournament_blocks_split_evenly():
    tour = Tournament.transitive(4)  # 6 blocks
    blocks = tournament_blocks(14, tour)
    sizes = [mask.bit_count() for _, mask in blocks]
    assert sizes == [3, 3, 2, 2, 2, 2]  # larger blocks on lexicographically earlier edges
    union = 0
    for _, mask in blocks:
        assert union & mask == 0
        union |= mask
    assert union == (1 << 14) - 1


def test_tournament_construction_two_colors():
    fam = tournament_construction(6, 2, Tournament.transitive(2))
    assert fam.members[0] == Graph.complete(6)
    assert fam.members[1] == Graph.empty(6)
    assert product_clique_counts(fam) == 7 * 2**6


def test_tournament_construction_three_colors():
    fam = tournament_construction(3, 3, Tournament.cyclic(3))
    # with three colors every pair of block labels shares a tournament
    # vertex, so the construction happens to color every edge
    assert fam.covers_all_edges
    counts = [g.edge_count() for g in fam.members]
    assert counts == [1, 1, 1]
    assert product_clique_counts(fam) == 125

    fam6 = tournament_construction(6, 3, Tournament.cyclic(3))
    assert product_clique_counts(fam6) >= 2**6 * (6 // 3) ** 3


def test_tournament_construction_leaves_edges_uncolored_for_four_colors():
    # labels (0,1) and (2,3) are disjoint, so edges between their blocks
    # belong to no member
    fam = tournament_construction(12, 4, Tournament.transitive(4))
    assert not fam.covers_all_edges


def test_tournament_construction_random_disjointness():
    for r in range(2, 7):
        for k in range(3):
            tour = random_tournament(r, seed=100 * r + k)
            n = 5 + r + k
            fam = tournament_construction(n, r, tour)  # constructor checks disjointness
            floor = 2**n * prod(1 + mask.bit_count() for _, mask in tournament_blocks(n, tour))
            assert product_clique_counts(fam) >= floor
            if r >= 4:
                assert not fam.covers_all_edges


def test_am_gm_on_random_families():
    for seed in range(30):
        rng = rng_for([89, seed])
        n = int(rng.integers(1, 8))
        r = int(rng.integers(2, 4))
        fam = sample_random_coloring(n, r, 3000 + seed, partial=True)
        s = sum_clique_counts(fam)
        p = product_clique_counts(fam)
        assert s**r >= r**r * p  # AM-GM in integer form
