"""Acceptance gate: one test and one printed pass/fail line per criterion.

Every criterion is exact (no tolerances); the two verifier criteria
also carry wall-clock budgets. The summary block at the end of the
pytest run lists one line per criterion.
"""

import random
import time
from itertools import permutations

from tanglekit import (
    Permutation,
    bar_set,
    canonical_form,
    catergram,
    count_crossings,
    crossing_number,
    distance_pairs,
    enumerate_tanglegrams,
    equal,
    excluded_tanglegrams,
    induced_on_left,
    is_planar,
    is_planar_catergram,
    pi_seq,
    restrict,
    rho,
    rho_layout,
    tilde,
    to_svg,
    verify_antichain,
    verify_chain,
)
from tanglekit.cli import main as cli_main

from conftest import (
    count_segment_crossings,
    naive_crossing_number,
    record_acceptance,
    svg_leaf_order,
    svg_matching_segments,
)


def test_acceptance_antichain_prefix():
    t0 = time.monotonic()
    full = verify_antichain(6)
    t_full = time.monotonic() - t0
    t0 = time.monotonic()
    adj = verify_antichain(20, adjacent_only=True)
    t_adj = time.monotonic() - t0
    pairs = len({(c.i, c.j) for c in full.checks})
    ok = (
        full.passed and pairs == 15 and t_full <= 120.0
        and adj.passed and t_adj <= 60.0
    )
    assert record_acceptance(
        ok,
        f"antichain prefix: {pairs} pairs to index 6 clean in {t_full:.2f}s "
        f"(budget 120s); adjacent pairs to index 20 clean in {t_adj:.2f}s (budget 60s)",
    )


def test_acceptance_chain_prefix():
    report = verify_chain(15)
    identities = all(
        restrict(
            pi_seq(i + 1),
            [p for p in range(1, 14 + 2 * i + 1) if p not in (2, 4)],
        )
        == tilde(pi_seq(i))
        for i in range(1, 15)
    )
    ok = (
        report.passed
        and identities
        and all(c.restriction_ok and c.induced_ok for c in report.checks)
        and len(report.checks) == 14
    )
    assert record_acceptance(
        ok,
        f"chain prefix: 14 consecutive containments to index 15, "
        f"drop-two-positions restriction identity exact at every step",
    )


def test_acceptance_family_is_planar():
    pattern_ok = all(is_planar_catergram(rho(i)) for i in range(1, 13))
    layout_ok = all(count_crossings(rho_layout(i)) == 0 for i in range(1, 13))
    ok = pattern_ok and layout_ok
    assert record_acceptance(
        ok,
        "planar family: indices 1..12 pass the forbidden-pattern test and "
        "their closed-form layouts have zero crossings",
    )


def test_acceptance_excluded_pair():
    e1, e2 = excluded_tanglegrams()
    brute = (naive_crossing_number(e1), naive_crossing_number(e2))
    swept = (crossing_number(e1), crossing_number(e2))
    oracle_says_no = not is_planar(e1, "oracle") and not is_planar(e2, "oracle")
    ok = oracle_says_no and brute == (1, 1) and swept == (1, 1)
    assert record_acceptance(
        ok,
        f"excluded pair: both obstructions non-planar, crossing number "
        f"{brute[0]} and {brute[1]} by independent 8x8 brute sweep",
    )


def test_acceptance_planarity_methods_agree():
    reps = enumerate_tanglegrams(4)
    dis_a = sum(
        1 for t in reps if is_planar(t, "kuratowski") != is_planar(t, "oracle")
    )
    dis_b = sum(
        1
        for img in permutations(range(1, 6))
        if is_planar(catergram(Permutation(img)), "kuratowski")
        != is_planar(catergram(Permutation(img)), "oracle")
    )
    rng = random.Random(1807)
    dis_c = 0
    for _ in range(500):
        n = rng.choice((6, 7, 8))
        img = list(range(1, n + 1))
        rng.shuffle(img)
        t = catergram(Permutation(img))
        if is_planar(t, "kuratowski") != is_planar(t, "oracle"):
            dis_c += 1
    ok = dis_a == dis_b == dis_c == 0
    assert record_acceptance(
        ok,
        f"planarity methods: 0 disagreements over {len(reps)} size-4 forms, "
        f"120 five-leaf catergrams, 500 random catergrams of size 6..8",
    )


def test_acceptance_equality_triple():
    perms = [Permutation(img) for img in permutations(range(1, 6))]
    forms = {}
    pairs_d = {}
    bars = {}
    for p in perms:
        t = catergram(p)
        forms[p] = canonical_form(t)
        pairs_d[p] = distance_pairs(t)
        bars[p] = bar_set(p)
    mismatches = 0
    total = 0
    for p in perms:
        for q in perms:
            total += 1
            a = forms[p] == forms[q]
            b = pairs_d[p] == pairs_d[q]
            c = q in bars[p]
            if not (a == b == c):
                mismatches += 1
    ok = mismatches == 0 and total == 14400
    assert record_acceptance(
        ok,
        f"equality triple: canonical form, distance pairs, and bar membership "
        f"identical over all {total} ordered five-leaf pairs",
    )


def test_acceptance_bar_cardinality():
    bad = 0
    total = 0
    for n in range(2, 8):
        for img in permutations(range(1, n + 1)):
            total += 1
            want = 2 if {img[-1], img[-2]} == {n - 1, n} else 4
            if len(bar_set(Permutation(img))) != want:
                bad += 1
    ok = bad == 0
    assert record_acceptance(
        ok,
        f"bar cardinality: sizes in {{2,4}} with the collapse rule exact "
        f"over all {total} permutations of sizes 2..7",
    )


def test_acceptance_induction_matches_restriction():
    rng = random.Random(20250819)
    bad = 0
    for _ in range(1000):
        n = rng.randint(3, 8)
        img = list(range(1, n + 1))
        rng.shuffle(img)
        pi = Permutation(img)
        k = rng.randint(2, n)
        positions = sorted(rng.sample(range(1, n + 1), k))
        if not equal(
            induced_on_left(catergram(pi), positions),
            catergram(restrict(pi, positions)),
        ):
            bad += 1
    ok = bad == 0
    assert record_acceptance(
        ok,
        "induction vs restriction: 1000 random position subsets give "
        "canonically equal tanglegrams",
    )


def test_acceptance_drawing_reproduction(tmp_path):
    want_left = (1, 2, 3, 5, 7, 9, 11, 13, 15, 17, 18, 19, 20, 16, 14, 12, 10, 8, 6, 4)
    svg = to_svg(rho_layout(4))
    direct_order = tuple(int(s) for s in svg_leaf_order(svg, "left"))
    direct_hits = count_segment_crossings(svg_matching_segments(svg))

    path = tmp_path / "family4.tg"
    path.write_text(f"catergram {rho(4)}\n")
    import io
    from contextlib import redirect_stdout

    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli_main(["layout", str(path), "--emit", "svg"])
    cli_svg = buf.getvalue()
    cli_order = tuple(int(s) for s in svg_leaf_order(cli_svg, "left"))
    cli_hits = count_segment_crossings(svg_matching_segments(cli_svg))

    ok = (
        code == 0
        and direct_order == want_left
        and cli_order == want_left
        and direct_hits == 0
        and cli_hits == 0
    )
    assert record_acceptance(
        ok,
        "drawing reproduction: twenty-leaf layout emits the expected left "
        "order with zero geometric segment intersections (library and CLI)",
    )
