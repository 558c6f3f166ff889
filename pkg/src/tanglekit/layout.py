"""Layouts, crossing counts, and planarity.

A layout places the left tree's leaves on one vertical line and the
right tree's leaves on another, each in a tree-consistent order, and
draws every matching edge as a straight segment. Two matching edges
cross exactly when their endpoint positions interleave, so the crossing
count of a layout is the inversion count of the permutation sending
left positions to partner positions.

A tanglegram is planar when some layout has no crossings. Planarity has
two independent deciders: an oracle that minimizes crossings over all
embedding pairs, and an excluded-pattern test that looks for either of
two size-4 obstructions as an induced subtanglegram. For catergrams the
obstruction test collapses to four forbidden permutation patterns.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .errors import BudgetExceededError, InvalidLayoutError
from .perm import Permutation, contains_pattern, is_cater_good
from .tanglegram import (
    Tanglegram,
    _distance_positions,
    canonical_form,
    catergram,
    catergram_permutation,
    distance_pairs,
    induced_subtanglegram,
    is_catergram,
)
from .trees import Label, RootedBinaryTree

DEFAULT_SIZE_CAP = 12


@dataclass(frozen=True)
class Layout:
    """A tanglegram with a consistent leaf order on each side.

    Construction validates both orders; an inconsistent or non-bijective
    order raises InvalidLayoutError.
    """

    tanglegram: Tanglegram
    left_order: tuple[Label, ...]
    right_order: tuple[Label, ...]

    def __post_init__(self):
        object.__setattr__(self, "left_order", tuple(self.left_order))
        object.__setattr__(self, "right_order", tuple(self.right_order))
        for tree, order, side in (
            (self.tanglegram.left, self.left_order, "left"),
            (self.tanglegram.right, self.right_order, "right"),
        ):
            try:
                ok = tree.order_consistent(order)
            except ValueError as exc:
                raise InvalidLayoutError(f"{side} order: {exc}") from None
            if not ok:
                raise InvalidLayoutError(f"{side} order is not consistent with the {side} tree")


def layout_permutation(layout: Layout) -> Permutation:
    """Left position k maps to the right position of k's partner."""
    rpos = {lab: k for k, lab in enumerate(layout.right_order, start=1)}
    t = layout.tanglegram
    return Permutation(rpos[t.right_partner(lab)] for lab in layout.left_order)


def count_crossings(layout: Layout) -> int:
    """Number of interleaving matching-edge pairs, by direct pair scan."""
    ends = layout_permutation(layout).entries
    n = len(ends)
    return sum(
        1 for a in range(n) for b in range(a + 1, n) if ends[a] > ends[b]
    )


def count_inversions(seq: Sequence[int]) -> int:
    """Inversion count by merge counting; independent of the pair scan."""
    vals = list(seq)

    def sort(lo: int, hi: int) -> tuple[list[int], int]:
        if hi - lo <= 1:
            return vals[lo:hi], 0
        mid = (lo + hi) // 2
        a, ca = sort(lo, mid)
        b, cb = sort(mid, hi)
        merged: list[int] = []
        inv = ca + cb
        ia = ib = 0
        while ia < len(a) and ib < len(b):
            if a[ia] <= b[ib]:
                merged.append(a[ia])
                ia += 1
            else:
                merged.append(b[ib])
                ib += 1
                inv += len(a) - ia
        merged.extend(a[ia:])
        merged.extend(b[ib:])
        return merged, inv

    return sort(0, len(vals))[1]


# ----------------------------------------------------------------------
# minimum crossings

def _min_right(
    t: Tanglegram, left_pos: dict[Label, int], build_order: bool
) -> tuple[int, tuple[Label, ...] | None]:
    """Fewest crossings over right-tree embeddings, for a fixed left order.

    The embedding choice at each right internal vertex is independent:
    a pair of edges ending in different child subtrees crosses or not
    depending only on that vertex's orientation. Ties keep the stored
    order, so the reported order is the one with the smallest swap mask.
    """
    right = t.right

    def walk(v: int) -> tuple[list[int], int, list[Label] | None]:
        pair = right.children(v)
        if pair is None:
            lab = right.label_at(v)
            return [left_pos[t.left_partner(lab)]], 0, ([lab] if build_order else None)
        pos_a, cost_a, ord_a = walk(pair[0])
        pos_b, cost_b, ord_b = walk(pair[1])
        # pairs (a in A, b in B) with a > b cross when A sits below B
        cross_ab = 0
        ib = 0
        for a in pos_a:
            while ib < len(pos_b) and pos_b[ib] < a:
                ib += 1
            cross_ab += ib
        cross_ba = len(pos_a) * len(pos_b) - cross_ab
        merged: list[int] = []
        ia = ib = 0
        while ia < len(pos_a) and ib < len(pos_b):
            if pos_a[ia] <= pos_b[ib]:
                merged.append(pos_a[ia])
                ia += 1
            else:
                merged.append(pos_b[ib])
                ib += 1
        merged.extend(pos_a[ia:])
        merged.extend(pos_b[ib:])
        if cross_ab <= cross_ba:
            order = (ord_a + ord_b) if build_order else None  # type: ignore[operator]
            return merged, cost_a + cost_b + cross_ab, order
        order = (ord_b + ord_a) if build_order else None  # type: ignore[operator]
        return merged, cost_a + cost_b + cross_ba, order

    _, cost, order = walk(right.root)
    return cost, (tuple(order) if order is not None else None)


def _check_cap(t: Tanglegram, cap: int, what: str) -> None:
    if t.size > cap:
        raise BudgetExceededError(
            f"{what} sweeps all embedding pairs; size {t.size} is over the cap {cap} "
            f"(raise the cap to force it)",
            cap=cap,
        )


def crossing_number(t: Tanglegram, *, cap: int = DEFAULT_SIZE_CAP) -> int:
    """Minimum crossings over all layouts; exhaustive, guarded by ``cap``."""
    _check_cap(t, cap, "crossing_number")
    best: int | None = None
    for mask in range(1 << t.left.internal_count):
        order = t.left.leaf_order(mask)
        left_pos = {lab: k for k, lab in enumerate(order)}
        cost, _ = _min_right(t, left_pos, build_order=False)
        if best is None or cost < best:
            best = cost
        if best == 0:
            break
    assert best is not None
    return best


def min_crossing_layout(t: Tanglegram, *, cap: int = DEFAULT_SIZE_CAP) -> tuple[Layout, int]:
    """A crossing-minimal layout and its count.

    Ties go to the smallest swap-mask pair: left masks are scanned in
    increasing order and only a strictly better count replaces the
    incumbent, while the right side prefers stored orientations.
    """
    _check_cap(t, cap, "min_crossing_layout")
    best_cost: int | None = None
    best_left: tuple[Label, ...] | None = None
    best_right: tuple[Label, ...] | None = None
    for mask in range(1 << t.left.internal_count):
        order = t.left.leaf_order(mask)
        left_pos = {lab: k for k, lab in enumerate(order)}
        cost, rorder = _min_right(t, left_pos, build_order=True)
        if best_cost is None or cost < best_cost:
            best_cost, best_left, best_right = cost, order, rorder
        if best_cost == 0:
            break
    assert best_cost is not None and best_left is not None and best_right is not None
    return Layout(t, best_left, best_right), best_cost


# ----------------------------------------------------------------------
# excluded subtanglegrams and planarity

def excluded_tanglegrams() -> tuple[Tanglegram, Tanglegram]:
    """The two size-4 obstructions to planarity.

    The first is the catergram of (3,2,1,4). The second pairs two
    balanced trees (cherries {1,2} and {3,4} on each side) with the
    matching 1:1, 2:3, 3:2, 4:4; its trees are not caterpillars.
    """
    first = catergram(Permutation((3, 2, 1, 4)))
    balanced = RootedBinaryTree.from_nested(((1, 2), (3, 4)))
    second = Tanglegram(balanced, balanced, {1: 1, 2: 3, 3: 2, 4: 4})
    return first, second


@lru_cache(maxsize=1)
def _excluded_fingerprints():
    return tuple(
        (distance_pairs(e), canonical_form(e)) for e in excluded_tanglegrams()
    )


def is_planar(t: Tanglegram, method: str = "kuratowski", *, cap: int = DEFAULT_SIZE_CAP) -> bool:
    """Decide planarity.

    ``kuratowski`` scans every 4-edge subset for an induced copy of one
    of the two obstructions; ``oracle`` asks whether the crossing number
    is zero (subject to the sweep's size cap). The two methods agree;
    the test suite exercises that equivalence.
    """
    if method == "oracle":
        return crossing_number(t, cap=cap) == 0
    if method != "kuratowski":
        raise ValueError(f"unknown method {method!r}")
    if t.size < 4:
        return True
    targets = _excluded_fingerprints()
    for subset in combinations(t.edges, 4):
        cand = induced_subtanglegram(t, subset)
        dp = distance_pairs(cand)
        for want_dp, want_form in targets:
            if dp == want_dp and canonical_form(cand) == want_form:
                return False
    return True


_FORBIDDEN_PATTERNS = tuple(
    Permutation(p) for p in ((3, 2, 1, 4), (4, 2, 1, 3), (3, 2, 4, 1), (4, 2, 3, 1))
)


def is_planar_catergram(pi: Permutation) -> bool:
    """Planarity of the catergram of ``pi`` by forbidden patterns.

    The four patterns are the bar set of (3,2,1,4); the catergram is
    planar exactly when none of them occurs in ``pi``.
    """
    return all(contains_pattern(pi, p) is None for p in _FORBIDDEN_PATTERNS)


# ----------------------------------------------------------------------
# crossing-free layouts

def _cater_planar_positions(pi: Permutation) -> tuple[int, ...] | None:
    """Left order (as distance labels) of the first zero-crossing layout
    of the catergram of ``pi``, or None when there is none.

    Zero-crossing left orders keep, for every k, the k largest labels
    contiguous, so each candidate grows from the top: n, then n-1 at
    either end, down to 1. The image under pi must satisfy the same
    contiguity, which prunes a branch as soon as some block of large
    images is broken or walled off from both ends. Branching prefers the
    low end, which makes the first hit the one a swap-mask sweep in
    increasing mask order would find.
    """
    n = len(pi)
    vals = pi.entries
    # largest image over the labels 1..v
    max_img_upto = [0] * (n + 1)
    for v in range(1, n + 1):
        max_img_upto[v] = max(max_img_upto[v - 1], vals[v - 1])

    block: list[int] = [n]

    def viable(next_value: int) -> bool:
        k = len(block)
        imgs = [vals[x - 1] for x in block]
        by_img = sorted(range(k), key=lambda idx: -imgs[idx])
        ranked = sorted(imgs, reverse=True)
        max_future = max_img_upto[next_value]
        lo = hi = by_img[0]
        for t in range(k):
            lo = min(lo, by_img[t])
            hi = max(hi, by_img[t])
            if hi - lo != t:
                return False  # a top block of images already has a gap
            below = ranked[t + 1] if t + 1 < k else 0
            if max_future > below and lo != 0 and hi != k - 1:
                return False  # more large images must attach, but the block is walled in
        return True

    def dfs(v: int) -> bool:
        if v == 0:
            return is_cater_good([vals[x - 1] for x in block])
        for side in (0, 1):
            if side == 0:
                block.insert(0, v)
            else:
                block.append(v)
            if viable(v - 1) and dfs(v - 1):
                return True
            if side == 0:
                block.pop(0)
            else:
                block.pop()
        return False

    if dfs(n - 1):
        return tuple(block)
    return None


def planar_layout(t: Tanglegram, *, cap: int = DEFAULT_SIZE_CAP) -> Layout | None:
    """A zero-crossing layout, or None if the tanglegram is not planar.

    Catergrams use the contiguity search above, which needs no size cap.
    Other tanglegrams sweep left embeddings in increasing swap-mask
    order under ``cap``; a zero-crossing layout forces the right order
    to list the partners in left order, so each left order needs one
    consistency check only.
    """
    if is_catergram(t):
        pi = catergram_permutation(t)
        seq = _cater_planar_positions(pi)
        if seq is None:
            return None
        label_at = {p: lab for lab, p in _distance_positions(t.left).items()}
        left_order = tuple(label_at[p] for p in seq)
        right_order = tuple(t.right_partner(lab) for lab in left_order)
        return Layout(t, left_order, right_order)
    _check_cap(t, cap, "planar_layout")
    for mask in range(1 << t.left.internal_count):
        order = t.left.leaf_order(mask)
        partner_seq = tuple(t.right_partner(lab) for lab in order)
        if t.right.order_consistent(partner_seq):
            return Layout(t, order, partner_seq)
    return None


def rho_layout(i: int) -> Layout:
    """Closed-form crossing-free layout for the catergram of rho(i).

    The left order rises through 1, 2, 3, the odd labels 5..9+2i and the
    top three labels, then falls through the even labels 8+2i..4; it is
    unimodal, and its image under rho(i) is the same sequence advanced
    by one with a trailing 1, so both sides are consistent and no two
    matching edges cross.
    """
    from .antichain import rho as rho_perm  # local import keeps modules acyclic

    if i < 1:
        raise ValueError("family index must be at least 1")
    p = rho_perm(i)
    left = (
        [1, 2, 3]
        + list(range(5, 10 + 2 * i, 2))
        + [10 + 2 * i, 11 + 2 * i, 12 + 2 * i]
        + list(range(8 + 2 * i, 3, -2))
    )
    right = [p(a) for a in left]
    return Layout(catergram(p), tuple(left), tuple(right))
