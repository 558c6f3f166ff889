"""Two built-in permutation families and their verifiers.

``rho(i)`` has size 12+2i. Its catergrams are pairwise incomparable
under the induced-subtanglegram order: no member of the bar set of an
earlier rho embeds as a pattern of a later one. verify_antichain checks
that on a finite prefix of the family.

``pi_seq(i)`` is rho(i) turned upside down. Its catergrams form a
nested family: dropping positions 2 and 4 from pi_seq(i+1) yields
tilde(pi_seq(i)) exactly. verify_chain checks both that identity and
the induced-subtanglegram containment it certifies.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from .perm import Permutation, bar_members, contains_pattern, restrict, tilde
from .tanglegram import catergram, is_induced_sub


def rho(i: int) -> Permutation:
    """Member i (i >= 1) of the incomparable family; size 12+2i."""
    if i < 1:
        raise ValueError("family index must be at least 1")
    n = 12 + 2 * i
    img = [0] * n
    img[0:4] = [2, 3, 5, 1]
    for j in range(5, 9 + 2 * i):
        img[j - 1] = j + 2 if j % 2 else j - 2
    img[n - 4 : n] = [10 + 2 * i, 11 + 2 * i, 12 + 2 * i, 8 + 2 * i]
    return Permutation(img)


def pi_seq(i: int) -> Permutation:
    """Member i of the nested family: rho(i) upside down."""
    p = rho(i)
    n = len(p)
    return Permutation(n + 1 - v for v in p.entries)


@dataclass(frozen=True)
class PatternCheck:
    """One pattern search: bar-set member ``sigma`` of rho(i) against rho(j)."""

    i: int
    j: int
    sigma: str
    witness: tuple[int, ...] | None
    elapsed: float


@dataclass(frozen=True)
class AntichainReport:
    max_index: int
    adjacent_only: bool
    checks: tuple[PatternCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.witness is None for c in self.checks)


def verify_antichain(
    max_index: int,
    *,
    adjacent_only: bool = False,
    family: Callable[[int], Permutation] = rho,
    pair_timeout: float | None = None,
    on_check: Callable[[PatternCheck], None] | None = None,
) -> AntichainReport:
    """Check pairwise incomparability on the family prefix 1..max_index.

    For each pair i < j (adjacent_only restricts to j == i+1) and each
    bar-set member sigma of family(i), searches for sigma as a pattern
    of family(j). A found witness is an embedding of the smaller
    catergram into the larger one and fails the report. Pairs are
    visited in ascending (i, j) order; ``pair_timeout`` (seconds per
    pair) turns an overlong search into BudgetExceededError.
    """
    if max_index < 2:
        raise ValueError("need max_index >= 2 to form a pair")
    perms = {i: family(i) for i in range(1, max_index + 1)}
    checks: list[PatternCheck] = []
    for i in range(1, max_index):
        top = i + 2 if adjacent_only else max_index + 1
        for j in range(i + 1, top):
            deadline = None if pair_timeout is None else time.monotonic() + pair_timeout
            for tag, sigma in bar_members(perms[i]):
                t0 = time.perf_counter()
                witness = contains_pattern(perms[j], sigma, deadline=deadline)
                rec = PatternCheck(i, j, tag, witness, time.perf_counter() - t0)
                checks.append(rec)
                if on_check is not None:
                    on_check(rec)
    return AntichainReport(max_index, adjacent_only, tuple(checks))


@dataclass(frozen=True)
class ChainCheck:
    """Containment of member i in member i+1 of the nested family."""

    i: int
    restriction_ok: bool
    induced_ok: bool
    elapsed: float


@dataclass(frozen=True)
class ChainReport:
    max_index: int
    checks: tuple[ChainCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.restriction_ok and c.induced_ok for c in self.checks)


def verify_chain(
    max_index: int,
    *,
    family: Callable[[int], Permutation] = pi_seq,
    on_check: Callable[[ChainCheck], None] | None = None,
) -> ChainReport:
    """Check the nesting of consecutive family members up to max_index.

    Two facts per step i: dropping positions 2 and 4 of family(i+1)
    restricts it to exactly tilde(family(i)); and the catergram of
    family(i) is an induced subtanglegram of the catergram of
    family(i+1), decided through the catergram pattern route.
    """
    if max_index < 2:
        raise ValueError("need max_index >= 2 to form a step")
    checks: list[ChainCheck] = []
    for i in range(1, max_index):
        t0 = time.perf_counter()
        small = family(i)
        big = family(i + 1)
        positions = [p for p in range(1, len(big) + 1) if p not in (2, 4)]
        restriction_ok = restrict(big, positions) == tilde(small)
        induced_ok = is_induced_sub(catergram(small), catergram(big))
        rec = ChainCheck(i, restriction_ok, induced_ok, time.perf_counter() - t0)
        checks.append(rec)
        if on_check is not None:
            on_check(rec)
    return ChainReport(max_index, tuple(checks))
