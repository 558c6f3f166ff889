"""Rooted binary trees with uniquely labeled leaves.

Every internal vertex has exactly two children and every leaf carries a
label (an int, or a short string free of structural characters). Trees
are immutable: operations that "modify" a tree return a new one.

Vertices are integer ids assigned in preorder with the root at 0. Child
pairs keep a stored order; the order carries no meaning for equality,
which is up to isomorphism of labeled rooted trees, but it anchors the
text form and the enumeration of plane embeddings.

The text form is a Newick-like expression without a trailing semicolon:
a leaf is its label token, an internal vertex is ``(A,B)``. Printing a
parsed tree reproduces the text byte for byte.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence

Label = int | str
Nested = object  # a Label, or a 2-tuple of Nested

_NEWICK_DELIMS = "(),;"
_FORBIDDEN_IN_LABELS = "(),;:"


def label_sort_key(label: Label) -> tuple[int, int | str]:
    """Total order over int and str labels: ints first, numerically."""
    if isinstance(label, int):
        return (0, label)
    return (1, str(label))


def _check_label(label: object) -> None:
    if isinstance(label, bool) or not isinstance(label, (int, str)):
        raise ValueError(f"leaf labels must be int or str, got {label!r}")
    if isinstance(label, str):
        if not label or any(c in _FORBIDDEN_IN_LABELS or c.isspace() for c in label):
            raise ValueError(f"string label {label!r} is empty or contains a reserved character")


class RootedBinaryTree:
    """An immutable rooted tree whose internal vertices all have two children.

    Construct with :meth:`from_nested`, :meth:`from_newick` or
    :func:`caterpillar`; the raw constructor takes a child table and a
    leaf-label table and validates shape, connectivity and label
    uniqueness.
    """

    __slots__ = (
        "_kids",
        "_label_of",
        "_vertex_of",
        "_depth_of",
        "_desc_labels",
        "_internal_bit",
        "_n_leaves",
        "_canon",
    )

    def __init__(
        self,
        kids: Sequence[tuple[int, int] | None],
        labels: Mapping[int, Label],
    ):
        table: list[tuple[int, int] | None] = []
        for k in kids:
            table.append(None if k is None else (int(k[0]), int(k[1])))
        self._kids = tuple(table)
        m = len(self._kids)
        if m == 0:
            raise ValueError("a tree needs at least one vertex")

        seen_child = [False] * m
        for pair in self._kids:
            if pair is None:
                continue
            for c in pair:
                if not 0 <= c < m:
                    raise ValueError(f"child id {c} out of range")
                if c == 0:
                    raise ValueError("the root cannot be a child")
                if seen_child[c]:
                    raise ValueError(f"vertex {c} has two parents")
                seen_child[c] = True
        if any(not seen_child[v] for v in range(1, m)):
            raise ValueError("tree is disconnected")

        label_of = dict(labels)
        leaves = [v for v in range(m) if self._kids[v] is None]
        if set(label_of) != set(leaves):
            raise ValueError("labels must cover exactly the leaves")
        for lab in label_of.values():
            _check_label(lab)
        if len(set(label_of.values())) != len(label_of):
            raise ValueError("leaf labels must be pairwise distinct")

        self._label_of = label_of
        self._vertex_of = {lab: v for v, lab in label_of.items()}
        self._n_leaves = len(leaves)

        # Depth, descendant labels and a preorder bit index per internal
        # vertex, all derived by one walk from the root.
        depth_of = [0] * m
        desc: list[frozenset[Label] | None] = [None] * m
        internal_bit: dict[int, int] = {}
        order: list[int] = []

        def walk(v: int, d: int) -> frozenset[Label]:
            depth_of[v] = d
            pair = self._kids[v]
            if pair is None:
                out = frozenset((self._label_of[v],))
            else:
                internal_bit[v] = len(internal_bit)
                out = walk(pair[0], d + 1) | walk(pair[1], d + 1)
            desc[v] = out
            order.append(v)
            return out

        walk(0, 0)
        self._depth_of = tuple(depth_of)
        self._desc_labels = tuple(desc)  # type: ignore[arg-type]
        self._internal_bit = internal_bit
        self._canon = self._canonical_string(0)

    # ------------------------------------------------------------------
    # construction helpers

    @classmethod
    def from_nested(cls, nested: Nested) -> "RootedBinaryTree":
        """Build from nested 2-tuples with labels at the leaves."""
        kids: list[tuple[int, int] | None] = []
        labels: dict[int, Label] = {}

        def build(node: Nested) -> int:
            v = len(kids)
            kids.append(None)
            if isinstance(node, tuple):
                if len(node) != 2:
                    raise ValueError("an internal vertex needs exactly two children")
                a = build(node[0])
                b = build(node[1])
                kids[v] = (a, b)
            else:
                labels[v] = node  # type: ignore[assignment]
            return v

        build(nested)
        return cls(kids, labels)

    def to_nested(self) -> Nested:
        def emit(v: int) -> Nested:
            pair = self._kids[v]
            if pair is None:
                return self._label_of[v]
            return (emit(pair[0]), emit(pair[1]))

        return emit(0)

    @classmethod
    def from_newick(cls, text: str) -> "RootedBinaryTree":
        """Parse the Newick-like text form. Digit-only tokens become ints."""
        s = text.strip()
        pos = 0

        def parse() -> Nested:
            nonlocal pos
            if pos >= len(s):
                raise ValueError("unexpected end of tree text")
            if s[pos] == "(":
                pos += 1
                left = parse()
                if pos >= len(s) or s[pos] != ",":
                    raise ValueError(f"expected ',' at column {pos}")
                pos += 1
                right = parse()
                if pos >= len(s) or s[pos] != ")":
                    raise ValueError(f"expected ')' at column {pos}")
                pos += 1
                return (left, right)
            start = pos
            while pos < len(s) and s[pos] not in _NEWICK_DELIMS and not s[pos].isspace():
                pos += 1
            if pos == start:
                raise ValueError(f"expected a leaf label at column {pos}")
            token = s[start:pos]
            return int(token) if token.isdigit() else token

        nested = parse()
        if pos != len(s):
            raise ValueError(f"trailing text after tree: {s[pos:]!r}")
        return cls.from_nested(nested)

    def to_newick(self) -> str:
        def emit(v: int) -> str:
            pair = self._kids[v]
            if pair is None:
                return str(self._label_of[v])
            return f"({emit(pair[0])},{emit(pair[1])})"

        return emit(0)

    # ------------------------------------------------------------------
    # basic accessors

    @property
    def root(self) -> int:
        return 0

    @property
    def n_leaves(self) -> int:
        return self._n_leaves

    @property
    def n_vertices(self) -> int:
        return len(self._kids)

    @property
    def internal_count(self) -> int:
        return len(self._internal_bit)

    def children(self, v: int) -> tuple[int, int] | None:
        return self._kids[v]

    def is_leaf(self, v: int) -> bool:
        return self._kids[v] is None

    def label_at(self, v: int) -> Label:
        if self._kids[v] is not None:
            raise ValueError(f"vertex {v} is internal and has no label")
        return self._label_of[v]

    def vertex_of(self, label: Label) -> int:
        try:
            return self._vertex_of[label]
        except KeyError:
            raise ValueError(f"unknown leaf label {label!r}") from None

    def labels(self) -> frozenset[Label]:
        return frozenset(self._vertex_of)

    def subtree_labels(self, v: int) -> frozenset[Label]:
        return self._desc_labels[v]

    def leaf_depths(self) -> dict[Label, int]:
        """Depth (edge count from the root) per leaf label."""
        return {lab: self._depth_of[v] for lab, v in self._vertex_of.items()}

    # ------------------------------------------------------------------
    # structure predicates

    def is_caterpillar(self) -> bool:
        """True iff the leaf depth multiset is 1, 2, ..., n-2, n-1, n-1.

        Equivalently: the internal vertices form a path starting at the
        root. Any tree with 2 or 3 leaves qualifies; a single leaf does
        not (the shape is only defined from two leaves up).
        """
        n = self._n_leaves
        if n < 2:
            return False
        depths = sorted(self._depth_of[v] for v in self._vertex_of.values())
        return depths == list(range(1, n - 1)) + [n - 1, n - 1]

    def order_consistent(self, order: Sequence[Label]) -> bool:
        """True iff every internal vertex's leaves form a contiguous block.

        ``order`` must be a permutation of the leaf labels; anything else
        raises ValueError. The orders accepted here are exactly the leaf
        sequences of plane embeddings of the tree, so for a tree with k
        internal vertices exactly 2**k orders pass.
        """
        seq = tuple(order)
        if len(seq) != self._n_leaves or set(seq) != set(self._vertex_of):
            raise ValueError("order must be a permutation of the leaf labels")
        pos = {lab: k for k, lab in enumerate(seq)}
        for v, pair in enumerate(self._kids):
            if pair is None:
                continue
            block = self._desc_labels[v]
            ps = [pos[lab] for lab in block]
            if max(ps) - min(ps) + 1 != len(ps):
                return False
        return True

    # ------------------------------------------------------------------
    # plane embeddings

    def leaf_order(self, swap_mask: int = 0) -> tuple[Label, ...]:
        """Leaf sequence of the plane embedding selected by ``swap_mask``.

        Bit k of the mask flips the stored child order at the k-th
        internal vertex in preorder. Mask 0 reads the tree as stored.
        """
        if not 0 <= swap_mask < (1 << self.internal_count):
            raise ValueError("swap mask out of range")
        out: list[Label] = []

        def walk(v: int) -> None:
            pair = self._kids[v]
            if pair is None:
                out.append(self._label_of[v])
                return
            a, b = pair
            if swap_mask >> self._internal_bit[v] & 1:
                a, b = b, a
            walk(a)
            walk(b)

        walk(0)
        return tuple(out)

    def all_leaf_orders(self) -> Iterator[tuple[Label, ...]]:
        """All consistent leaf orders, in increasing swap-mask order."""
        for mask in range(1 << self.internal_count):
            yield self.leaf_order(mask)

    # ------------------------------------------------------------------
    # induced subtree

    def induced(self, labels: Iterable[Label]) -> "RootedBinaryTree":
        """Smallest subtree spanning the given leaves, degree-2 vertices suppressed.

        The new root is the vertex closest to the old root, so a root
        left with a single child is contracted downward until a
        branching vertex or a lone leaf is reached.
        """
        want = set(labels)
        if not want:
            raise ValueError("the label set must be non-empty")
        unknown = want - set(self._vertex_of)
        if unknown:
            raise ValueError(f"unknown leaf labels: {sorted(map(str, unknown))}")

        def build(v: int) -> Nested | None:
            pair = self._kids[v]
            if pair is None:
                lab = self._label_of[v]
                return lab if lab in want else None
            a = build(pair[0])
            b = build(pair[1])
            if a is None:
                return b
            if b is None:
                return a
            return (a, b)

        nested = build(0)
        assert nested is not None
        return RootedBinaryTree.from_nested(nested)

    # ------------------------------------------------------------------
    # equality up to isomorphism of labeled rooted trees

    def _canonical_string(self, v: int) -> str:
        pair = self._kids[v]
        if pair is None:
            lab = self._label_of[v]
            tag = "i" if isinstance(lab, int) else "s"
            return f"<{tag}{lab}>"
        a = self._canonical_string(pair[0])
        b = self._canonical_string(pair[1])
        if b < a:
            a, b = b, a
        return f"({a}{b})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RootedBinaryTree):
            return NotImplemented
        return self._canon == other._canon

    def __hash__(self) -> int:
        return hash(self._canon)

    def __repr__(self) -> str:
        return f"RootedBinaryTree.from_newick({self.to_newick()!r})"


def caterpillar(n: int) -> RootedBinaryTree:
    """The caterpillar with n leaves under the distance labeling.

    The internal vertices form a path from the root. The lone leaf at
    depth i is labeled i for 1 <= i <= n-2; the two deepest leaves sit
    at depth n-1 and are labeled n-1 and n, with n-1 first in stored
    order. Requires n >= 2.
    """
    if n < 2:
        raise ValueError("a caterpillar needs at least 2 leaves")
    nested: Nested = (n - 1, n)
    for d in range(n - 2, 0, -1):
        nested = (d, nested)
    return RootedBinaryTree.from_nested(nested)
