"""Subdigons: polygon dissections with a distinguished roof edge.

A subdigon is a polygon subdivided by noncrossing arcs, with one designated
edge (the roof).  It is stored recursively: the central face (the one whose
boundary contains the roof) has n >= 1 further edges, listed counterclockwise
starting from the roof, and each such slot either is a boundary edge of the
polygon (stored as None) or glues in the subdigon that lies behind an
internal arc.  The lone roofed edge with no face at all is the trivial
subdigon.  Its type is the vector m with m_n = number of faces having n + 1
edges (a roof plus n others); bigon faces (n = 1) are allowed.

A face is *external* if its only internal edge is its own roof, and the
boundary edges of the polygon are its *external edges*.  Converting slots to
children maps subdigons to ordered trees so that faces become internal
nodes, external edges become leaves, and external faces become clawed nodes;
the counterclockwise boundary walk becomes post-order traversal.

Text form mirrors trees: a face is "(" + slots + ")", a boundary slot is
"()", and the trivial subdigon is "*e*".  A subdigon and its tree image
therefore serialize identically except for the trivial case.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .hypercatalan import hyper_catalan
from .reports import CheckGroup, Mismatch, VerificationReport
from .series import TypeVector, enumerate_types
from .trees import (
    LEAF,
    OrderedTree,
    Path,
    compose_tree,
    decompose_tree,
    enumerate_marked_trees,
    enumerate_trees,
    tree_type,
)

TRIVIAL_TEXT = "*e*"


@dataclass(frozen=True)
class Subdigon:
    """Either the trivial lone roofed edge (no slots) or a central face.

    Glued slots must themselves contain a face; a lone edge behind an arc
    would just be a boundary edge, which is written as None.  This keeps the
    representation canonical.
    """

    slots: tuple[Subdigon | None, ...] = ()

    def __post_init__(self) -> None:
        for slot in self.slots:
            if slot is not None and slot.is_trivial:
                raise ValueError(
                    "a glued slot must hold a face; boundary edges are None"
                )

    @property
    def is_trivial(self) -> bool:
        return not self.slots

    def serialize(self) -> str:
        if self.is_trivial:
            return TRIVIAL_TEXT
        return self._face_text()

    def _face_text(self) -> str:
        parts = [
            "()" if slot is None else slot._face_text() for slot in self.slots
        ]
        return "(" + "".join(parts) + ")"

    @classmethod
    def parse(cls, text: str) -> Subdigon:
        if text == TRIVIAL_TEXT:
            return cls()
        sub, end = _parse_face(text, 0)
        if end != len(text):
            raise ValueError(f"trailing input after position {end} in {text!r}")
        if sub is None:
            raise ValueError(
                f"{text!r} is a bare boundary edge; the trivial subdigon is {TRIVIAL_TEXT!r}"
            )
        return sub

    def __repr__(self) -> str:
        return f"Subdigon.parse({self.serialize()!r})"


TRIVIAL = Subdigon()


def _parse_face(text: str, start: int) -> tuple[Subdigon | None, int]:
    if start >= len(text) or text[start] != "(":
        raise ValueError(f"expected '(' at position {start} in {text!r}")
    pos = start + 1
    slots: list[Subdigon | None] = []
    while pos < len(text) and text[pos] != ")":
        slot, pos = _parse_face(text, pos)
        slots.append(slot)
    if pos >= len(text):
        raise ValueError(f"unbalanced parentheses in {text!r}")
    if not slots:
        return None, pos + 1  # "()" is a boundary edge, not a face
    return Subdigon(tuple(slots)), pos + 1


@dataclass(frozen=True)
class MarkedSubdigon:
    """A subdigon with one marked external edge.

    The mark indexes the counterclockwise order of external edges from the
    roof and must fall at or before the completion of the first external
    face; the trivial subdigon's lone edge is markable (mark 0).
    """

    subdigon: Subdigon
    mark: int

    def __post_init__(self) -> None:
        limit = count_initial_external_edges(self.subdigon)
        if not 0 <= self.mark < limit:
            raise ValueError(
                f"mark {self.mark} lies beyond the first external face (limit {limit})"
            )

    def serialize(self) -> str:
        if self.subdigon.is_trivial:
            return "*"
        seen = 0

        def rec(face: Subdigon) -> str:
            nonlocal seen
            parts = []
            for slot in face.slots:
                if slot is None:
                    parts.append("*" if seen == self.mark else "()")
                    seen += 1
                else:
                    parts.append(rec(slot))
            return "(" + "".join(parts) + ")"

        return rec(self.subdigon)


def subdigon_type(sub: Subdigon) -> TypeVector:
    """Face-size counts: entry n is the number of faces with n + 1 edges."""
    counts: dict[int, int] = {}
    stack = [sub] if not sub.is_trivial else []
    while stack:
        face = stack.pop()
        size = len(face.slots)
        counts[size] = counts.get(size, 0) + 1
        stack.extend(slot for slot in face.slots if slot is not None)
    if not counts:
        return TypeVector.zero()
    top = max(counts)
    return TypeVector(tuple(counts.get(n, 0) for n in range(1, top + 1)))


def subdigon_to_tree(sub: Subdigon) -> OrderedTree:
    """Structure map: the roof becomes the root, slots become children.

    Boundary edges turn into leaves and glued subdigons into subtrees, so
    types are preserved.
    """
    if sub.is_trivial:
        return LEAF
    return OrderedTree(
        tuple(
            LEAF if slot is None else subdigon_to_tree(slot) for slot in sub.slots
        )
    )


def tree_to_subdigon(tree: OrderedTree) -> Subdigon:
    """Inverse structure map: glue a face of size n + 1 per n-child node."""
    if tree.is_leaf:
        return TRIVIAL
    return Subdigon(
        tuple(
            None if child.is_leaf else tree_to_subdigon(child)
            for child in tree.children
        )
    )


def external_faces(sub: Subdigon) -> list[tuple[Path, Subdigon]]:
    """Faces whose every non-roof edge is a boundary edge.

    Listed in the order their boundary walks complete when travelling
    counterclockwise from the roof, and identified by slot paths.  The
    trivial subdigon has no face, hence no external face.
    """
    out: list[tuple[Path, Subdigon]] = []

    def rec(face: Subdigon, path: Path) -> None:
        for i, slot in enumerate(face.slots):
            if slot is not None:
                rec(slot, path + (i,))
        if all(slot is None for slot in face.slots):
            out.append((path, face))

    if not sub.is_trivial:
        rec(sub, ())
    return out


def external_edges_ccw(sub: Subdigon) -> list[Path]:
    """Boundary edges in counterclockwise order starting beside the roof.

    Edges are identified by slot paths; the list matches the post-order leaf
    sequence of the tree image path-for-path.  The trivial subdigon's lone
    edge is represented by the empty path.
    """
    if sub.is_trivial:
        return [()]
    out: list[Path] = []

    def rec(face: Subdigon, path: Path) -> None:
        for i, slot in enumerate(face.slots):
            if slot is None:
                out.append(path + (i,))
            else:
                rec(slot, path + (i,))

    rec(sub, ())
    return out


def count_initial_external_edges(sub: Subdigon) -> int:
    """Markable edges: those met at or before the first external face.

    Walking counterclockwise from the roof, the first face whose boundary
    walk completes is external; its own edges still count.  The trivial
    subdigon's lone edge is markable by convention, matching the single
    markable leaf of the one-node tree.
    """
    if sub.is_trivial:
        return 1
    count = 0
    face = sub
    while True:
        descend = None
        for slot in face.slots:
            if slot is None:
                count += 1
            else:
                descend = slot
                break
        if descend is None:
            return count
        face = descend


def enumerate_subdigons(m: TypeVector) -> list[Subdigon]:
    """Every subdigon of type m, exactly once, in a fixed order.

    Generated by choosing the central face size n + 1 (ascending n) and then
    distributing the remaining faces behind its n non-roof edges over all
    ordered type compositions.  Independent of the tree enumerator.
    """
    return list(_enumerate_subdigons_cached(m))


@lru_cache(maxsize=None)
def _enumerate_subdigons_cached(m: TypeVector) -> tuple[Subdigon, ...]:
    if not m:
        return (TRIVIAL,)
    out: list[Subdigon] = []
    for n in range(1, len(m.entries) + 1):
        if not m.multiplicity(n):
            continue
        rest = m - TypeVector.unit(n)
        for parts in _type_compositions(rest, n):
            slot_choices = [
                (None,) if not part else _enumerate_subdigons_cached(part)
                for part in parts
            ]
            for combo in product(*slot_choices):
                out.append(Subdigon(combo))
    return tuple(out)


def _type_compositions(total: TypeVector, n: int) -> list[tuple[TypeVector, ...]]:
    """All ordered n-tuples of type vectors summing to ``total``."""
    if n == 1:
        return [(total,)]
    out = []
    for head in _subvectors(total):
        for tail in _type_compositions(total - head, n - 1):
            out.append((head,) + tail)
    return out


def _subvectors(v: TypeVector) -> list[TypeVector]:
    ranges = [range(e + 1) for e in v.entries]
    return [TypeVector(combo) for combo in product(*ranges)]


def count_marked_subdigons(m: TypeVector) -> int:
    """Number of subdigons of type m with a marked initial external edge.

    Exhaustive, so only feasible at modest edge weight.  Equals the Geode
    coefficient of t^m, mirroring the marked-tree count.
    """
    return sum(
        count_initial_external_edges(sub) for sub in enumerate_subdigons(m)
    )


def enumerate_marked_subdigons(m: TypeVector) -> list[MarkedSubdigon]:
    return [
        MarkedSubdigon(sub, mark)
        for sub in enumerate_subdigons(m)
        for mark in range(count_initial_external_edges(sub))
    ]


def decompose_subdigon(sub: Subdigon) -> tuple[int, MarkedSubdigon]:
    """Delete the first external face met counterclockwise from the roof.

    Returns (n, marked) where the face had n + 1 edges; its former roof is
    now a boundary edge carrying the mark.  Deleting the central face of a
    one-face subdigon leaves the marked trivial subdigon.
    """
    if sub.is_trivial:
        raise ValueError("the trivial subdigon has no face to delete")
    path: list[int] = []
    face = sub
    while True:
        step = next(
            (i for i, slot in enumerate(face.slots) if slot is not None), None
        )
        if step is None:
            break
        path.append(step)
        face = face.slots[step]
    n = len(face.slots)
    if not path:
        return n, MarkedSubdigon(TRIVIAL, 0)
    # slots passed before each descent are all boundary edges, so the new
    # edge sits at counterclockwise position sum(path)
    stripped = _replace_slot(sub, tuple(path), None)
    return n, MarkedSubdigon(stripped, sum(path))


def _replace_slot(
    face: Subdigon, path: Path, replacement: Subdigon | None
) -> Subdigon:
    slots = list(face.slots)
    if len(path) == 1:
        slots[path[0]] = replacement
    else:
        slots[path[0]] = _replace_slot(slots[path[0]], path[1:], replacement)
    return Subdigon(tuple(slots))


def compose_subdigon(n: int, marked: MarkedSubdigon) -> Subdigon:
    """Glue a face with n + 1 edges onto the marked boundary edge.

    Inverse of decompose_subdigon; gluing onto the trivial subdigon yields
    the bare (n + 2)-gon with a single face.
    """
    if n < 1:
        raise ValueError(f"a face needs at least one non-roof edge, got n={n}")
    new_face = Subdigon((None,) * n)
    if marked.subdigon.is_trivial:
        return new_face
    seen = 0

    def rec(face: Subdigon) -> Subdigon:
        nonlocal seen
        slots: list[Subdigon | None] = []
        for slot in face.slots:
            if slot is None:
                slots.append(new_face if seen == marked.mark else None)
                seen += 1
            else:
                slots.append(rec(slot))
        return Subdigon(tuple(slots))

    return rec(marked.subdigon)


def verify_bijections(bound: int) -> VerificationReport:
    """Exhaustively exercise every bijection up to the given edge weight.

    Checks, per type m: the tree/subdigon structure maps invert each other
    and preserve types; both direct counts agree with the hyper-Catalan
    closed form; face deletion and leaf stripping invert their composers and
    biject onto the marked structures of the reduced types; and deletion
    commutes with the structure map, including the induced marks.  Mismatch
    entries record how many objects (expected vs observed) survived each
    check for the offending monomial.
    """
    roundtrip = _Tally("structure maps invert each other and preserve type")
    counts = _Tally("direct enumeration counts match the closed form")
    strip = _Tally("deletion/attachment round trips")
    coverage = _Tally("deletion bijects onto marked structures")
    square = _Tally("deletion commutes with the structure map")

    for m in enumerate_types(bound):
        trees = enumerate_trees(m)
        subs = enumerate_subdigons(m)
        expected = hyper_catalan(m)

        ok = sum(
            1
            for t in trees
            if subdigon_to_tree(tree_to_subdigon(t)) == t
            and subdigon_type(tree_to_subdigon(t)) == m
        )
        ok += sum(
            1
            for s in subs
            if tree_to_subdigon(subdigon_to_tree(s)) == s
            and tree_type(subdigon_to_tree(s)) == m
        )
        roundtrip.add(m, len(trees) + len(subs), ok)

        counts.add(m, 2 * expected, len(trees) + len(subs))

        if not m:
            continue

        tree_pairs = [decompose_tree(t) for t in trees]
        sub_pairs = [decompose_subdigon(s) for s in subs]
        ok = sum(
            1
            for t, (n, marked) in zip(trees, tree_pairs)
            if compose_tree(n, marked) == t
        )
        ok += sum(
            1
            for s, (n, marked) in zip(subs, sub_pairs)
            if compose_subdigon(n, marked) == s
        )
        strip.add(m, len(trees) + len(subs), ok)

        want_tree = {
            (n, marked.tree, marked.mark)
            for n in range(1, len(m.entries) + 1)
            if m.multiplicity(n)
            for marked in enumerate_marked_trees(m - TypeVector.unit(n))
        }
        got_tree = {(n, mk.tree, mk.mark) for n, mk in tree_pairs}
        want_sub = {
            (n, marked.subdigon, marked.mark)
            for n in range(1, len(m.entries) + 1)
            if m.multiplicity(n)
            for marked in enumerate_marked_subdigons(m - TypeVector.unit(n))
        }
        got_sub = {(n, mk.subdigon, mk.mark) for n, mk in sub_pairs}
        coverage.add(
            m,
            len(want_tree) + len(want_sub),
            len(want_tree & got_tree) + len(want_sub & got_sub)
            if len(got_tree) == len(tree_pairs) and len(got_sub) == len(sub_pairs)
            else -1,
        )

        ok = 0
        for s in subs:
            n_tree, marked_tree = decompose_tree(subdigon_to_tree(s))
            n_sub, marked_sub = decompose_subdigon(s)
            if (
                n_tree == n_sub
                and marked_tree.tree == subdigon_to_tree(marked_sub.subdigon)
                and marked_tree.mark == marked_sub.mark
            ):
                ok += 1
        square.add(m, len(subs), ok)

    groups = tuple(
        tally.group() for tally in (roundtrip, counts, strip, coverage, square)
    )
    return VerificationReport("bijections", bound, groups)


class _Tally:
    """Accumulates per-monomial expected/observed counts into a CheckGroup."""

    def __init__(self, label: str):
        self.label = label
        self.checked = 0
        self.mismatches: list[Mismatch] = []

    def add(self, m: TypeVector, expected: int, observed: int) -> None:
        self.checked += expected
        if expected != observed:
            self.mismatches.append(Mismatch(m.text, expected, observed))

    def group(self) -> CheckGroup:
        return CheckGroup(self.label, self.checked, tuple(self.mismatches))
