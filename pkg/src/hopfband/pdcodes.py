"""Planar diagram codes: parsing, orientation bookkeeping, and diagram moves.

A crossing X[a,b,c,d] lists the four edge labels counterclockwise around
the crossing starting at the incoming under-strand, so the under-strand
runs a -> c and the over-strand occupies b and d.  A crossing is
positive when the over-strand comes in at d, negative when it comes in
at b.  A Diagram is a tuple of such crossings plus a count of
crossingless loops; "PD[]+1" is the unknot.

Orientation handling: the under-slots of the tuples claim a direction
for every strand that ever passes underneath.  The constructor walks
each component, checks the claims agree, and either raises (strict
mode, used for parsing) or rotates the offending tuples by two
positions so the majority direction wins (repair mode, used internally
after unoriented smoothings, which cannot know directions).

Edge labels are arbitrary positive integers; operations that merge
edges always keep the smaller label, which keeps memo keys stable no
matter what order moves were applied in.
"""

from __future__ import annotations

import re
from functools import cached_property


class InvalidDiagram(ValueError):
    pass


def _find(parent, x):
    root = x
    while parent.get(root, root) != root:
        root = parent[root]
    while parent.get(x, x) != x:
        parent[x], x = root, parent[x]
    return root


def _merge_edges(kept, pairs):
    """Glue edge ends pairwise; returns (relabeled crossings, closed loops).

    Each pair (u, v) joins an end of u to an end of v.  Classes that no
    longer touch any kept crossing have closed up into circles.
    """
    parent: dict[int, int] = {}
    for u, v in pairs:
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            lo, hi = (ru, rv) if ru < rv else (rv, ru)
            parent[hi] = lo
    new = [tuple(_find(parent, x) for x in cr) for cr in kept]
    present = {x for cr in new for x in cr}
    reps = {_find(parent, u) for pr in pairs for u in pr}
    loops = sum(1 for r in reps if r not in present)
    return new, loops


class Diagram:
    """Immutable oriented link diagram."""

    __slots__ = ("crossings", "loops", "components", "signs", "_heads", "_comp_of", "__dict__")

    def __init__(self, crossings, loops=0, *, repair=False):
        crossings = tuple(tuple(int(x) for x in cr) for cr in crossings)
        if loops < 0:
            raise InvalidDiagram("negative loop count")
        for cr in crossings:
            if len(cr) != 4:
                raise InvalidDiagram(f"crossing {cr} does not have 4 slots")
            if any(x < 1 for x in cr):
                raise InvalidDiagram(f"crossing {cr}: labels must be positive")
        occ: dict[int, list[tuple[int, int]]] = {}
        for ci, cr in enumerate(crossings):
            for p, e in enumerate(cr):
                occ.setdefault(e, []).append((ci, p))
        for e, slots in occ.items():
            if len(slots) != 2:
                raise InvalidDiagram(f"edge {e} appears {len(slots)} times, expected 2")

        # walk every component once, undirected, collecting arrivals
        seen: set[int] = set()
        walks = []  # (edges, arrivals) with arrivals[i] = slot edge i ends at
        for e0 in sorted(occ):
            if e0 in seen:
                continue
            edges, arrivals = [], []
            e, arr = e0, occ[e0][1]
            while True:
                seen.add(e)
                edges.append(e)
                arrivals.append(arr)
                ci, p = arr
                exit_slot = (ci, (p + 2) % 4)
                e2 = crossings[ci][(p + 2) % 4]
                s0, s1 = occ[e2]
                arr2 = s1 if s0 == exit_slot else s0
                if e2 == e0:
                    break
                e, arr = e2, arr2
            walks.append((edges, arrivals))

        # direction votes from under-slot claims
        rotate: set[int] = set()
        flip = []
        for edges, arrivals in walks:
            fwd = [i for i, (ci, p) in enumerate(arrivals) if p == 0]
            bwd = [i for i, (ci, p) in enumerate(arrivals) if p == 2]
            if fwd and bwd and not repair:
                raise InvalidDiagram("inconsistent strand orientations")
            reversed_ = len(bwd) > len(fwd)
            losers = fwd if reversed_ else bwd
            rotate.update(arrivals[i][0] for i in losers)
            flip.append(reversed_)

        if rotate:
            crossings = tuple(
                cr[2:] + cr[:2] if ci in rotate else cr for ci, cr in enumerate(crossings)
            )

        # final directed data
        heads: dict[int, tuple[int, int]] = {}
        comps = []
        for (edges, arrivals), reversed_ in zip(walks, flip):
            k = len(edges)
            fixed = [
                ((ci, (p + 2) % 4) if ci in rotate else (ci, p)) for ci, p in arrivals
            ]
            if not reversed_:
                for i, e in enumerate(edges):
                    heads[e] = fixed[i]
            else:
                for i, e in enumerate(edges):
                    ci, p = fixed[i - 1]
                    heads[e] = (ci, (p + 2) % 4)
                edges = [edges[0]] + edges[:0:-1]
            j = edges.index(min(edges))
            comps.append(tuple(edges[j:] + edges[:j]))
        comps.sort(key=lambda c: c[0])

        comp_of = {}
        for k, comp in enumerate(comps):
            for e in comp:
                comp_of[e] = k

        signs = []
        for ci, cr in enumerate(crossings):
            if heads[cr[0]] != (ci, 0):
                raise InvalidDiagram("under-strand claims remain inconsistent")
            if heads.get(cr[1]) == (ci, 1):
                signs.append(-1)
            elif heads.get(cr[3]) == (ci, 3):
                signs.append(1)
            else:
                raise InvalidDiagram("over-strand has no incoming end")

        object.__setattr__(self, "crossings", crossings)
        object.__setattr__(self, "loops", int(loops))
        object.__setattr__(self, "components", tuple(comps))
        object.__setattr__(self, "signs", tuple(signs))
        object.__setattr__(self, "_heads", heads)
        object.__setattr__(self, "_comp_of", comp_of)

    # Diagrams compare by content; loops of distinct labels are still distinct.
    def __eq__(self, other):
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.crossings == other.crossings and self.loops == other.loops

    def __hash__(self):
        return hash((self.crossings, self.loops))

    def __repr__(self):
        return f"Diagram({self.to_pd()!r})"

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def edges(self):
        return tuple(sorted(self._heads))

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    def component_of(self, edge: int) -> int:
        return self._comp_of[edge]

    def head(self, edge: int):
        """(crossing, slot) the edge flows into."""
        return self._heads[edge]

    def successor(self, edge: int) -> int:
        ci, p = self._heads[edge]
        return self.crossings[ci][(p + 2) % 4]

    def lk(self, i: int, j: int) -> int:
        """Linking number of components i and j (halved signed count)."""
        if i == j:
            raise ValueError("linking number needs two distinct components")
        total = 0
        for ci, cr in enumerate(self.crossings):
            a = self._comp_of[cr[0]]
            b = self._comp_of[cr[1]]
            if {a, b} == {i, j}:
                total += self.signs[ci]
        if total % 2:
            raise InvalidDiagram("odd signed crossing count between components")
        return total // 2

    @cached_property
    def passages(self):
        """Traversal order: (crossing, arrival slot) for each edge of each
        component, components in order, each from its smallest edge."""
        return tuple(
            (self._heads[e][0], self._heads[e][1]) for comp in self.components for e in comp
        )

    def first_ascent(self):
        """Index of the first crossing met from below, or None.

        Walking every component in order, a diagram is descending when
        each crossing is first reached on its over-strand.  The returned
        crossing is the one a descent-based skein recursion acts on.
        """
        met: set[int] = set()
        for ci, p in self.passages:
            if ci in met:
                continue
            if p == 0:
                return ci
            met.add(ci)
        return None

    def is_split(self) -> bool:
        if self.loops:
            return bool(self.crossings) or self.loops > 1
        if not self.crossings:
            return False
        adj: dict[int, set[int]] = {}
        for ci, cr in enumerate(self.crossings):
            for e in cr:
                adj.setdefault(e, set()).add(ci)
        stack = [0]
        found = {0}
        while stack:
            ci = stack.pop()
            for e in self.crossings[ci]:
                for cj in adj[e]:
                    if cj not in found:
                        found.add(cj)
                        stack.append(cj)
        return len(found) < len(self.crossings)

    # ---- moves ----

    def switch(self, ci: int) -> "Diagram":
        """Exchange which strand is on top at crossing ci."""
        cr = self.crossings[ci]
        t = (cr[3], cr[0], cr[1], cr[2]) if self.signs[ci] > 0 else (cr[1], cr[2], cr[3], cr[0])
        return Diagram(self.crossings[:ci] + (t,) + self.crossings[ci + 1:], self.loops)

    def mirror(self) -> "Diagram":
        out = []
        for ci, cr in enumerate(self.crossings):
            if self.signs[ci] > 0:
                out.append((cr[3], cr[0], cr[1], cr[2]))
            else:
                out.append((cr[1], cr[2], cr[3], cr[0]))
        return Diagram(out, self.loops)

    def _smooth(self, ci: int, pairs_idx) -> "Diagram":
        cr = self.crossings[ci]
        kept = [c for i, c in enumerate(self.crossings) if i != ci]
        pairs = [(cr[i], cr[j]) for i, j in pairs_idx]
        new, dl = _merge_edges(kept, pairs)
        return Diagram(new, self.loops + dl, repair=True)

    def smooth_a(self, ci: int) -> "Diagram":
        """Join a-b and c-d (rotates the under strand onto its counterclockwise
        neighbor)."""
        return self._smooth(ci, ((0, 1), (2, 3)))

    def smooth_b(self, ci: int) -> "Diagram":
        """Join a-d and b-c."""
        return self._smooth(ci, ((0, 3), (1, 2)))

    def smooth_oriented(self, ci: int) -> "Diagram":
        """The flow-respecting smoothing: a-b/c-d when positive, a-d/b-c
        when negative."""
        if self.signs[ci] > 0:
            return self._smooth(ci, ((0, 1), (2, 3)))
        return self._smooth(ci, ((0, 3), (1, 2)))

    def reverse_component(self, k: int) -> "Diagram":
        comp = set(self.components[k])
        out = []
        for ci, cr in enumerate(self.crossings):
            if cr[0] in comp:
                out.append(cr[2:] + cr[:2])
            else:
                out.append(cr)
        return Diagram(out, self.loops)

    def delete_component(self, k: int) -> "Diagram":
        comp = set(self.components[k])
        kept, pairs = [], []
        for cr in self.crossings:
            under = cr[0] in comp
            over = cr[1] in comp
            if under and over:
                continue
            if under:
                pairs.append((cr[1], cr[3]))
            elif over:
                pairs.append((cr[0], cr[2]))
            else:
                kept.append(cr)
        new, dl = _merge_edges(kept, pairs)
        return Diagram(new, self.loops + dl, repair=True)

    def simplify(self):
        """Remove kinks and cancelling clasp-free crossing pairs.

        Returns (diagram, kink_sign_sum); the second number is the total
        writhe removed, which callers fold back into bracket and skein
        normalizations.  Pair removals never change the writhe.
        """
        d, sp, sm = self._reduce()
        return d, sp - sm

    def _reduce(self):
        """simplify with the kink count split by sign: (diagram, positive
        kinks removed, negative kinks removed)."""
        crossings = list(self.crossings)
        loops = self.loops
        sp = sm = 0
        changed = True
        while changed:
            changed = False
            for ci, cr in enumerate(crossings):
                for p in range(4):
                    if cr[p] == cr[(p + 1) % 4]:
                        if p in (0, 2):
                            sp += 1
                        else:
                            sm += 1
                        kept = crossings[:ci] + crossings[ci + 1:]
                        pair = (cr[(p + 2) % 4], cr[(p + 3) % 4])
                        crossings, dl = _merge_edges(kept, [pair])
                        loops += dl
                        changed = True
                        break
                if changed:
                    break
            if changed:
                continue
            occ: dict[int, list[tuple[int, int]]] = {}
            for ci, cr in enumerate(crossings):
                for p, e in enumerate(cr):
                    occ.setdefault(e, []).append((ci, p))
            for e, slots in occ.items():
                (i, pi), (j, pj) = slots
                if i == j or pi % 2 == 0 or pj % 2 == 0:
                    continue  # e must run over both crossings
                for f in sorted(set(crossings[i]) & set(crossings[j])):
                    if f == e:
                        continue
                    fs = occ[f]
                    if {s[0] for s in fs} != {i, j} or any(p % 2 for _, p in fs):
                        continue  # f must run under both
                    cri, crj = crossings[i], crossings[j]
                    ui = cri[2] if cri[0] == f else cri[0]
                    uj = crj[2] if crj[0] == f else crj[0]
                    oi = cri[3] if cri[1] == e else cri[1]
                    oj = crj[3] if crj[1] == e else crj[1]
                    kept = [c for k, c in enumerate(crossings) if k not in (i, j)]
                    crossings, dl = _merge_edges(
                        kept, [(ui, f), (f, uj), (oi, e), (e, oj)]
                    )
                    loops += dl
                    changed = True
                    break
                if changed:
                    break
        return Diagram(crossings, loops, repair=True), sp, sm

    # ---- faces ----

    @cached_property
    def face_data(self):
        """Faces as corner walks, plus the face index on each side of
        every edge.

        Each face is a tuple of (edge, crossing, corner) steps: traverse
        the edge to the occurrence at that crossing, then cut across the
        corner between slots corner and corner+1.  Faces lie to the
        right of the traversal.  side_of[(edge, slot)] is the face index
        for the traversal of edge that ends at slot.
        """
        occ: dict[int, list[tuple[int, int]]] = {}
        for ci, cr in enumerate(self.crossings):
            for p, e in enumerate(cr):
                occ.setdefault(e, []).append((ci, p))
        faces = []
        side_of = {}
        done = set()
        for e0 in sorted(occ):
            for arr0 in occ[e0]:
                if (e0, arr0) in done:
                    continue
                face = []
                e, arr = e0, arr0
                while (e, arr) not in done:
                    done.add((e, arr))
                    side_of[(e, arr)] = len(faces)
                    ci, p = arr
                    face.append((e, ci, p))
                    dep = (ci, (p + 1) % 4)
                    e2 = self.crossings[ci][(p + 1) % 4]
                    s0, s1 = occ[e2]
                    e, arr = e2, (s1 if s0 == dep else s0)
                faces.append(tuple(face))
        return tuple(faces), side_of

    def faces(self):
        if not self.crossings:
            # k disjoint circles on the sphere bound k+1 faces; the faces
            # carry no corner steps
            return ((),) * (self.loops + 1) if self.loops else ((),)
        return self.face_data[0]

    def checkerboard(self):
        """Two-color the faces; returns a tuple of 0/1, one per face.

        Faces across an edge always take opposite colors; color 0 is the
        class containing the face with the first corner of crossing 0.
        Only meaningful for connected diagrams.
        """
        faces, side_of = self.face_data
        if not faces:
            return ()
        corner_face = {}
        for fi, face in enumerate(faces):
            for _, ci, p in face:
                corner_face[(ci, p)] = fi
        color = {corner_face[(0, 0)]: 0}
        stack = [corner_face[(0, 0)]]
        adj: dict[int, set[int]] = {}
        occ_pairs: dict[int, list[int]] = {}
        for (e, arr), fi in side_of.items():
            occ_pairs.setdefault(e, []).append(fi)
        for e, (f1, f2) in occ_pairs.items():
            if f1 == f2:
                raise InvalidDiagram("edge with one face on both sides; diagram not connected?")
            adj.setdefault(f1, set()).add(f2)
            adj.setdefault(f2, set()).add(f1)
        while stack:
            f = stack.pop()
            for g in adj.get(f, ()):
                if g not in color:
                    color[g] = 1 - color[f]
                    stack.append(g)
                elif color[g] == color[f]:
                    raise InvalidDiagram("faces are not two-colorable")
        if len(color) < len(faces):
            raise InvalidDiagram("disconnected diagram has no global checkerboard")
        return tuple(color[i] for i in range(len(faces)))

    # ---- text form ----

    def to_pd(self) -> str:
        body = ", ".join("X[%d,%d,%d,%d]" % cr for cr in self.crossings)
        tail = f"+{self.loops}" if self.loops else ""
        return f"PD[{body}]{tail}"

    def canonical_key(self):
        """Relabeling-stable cache key: breadth-first renumbering from the
        smallest label, then sorted tuples."""
        if not self.crossings:
            return ((), self.loops)
        occ: dict[int, list[int]] = {}
        for ci, cr in enumerate(self.crossings):
            for e in cr:
                occ.setdefault(e, []).append(ci)
        new: dict[int, int] = {}
        for e0 in sorted(occ):
            if e0 in new:
                continue
            new[e0] = len(new)
            queue = [e0]
            while queue:
                e = queue.pop(0)
                for ci in occ[e]:
                    for x in self.crossings[ci]:
                        if x not in new:
                            new[x] = len(new)
                            queue.append(x)
        relabeled = sorted(tuple(new[x] for x in cr) for cr in self.crossings)
        return (tuple(relabeled), self.loops)

    # ---- circle insertions ----

    def _fresh(self, k: int):
        base = max(self._heads, default=0)
        return [base + i + 1 for i in range(k)]

    def insert_meridian(self, edge: int, *, circle_over_first: bool,
                        circle_over_second: bool) -> "Diagram":
        """Add a small circle crossing the given edge twice.

        The circle meets the edge at two consecutive points, passing over
        or under at each per the flags.  Opposite flags give linking
        number +1 (over first) or -1 (under first) with the component of
        the edge; equal flags give a circle that links zero.
        """
        s2, s3, c1, c2 = self._fresh(4)
        s1 = edge
        hci, hp = self._heads[edge]
        crossings = list(self.crossings)
        cr = list(crossings[hci])
        cr[hp] = s3
        crossings[hci] = tuple(cr)
        if circle_over_first:
            first = (s1, c1, s2, c2)
        else:
            first = (c2, s1, c1, s2)
        if circle_over_second:
            second = (s2, c1, s3, c2)
        else:
            second = (c1, s3, c2, s2)
        d = Diagram(crossings + [first, second], self.loops)
        d._assert_planar()
        return d

    def add_meridian(self, edge: int, sign: int) -> "Diagram":
        """Small circle around the given edge, linking its component by
        exactly sign (+1 or -1); the circle goes over at one crossing and
        under at the other."""
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        return self.insert_meridian(edge, circle_over_first=sign > 0,
                                    circle_over_second=sign < 0)

    def insert_face_circle(self, step1, step2, *, over1: bool, over2: bool) -> "Diagram":
        """Add a circle crossing the diagram at two points given as face
        steps.

        step1 and step2 are (edge, crossing, corner) steps from faces().
        If they name the same edge, the circle is a meridian of that edge
        (over1 applies at the point nearer the edge's tail).  Otherwise
        both steps must lie in one face and the far sides of the two
        edges must agree, so the circle closes up through exactly those
        two points.  over1/over2 say whether the circle passes over each
        edge.
        """
        faces, side_of = self.face_data
        (g1, ci1, p1), (g2, ci2, p2) = step1, step2
        if step1 == step2:
            raise ValueError("need two distinct face steps")
        if g1 == g2:
            return self.insert_meridian(g1, circle_over_first=over1,
                                        circle_over_second=over2)
        f_here = side_of[(g1, (ci1, p1))]
        if side_of[(g2, (ci2, p2))] != f_here:
            raise ValueError("steps lie on different faces")
        other1 = side_of[(g1, self._other_slot(g1, (ci1, p1)))]
        other2 = side_of[(g2, self._other_slot(g2, (ci2, p2)))]
        if other1 != other2:
            raise ValueError("circle cannot close up: far faces differ")

        nxt = max(self._heads, default=0)

        def take():
            nonlocal nxt
            nxt += 1
            return nxt

        alpha, beta = take(), take()
        crossings = list(self.crossings)

        def replace_head(g, new_label):
            hci, hp = self._heads[g]
            cr = list(crossings[hci])
            cr[hp] = new_label
            crossings[hci] = tuple(cr)

        g1_in, g1_out = g1, take()
        replace_head(g1, g1_out)
        g2_in, g2_out = g2, take()
        replace_head(g2, g2_out)

        # walk direction vs flow direction decides which side the face is on
        wf1 = (self._heads[g1] == (ci1, p1))
        wf2 = (self._heads[g2] == (ci2, p2))

        # circle orientation: in through the far face (arc beta), across g1
        # into the common face, along arc alpha to g2, back out into the
        # far face.  alpha always sits on the common-face side of both
        # crossings, beta on the far side.
        if wf1:  # common face on g1's right
            t1 = (beta, g1_in, alpha, g1_out) if not over1 else (g1_in, alpha, g1_out, beta)
        else:    # common face on g1's left
            t1 = (beta, g1_out, alpha, g1_in) if not over1 else (g1_in, beta, g1_out, alpha)
        if wf2:
            t2 = (alpha, g2_out, beta, g2_in) if not over2 else (g2_in, alpha, g2_out, beta)
        else:
            t2 = (alpha, g2_in, beta, g2_out) if not over2 else (g2_in, beta, g2_out, alpha)
        d = Diagram(crossings + [t1, t2], self.loops)
        d._assert_planar()
        return d

    def _other_slot(self, e, slot):
        occ = []
        for ci, cr in enumerate(self.crossings):
            for p, x in enumerate(cr):
                if x == e:
                    occ.append((ci, p))
        s0, s1 = occ
        return s1 if s0 == slot else s0

    def _assert_planar(self):
        if self.crossings and not self.is_split():
            if len(self.faces()) != self.n + 2:
                raise InvalidDiagram("construction is not planar")


_PD_RE = re.compile(r"^PD\[(.*)\](?:\+(\d+))?$", re.DOTALL)
_X_RE = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")


def parse_pd(text: str, *, repair: bool = False) -> Diagram:
    """Read `PD[X[a,b,c,d], ...]`, optionally suffixed `+n` for n
    crossingless loops.  Whitespace-insensitive.  Raises InvalidDiagram
    for malformed text, repeated-label problems, or (unless repair is
    set) inconsistent strand orientations."""
    s = re.sub(r"\s+", "", text)
    m = _PD_RE.match(s)
    if not m:
        raise InvalidDiagram(f"not a PD code: {text!r}")
    body, loops = m.group(1), int(m.group(2) or 0)
    crossings = []
    pos = 0
    while pos < len(body):
        xm = _X_RE.match(body, pos)
        if not xm:
            raise InvalidDiagram(f"bad crossing syntax near {body[pos:pos + 16]!r}")
        crossings.append(tuple(int(g) for g in xm.groups()))
        pos = xm.end()
        if pos < len(body):
            if body[pos] != ",":
                raise InvalidDiagram(f"expected ',' near {body[pos:pos + 8]!r}")
            pos += 1
    return Diagram(crossings, loops, repair=repair)


def crossing_sign(d: Diagram, c: int) -> int:
    """+1 or -1 for crossing c of d.  Reversing every component at once
    preserves the sign; mirroring negates it."""
    return d.signs[c]
