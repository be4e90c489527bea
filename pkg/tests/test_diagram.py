import pytest
from hypothesis import given, strategies as st

from hopfband.pdcodes import Diagram, InvalidDiagram, parse_pd

# hand-checked inputs used throughout: a positive Hopf link (both signs +1)
# and the two trefoil chiralities
HOPF_POS = "PD[X[1,3,4,2],X[3,1,2,4]]"
TREF_POS = "PD[X[1,3,4,2],X[3,5,6,4],X[5,1,2,6]]"
TREF_NEG = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]"
FIG8_RAW = [(1, 5, 6, 3), (5, 7, 8, 6), (7, 1, 9, 10), (10, 9, 3, 8)]


class TestParse:
    def test_unknot_and_empty(self):
        u = parse_pd("PD[]+1")
        assert u.n == 0 and u.loops == 1
        e = parse_pd("PD[]")
        assert e.n == 0 and e.loops == 0
        assert u.to_pd() == "PD[]+1"

    def test_zero_suffix_is_rejected(self):
        # the loop suffix is always written +n; a bare trailing digit is not
        # part of the grammar
        with pytest.raises(InvalidDiagram):
            parse_pd("PD[]0")

    def test_trefoil_roundtrip(self):
        d = parse_pd(TREF_NEG)
        assert d.n == 3
        assert len(d.components) == 1
        assert len(d.components[0]) == 6
        assert parse_pd(d.to_pd()) == d

    def test_whitespace_insensitive(self):
        d1 = parse_pd("PD[ X[1,3,4,2] ,\n X[3,1,2,4] ]")
        assert d1 == parse_pd(HOPF_POS)

    def test_label_count_errors(self):
        with pytest.raises(InvalidDiagram, match="appears"):
            parse_pd("PD[X[1,4,2,3]]")
        with pytest.raises(InvalidDiagram, match="appears"):
            parse_pd("PD[X[1,2,2,1],X[3,3,4,5]]")

    def test_syntax_errors(self):
        for bad in ("PD", "PD[X[1,2,3]]", "PD[X[1,2,3,4,5]]", "X[1,2,1,2]",
                    "PD[X[1,2,1,2]", "PD[X[0,1,0,1]]"):
            with pytest.raises(InvalidDiagram):
                parse_pd(bad)

    def test_inconsistent_orientation_strict_vs_repair(self):
        # figure-8 built from a plat: half the tuples claim the wrong
        # under-strand direction until repaired
        with pytest.raises(InvalidDiagram, match="orientation"):
            Diagram(FIG8_RAW)
        d = Diagram(FIG8_RAW, repair=True)
        assert d.n == 4 and len(d.components) == 1
        # repaired output is strict-clean
        assert parse_pd(d.to_pd()) == d


class TestOrientation:
    def test_hopf_signs_and_linking(self):
        h = parse_pd(HOPF_POS)
        assert h.signs == (1, 1)
        assert h.writhe == 2
        assert len(h.components) == 2
        assert h.lk(0, 1) == 1

    def test_trefoil_chiralities(self):
        pos = parse_pd(TREF_POS)
        neg = parse_pd(TREF_NEG)
        assert pos.signs == (1, 1, 1) and pos.writhe == 3
        assert neg.signs == (-1, -1, -1) and neg.writhe == -3

    def test_mirror_negates_signs(self):
        for s in (HOPF_POS, TREF_POS, TREF_NEG):
            d = parse_pd(s)
            m = d.mirror()
            assert m.signs == tuple(-x for x in d.signs)
            assert m.mirror() == d

    def test_reverse_component_keeps_signs_of_knots(self):
        d = parse_pd(TREF_POS)
        r = d.reverse_component(0)
        assert r.signs == d.signs  # reversing everything preserves signs

    def test_reverse_one_component_flips_linking(self):
        h = parse_pd(HOPF_POS)
        r = h.reverse_component(0)
        assert r.lk(0, 1) == -1
        assert r.writhe == -2

    def test_successor_walks_component(self):
        d = parse_pd(TREF_POS)
        comp = d.components[0]
        for i, e in enumerate(comp):
            assert d.successor(e) == comp[(i + 1) % len(comp)]


class TestMoves:
    def test_switch_involution_and_sign_flip(self):
        d = parse_pd(TREF_POS)
        for c in range(d.n):
            s = d.switch(c)
            assert s.signs[c] == -d.signs[c]
            assert s.switch(c) == d

    def test_smooth_oriented_hopf_gives_unknot_kink(self):
        h = parse_pd(HOPF_POS)
        for c in range(2):
            s = h.smooth_oriented(c)
            assert s.n == 1
            assert len(s.components) == 1

    def test_smooth_component_count_changes_by_one(self):
        for s in (HOPF_POS, TREF_POS, TREF_NEG):
            d = parse_pd(s)
            for c in range(d.n):
                out = d.smooth_oriented(c)
                assert abs(len(out.components) + out.loops
                           - len(d.components) - d.loops) == 1

    def test_smooth_unoriented_trefoil_both_ways(self):
        d = parse_pd(TREF_POS)
        a = d.smooth_a(0)
        b = d.smooth_b(0)
        assert a.n == 2 and len(a.components) == 2  # a Hopf form
        assert a.lk(0, 1) == 1
        assert b.n == 2 and len(b.components) == 1  # a doubly kinked unknot

    def test_smooth_to_free_loop(self):
        # one-crossing kink: one smoothing straightens, the other splits
        # off a circle
        k = Diagram([(1, 1, 2, 2)])
        s1 = k.smooth_b(0)
        assert s1.n == 0 and s1.loops == 1
        s2 = k.smooth_a(0)
        assert s2.n == 0 and s2.loops == 2

    def test_delete_component(self):
        h = parse_pd(HOPF_POS)
        d = h.delete_component(0)
        assert d.n == 0 and d.loops == 1
        tri = parse_pd(TREF_POS).insert_meridian(
            1, circle_over_first=True, circle_over_second=False)
        assert len(tri.components) == 2
        back = tri.delete_component(1)
        assert back.n == 3 and len(back.components) == 1


class TestSimplify:
    def test_kink_removal_tracks_writhe(self):
        pos_kink = Diagram([(2, 2, 1, 1)], repair=True)  # corner pair (0,1)
        d, dw = pos_kink.simplify()
        assert d.n == 0 and d.loops == 1 and dw == pos_kink.writhe

    def test_r2_pair_removed(self):
        # sigma_1 then sigma_1^-1 closed up: two components, zero writhe
        d = Diagram([(1, 3, 4, 2), (4, 3, 1, 2)], repair=True)
        assert d.writhe == 0
        s, dw = d.simplify()
        assert dw == 0
        assert s.n == 0 and s.loops == 2

    def test_trefoil_is_already_reduced(self):
        d = parse_pd(TREF_POS)
        s, dw = d.simplify()
        assert s == d and dw == 0

    def test_cascading_simplification(self):
        # trefoil with a positive kink spliced into edge 1: the edge is cut
        # into 1 and 10 around a kink crossing with loop edge 9
        d = Diagram([(10, 3, 4, 2), (3, 5, 6, 4), (5, 1, 2, 6), (1, 10, 9, 9)])
        assert d.writhe == 4
        s, dw = d.simplify()
        assert s.n == 3 and dw == 1
        assert s == parse_pd(TREF_POS)


class TestFaces:
    def test_euler_counts(self):
        assert len(parse_pd(TREF_POS).faces()) == 5
        assert len(parse_pd(TREF_NEG).faces()) == 5
        assert len(parse_pd(HOPF_POS).faces()) == 4
        assert len(Diagram(FIG8_RAW, repair=True).faces()) == 6

    def test_every_side_in_exactly_one_face(self):
        d = parse_pd(TREF_POS)
        faces, side_of = d.face_data
        # each of the 2n edges has two sides, each side in exactly one face
        assert len(side_of) == 4 * d.n
        assert sum(len(f) for f in faces) == 4 * d.n

    def test_checkerboard_proper(self):
        for s in (HOPF_POS, TREF_POS, TREF_NEG):
            d = parse_pd(s)
            faces, side_of = d.face_data
            colors = d.checkerboard()
            occ: dict[int, list[int]] = {}
            for (e, slot), fi in side_of.items():
                occ.setdefault(e, []).append(fi)
            for e, (f1, f2) in occ.items():
                assert colors[f1] != colors[f2]

    def test_corner_colors_alternate(self):
        d = Diagram(FIG8_RAW, repair=True)
        faces, _ = d.face_data
        colors = d.checkerboard()
        corner_face = {}
        for fi, face in enumerate(faces):
            for _, ci, p in face:
                corner_face[(ci, p)] = fi
        for ci in range(d.n):
            cs = [colors[corner_face[(ci, p)]] for p in range(4)]
            assert cs[0] == cs[2] != cs[1] == cs[3]


class TestMeridian:
    def test_linking_number_both_signs(self):
        d = parse_pd(TREF_POS)
        for e in d.edges:
            plus = d.add_meridian(e, +1)
            assert len(plus.components) == 2
            k = plus.component_of(e)
            assert plus.lk(0, 1) == 1 if k == 0 else -1
            minus = d.add_meridian(e, -1)
            assert minus.lk(0, 1) == -1 if minus.component_of(e) == 0 else 1

    def test_meridian_of_unknot_is_hopf_shape(self):
        k = Diagram([(1, 1, 2, 2)], repair=True)  # kinked unknot
        m = k.add_meridian(2, +1)
        s, _ = m.simplify()
        assert s.n == 2 and len(s.components) == 2
        assert abs(s.lk(0, 1)) == 1

    @staticmethod
    def _all_face_circles(d):
        out = []
        for face in d.faces():
            for i in range(len(face)):
                for j in range(i + 1, len(face)):
                    for o1 in (True, False):
                        for o2 in (True, False):
                            try:
                                out.append(d.insert_face_circle(
                                    face[i], face[j], over1=o1, over2=o2))
                            except (ValueError, InvalidDiagram):
                                pass
        return out

    def test_insert_face_circle_two_edges(self):
        # distinct-edge circles need two edges bordering the same pair of
        # faces; the trefoil diagram has none, while the two-kink coil of
        # the unknot has a neck made of exactly such a pair
        assert self._all_face_circles(parse_pd(TREF_POS)) == []
        coil = parse_pd("PD[X[5,2,1,1],X[2,5,6,6]]")
        made = self._all_face_circles(coil)
        assert made
        for out in made:
            assert out.n == coil.n + 2
            assert len(out.components) == 2
            assert len(out.faces()) == out.n + 2
        # a neck circle going over one strand and under the other clasps
        # the coil: simplifies to a genuine Hopf form
        lks = {abs(o.lk(0, 1)) for o in made}
        assert lks == {0, 1}

    def test_insert_face_circle_same_edge_is_meridian(self):
        d = parse_pd(TREF_POS)
        faces, side_of = d.face_data
        steps_of: dict[int, list] = {}
        for face in faces:
            for step in face:
                steps_of.setdefault(step[0], []).append(step)
        for e, (s1, s2) in sorted(steps_of.items()):
            out = d.insert_face_circle(s1, s2, over1=True, over2=False)
            assert out == d.insert_meridian(e, circle_over_first=True,
                                            circle_over_second=False)


class TestKeysAndSplit:
    def test_canonical_key_ignores_labels(self):
        d1 = parse_pd(TREF_POS)
        shifted = [(a + 7, b + 7, c + 7, e + 7) for a, b, c, e in d1.crossings]
        d2 = Diagram(shifted)
        assert d1.canonical_key() == d2.canonical_key()
        assert d1.canonical_key() != parse_pd(HOPF_POS).canonical_key()

    def test_split_detection(self):
        assert not parse_pd("PD[]+1").is_split()
        assert parse_pd("PD[]+2").is_split()
        assert not parse_pd(TREF_POS).is_split()
        assert parse_pd(TREF_POS + "+1").is_split()
        two = list(parse_pd(TREF_POS).crossings) + [
            (a + 10, b + 10, c + 10, e + 10)
            for a, b, c, e in parse_pd(TREF_POS).crossings
        ]
        assert Diagram(two).is_split()


@st.composite
def random_small_diagram(draw):
    """Random diagram via random switches/smoothings of a seed braid-like
    closed diagram; guarantees validity by construction."""
    base = parse_pd(TREF_POS)
    d = base.add_meridian(draw(st.sampled_from(base.edges)), draw(st.sampled_from((-1, 1))))
    for _ in range(draw(st.integers(0, 3))):
        if d.n == 0:
            break
        op = draw(st.integers(0, 2))
        c = draw(st.integers(0, d.n - 1))
        if op == 0:
            d = d.switch(c)
        elif op == 1:
            d = d.smooth_a(c)
        else:
            d = d.smooth_b(c)
    return d


class TestStructureProperties:
    @given(random_small_diagram())
    def test_edges_twice_and_successors(self, d):
        counts: dict[int, int] = {}
        for cr in d.crossings:
            for e in cr:
                counts[e] = counts.get(e, 0) + 1
        assert all(v == 2 for v in counts.values())
        for comp in d.components:
            for i, e in enumerate(comp):
                assert d.successor(e) == comp[(i + 1) % len(comp)]

    @given(random_small_diagram())
    def test_roundtrip_and_key_stability(self, d):
        assert parse_pd(d.to_pd(), repair=True) == d
        assert d.canonical_key() == Diagram(d.crossings, d.loops, repair=True).canonical_key()

    @given(random_small_diagram())
    def test_simplify_removes_writhe_consistently(self, d):
        s, dw = d.simplify()
        assert s.writhe + dw == d.writhe
        assert s.n <= d.n
