import itertools
import random

import pytest

import b3_example as ex
import oracles
from demazure.character import demazure_character
from demazure.embedding import embed
from demazure.polytope import FaceLabel, PolytopeError, build_polytope
from demazure.weyl import weyl_group


@pytest.fixture(scope="module")
def b3():
    g = weyl_group(ex.TYPE)
    w = g.from_word(ex.W_WORD)
    return g, w, build_polytope(ex.LAM, w)


class TestB3Example:
    def test_vertex_labels(self, b3):
        g, w, P = b3
        for word, eps in ex.VERTICES.items():
            assert embed(g.datum, g.from_word(word).act(ex.LAM)) == eps

    def test_vertices_are_lower_interval(self, b3):
        g, w, P = b3
        labelled = {g.from_word(word) for word in ex.VERTICES}
        assert labelled == set(g.lower_interval(w))
        assert {embed(g.datum, x) for x in P.vertex_candidates} == set(ex.VERTICES.values())
        assert len(P.vertex_candidates) == 32

    def test_counts(self, b3):
        g, w, P = b3
        assert len(P.lattice_points()) == 108
        assert all(P.contains(x) for x in P.vertex_candidates)

    def test_face_points(self, b3):
        g, w, P = b3
        face = FaceLabel(g.from_word(ex.V_WORD), ex.ETA)
        pts = P.face_points(face)
        assert {embed(g.datum, p) for p in pts} == {p for p, _ in ex.FACE}
        assert all(embed(g.datum, p)[1] == -ex.F(3, 2) for p in pts)

    def test_face_multiplicities(self, b3):
        g, w, P = b3
        ch = demazure_character(ex.LAM, w)
        for eps, m in ex.FACE:
            assert ch.multiplicity(ex.to_omega(eps)) == m

    def test_base_face_of_s1_star_w(self, b3):
        g, w, P = b3
        s1 = g.simple_reflection(1)
        w2 = g.demazure_product(s1, w)
        assert w2 == w
        P2 = build_polytope(ex.LAM, w2)
        base = FaceLabel(g.identity(), ex.ETA)
        ch = demazure_character(ex.LAM, w2)
        assert {embed(g.datum, p) for p in P2.face_points(base)} == {p for p, _ in ex.BASE_FACE}
        for eps, m in ex.BASE_FACE:
            assert ch.multiplicity(ex.to_omega(eps)) == m

    def test_q_shares_the_face(self, b3):
        g, w, P = b3
        q = g.from_word(ex.Q_WORD)
        face = FaceLabel(g.from_word(ex.V_WORD), ex.ETA)
        assert build_polytope(ex.LAM, q).face_points(face) == P.face_points(face)

    def test_faces_containing(self, b3):
        g, w, P = b3
        mu = ex.to_omega(ex.FACE[0][0])
        faces = P.faces_containing(mu)
        assert FaceLabel(g.from_word(ex.V_WORD), ex.ETA) in faces
        for f in faces:
            assert P.on_face(mu, f)


class TestFaceLabel:
    def test_rejects_non_min_rep(self):
        g = weyl_group("B3")
        with pytest.raises(PolytopeError):
            FaceLabel(g.from_word([2]), (1, 0, 0))

    def test_rejects_non_dominant(self):
        g = weyl_group("B3")
        with pytest.raises(PolytopeError):
            FaceLabel(g.identity(), (1, -1, 0))

    def test_membership_outside(self):
        g = weyl_group("A2")
        P = build_polytope((1, 1), g.from_word([1]))
        with pytest.raises(PolytopeError):
            P.on_face((-1, -1), FaceLabel(g.identity(), (1, 0)))

    def test_rejects_non_dominant_lambda(self):
        g = weyl_group("A2")
        with pytest.raises(PolytopeError):
            build_polytope((1, -1), g.identity())


class TestAgainstHull:
    @pytest.mark.parametrize("t", ["A2", "B2"])
    def test_lattice_points_match_hull(self, t):
        g = weyl_group(t)
        for lam in [(1, 1), (2, 1), (0, 2)]:
            for w in g.elements():
                P = build_polytope(lam, w)
                verts = [embed(g.datum, x) for x in P.vertex_candidates]
                pts = P.lattice_points()
                # candidates: root-lattice translates within the bounding box
                box = range(-6, 7)
                for c in itertools.product(box, repeat=2):
                    mu = tuple(l - sum(ci * a for ci, a in zip(c, col))
                               for l, col in zip(lam, zip(*g.datum.cartan_matrix)))
                    if max(abs(x) for x in mu) > 6:
                        continue
                    inside = oracles.hull_contains(verts, embed(g.datum, mu))
                    assert (mu in pts) == inside, (lam, w, mu)

    def test_contains_all_vertices_rank3(self):
        g = weyl_group("C3")
        rng = random.Random(3)
        for w in rng.sample(g.elements(), 10):
            P = build_polytope((1, 0, 1), w)
            assert all(P.contains(x) for x in P.vertex_candidates)
            assert set(P.vertex_candidates) <= P.lattice_points()


class TestSerialization:
    def test_to_dict(self):
        g = weyl_group("A2")
        d = build_polytope((1, 1), g.from_word([1, 2])).to_dict()
        assert d["type"] == "A2" and d["w_word"] == [1, 2]
        assert [1, 1] in d["vertices"]
        assert all("rhs_num" in q for q in d["inequalities"])
