import random
from fractions import Fraction

import pytest

from latticeface.polytope import BudgetExceeded, Polytope
from oracles import count_by_box_scan, in_hull

P1 = Polytope(3, [(0, 0, 0), (4, 0, 0), (3, 6, 0), (2, 2, 2)])
P2 = Polytope(3, [(0, 0, 0), (4, 0, 0), (3, 3, 0), (2, 1, 5)])
SQUARE = Polytope(2, [(0, 0), (1, 0), (0, 1), (1, 1)])
TRIANGLE = Polytope(2, [(0, 0), (4, 0), (3, 6)])


def test_affine_hull_segment():
    seg = Polytope(3, [(1, 1, 0), (1, 1, 1)])
    point, lin = seg.affine_hull()
    assert point == (1, 1, 0)
    assert lin == ((Fraction(0), Fraction(0), Fraction(1)),)
    assert seg.dim == 1


def test_affine_hull_full_dim():
    _, lin = P1.affine_hull()
    assert len(lin) == 3


def test_affine_hull_point():
    pt = Polytope(2, [(3, 5)])
    _, lin = pt.affine_hull()
    assert lin == ()
    assert pt.dim == 0


def test_hrep_triangle():
    h = TRIANGLE.hrep
    assert len(h.equalities) == 0
    assert len(h.inequalities) == 3
    centroid = (Fraction(7, 3), Fraction(2))
    assert TRIANGLE.classify_point(centroid) == "interior"
    for v in TRIANGLE.vertices:
        assert TRIANGLE.contains(v)
        assert TRIANGLE.classify_point(v) == "boundary"


def test_hrep_unit_segment():
    seg = Polytope(1, [(0,), (1,)])
    h = seg.hrep
    assert len(h.equalities) == 0
    assert sorted(h.inequalities) == [((-1,), 0), ((1,), 1)]


def test_hrep_segment_in_r3():
    seg = Polytope(3, [(1, 1, 0), (1, 1, 1)])
    h = seg.hrep
    assert len(h.equalities) == 2
    assert len(h.inequalities) == 2
    assert seg.contains((1, 1, Fraction(1, 2)))
    assert not seg.contains((1, 0, 0))


def test_redundant_points_are_dropped():
    p = Polytope(2, [(0, 0), (2, 0), (0, 2), (1, 1), (2, 0), (Fraction(1, 2), Fraction(1, 2))])
    assert frozenset(p.vertices) == {(0, 0), (2, 0), (0, 2)}
    # (1, 1) lies on the slanted edge, the interior point too: neither is extreme.


def test_faces_tetrahedron():
    tet = Polytope(3, [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert len(tet.faces(0)) == 4
    assert len(tet.faces(1)) == 6
    assert len(tet.faces(2)) == 4
    assert len(tet.faces(3)) == 1


def test_faces_square():
    assert len(SQUARE.faces(1)) == 4
    assert len(SQUARE.faces(0)) == 4


def test_faces_p1_vertices():
    verts = P1.faces(0)
    assert [P1.face_vertices(f)[0] for f in verts] == list(P1.vertices)
    assert len(P1.vertices) == 4


def test_euler_relation():
    rng = random.Random(21)
    for _ in range(10):
        dim = rng.randint(2, 4)
        pts = [[rng.randint(-3, 3) for _ in range(dim)] for _ in range(dim + 3)]
        p = Polytope(dim, pts)
        if p.dim < 2:
            continue
        euler = sum((-1) ** ell * len(p.faces(ell)) for ell in range(p.dim))
        assert euler == 1 - (-1) ** p.dim


def test_project_p1():
    assert P1.project(1) == Polytope(1, [(0,), (4,)])
    assert P1.project(2) == Polytope(2, [(0, 0), (4, 0), (3, 6)])
    assert P1.project(3) is P1


def test_project_composes():
    for k2 in range(4):
        for k1 in range(k2 + 1):
            assert P1.project(k2).project(k1) == P1.project(k1)


def test_slice_p1_over_11():
    s = P1.slice_at((1, 1))
    assert s == Polytope(3, [(1, 1, 0), (1, 1, 1)])


def test_slice_p1_at_zero():
    s = P1.slice_at((0,))
    assert s == Polytope(3, [(0, 0, 0)])
    assert s.dim == 0


def test_slice_outside_is_empty():
    s = P1.slice_at((17, 0))
    assert s.is_empty
    assert s.dim == -1
    assert s.lattice_points() == []


def test_slice_subset_and_lattice_point_compat():
    pts = set(P1.lattice_points())
    for y in P1.project(2).lattice_points():
        s = P1.slice_at(y)
        for q in s.lattice_points():
            assert q in pts
        assert {q for q in pts if q[:2] == y} == set(s.lattice_points())


def test_lattice_points_interval():
    seg = Polytope(1, [(0,), (4,)])
    assert seg.lattice_points() == [(0,), (1,), (2,), (3,), (4,)]


def test_lattice_points_triangle():
    pts = TRIANGLE.lattice_points()
    assert len(pts) == 17
    interior = [p for p in pts if TRIANGLE.classify_point(p) == "interior"]
    boundary = [p for p in pts if TRIANGLE.classify_point(p) == "boundary"]
    assert len(interior) == 9
    assert len(boundary) == 8


def test_lattice_points_cube():
    cube = Polytope(3, [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])
    assert len(cube.lattice_points()) == 8
    assert len(cube.lattice_points(scale=2)) == 27


def test_lattice_points_match_box_oracle():
    rng = random.Random(13)
    for _ in range(15):
        dim = rng.randint(1, 3)
        pts = [[rng.randint(-3, 3) for _ in range(dim)] for _ in range(dim + 2)]
        p = Polytope(dim, pts)
        m = rng.randint(1, 2)
        assert len(p.lattice_points(scale=m)) == count_by_box_scan(p.vertices, m)


def test_lattice_points_lower_dimensional():
    seg = Polytope(3, [(1, 1, 0), (1, 1, 1)])
    assert seg.lattice_points() == [(1, 1, 0), (1, 1, 1)]
    skew = Polytope(2, [(0, 0), (2, 3)])
    assert skew.lattice_points() == [(0, 0), (2, 3)]


def test_budget_exceeded():
    big = Polytope(2, [(0, 0), (100, 0), (0, 100), (100, 100)])
    with pytest.raises(BudgetExceeded):
        big.lattice_points(budget=50)


def test_classify_points():
    assert TRIANGLE.classify_point((2, 1)) == "interior"
    assert TRIANGLE.classify_point((0, 0)) == "boundary"
    assert TRIANGLE.classify_point((-1, 0)) == "outside"
    seg = Polytope(3, [(1, 1, 0), (1, 1, 1)])
    assert seg.classify_point((1, 1, Fraction(1, 2))) == "interior"
    assert seg.classify_point((1, 1, 0)) == "boundary"
    assert seg.classify_point((0, 0, 0)) == "outside"
    pt = Polytope(2, [(3, 4)])
    assert pt.classify_point((3, 4)) == "interior"
    assert pt.classify_point((3, 5)) == "outside"


def test_contains_matches_hull_oracle():
    rng = random.Random(31)
    for _ in range(10):
        dim = rng.randint(1, 3)
        pts = [[rng.randint(-3, 3) for _ in range(dim)] for _ in range(dim + 2)]
        p = Polytope(dim, pts)
        for _ in range(10):
            q = [Fraction(rng.randint(-6, 6), rng.randint(1, 2)) for _ in range(dim)]
            assert p.contains(q) == in_hull(p.vertices, q)


def test_hull_roundtrip_through_lattice_points_of_vertices():
    # The vertex set of the hull of the H-rep solution set is the vertex set.
    rng = random.Random(17)
    for _ in range(10):
        dim = rng.randint(2, 3)
        pts = [[rng.randint(-3, 3) for _ in range(dim)] for _ in range(dim + 3)]
        p = Polytope(dim, pts)
        again = Polytope(dim, p.vertices + p.vertices[::-1])
        assert again == p


def test_dilate_monotone_counts():
    counts = [len(P1.lattice_points(scale=m)) for m in range(1, 4)]
    assert counts == sorted(counts)


def test_zero_dimensional_ambient():
    p = Polytope(0, [()])
    assert p.dim == 0
    assert p.lattice_points() == [()]
    assert p.classify_point(()) == "interior"


def test_empty_polytope_value():
    e = Polytope(2, [])
    assert e.is_empty and e.dim == -1
    assert not e.contains((0, 0))
    assert e.classify_point((0, 0)) == "outside"
    assert e.project(1).is_empty
