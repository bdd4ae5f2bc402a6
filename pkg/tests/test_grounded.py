import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from instances import diamond, fanned_paths, grid, path_graph, small_instances

from planar_detours.errors import NotGrounded, NotOnOuterFace, OuterFaceNotSimple, PathTouchesBoundary
from planar_detours.generate import plane_graph_from_points
from planar_detours.grounded import (
    GroundedPath,
    Side,
    cut_along_arc,
    cut_along_path,
    extremal_path,
    extremal_tree,
    left_area_faces,
    left_area_vertices,
    path_from_vertices,
    simplify_outer,
)
from planar_detours.oracle import (
    LexOrder,
    enumerate_simple_paths,
    lex_compare,
    lex_maximum,
    lex_minimum,
)
from planar_detours.plane_graph import satisfies_euler


def _face_with(g, vertices):
    return next(f.id for f in g.faces if f.vertex_set == frozenset(vertices))


def _outer_of_fan(g):
    return _face_with(g, {0, 1, 3, 4})


def _simplified_diamond():
    g = diamond()
    face = next(f.id for f in g.faces if {0, 3} <= f.vertex_set and len(f) == 4)
    return simplify_outer(g, face, 3, 0)


# -- simplification --------------------------------------------------------


def test_simplify_diamond():
    g = diamond()
    simp = _simplified_diamond()
    h = simp.graph
    assert h.arc_count == 7
    assert {d >> 1 for d in h.outer.darts} == {simp.f1, simp.f2}
    assert h.outer.vertex_set == {0, 3}
    # two new arcs inside one face: Euler forces two extra faces
    assert len(h.faces) == len(g.faces) + 2
    assert satisfies_euler(h)


def test_simplify_needs_distinct_vertices():
    g = diamond()
    with pytest.raises(NotOnOuterFace):
        simplify_outer(g, 0, 0, 0)


def test_simplify_rejects_vertices_off_the_face():
    g = diamond()
    inner = next(f for f in g.faces if 3 not in f.vertex_set)
    with pytest.raises(NotOnOuterFace):
        simplify_outer(g, inner.id, 0, 3)


def test_simplify_makes_non_simple_outer_face_simple():
    # two triangles sharing vertex 2 have a non-simple unbounded face
    pts = [(0, 0), (1, 1), (2, 0), (3, 1), (4, 0)]
    g = plane_graph_from_points(pts, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    outer = max(g.faces, key=len)
    assert not outer.is_simple
    h = simplify_outer(g, outer.id, 0, 4).graph
    assert h.outer.is_simple and len(h.outer) == 2
    assert satisfies_euler(h)


def test_simplify_path_graph():
    h = simplify_outer(path_graph(3), 0, 0, 2).graph
    assert h.outer.is_simple
    assert satisfies_euler(h)


# -- extremal paths -------------------------------------------------------


def test_fan_lex_order_and_extremes():
    g = fanned_paths()
    outer = _outer_of_fan(g)
    top = path_from_vertices(g, [0, 1, 4])
    mid = path_from_vertices(g, [0, 2, 4])
    bottom = path_from_vertices(g, [0, 3, 4])
    assert lex_compare(g, outer, top, mid) is LexOrder.LESS
    assert lex_compare(g, outer, mid, bottom) is LexOrder.LESS
    assert lex_compare(g, outer, bottom, top) is LexOrder.GREATER
    assert extremal_path(g, outer, 0, 4, Side.LEFT) == top
    assert extremal_path(g, outer, 0, 4, Side.RIGHT) == bottom


def test_extremal_path_to_itself_is_trivial():
    g = fanned_paths()
    p = extremal_path(g, _outer_of_fan(g), 0, 0)
    assert p.vertices == (0,) and p.length == 0


def test_extremal_path_unreachable_is_none():
    g = fanned_paths()
    assert extremal_path(g, _outer_of_fan(g), 4, 0) is None


def test_extremal_path_respects_allowed():
    g = fanned_paths()
    p = extremal_path(g, _outer_of_fan(g), 0, 4, Side.LEFT, allowed=lambda v: v != 1)
    assert p.vertices == (0, 2, 4)
    p = extremal_path(g, _outer_of_fan(g), 0, 4, Side.LEFT, allowed={0, 3, 4})
    assert p.vertices == (0, 3, 4)


def test_extremal_needs_simple_outer_face():
    g = path_graph(3)
    with pytest.raises(OuterFaceNotSimple):
        extremal_path(g, 0, 0, 2)


def test_diamond_leftmost_is_lex_minimum():
    h = _simplified_diamond().graph
    paths = enumerate_simple_paths(h, 0, 3)
    assert len(paths) == 3
    assert extremal_path(h, h.outer_face, 0, 3, Side.LEFT) == lex_minimum(h, h.outer_face, paths)
    assert extremal_path(h, h.outer_face, 0, 3, Side.RIGHT) == lex_maximum(h, h.outer_face, paths)


# -- cutting ------------------------------------------------------------


def _wheel():
    """Square 0..3 around a hub 4, arcs from every corner to the hub."""
    pts = [(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)]
    arcs = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4), (2, 4), (3, 4)]
    g = plane_graph_from_points(pts, arcs)
    return g.with_outer(_face_with(g, {0, 1, 2, 3}))


def test_cut_single_arc():
    g = _wheel()
    cut = cut_along_arc(g, g.outer_face, 4)  # 0 -> hub
    new_outer = cut.graph.outer
    assert new_outer.is_simple
    old_names = {cut.lineage[v] for v in new_outer.vertices}
    assert old_names == {0, 1, 2, 3, 4}  # the hub now lies on the outer face
    assert 0 not in cut.to_new  # the cut vertex was replaced by two copies
    assert sorted(cut.lineage[v] for v in cut.new_boundary) == [0, 0]
    assert cut.new_boundary <= new_outer.vertex_set
    assert satisfies_euler(cut.graph)


def test_cut_along_path_through_grid():
    g = grid(4, 4).graph
    g = g.with_outer(max(g.faces, key=len).id)
    path = path_from_vertices(g, [1, 5, 6])
    cut = cut_along_path(g, g.outer_face, path)
    assert sorted(cut.lineage[v] for v in cut.new_boundary) == [1, 1, 5, 5]
    assert cut.to_new[6] in cut.graph.outer.vertex_set
    assert cut.graph.outer.is_simple
    assert satisfies_euler(cut.graph)
    assert cut.graph.arc_count == g.arc_count + 2


def test_cut_rejects_path_touching_boundary():
    g = grid(3, 3).graph
    g = g.with_outer(max(g.faces, key=len).id)
    with pytest.raises(PathTouchesBoundary):
        cut_along_path(g, g.outer_face, path_from_vertices(g, [1, 4, 5]))


def test_cut_rejects_origin_off_boundary():
    g = grid(4, 4).graph
    g = g.with_outer(max(g.faces, key=len).id)
    with pytest.raises(NotOnOuterFace):
        cut_along_path(g, g.outer_face, path_from_vertices(g, [5, 6]))


# -- areas --------------------------------------------------------------


def test_boundary_path_left_area_is_itself():
    g = fanned_paths()
    outer = _outer_of_fan(g)
    left, right = left_area_vertices(g, outer, path_from_vertices(g, [0, 1, 4]))
    assert left == {0, 1, 4}
    assert right == {0, 1, 2, 3, 4}


def test_interior_vertex_left_of_path_is_in_left_area_only():
    g = fanned_paths()
    left, right = left_area_vertices(g, _outer_of_fan(g), path_from_vertices(g, [0, 3, 4]))
    assert 2 in left and 2 not in right
    assert right == {0, 3, 4}


def test_diamond_chord_vertex_on_one_side():
    h = _simplified_diamond().graph
    left, right = left_area_vertices(h, h.outer_face, path_from_vertices(h, [0, 1, 3]))
    assert (2 in left) != (2 in right)
    assert left | right == set(range(4))


def test_area_needs_grounded_path():
    g = _wheel()
    with pytest.raises(NotGrounded):
        left_area_vertices(g, g.outer_face, path_from_vertices(g, [0, 4]))
    with pytest.raises(NotGrounded):
        left_area_vertices(g, g.outer_face, GroundedPath((0,), ()))


def test_grounded_path_validation():
    with pytest.raises(ValueError):
        GroundedPath((0, 1), ())
    g = fanned_paths()
    p = path_from_vertices(g, [0, 1]) + path_from_vertices(g, [1, 4])
    assert p.vertices == (0, 1, 4) and p.is_valid_in(g)


# -- properties over random instances ----------------------------------


def _simple_faces(g):
    return [f for f in g.faces if f.is_simple]


@settings(max_examples=60, deadline=None)
@given(small_instances(max_n=7), st.data())
def test_extremal_paths_match_the_comparator(inst, data):
    g = inst.graph
    faces = _simple_faces(g)
    assume(faces)
    face = data.draw(st.sampled_from(faces))
    v = data.draw(st.sampled_from(face.vertices))
    for w in range(g.vertex_count):
        paths = enumerate_simple_paths(g, v, w)
        left = extremal_path(g, face.id, v, w, Side.LEFT)
        right = extremal_path(g, face.id, v, w, Side.RIGHT)
        if not paths:
            assert left is None and right is None
        elif v != w:
            assert left == lex_minimum(g, face.id, paths)
            assert right == lex_maximum(g, face.id, paths)


@settings(max_examples=60, deadline=None)
@given(small_instances(max_n=7), st.data())
def test_lex_order_is_a_strict_total_order(inst, data):
    g = inst.graph
    faces = _simple_faces(g)
    assume(faces)
    face = data.draw(st.sampled_from(faces))
    v = data.draw(st.sampled_from(face.vertices))
    tree = extremal_tree(g, face.id, v)
    paths = [p for w in tree.order for p in enumerate_simple_paths(g, v, w)][:40]
    paths = [p for p in paths if p.length > 0]
    for p in paths:
        for q in paths:
            if p.arcs == q.arcs:
                continue
            assert lex_compare(g, face.id, p, q).is_less != lex_compare(g, face.id, q, p).is_less


@settings(max_examples=60, deadline=None)
@given(small_instances(max_n=7), st.data())
def test_areas_split_the_graph_and_refine_lex_order(inst, data):
    g = inst.graph
    faces = [f for f in _simple_faces(g) if len(f) >= 2]
    assume(faces)
    face = data.draw(st.sampled_from(faces))
    v, w = data.draw(st.permutations(list(face.vertices)))[:2]
    paths = enumerate_simple_paths(g, v, w)
    assume(paths)
    everything = set(range(g.vertex_count))
    regions = {}
    for p in paths:
        left, right = left_area_vertices(g, face.id, p)
        assert left | right == everything
        assert set(p.vertices) <= left & right
        left_faces, right_faces = left_area_faces(g, face.id, p)
        assert left_faces.isdisjoint(right_faces)
        assert len(left_faces | right_faces) == len(g.faces) - 1
        regions[p.arcs] = left_faces
    # nesting is a statement about regions; vertex sets can nest while regions cross
    for p in paths:
        for q in paths:
            if regions[p.arcs] < regions[q.arcs]:
                assert lex_compare(g, face.id, p, q).is_less


@settings(max_examples=40, deadline=None)
@given(small_instances(max_n=8), st.data())
def test_cut_keeps_the_embedding_valid(inst, data):
    g = inst.graph
    face = max(g.faces, key=len)
    walk = list(dict.fromkeys(face.vertices))
    assume(len(walk) >= 2)
    u, v = data.draw(st.permutations(walk))[:2]
    h = simplify_outer(g, face.id, u, v).graph
    tree = extremal_tree(h, h.outer_face, u, data.draw(st.sampled_from(Side)), allowed=lambda x: x != v)
    assume(len(tree.order) > 1)
    target = data.draw(st.sampled_from(tree.order[1:]))
    path = tree.path_to(h, target)
    cut = cut_along_path(h, h.outer_face, path)
    assert satisfies_euler(cut.graph)
    assert cut.graph.outer.is_simple
    assert len(cut.new_boundary) == 2 * path.length
    assert cut.to_new[target] in cut.graph.outer.vertex_set
