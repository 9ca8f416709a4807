import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from revstack.perms import (
    descents,
    identity,
    reverse,
    revstack_sort_sim,
    stack_sort_sim,
)
from revstack.trees import (
    duality_f,
    g_map,
    h_details,
    in_order,
    injection_h,
    post_order,
    render_text,
    right_edge_count,
    rpostorder,
    tree_of,
    vertex_indexing,
)

WORKED = (8, 7, 9, 4, 6, 1, 10, 2, 3, 5, 11)


def all_perms(n):
    return itertools.permutations(range(1, n + 1))


def perms(max_n=9):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations(range(1, n + 1)).map(tuple)
    )


class TestTreeConstruction:
    def test_worked_example_structure(self):
        t = tree_of(WORKED)
        assert t.label == 11
        assert t.right is None
        assert t.left.label == 10
        assert t.left.left.label == 9
        assert t.left.right.label == 5
        assert t.left.left.left.label == 8
        assert t.left.left.left.right.label == 7
        assert t.left.left.right.label == 6
        assert in_order(t) == WORKED

    def test_identity_chain(self):
        t = tree_of(identity(5))
        # root n with a pure left chain; no right edges, no descents
        node, labels = t, []
        while node is not None:
            labels.append(node.label)
            assert node.right is None
            node = node.left
        assert labels == [5, 4, 3, 2, 1]

    def test_42513(self):
        t = tree_of((4, 2, 5, 1, 3))
        assert t.label == 5
        assert t.left.label == 4
        assert t.left.right.label == 2
        assert t.right.label == 3
        assert t.right.left.label == 1

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            tree_of(())

    def test_json_and_render(self):
        t = tree_of((2, 1, 3))
        assert t.to_json() == {
            "label": 3,
            "left": {"label": 2, "right": {"label": 1}},
        }
        assert "3" in render_text(t)


class TestTraversals:
    def test_worked_sort_images(self):
        t = tree_of((4, 2, 5, 1, 3))
        assert post_order(t) == (2, 4, 1, 3, 5)
        assert rpostorder(t) == (1, 3, 2, 4, 5)

    def test_identity_fixed(self):
        t = tree_of(identity(6))
        assert in_order(t) == post_order(t) == rpostorder(t) == identity(6)

    def test_reversed_identity(self):
        assert rpostorder(tree_of((5, 4, 3, 2, 1))) == (1, 2, 3, 4, 5)

    def test_exhaustive_identities(self):
        for n in range(1, 8):
            for w in all_perms(n):
                t = tree_of(w)
                assert in_order(t) == w
                assert post_order(t) == stack_sort_sim(w)
                assert rpostorder(t) == revstack_sort_sim(w)
                assert right_edge_count(t) == descents(w)


class TestDuality:
    def test_fixed_point_231(self):
        assert duality_f((2, 3, 1)) == (2, 3, 1)

    def test_identity_maps_to_reverse(self):
        for n in range(1, 8):
            assert duality_f(identity(n)) == reverse(identity(n))

    def test_exhaustive_properties(self):
        for n in range(1, 7):
            for w in all_perms(n):
                f = duality_f(w)
                assert duality_f(f) == w
                assert descents(w) + descents(f) == n - 1
                assert stack_sort_sim(f) == stack_sort_sim(w)
                assert revstack_sort_sim(f) == revstack_sort_sim(w)

    @given(perms(max_n=9))
    @settings(deadline=None)
    def test_involution_random(self, w):
        assert duality_f(duality_f(w)) == w

    def test_g_bases(self):
        assert g_map(()) == ()
        assert g_map((1,)) == (1,)
        assert g_map((2, 3, 1)) == (1, 3, 2)

    def test_g_is_conjugate_exhaustive(self):
        for n in range(1, 8):
            for w in all_perms(n):
                g = g_map(w)
                assert g == duality_f(reverse(w))
                assert g == reverse(duality_f(w))


class TestVertexIndexing:
    def test_worked_example_order(self):
        order = vertex_indexing(tree_of(WORKED))
        assert order == [7, 4, 1, 2, 8, 6, 3, 9, 5, 10, 11]

    def test_covers_all_labels(self):
        for n in range(1, 7):
            for w in all_perms(n):
                assert sorted(vertex_indexing(tree_of(w))) == list(range(1, n + 1))


class TestInjectionH:
    def test_worked_example(self):
        step = h_details(WORKED)
        assert step.result == (7, 8, 9, 4, 6, 1, 10, 5, 3, 2, 11)
        assert step.index == 9
        assert step.flipped_indices == (5, 7, 9)
        assert step.flipped_labels == (8, 3, 5)

    def test_identity_five(self):
        w = identity(5)
        h = injection_h(w)
        assert descents(h) == 1
        assert stack_sort_sim(h) == stack_sort_sim(w)
        assert revstack_sort_sim(h) == revstack_sort_sim(w)

    def test_no_index_for_reversed_identity(self):
        # the tree of n...1 is a pure right chain: left edges never lead
        with pytest.raises(LookupError):
            injection_h((5, 4, 3, 2, 1))

    @pytest.mark.parametrize("n", [6, 7])
    def test_injective_with_preserved_images(self, n):
        for i in range((n - 3) // 2 + 1):
            images = {}
            for w in all_perms(n):
                if descents(w) != i:
                    continue
                h = injection_h(w)
                assert descents(h) == i + 1
                assert stack_sort_sim(h) == stack_sort_sim(w)
                assert revstack_sort_sim(h) == revstack_sort_sim(w)
                assert h not in images
                images[h] = w
