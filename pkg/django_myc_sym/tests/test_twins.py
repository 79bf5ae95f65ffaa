import networkx as nx
from django.test import SimpleTestCase

from django_myc_sym.automorphism import Permutation, automorphism_group, is_automorphism
from django_myc_sym.families import FamilySpec, build_family
from django_myc_sym.graphs import Graph, find_isomorphism
from django_myc_sym.invariants import determining_number, is_determining_set
from django_myc_sym.mycielskian import mycielskian_t
from django_myc_sym.twins import (
    determining_set_from_quotient, induced_quotient_automorphism, is_complete_bipartite, is_star, is_twin_cover,
    is_twin_free, lift_quotient_automorphism, lift_to_mycielskian, minimum_twin_cover, quotient_graph,
    twin_cover_shadows, twin_partition,
)
from django_myc_sym.utils import InputError, ScopeError


def family(text):
    return build_family(FamilySpec.parse(text))


PATHS = {n: Graph.from_networkx(nx.path_graph(n)) for n in (4, 5)}


class TwinPartitionTestCase(SimpleTestCase):
    def test_pendant_pair(self):
        partition = twin_partition(family('fig3'))
        self.assertEqual(partition.classes, ((0,), (1,), (2,), (3, 4)))
        self.assertEqual(partition.class_of, (0, 1, 2, 3, 3))
        self.assertEqual(partition.non_singleton, [3])

    def test_twin_free(self):
        for name in ('c5', 'petersen', 'p4', 'k4'):
            with self.subTest(graph=name):
                self.assertTrue(is_twin_free(family(name)))
                self.assertTrue(twin_partition(family(name)).is_discrete)
        self.assertFalse(is_twin_free(family('c4')))

    def test_complete_bipartite(self):
        self.assertEqual(twin_partition(family('k23')).classes, ((0, 1), (2, 3, 4)))

    def test_isolated_vertices_are_twins(self):
        self.assertEqual(twin_partition(Graph.empty(3)).classes, ((0, 1, 2),))


class QuotientGraphTestCase(SimpleTestCase):
    def test_pendant_pair(self):
        q = quotient_graph(family('fig3'))
        self.assertEqual(q.projection, (0, 1, 2, 3, 3))
        self.assertEqual(q.representative, (0, 1, 2, 3))
        self.assertEqual(sorted(q.graph.edges()), [(0, 1), (0, 3), (1, 2)])
        self.assertIsNotNone(find_isomorphism(q.graph, PATHS[4]))

    def test_twin_free_quotient(self):
        for n in (2, 3, 4):
            q = quotient_graph(family(f'fig4:{n}'))
            with self.subTest(n=n):
                self.assertEqual(q.graph.n, 5)
                self.assertIsNotNone(find_isomorphism(q.graph, PATHS[5]))
                self.assertTrue(is_twin_free(q.graph))

    def test_twin_free_graph_is_its_own_quotient(self):
        g = family('petersen')
        self.assertEqual(quotient_graph(g).graph, g)

    def test_project(self):
        q = quotient_graph(family('fig4'))
        self.assertEqual(q.project([1, 5, 6]), frozenset({1, 4}))


class TwinCoverTestCase(SimpleTestCase):
    def test_canonical_cover(self):
        cover = minimum_twin_cover(family('fig4'))
        self.assertEqual(cover.vertices, frozenset({5, 6}))
        self.assertEqual(cover.image_classes, frozenset({4}))
        self.assertEqual(len(cover), 2)

    def test_is_twin_cover(self):
        g = family('k23')
        self.assertTrue(is_twin_cover(g, {0, 2, 3}))
        self.assertTrue(is_twin_cover(g, {1, 3, 4}))
        self.assertFalse(is_twin_cover(g, {0, 2}))
        self.assertFalse(is_twin_cover(g, {0, 1, 2, 3}))
        self.assertTrue(is_twin_cover(g, {0, 1, 2, 3}, minimum=False))

    def test_twin_free_cover_is_empty(self):
        cover = minimum_twin_cover(family('c5'))
        self.assertEqual(cover.vertices, frozenset())
        self.assertEqual(cover.image_classes, frozenset())


class ShapeTestCase(SimpleTestCase):
    def test_complete_bipartite(self):
        for name in ('k2', 'k23', 's3', 'c4', 'k12'):
            with self.subTest(graph=name):
                self.assertTrue(is_complete_bipartite(family(name)))
        for name in ('c5', 'p4', 'k3', 'fig3'):
            with self.subTest(graph=name):
                self.assertFalse(is_complete_bipartite(family(name)))
        self.assertFalse(is_complete_bipartite(Graph.empty(2)))

    def test_star(self):
        for name in ('k2', 's3', 'k12'):
            with self.subTest(graph=name):
                self.assertTrue(is_star(family(name)))
        self.assertTrue(is_star(Graph.empty(1)))
        for name in ('k23', 'c4', 'p4'):
            with self.subTest(graph=name):
                self.assertFalse(is_star(family(name)))


class AutomorphismMapTestCase(SimpleTestCase):
    def test_lift_quotient_reflection(self):
        g = family('fig4:2')
        q = quotient_graph(g)
        lifted = lift_quotient_automorphism(g, q, Permutation((3, 2, 1, 0, 4)))
        self.assertEqual(lifted.image, (3, 2, 1, 0, 4, 5))

    def test_lift_requires_fixed_twin_classes(self):
        g = family('fig3')
        q = quotient_graph(g)
        with self.assertRaises(InputError):
            lift_quotient_automorphism(g, q, Permutation((1, 0, 3, 2)))

    def test_lift_requires_an_automorphism(self):
        g = family('fig4:2')
        with self.assertRaises(InputError):
            lift_quotient_automorphism(g, quotient_graph(g), Permutation((1, 0, 2, 3, 4)))

    def test_induced(self):
        g = family('fig4:2')
        q = quotient_graph(g)
        self.assertEqual(induced_quotient_automorphism(g, q, Permutation((3, 2, 1, 0, 4, 5))).image, (3, 2, 1, 0, 4))
        self.assertTrue(induced_quotient_automorphism(g, q, Permutation((0, 1, 2, 3, 5, 4))).is_identity)

    def test_induced_maps_are_quotient_automorphisms(self):
        for name in ('fig3', 'fig4', 'k23', 's3'):
            g = family(name)
            q = quotient_graph(g)
            quotient_group = automorphism_group(q.graph)
            with self.subTest(graph=name):
                for a in automorphism_group(g).elements:
                    self.assertIn(induced_quotient_automorphism(g, q, a), quotient_group)

    def test_lift_then_induce(self):
        g = family('fig4:3')
        q = quotient_graph(g)
        for quotient_aut in automorphism_group(q.graph).elements:
            lifted = lift_quotient_automorphism(g, q, quotient_aut)
            self.assertEqual(induced_quotient_automorphism(g, q, lifted), quotient_aut)

    def test_lift_to_mycielskian(self):
        g = family('c5')
        lg = mycielskian_t(g, 2)
        lifted = lift_to_mycielskian(g, 2, Permutation((1, 2, 3, 4, 0)))
        self.assertTrue(is_automorphism(lg.graph, lifted))
        self.assertEqual(lifted(lg.shadow_master), lg.shadow_master)
        self.assertEqual(lifted(lg.vertex_id(2, 4)), lg.vertex_id(2, 0))
        with self.assertRaises(InputError):
            lift_to_mycielskian(g, 0, Permutation((1, 2, 3, 4, 0)))
        with self.assertRaises(InputError):
            lift_to_mycielskian(g, 1, Permutation((1, 0, 2, 3, 4)))


class MycielskianTwinTestCase(SimpleTestCase):
    def test_cover_shadows(self):
        g = family('fig3')
        for t in (1, 2):
            lg = mycielskian_t(g, t)
            shadows = twin_cover_shadows(g, t, minimum_twin_cover(g))
            with self.subTest(t=t):
                self.assertEqual(shadows, frozenset(lg.vertex_id(s, 4) for s in range(t + 1)))
                self.assertTrue(is_twin_cover(lg.graph, shadows))

    def test_cover_shadows_need_no_isolated_vertices(self):
        g = Graph.empty(2)
        with self.assertRaises(ScopeError):
            twin_cover_shadows(g, 1, minimum_twin_cover(g))

    def test_determining_cover_scales_with_levels(self):
        g = family('k23')
        self.assertEqual(determining_number(g).value, 3)
        for t in (1, 2):
            with self.subTest(t=t):
                self.assertEqual(determining_number(mycielskian_t(g, t).graph).value, 3 * (t + 1))


class DeterminingSetFromQuotientTestCase(SimpleTestCase):
    def setUp(self):
        self.g = family('fig4')
        self.q = quotient_graph(self.g)

    def test_build(self):
        S = determining_set_from_quotient(self.g, self.q, {4, 1})
        self.assertEqual(S, frozenset({1, 5, 6}))
        self.assertTrue(is_determining_set(self.g, S, automorphism_group(self.g)))
        self.assertEqual(len(S), determining_number(self.g).value)

    def test_must_contain_the_cover_image(self):
        with self.assertRaises(InputError):
            determining_set_from_quotient(self.g, self.q, {0, 1})

    def test_must_be_determining(self):
        with self.assertRaises(InputError):
            determining_set_from_quotient(self.g, self.q, {4})

    def test_must_be_minimum(self):
        with self.assertRaises(InputError):
            determining_set_from_quotient(self.g, self.q, {0, 1, 4})
