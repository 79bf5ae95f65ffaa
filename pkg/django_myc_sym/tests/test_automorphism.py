from itertools import combinations

from django.test import SimpleTestCase

from django_myc_sym.automorphism import (
    AutGroup, Permutation, _closure, automorphism_group, is_automorphism, pointwise_stabilizer, setwise_stabilizer,
    setwise_stabilizer_is_trivial,
)
from django_myc_sym.families import FamilySpec, build_family
from django_myc_sym.mycielskian import mycielskian_t
from django_myc_sym.utils import InputError, ResourceError


def family(text):
    return build_family(FamilySpec.parse(text))


class PermutationTestCase(SimpleTestCase):
    def test_rejects_non_bijections(self):
        with self.assertRaises(InputError):
            Permutation((0, 0, 1))
        with self.assertRaises(InputError):
            Permutation((1, 2))

    def test_algebra(self):
        rotation = Permutation.from_cycles(5, [(0, 1, 2, 3, 4)])
        self.assertEqual(rotation.image, (1, 2, 3, 4, 0))
        self.assertTrue(rotation.compose(rotation.inverse()).is_identity)
        self.assertEqual(rotation.compose(rotation).image, (2, 3, 4, 0, 1))
        self.assertEqual(rotation.moved_mask, 0b11111)
        self.assertEqual(rotation.apply_mask(0b00011), 0b00110)

    def test_cycle_notation(self):
        p = Permutation((1, 0, 2, 4, 3))
        self.assertEqual(p.cycles(), [(0, 1), (3, 4)])
        self.assertEqual(p.cycle_notation(), '(0 1)(3 4)')
        self.assertEqual(p.cycle_notation(['a', 'b', 'c', 'd', 'e']), '(a b)(d e)')
        self.assertEqual(Permutation.identity(3).cycle_notation(), '()')


class IsAutomorphismTestCase(SimpleTestCase):
    def test_cycle_rotation(self):
        self.assertTrue(is_automorphism(family('c5'), Permutation((1, 2, 3, 4, 0))))

    def test_path_reversal(self):
        self.assertTrue(is_automorphism(family('p4'), Permutation((3, 2, 1, 0))))

    def test_path_endpoint_swap(self):
        self.assertFalse(is_automorphism(family('p4'), Permutation((1, 0, 2, 3))))

    def test_length_mismatch(self):
        with self.assertRaises(InputError):
            is_automorphism(family('p4'), Permutation((0, 1, 2)))


class AutomorphismGroupTestCase(SimpleTestCase):
    def test_orders(self):
        self.assertEqual(automorphism_group(family('k4')).order, 24)
        self.assertEqual(automorphism_group(family('petersen')).order, 120)
        self.assertEqual(automorphism_group(family('c5')).order, 10)
        self.assertEqual(automorphism_group(family('q3')).order, 48)
        self.assertEqual(automorphism_group(family('fig3')).order, 2)

    def test_mycielskian_of_k5_fixes_w(self):
        lg = mycielskian_t(family('k5'), 1)
        group = automorphism_group(lg.graph)
        self.assertEqual(group.order, 120)
        self.assertTrue(all(p(lg.shadow_master) == lg.shadow_master for p in group.elements))

    def test_deterministic_order(self):
        group = automorphism_group(family('c6'))
        images = [p.image for p in group.elements]
        self.assertEqual(images, sorted(images))
        self.assertTrue(group.identity.is_identity)
        self.assertEqual(len(set(images)), group.order)

    def test_group_is_closed(self):
        for name in ('c5', 'fig4', 'k23', 'p4'):
            g = family(name)
            group = automorphism_group(g)
            with self.subTest(graph=name):
                self.assertTrue(all(is_automorphism(g, p) for p in group.elements))
                self.assertTrue(group.is_closed())

    def test_generators_generate(self):
        for name in ('c5', 'petersen', 'k23'):
            group = automorphism_group(family(name))
            with self.subTest(graph=name):
                self.assertEqual(_closure(group.n, group.generators()), group.images)

    def test_orbits(self):
        group = automorphism_group(family('fig3'))
        self.assertEqual(group.orbits(), [[0], [1], [2], [3, 4]])
        self.assertEqual(automorphism_group(family('petersen')).orbit_of(0), list(range(10)))

    def test_threads_do_not_change_the_result(self):
        g = mycielskian_t(family('petersen'), 1).graph
        self.assertEqual(automorphism_group(g, workers=4), automorphism_group(g, workers=1))

    def test_cap(self):
        with self.assertRaises(ResourceError) as raised:
            automorphism_group(family('k5'), cap=10)
        self.assertEqual(raised.exception.limit, 10)
        self.assertGreater(raised.exception.partial, 10)

    def test_empty_graph(self):
        from django_myc_sym.graphs import Graph
        self.assertEqual(automorphism_group(Graph.empty(0)).order, 1)
        self.assertEqual(automorphism_group(Graph.empty(3)).order, 6)


class MycielskianAutomorphismTestCase(SimpleTestCase):
    def test_star_shadow_master_images(self):
        star = family('s3')
        for t in (1, 2, 3):
            lg = mycielskian_t(star, t)
            group = automorphism_group(lg.graph)
            with self.subTest(t=t):
                self.assertEqual(set(group.orbit_of(lg.shadow_master)), {lg.shadow_master, lg.vertex_id(t, 0)})

    def test_w_fixed_and_levels_preserved(self):
        for name in ('p4', 'c5', 'c6', 'petersen', 'fig3', 'fig4'):
            for t in (1, 2):
                lg = mycielskian_t(family(name), t)
                group = automorphism_group(lg.graph)
                with self.subTest(graph=name, t=t):
                    for p in group.elements:
                        self.assertEqual(p(lg.shadow_master), lg.shadow_master)
                        self.assertTrue(all(lg.labels[p(v)].level == lg.labels[v].level for v in lg.graph.vertices))


class StabilizerTestCase(SimpleTestCase):
    def setUp(self):
        self.c5 = family('c5')
        self.group = automorphism_group(self.c5)

    def test_pointwise(self):
        self.assertEqual(pointwise_stabilizer(self.c5, {0, 1}, self.group).order, 1)
        self.assertEqual(pointwise_stabilizer(self.c5, {0}, self.group).order, 2)
        self.assertEqual(pointwise_stabilizer(self.c5, set(), self.group), self.group)

    def test_lagrange(self):
        g = family('petersen')
        group = automorphism_group(g)
        for S in ({0}, {0, 1}, {0, 2}, {0, 5}, {1, 2, 3}):
            with self.subTest(S=S):
                self.assertEqual(group.order % pointwise_stabilizer(g, S, group).order, 0)
                self.assertEqual(group.order % setwise_stabilizer(g, S, group).order, 0)

    def test_setwise(self):
        self.assertFalse(setwise_stabilizer_is_trivial(self.c5, {0, 1}, self.group))
        # the reflection through 3 swaps 0 and 1
        self.assertFalse(setwise_stabilizer_is_trivial(self.c5, {0, 1, 3}, self.group))
        self.assertFalse(setwise_stabilizer_is_trivial(self.c5, set(self.c5.vertices), self.group))
        c6 = family('c6')
        self.assertTrue(setwise_stabilizer_is_trivial(c6, {0, 1, 3}, automorphism_group(c6)))

    def test_no_subset_of_c5_is_setwise_trivial(self):
        for size in range(self.c5.n + 1):
            for subset in combinations(self.c5.vertices, size):
                with self.subTest(subset=subset):
                    self.assertFalse(setwise_stabilizer_is_trivial(self.c5, set(subset), self.group))

    def test_full_set_on_an_asymmetric_graph(self):
        from django_myc_sym.graphs import graph_from_edge_list
        g = graph_from_edge_list(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (3, 5)])
        group = automorphism_group(g)
        self.assertTrue(group.is_trivial)
        self.assertTrue(setwise_stabilizer_is_trivial(g, set(g.vertices), group))

    def test_out_of_range(self):
        with self.assertRaises(InputError):
            pointwise_stabilizer(self.c5, {5}, self.group)

    def test_group_type(self):
        self.assertIsInstance(setwise_stabilizer(self.c5, {0}, self.group), AutGroup)
