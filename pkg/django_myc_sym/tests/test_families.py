import networkx as nx
from django.test import SimpleTestCase

from django_myc_sym.families import FamilyKind, FamilySpec, build_family
from django_myc_sym.graphs import find_isomorphism
from django_myc_sym.utils import InputError


class FamilySpecTestCase(SimpleTestCase):
    def test_short_names(self):
        self.assertEqual(FamilySpec.parse('k5'), FamilySpec(FamilyKind.COMPLETE, (5,)))
        self.assertEqual(FamilySpec.parse('K23'), FamilySpec(FamilyKind.COMPLETE_BIPARTITE, (2, 3)))
        self.assertEqual(FamilySpec.parse('c11'), FamilySpec(FamilyKind.CYCLE, (11,)))
        self.assertEqual(FamilySpec.parse('s3'), FamilySpec(FamilyKind.STAR, (3,)))
        self.assertEqual(FamilySpec.parse('m4'), FamilySpec(FamilyKind.CLASSIC_MYCIELSKI, (4,)))
        self.assertEqual(FamilySpec.parse('fig4'), FamilySpec(FamilyKind.FIG4, (3,)))
        self.assertEqual(FamilySpec.parse('petersen'), FamilySpec(FamilyKind.PETERSEN))

    def test_long_names(self):
        self.assertEqual(FamilySpec.parse('complete:12'), FamilySpec(FamilyKind.COMPLETE, (12,)))
        self.assertEqual(FamilySpec.parse('bipartite:3,10'), FamilySpec(FamilyKind.COMPLETE_BIPARTITE, (3, 10)))
        self.assertEqual(FamilySpec.parse('fig4:5').label, 'fig4:5')

    def test_two_digit_k_is_bipartite(self):
        self.assertEqual(FamilySpec.parse('k12'), FamilySpec(FamilyKind.COMPLETE_BIPARTITE, (1, 2)))
        with self.assertRaises(InputError):
            FamilySpec.parse('k10')
        self.assertEqual(build_family(FamilySpec.parse('complete:12')).edge_count, 66)

    def test_invalid(self):
        for text in ('c2', 'fig4:1', 'm1', 'k0', 'bipartite:3', 'nonsense', 'cycle:x'):
            with self.subTest(text=text), self.assertRaises(InputError):
                FamilySpec.parse(text)


class BuildFamilyTestCase(SimpleTestCase):
    def test_classic_mycielski_3_is_c5(self):
        m3 = build_family(FamilySpec.parse('m3'))
        self.assertIsNotNone(find_isomorphism(m3, build_family(FamilySpec.parse('c5'))))

    def test_classic_mycielski_matches_networkx(self):
        for n in (4, 5):
            with self.subTest(n=n):
                ours = build_family(FamilySpec.parse(f'm{n}')).to_networkx()
                self.assertTrue(nx.is_isomorphic(ours, nx.mycielski_graph(n)))
        self.assertEqual(build_family(FamilySpec.parse('m5')).n, 23)

    def test_fig3(self):
        g = build_family(FamilySpec.parse('fig3'))
        self.assertEqual((g.n, g.edge_count), (5, 4))
        self.assertEqual(g.adj[3], g.adj[4])  # x and y are twins
        self.assertEqual(g.neighbors(0), [1, 3, 4])

    def test_fig4(self):
        g = build_family(FamilySpec.parse('fig4'))
        self.assertEqual(g.n, 7)
        for x in (4, 5, 6):
            self.assertEqual(g.neighbors(x), [1, 2])
        self.assertEqual(g.neighbors(0), [1])
        self.assertEqual(g.neighbors(3), [2])

    def test_numbering(self):
        star = build_family(FamilySpec.parse('s3'))
        self.assertEqual(star.degree(0), 3)
        bipartite = build_family(FamilySpec.parse('k23'))
        self.assertEqual(bipartite.neighbors(0), [2, 3, 4])
        cube = build_family(FamilySpec.parse('q3'))
        self.assertEqual((cube.n, cube.edge_count), (8, 12))
        self.assertEqual(cube.degrees(), [3] * 8)
        self.assertEqual(build_family(FamilySpec.parse('p4')).edges(), [(0, 1), (1, 2), (2, 3)])
