import networkx as nx
from django.test import SimpleTestCase

from django_myc_sym.families import FamilyKind, FamilySpec, build_family
from django_myc_sym.graphs import (
    Graph, find_isomorphism, format_edge_list, graph_from_edge_list, has_isolated_vertex, read_edge_list,
)
from django_myc_sym.mycielskian import mycielskian_t
from django_myc_sym.utils import InputError, ResourceError


def _maps_edges(g: Graph, h: Graph, phi) -> bool:
    return {frozenset((phi[i], phi[j])) for i, j in g.edges()} == {frozenset(edge) for edge in h.edges()}


class EdgeListTestCase(SimpleTestCase):
    def test_k2(self):
        g = graph_from_edge_list(2, [(0, 1)])
        self.assertEqual(g.n, 2)
        self.assertEqual(g.edge_count, 1)
        self.assertTrue(g.has_edge(1, 0))

    def test_c5_degrees(self):
        g = graph_from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])
        self.assertEqual(g.degrees(), [2] * 5)
        self.assertEqual(g.edge_count, 5)

    def test_duplicates_collapse(self):
        g = graph_from_edge_list(3, [(0, 1), (1, 0), (1, 2)])
        self.assertEqual(g.edge_count, 2)
        self.assertEqual(g.edges(), [(0, 1), (1, 2)])

    def test_out_of_range_and_self_loop(self):
        with self.assertRaises(InputError):
            graph_from_edge_list(3, [(0, 3)])
        with self.assertRaises(InputError):
            graph_from_edge_list(3, [(-1, 0)])
        with self.assertRaises(InputError):
            graph_from_edge_list(3, [(1, 1)])

    def test_asymmetric_adjacency_is_rejected(self):
        with self.assertRaises(InputError):
            Graph(n=2, adj=(0b10, 0), edge_count=1)

    def test_isolated_vertices(self):
        self.assertFalse(has_isolated_vertex(graph_from_edge_list(2, [(0, 1)])))
        self.assertTrue(has_isolated_vertex(graph_from_edge_list(3, [(0, 1)])))
        self.assertFalse(has_isolated_vertex(build_family(FamilySpec(FamilyKind.FIG4, (2,)))))

    def test_induced_subgraph_renumbers(self):
        g = build_family(FamilySpec.parse('c5'))
        path = g.induced_subgraph([1, 2, 3])
        self.assertEqual(path.edges(), [(0, 1), (1, 2)])


class EdgeListFormatTestCase(SimpleTestCase):
    def test_read_with_comments_and_blank_lines(self):
        text = '# a triangle\n3 3\n\n0 1\n1 2\n# closing edge\n2 0\n'
        g = read_edge_list(text)
        self.assertEqual((g.n, g.edge_count), (3, 3))

    def test_edge_count_mismatch(self):
        with self.assertRaises(InputError):
            read_edge_list('3 2\n0 1\n')

    def test_malformed_line(self):
        with self.assertRaises(InputError):
            read_edge_list('3 1\n0 x\n')
        with self.assertRaises(InputError):
            read_edge_list('# nothing here\n')

    def test_format_is_readable(self):
        g = build_family(FamilySpec.parse('petersen'))
        text = format_edge_list(g, comments=['petersen'])
        self.assertTrue(text.startswith('# petersen\n10 15\n'))
        self.assertEqual(read_edge_list(text), g)


class IsomorphismTestCase(SimpleTestCase):
    def test_c5_and_classic_mycielski_3(self):
        c5 = build_family(FamilySpec.parse('c5'))
        m3 = build_family(FamilySpec(FamilyKind.CLASSIC_MYCIELSKI, (3,)))
        phi = find_isomorphism(c5, m3)
        self.assertIsNotNone(phi)
        self.assertTrue(_maps_edges(c5, m3, phi))

    def test_k3_and_c3(self):
        self.assertIsNotNone(find_isomorphism(build_family(FamilySpec.parse('k3')),
                                              build_family(FamilySpec.parse('cycle:3'))))

    def test_p4_and_k13_differ(self):
        self.assertIsNone(find_isomorphism(build_family(FamilySpec.parse('p4')), build_family(FamilySpec.parse('s3'))))

    def test_self_isomorphism_is_identity(self):
        # lexicographically smallest bijection of a graph onto itself
        g = build_family(FamilySpec.parse('petersen'))
        self.assertEqual(find_isomorphism(g, g), tuple(range(10)))

    def test_inverse_round_trip(self):
        g = build_family(FamilySpec.parse('fig4'))
        h = Graph.from_networkx(nx.relabel_nodes(g.to_networkx(), {v: (3 * v + 2) % 7 for v in range(7)}))
        phi = find_isomorphism(g, h)
        psi = find_isomorphism(h, g)
        self.assertTrue(_maps_edges(g, h, phi))
        self.assertTrue(_maps_edges(h, g, psi))
        composed = tuple(psi[phi[v]] for v in g.vertices)
        self.assertTrue(_maps_edges(g, g, composed))

    def test_mycielskian_of_k2_is_an_odd_cycle(self):
        k2 = graph_from_edge_list(2, [(0, 1)])
        for t in range(1, 6):
            cycle = Graph.from_networkx(nx.cycle_graph(2 * t + 3))
            with self.subTest(t=t):
                self.assertIsNotNone(find_isomorphism(mycielskian_t(k2, t).graph, cycle))

    def test_size_mismatch(self):
        self.assertIsNone(find_isomorphism(build_family(FamilySpec.parse('c5')), build_family(FamilySpec.parse('c6'))))

    def test_node_cap(self):
        g = Graph.empty(9)
        with self.assertRaises(ResourceError) as raised:
            find_isomorphism(g, g, cap=3)
        self.assertEqual(raised.exception.limit, 3)
