import random
from fractions import Fraction

import pytest

from assoc2 import (
    ASSOCIATIVE_LABELS,
    ClassLabel,
    ContractionFamily,
    IdenticallySingular,
    PoleAtZero,
    Polynomial,
    RationalFunction,
    abelian_family,
    canonical_algebra,
    classify,
    contract,
    contraction_graph,
    orbit_dim,
    proper_edge_families,
    search_census,
    search_families,
    transport,
    verify_edge,
)

T = RationalFunction.t()
ONE = RationalFunction.const(1)

PROPER_EDGES = {
    (ClassLabel.B1, ClassLabel.B3), (ClassLabel.B2, ClassLabel.B3),
    (ClassLabel.B2, ClassLabel.B4), (ClassLabel.B1, ClassLabel.B5),
    (ClassLabel.B2, ClassLabel.B5), (ClassLabel.B3, ClassLabel.B5),
    (ClassLabel.B4, ClassLabel.B5),
}


class TestFamilies:
    def test_identically_singular_rejected(self):
        with pytest.raises(IdenticallySingular):
            ContractionFamily([[T, T], [T, T]])

    def test_determinant(self):
        fam = ContractionFamily.diagonal(ONE, T)
        assert fam.det == T

    def test_evaluate(self):
        fam = ContractionFamily.from_columns((T, T), (0, 2 * T * T))
        m = fam.evaluate(Fraction(1, 2))
        assert m.matrix == ((Fraction(1, 2), Fraction(0)),
                            (Fraction(1, 2), Fraction(1, 2)))

    def test_compose(self):
        a = ContractionFamily.diagonal(ONE, T)
        b = ContractionFamily.from_columns((T, T), (0, T * T))
        assert a.compose(b).matrix == ContractionFamily(
            [[T, RationalFunction(Polynomial())], [T * T, T * T * T]]).matrix


class TestTransport:
    def test_beta1_scaling(self):
        moved = transport(canonical_algebra(ClassLabel.B1),
                          ContractionFamily.diagonal(ONE, T))
        rows = moved.to_matrix2()
        assert rows[0] == [ONE, 0] and rows[1] == [0, ONE]
        assert rows[3] == [-(T * T), 0]

    def test_identity_family(self):
        beta = canonical_algebra(ClassLabel.B6)
        moved = transport(beta, ContractionFamily.diagonal(ONE, ONE))
        back = moved.map_scalars(lambda r: r.limit_at_zero())
        assert back == beta

    def test_beta2_split_family(self):
        fam = ContractionFamily.from_columns((T, 0),
                                             (Fraction(1, 2), Fraction(1, 2)))
        moved = transport(canonical_algebra(ClassLabel.B2), fam)
        rows = moved.to_matrix2()
        assert rows[0] == [T, 0]
        assert rows[1] == [0, T]
        assert rows[2] == [0, T]
        assert rows[3] == [0, ONE]

    def test_generic_fiber_isomorphic_to_source(self):
        rng = random.Random(41)
        for source, target, fam in proper_edge_families():
            done = 0
            while done < 5:
                t0 = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                if t0 == 0 or fam.det.evaluate(t0) == 0:
                    continue
                moved = transport(canonical_algebra(source), fam)
                fiber = moved.map_scalars(lambda r: r.evaluate(t0))
                assert classify(fiber) == source
                done += 1


class TestContract:
    def test_example_beta1_to_beta3(self):
        limit = contract(canonical_algebra(ClassLabel.B1),
                         ContractionFamily.diagonal(ONE, T))
        assert limit == canonical_algebra(ClassLabel.B3)

    def test_beta2_to_beta5(self):
        fam = ContractionFamily.from_columns((0, T), (T * T, 0))
        limit = contract(canonical_algebra(ClassLabel.B2), fam)
        assert limit == canonical_algebra(ClassLabel.B5)

    def test_pole(self):
        fam = ContractionFamily.diagonal(ONE, RationalFunction(
            Polynomial((1,)), Polynomial.t()))
        with pytest.raises(PoleAtZero):
            contract(canonical_algebra(ClassLabel.B2), fam)

    def test_limits_stay_associative(self):
        for source, target, fam in proper_edge_families():
            limit = contract(canonical_algebra(source), fam)
            assert limit.is_associative()


class TestAbelianFamily:
    def test_everything_contracts_to_zero(self):
        fam = abelian_family(2)
        for label in (ClassLabel.B7, ClassLabel.B2, ClassLabel.ABELIAN):
            limit = contract(canonical_algebra(label), fam)
            assert limit == canonical_algebra(ClassLabel.ABELIAN)


class TestVerifyEdge:
    def test_proper_families_verify(self):
        for source, target, fam in proper_edge_families():
            edge = verify_edge(source, target, fam)
            assert edge.verified, (source, target, edge.reason)
            assert edge.limit_label == target and edge.dimension_drop

    def test_dimension_violation_reported(self):
        edge = verify_edge(ClassLabel.B5, ClassLabel.B1, abelian_family(2))
        assert not edge.verified and "dimension" in edge.reason

    def test_wrong_target_reported(self):
        edge = verify_edge(ClassLabel.B1, ClassLabel.B4,
                           ContractionFamily.diagonal(ONE, T))
        assert not edge.verified and edge.limit_label == ClassLabel.B3

    def test_pole_reported(self):
        fam = ContractionFamily.diagonal(
            ONE, RationalFunction(Polynomial((1,)), Polynomial.t()))
        edge = verify_edge(ClassLabel.B2, ClassLabel.B5, fam)
        assert not edge.verified and "no limit" in edge.reason


class TestJordanCompatibility:
    def test_jordan_parts_contract_alongside(self):
        for source, target, fam in proper_edge_families():
            beta_limit = contract(canonical_algebra(source), fam)
            phi_source = canonical_algebra(source).jordan_part()
            phi_limit = contract(phi_source, fam)
            assert phi_limit == beta_limit.jordan_part()


class TestTransitivity:
    def test_composed_families_realize_b1_to_b5(self):
        first = ContractionFamily.diagonal(ONE, T)  # B1 -> B3
        second = ContractionFamily.from_columns((T, T), (0, T * T))  # B3 -> B5
        composed = first.compose(second)
        edge = verify_edge(ClassLabel.B1, ClassLabel.B5, composed)
        assert edge.verified


class TestGraph:
    def test_edge_set(self):
        g = contraction_graph()
        abelian_edges = {(l, ClassLabel.ABELIAN) for l in g.nodes
                         if l is not ClassLabel.ABELIAN}
        assert g.edge_set() == PROPER_EDGES | abelian_edges
        assert len(g.edges) == 14

    def test_rigid_nodes_receive_nothing(self):
        g = contraction_graph()
        for rigid in (ClassLabel.B1, ClassLabel.B2,
                      ClassLabel.B6, ClassLabel.B7):
            assert g.in_degree(rigid) == 0

    def test_degrees(self):
        g = contraction_graph()
        assert g.in_degree(ClassLabel.B5) == 4
        assert g.out_degree(ClassLabel.ABELIAN) == 0
        assert g.in_degree(ClassLabel.ABELIAN) == 7

    def test_dimension_inequality_on_all_edges(self):
        g = contraction_graph()
        for edge in g.edges:
            assert orbit_dim(canonical_algebra(edge.source)) > \
                orbit_dim(canonical_algebra(edge.target))

    def test_dot_deterministic(self):
        d1 = contraction_graph().to_dot()
        d2 = contraction_graph().to_dot()
        assert d1 == d2
        assert "beta2 -> beta4;" in d1
        assert "-> beta7" not in d1
        assert d1.count("->") == 14


class TestSearch:
    def test_finds_scaling_family(self):
        fam = search_families(ClassLabel.B1, ClassLabel.B3, 1)
        assert fam is not None
        assert verify_edge(ClassLabel.B1, ClassLabel.B3, fam).verified

    def test_rigid_target_short_circuits(self):
        assert search_families(ClassLabel.B6, ClassLabel.B1, 2) is None
        assert search_families(ClassLabel.B5, ClassLabel.B2, 2) is None

    def test_census_size(self):
        assert search_census(2) == 900
        assert search_census(0) == 100

    def test_bound_validation(self):
        with pytest.raises(ValueError):
            search_families(ClassLabel.B1, ClassLabel.B3, 5)

    def test_rigidity_consistency(self):
        # no bound-2 template reaches a rigid class from a different class
        rigid = (ClassLabel.B1, ClassLabel.B2, ClassLabel.B6, ClassLabel.B7)
        sources = tuple(l for l in ASSOCIATIVE_LABELS)
        for target in rigid:
            for source in sources:
                if source is target:
                    continue
                assert search_families(source, target, 2) is None, \
                    (source, target)
