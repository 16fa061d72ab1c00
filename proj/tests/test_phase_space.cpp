#include <doctest.h>

#include "lagr/phase_space.hpp"
#include "oracles.hpp"

using namespace lagr;

namespace {

Subspace span_cols(const Eigen::MatrixXd& cols) { return canonicalize(cols); }

Eigen::MatrixXd col(std::initializer_list<double> entries) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(entries.size()), 1);
    int r = 0;
    for (double v : entries) m(r++, 0) = v;
    return m;
}

} // namespace

TEST_CASE("standard spaces and factor lagrangians") {
    const auto sp = standard_space(1, -1);
    Eigen::MatrixXd expected(2, 2);
    expected << 0, 1, -1, 0;
    CHECK(sp.space->form().entries() == expected);
    CHECK(subspace_equal(sp.l_factor.subspace, span_cols(col({1, 0}))));
    CHECK(subspace_equal(sp.lstar_factor.subspace, span_cols(col({0, 1}))));

    CHECK(signature(standard_space(2, +1).space->form()) == Signature{2, 2, 0});

    for (int np = 1; np <= 6; ++np)
        for (int eps : {-1, +1}) {
            const auto s = standard_space(np, eps);
            CHECK(are_transversal(s.l_factor, s.lstar_factor));
        }
}

TEST_CASE("validate_lagrangian accepts and rejects pinned candidates") {
    const auto sp = standard_space(1, -1);
    CHECK_NOTHROW(validate_lagrangian(sp.space, span_cols(col({1, 0}))));
    CHECK_NOTHROW(validate_lagrangian(sp.space, span_cols(col({1, 1}))));

    const auto sym = standard_space(2, +1);
    Eigen::MatrixXd first_factor(4, 2);
    first_factor << 1, 0, 0, 1, 0, 0, 0, 0;
    CHECK_NOTHROW(validate_lagrangian(sym.space, span_cols(first_factor)));

    Eigen::MatrixXd mixed(4, 2);
    mixed << 1, 0, 0, 0, 0, 1, 0, 0; // span{e1, e3}: phi(e1, e3) = 1
    CHECK_THROWS_AS(validate_lagrangian(sym.space, span_cols(mixed)),
                    NotIsotropic);

    CHECK_THROWS_AS(validate_lagrangian(sp.space, Subspace::zero(2)),
                    WrongDimension);
}

TEST_CASE("transversality of pinned pairs") {
    const auto sp = standard_space(1, -1);
    const auto diag = validate_lagrangian(sp.space, span_cols(col({1, 1})));
    CHECK(are_transversal(sp.l_factor, sp.lstar_factor));
    CHECK(are_transversal(sp.l_factor, diag));
    CHECK_FALSE(are_transversal(sp.l_factor, sp.l_factor));
}

TEST_CASE("graph lagrangians") {
    const auto sp = standard_space(1, -1);
    const auto zero_graph =
        graph_lagrangian(sp.space, GraphMap(-1, Eigen::MatrixXd::Zero(1, 1)));
    CHECK(subspace_equal(zero_graph.subspace, sp.l_factor.subspace));

    const auto unit_graph = graph_lagrangian(
        sp.space, GraphMap(-1, Eigen::MatrixXd::Identity(1, 1)));
    CHECK(subspace_equal(unit_graph.subspace, span_cols(col({1, 1}))));
    CHECK(are_transversal(unit_graph, sp.l_factor));
    CHECK(are_transversal(unit_graph, sp.lstar_factor));

    // eps = +1, n' = 1: the only skew 1x1 map is zero, and its graph is
    // the L factor itself, never transversal to it.
    CHECK_THROWS_AS(GraphMap(+1, Eigen::MatrixXd::Identity(1, 1)),
                    SymmetryViolation);
    const auto sym = standard_space(1, +1);
    const auto only_graph =
        graph_lagrangian(sym.space, GraphMap(+1, Eigen::MatrixXd::Zero(1, 1)));
    CHECK_FALSE(are_transversal(only_graph, sym.l_factor));
}

TEST_CASE("extract_graph_map on pinned inputs") {
    const auto sp = standard_space(1, -1);
    const auto l3 = validate_lagrangian(sp.space, span_cols(col({1, 2})));
    const GraphMap g = extract_graph_map(sp.space, l3);
    CHECK(g.entries(0, 0) == doctest::Approx(2.0));

    CHECK_THROWS_AS(extract_graph_map(sp.space, sp.lstar_factor),
                    NotTransversalToLstar);
}

TEST_CASE("graph round-trip on random symmetric maps") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const int np = 1 + trial % 4;
        const auto sp = standard_space(np, -1);
        const GraphMap g(-1, oracle::random_symmetric(rng, np, 5.0));
        const Lagrangian l = graph_lagrangian(sp.space, g);
        const GraphMap back = extract_graph_map(sp.space, l);
        CHECK((back.entries - g.entries).cwiseAbs().maxCoeff() < 1e-9);
        CHECK(subspace_equal(graph_lagrangian(sp.space, back).subspace,
                             l.subspace));
    }
}

TEST_CASE("graph transversality matches invertibility of the difference") {
    std::mt19937 rng(19);
    Tolerance tol;
    for (int trial = 0; trial < 1000; ++trial) {
        const int eps = trial % 2 ? 1 : -1;
        // skew maps need even size to be invertible; use even n' for both
        const int np = eps == -1 ? 1 + trial % 4 : 2 * (1 + trial % 2);
        const auto sp = standard_space(np, eps);
        Eigen::MatrixXd m1, m2;
        if (eps == -1) {
            m1 = oracle::random_symmetric(rng, np);
            m2 = oracle::random_symmetric(rng, np);
        } else {
            m1 = oracle::random_skew(rng, np);
            m2 = oracle::random_skew(rng, np);
        }
        if (trial % 5 == 0) m2 = m1; // force a non-transversal pair
        const Lagrangian l1 = graph_lagrangian(sp.space, GraphMap(eps, m1));
        const Lagrangian l2 = graph_lagrangian(sp.space, GraphMap(eps, m2));
        const int diff_rank = oracle::rank_by_elimination(m1 - m2);
        CHECK(are_transversal(l1, l2, tol) == (diff_rank == np));
    }
}

TEST_CASE("graph isotropy residuals stay tiny for large entries") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const int np = 1 + trial % 4;
        const auto sp = standard_space(np, -1);
        const GraphMap g(-1, oracle::random_symmetric(rng, np, 10.0));
        CHECK(graph_lagrangian(sp.space, g).isotropy_residual < 1e-12);
    }
}

TEST_CASE("stabilize embeds lagrangians into E + H(R^k)") {
    const auto sp = standard_space(1, -1);
    const auto out = stabilize(sp.space, {sp.l_factor}, 1);
    CHECK(out.space->dim() == 4);
    CHECK(out.lagrangians.size() == 1);
    CHECK(out.lagrangians[0].subspace.dim() == 2);
    CHECK(out.lagrangians[0].isotropy_residual < 1e-12);

    // transversality of the pair survives when both gain hyperbolic
    // factor summands
    const auto pair = stabilize(sp.space, {sp.l_factor}, 1);
    Eigen::MatrixXd fix(4, 2);
    fix.setZero();
    fix(1, 0) = 1; // old e2
    fix(3, 1) = 1; // new beta coordinate
    const auto lstar_aligned = validate_lagrangian(pair.space, span_cols(fix));
    CHECK(are_transversal(pair.lagrangians[0], lstar_aligned));
}

TEST_CASE("darboux normalization of pinned pairs") {
    const auto sp = standard_space(1, -1);
    SUBCASE("standard pair (L*, L)") {
        const Eigen::MatrixXd p = darboux_pair_normalization(
            sp.space, sp.lstar_factor, sp.l_factor);
        const double residual =
            (p.transpose() * sp.space->form().entries() * p -
             sp.space->form().entries())
                .cwiseAbs()
                .maxCoeff();
        CHECK(residual < 1e-14);
    }
    SUBCASE("diagonal pair") {
        const auto l1 = validate_lagrangian(sp.space, span_cols(col({1, 1})));
        const auto l2 = validate_lagrangian(sp.space, span_cols(col({1, -1})));
        const Eigen::MatrixXd p =
            darboux_pair_normalization(sp.space, l1, l2);
        const double residual =
            (p.transpose() * sp.space->form().entries() * p -
             sp.space->form().entries())
                .cwiseAbs()
                .maxCoeff();
        CHECK(residual < 1e-10);
    }
    SUBCASE("non-transversal pair is rejected") {
        CHECK_THROWS_AS(
            darboux_pair_normalization(sp.space, sp.l_factor, sp.l_factor),
            NotTransversal);
    }
}

TEST_CASE("darboux normalization maps factors onto the pair") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        const int np = 1 + trial % 3;
        const auto sp = standard_space(np, -1);
        const Eigen::MatrixXd t = oracle::random_symplectic(rng, np);
        const Lagrangian l1 = validate_lagrangian(
            sp.space, map_subspace(t, sp.lstar_factor.subspace));
        const Lagrangian l2 = validate_lagrangian(
            sp.space, map_subspace(t, sp.l_factor.subspace));
        const Eigen::MatrixXd p =
            darboux_pair_normalization(sp.space, l1, l2);
        const double residual =
            (p.transpose() * sp.space->form().entries() * p -
             hyperbolic_form(np, -1).entries())
                .cwiseAbs()
                .maxCoeff();
        CHECK(residual < 1e-9);
        CHECK(subspace_equal(map_subspace(p, sp.l_factor.subspace),
                             l2.subspace));
        CHECK(subspace_equal(map_subspace(p, sp.lstar_factor.subspace),
                             l1.subspace));

        // after pulling back, any third lagrangian transversal to l1 is
        // a graph over the L factor with the symmetry type of -eps
        const GraphMap g(-1, oracle::random_invertible_symmetric(rng, np));
        const Lagrangian l3 = validate_lagrangian(
            sp.space, map_subspace(t, graph_lagrangian(sp.space, g).subspace));
        const Subspace pulled = map_subspace(p.inverse(), l3.subspace);
        const Lagrangian pulled_l = validate_lagrangian(sp.space, pulled);
        const GraphMap extracted = extract_graph_map(sp.space, pulled_l);
        const double symmetry =
            (extracted.entries - extracted.entries.transpose())
                .cwiseAbs()
                .maxCoeff();
        CHECK(symmetry < 1e-9);
    }
}
