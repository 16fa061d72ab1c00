#include <doctest.h>

#include "lagr/deformation.hpp"
#include "oracles.hpp"

using namespace lagr;

TEST_CASE("deform_third_to_transversal on pinned maps") {
    SUBCASE("g = [0]: graphs of [t]") {
        const auto path = deform_third_to_transversal(
            1, GraphMap(-1, Eigen::MatrixXd::Zero(1, 1)), 9);
        const auto sp = standard_space(1, -1);
        CHECK(subspace_equal(path.start().subspace, sp.l_factor.subspace));
        Eigen::MatrixXd diag(2, 1);
        diag << 1, 1;
        CHECK(subspace_equal(path.end().subspace, canonicalize(diag)));
        CHECK(are_transversal(path.end(), sp.l_factor));
        CHECK(are_transversal(path.end(), sp.lstar_factor));
    }
    SUBCASE("g = [5]: graphs of [5 - 4t]") {
        const auto path = deform_third_to_transversal(
            1, GraphMap(-1, 5.0 * Eigen::MatrixXd::Identity(1, 1)), 33);
        for (std::size_t i = 0; i < path.ts().size(); ++i) {
            const double expected = 5.0 - 4.0 * path.ts()[i];
            Eigen::MatrixXd raw(2, 1);
            raw << 1, expected;
            CHECK(subspace_equal(path.samples()[i].subspace,
                                 canonicalize(raw)));
        }
    }
    SUBCASE("singular midpoint is still a lagrangian") {
        Eigen::MatrixXd g(2, 2);
        g << 1, 0, 0, -1; // g(0.5) = diag(0.5, 0) singular
        const auto path =
            deform_third_to_transversal(2, GraphMap(-1, g), 17);
        for (const auto& sample : path.samples())
            CHECK(sample.isotropy_residual < 1e-10);
        const auto sp = standard_space(2, -1);
        CHECK(are_transversal(path.end(), sp.l_factor));
        CHECK(are_transversal(path.end(), sp.lstar_factor));
    }
}

TEST_CASE("random graphs deform to pairwise transversal position") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const int np = 1 + trial % 4;
        const auto sp = standard_space(np, -1);
        const GraphMap g(-1, oracle::random_symmetric(rng, np, 2.0));
        const auto path = deform_third_to_transversal(np, g, 33);
        CHECK(subspace_equal(path.start().subspace,
                             graph_lagrangian(sp.space, g).subspace));
        CHECK(are_transversal(path.end(), sp.l_factor));
        CHECK(are_transversal(path.end(), sp.lstar_factor));
    }
}

TEST_CASE("family deformation: endpoints pairwise transversal") {
    std::mt19937 rng(37);
    SUBCASE("pinned pair of zero maps") {
        const std::vector<GraphMap> gs(2, GraphMap(-1, Eigen::MatrixXd::Zero(1, 1)));
        const auto paths = deform_family_to_mutually_transversal(1, gs, 9);
        REQUIRE(paths.size() == 2);
        Eigen::MatrixXd g3(2, 1), g4(2, 1);
        g3 << 1, 3;
        g4 << 1, 4;
        CHECK(subspace_equal(paths[0].end().subspace, canonicalize(g3)));
        CHECK(subspace_equal(paths[1].end().subspace, canonicalize(g4)));
        CHECK(are_transversal(paths[0].end(), paths[1].end()));
    }
    SUBCASE("six random maps in n' = 3") {
        const int np = 3;
        const auto sp = standard_space(np, -1);
        std::vector<GraphMap> gs;
        for (int i = 0; i < 6; ++i)
            gs.emplace_back(-1, oracle::random_symmetric(rng, np, 2.0));
        const auto paths =
            deform_family_to_mutually_transversal(np, gs, 65);
        std::vector<Lagrangian> all = {sp.l_factor, sp.lstar_factor};
        for (const auto& path : paths) all.push_back(path.end());
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                CHECK(are_transversal(all[i], all[j]));
    }
    SUBCASE("single map matches deform_third_to_transversal scaled by 3") {
        const std::vector<GraphMap> gs = {GraphMap(-1, Eigen::MatrixXd::Zero(2, 2))};
        const auto paths = deform_family_to_mutually_transversal(2, gs, 17);
        REQUIRE(paths.size() == 1);
        const auto sp = standard_space(2, -1);
        const GraphMap target = extract_graph_map(sp.space, paths[0].end());
        CHECK((target.entries - 3.0 * Eigen::MatrixXd::Identity(2, 2))
                  .cwiseAbs()
                  .maxCoeff() < 1e-9);
    }
}

TEST_CASE("skew family deformation with auto-stabilization") {
    std::mt19937 rng(41);
    SUBCASE("odd rank stabilizes and reports it") {
        const std::vector<GraphMap> gs = {GraphMap(+1, Eigen::MatrixXd::Zero(1, 1))};
        const auto result = deform_family_symmetric(1, gs, 9);
        CHECK(result.stabilized);
        CHECK(result.original_nprime == 1);
        CHECK(result.effective_nprime == 2);
        REQUIRE(result.paths.size() == 1);
        const auto sp = standard_space(2, +1);
        const GraphMap target = extract_graph_map(sp.space, result.paths[0].end());
        Eigen::MatrixXd omega(2, 2);
        omega << 0, 1, -1, 0;
        CHECK((target.entries - 3.0 * omega).cwiseAbs().maxCoeff() < 1e-9);
        CHECK(are_transversal(result.paths[0].end(), sp.l_factor));
        CHECK(are_transversal(result.paths[0].end(), sp.lstar_factor));
    }
    SUBCASE("even rank keeps the dimension") {
        Eigen::MatrixXd omega(2, 2);
        omega << 0, 1, -1, 0;
        const std::vector<GraphMap> gs = {GraphMap(+1, omega)};
        const auto result = deform_family_symmetric(2, gs, 9);
        CHECK_FALSE(result.stabilized);
        CHECK(result.effective_nprime == 2);
        const auto sp = standard_space(2, +1);
        CHECK(are_transversal(result.paths[0].end(), sp.l_factor));
    }
    SUBCASE("random families end pairwise transversal") {
        for (int np : {1, 2, 3}) {
            std::vector<GraphMap> gs;
            for (int i = 0; i < 4; ++i)
                gs.emplace_back(+1, oracle::random_skew(rng, np, 2.0));
            const auto result = deform_family_symmetric(np, gs, 65);
            const auto sp = standard_space(result.effective_nprime, +1);
            std::vector<Lagrangian> all = {sp.l_factor, sp.lstar_factor};
            for (const auto& path : result.paths) all.push_back(path.end());
            for (std::size_t i = 0; i < all.size(); ++i)
                for (std::size_t j = i + 1; j < all.size(); ++j)
                    CHECK(are_transversal(all[i], all[j]));
        }
    }
}

TEST_CASE("make_transversal_pair") {
    SUBCASE("identical lines rotate apart") {
        const auto sp = standard_space(1, -1);
        const auto path =
            make_transversal_pair(sp.space, sp.l_factor, sp.l_factor, 9);
        CHECK(subspace_equal(path.start().subspace, sp.l_factor.subspace));
        CHECK(are_transversal(path.end(), sp.l_factor));
    }
    SUBCASE("already transversal pairs stay valid") {
        const auto sp = standard_space(1, -1);
        Eigen::MatrixXd diag(2, 1);
        diag << 1, 1;
        const auto l2 = validate_lagrangian(sp.space, canonicalize(diag));
        const auto path =
            make_transversal_pair(sp.space, sp.l_factor, l2, 9);
        CHECK(are_transversal(path.end(), sp.l_factor));
    }
    SUBCASE("200 random pairs end transversal") {
        std::mt19937 rng(43);
        for (int trial = 0; trial < 200; ++trial) {
            const int np = 1 + trial % 4;
            const auto sp = standard_space(np, -1);
            const Eigen::MatrixXd t1 = oracle::random_symplectic(rng, np);
            const Eigen::MatrixXd t2 = oracle::random_symplectic(rng, np);
            const auto l1 = validate_lagrangian(
                sp.space, map_subspace(t1, sp.l_factor.subspace));
            const auto l2 = validate_lagrangian(
                sp.space, map_subspace(t2, sp.l_factor.subspace));
            const auto path = make_transversal_pair(sp.space, l1, l2, 17);
            CHECK(subspace_equal(path.start().subspace, l2.subspace));
            CHECK(are_transversal(path.end(), l1));
        }
    }
}

TEST_CASE("paths validate their invariants") {
    const auto sp = standard_space(1, -1);
    // a quarter-turn in one jump exceeds the pi/4 continuity guard
    Eigen::MatrixXd e1(2, 1), e2(2, 1);
    e1 << 1, 0;
    e2 << 0, 1;
    CHECK_THROWS_AS(
        LagrangianPath(sp.space, {0.0, 1.0},
                       {canonicalize(e1), canonicalize(e2)}),
        SamplingTooCoarse);
    CHECK_THROWS_AS(
        LagrangianPath(sp.space, {0.0, 0.5},
                       {canonicalize(e1), canonicalize(e1)}),
        InvalidArgument);
    CHECK_THROWS_AS(deform_third_to_transversal(
                        1, GraphMap(-1, Eigen::MatrixXd::Zero(1, 1)), 1),
                    InvalidArgument);
}
