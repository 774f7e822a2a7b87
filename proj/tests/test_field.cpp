#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "triverify/matrix_group.hpp"
#include "triverify/perm_group.hpp"

using namespace triverify;

TEST_CASE("GF(2) basics") {
    GaloisField F(2, 1);
    CHECK(F.add(1, 1) == 0);
    CHECK(F.mul(1, 1) == 1);
    CHECK(F.inv(1) == 1);
}

TEST_CASE("field axioms hold exhaustively up to order 81") {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> specs = {
        {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {5, 2}, {7, 2},
        {11, 1}, {13, 1}, {2, 5}, {2, 6}, {3, 3}, {3, 4},
    };
    for (auto [p, k] : specs) {
        GaloisField F(p, k);
        std::uint64_t q = F.order();
        REQUIRE(q <= 81);
        for (std::uint64_t a = 0; a < q; ++a) {
            for (std::uint64_t b = 0; b < q; ++b) {
                auto A = static_cast<GaloisField::Element>(a);
                auto B = static_cast<GaloisField::Element>(b);
                CHECK(F.add(A, B) == F.add(B, A));
                CHECK(F.mul(A, B) == F.mul(B, A));
                for (std::uint64_t c = 0; c < q; ++c) {
                    auto C = static_cast<GaloisField::Element>(c);
                    REQUIRE(F.mul(F.mul(A, B), C) == F.mul(A, F.mul(B, C)));
                    REQUIRE(F.add(F.add(A, B), C) == F.add(A, F.add(B, C)));
                    REQUIRE(F.mul(A, F.add(B, C)) == F.add(F.mul(A, B), F.mul(A, C)));
                }
            }
            if (a != 0) {
                auto A = static_cast<GaloisField::Element>(a);
                CHECK(F.mul(A, F.inv(A)) == 1);
            }
        }
    }
}

TEST_CASE("GF(9) multiplicative group is cyclic of order 8") {
    GaloisField F(3, 2);
    GaloisField::Element g = F.generator();
    std::set<GaloisField::Element> powers;
    GaloisField::Element x = 1;
    for (int i = 0; i < 8; ++i) {
        powers.insert(x);
        x = F.mul(x, g);
    }
    CHECK(x == 1);
    CHECK(powers.size() == 8);
}

TEST_CASE("GF(25) frobenius has order 2") {
    GaloisField F(5, 2);
    for (std::uint64_t a = 0; a < 25; ++a) {
        auto A = static_cast<GaloisField::Element>(a);
        CHECK(F.frobenius(F.frobenius(A)) == A);
    }
    bool moved = false;
    for (std::uint64_t a = 0; a < 25; ++a)
        if (F.frobenius(static_cast<GaloisField::Element>(a)) != a) moved = true;
    CHECK(moved);
}

TEST_CASE("canonical modulus is stable") {
    GaloisField F1(3, 2);
    GaloisField F2(3, 2);
    CHECK(F1.modulus() == F2.modulus());
    // x^2 + 1 is the least irreducible over GF(3) under the base-3 encoding.
    CHECK(F1.modulus() == polyn::Poly{1, 0, 1});
}

TEST_CASE("projective point counts") {
    GaloisField F9(3, 2);
    CHECK(ProjectivePoints(F9, 2).size() == 10);
    GaloisField F3(3, 1);
    CHECK(ProjectivePoints(F3, 3).size() == 13);
    GaloisField F4(2, 2);
    CHECK(ProjectivePoints(F4, 3).size() == 21);
}

TEST_CASE("PSL_2(9) on 10 points has order 360 and is transitive") {
    GaloisField F(3, 2);
    ProjectivePoints pts(F, 2);
    std::vector<Permutation> gens;
    for (const auto& m : sl2_generator_matrices(F)) gens.push_back(projective_permutation(pts, m));
    auto G = PermGroup::from_generators(gens);
    CHECK(G.order() == classical_psl2_order(9));
    CHECK(G.order() == BigInt(360));
    CHECK(G.is_transitive());
}

TEST_CASE("PGL_2(13) on 14 points has order 2184") {
    GaloisField F(13, 1);
    ProjectivePoints pts(F, 2);
    std::vector<Permutation> gens;
    for (const auto& m : sl2_generator_matrices(F)) gens.push_back(projective_permutation(pts, m));
    gens.push_back(projective_permutation(pts, Matrix(2, {F.generator(), 0, 0, 1})));
    auto G = PermGroup::from_generators(gens);
    CHECK(G.order() == classical_pgl2_order(13));
    CHECK(G.order() == BigInt(2184));
}

TEST_CASE("SL_3(3) on 13 points has order 5616") {
    GaloisField F(3, 1);
    ProjectivePoints pts(F, 3);
    std::vector<Permutation> gens;
    for (const auto& m : sl3_generator_matrices(F)) gens.push_back(projective_permutation(pts, m));
    auto G = PermGroup::from_generators(gens);
    CHECK(G.order() == classical_psl3_order(3));
    CHECK(G.order() == BigInt(5616));
}

TEST_CASE("singular generators are rejected") {
    GaloisField F(3, 1);
    ProjectivePoints pts(F, 2);
    CHECK_THROWS_AS(projective_permutation(pts, Matrix(2, {1, 1, 1, 1})), Error);
}

TEST_CASE("matrix group specs dispatch on the action tag") {
    MatrixGroupSpec spec;
    spec.dimension = 2;
    spec.characteristic = 3;
    spec.extension_degree = 2;
    spec.generators = sl2_generator_matrices(GaloisField(3, 2));
    spec.action = ActionTag::ProjectiveLine;
    auto G = PermGroup::from_generators(projective_action(spec));
    CHECK(G.degree() == 10);
    CHECK(G.order() == classical_psl2_order(9));

    spec.action = ActionTag::ProjectivePlane;  // wrong for dimension 2
    CHECK_THROWS_AS(projective_action(spec), Error);
    spec.action = ActionTag::UnitaryIsotropicPoints;  // reserved, unconstructed
    CHECK_THROWS_AS(projective_action(spec), Error);
}

TEST_CASE("frobenius permutation extends PSL_2(9) to a group of order 720") {
    GaloisField F(3, 2);
    ProjectivePoints pts(F, 2);
    std::vector<Permutation> gens;
    for (const auto& m : sl2_generator_matrices(F)) gens.push_back(projective_permutation(pts, m));
    gens.push_back(frobenius_permutation(pts));
    auto G = PermGroup::from_generators(gens);
    CHECK(G.order() == BigInt(720));
}
