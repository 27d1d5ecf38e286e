#include "bfc/quiver.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace bfc;

namespace {

Truncation window(const Partition& lam, int n) {
    return Truncation::rows_and_size(n, lam.size() + 2 * n + 2);
}

}  // namespace

TEST_CASE("interlacing") {
    CHECK(exists_hom(Partition{1}, Partition{2, 1}));
    CHECK(exists_hom(Partition{2}, Partition{2, 1}));
    CHECK(exists_hom(Partition{}, Partition{1}));
    CHECK_FALSE(exists_hom(Partition{}, Partition{1, 1}));
    CHECK_FALSE(exists_hom(Partition{3}, Partition{2, 1}));
    CHECK(exists_hom(Partition{5, 2}, ProjLabel::unbounded(Partition{2})));
    CHECK_FALSE(exists_hom(Partition{5, 3}, ProjLabel::unbounded(Partition{2})));
    CHECK_FALSE(exists_hom(Partition{1}, ProjLabel::unbounded(Partition{2})));
}

TEST_CASE("arrows must interlace") {
    CHECK_NOTHROW(ArrowElement(Partition{1}, Partition{2}));
    CHECK_THROWS_AS(ArrowElement(Partition{}, Partition{1, 1}), std::invalid_argument);
}

TEST_CASE("products of arrows") {
    const ArrowElement a(Partition{1}, Partition{2});
    const ArrowElement b(Partition{2}, Partition{2, 1});
    CHECK(multiply(a, b) == FElement(ArrowElement(Partition{1}, Partition{2, 1})));
    CHECK(multiply(ArrowElement(Partition{}, Partition{1}), ArrowElement(Partition{1}, Partition{1, 1})).empty());
    CHECK(multiply(b, a).empty());
    CHECK(multiply(ArrowElement::idempotent(Partition{1}), a) == FElement(a));
    CHECK(multiply(a, ArrowElement::idempotent(Partition{2})) == FElement(a));
}

TEST_CASE("multiplication is associative and bilinear") {
    std::vector<ArrowElement> arrows;
    for (const auto& p : partitions_up_to(4))
        for (const auto& q : partitions_up_to(4))
            if (exists_hom(p, q)) arrows.emplace_back(p, q);
    for (const auto& a : arrows)
        for (const auto& b : arrows) {
            if (a.target != b.source) continue;
            for (const auto& c : arrows) {
                if (b.target != c.source) continue;
                CHECK(multiply(multiply(a, b), FElement(c)) == multiply(FElement(a), multiply(b, c)));
            }
        }
    const FElement x = FElement(arrows[0], Q(2)) + FElement(arrows[1], frac(-1, 3));
    for (const auto& c : arrows)
        CHECK(multiply(x, FElement(c)) ==
              multiply(arrows[0], c).scaled(2) + multiply(arrows[1], c).scaled(frac(-1, 3)));
}

TEST_CASE("truncations") {
    CHECK(Truncation::rows(2).admits(Partition{5, 5}));
    CHECK_FALSE(Truncation::rows(2).admits(Partition{1, 1, 1}));
    CHECK(Truncation::columns(2).admits(Partition{2, 2, 2}));
    CHECK_FALSE(Truncation::rows_and_size(2, 4).admits(Partition{3, 2}));
    CHECK(Truncation::none().admits(Partition{9, 9, 9}));
    CHECK(Truncation::rows_and_size(2, 4).partitions().size() == 9);
    CHECK_THROWS_AS(Truncation::rows(2).partitions(), std::logic_error);
    CHECK_THROWS_AS(Truncation::rows(-1), std::invalid_argument);
}

TEST_CASE("projective bases") {
    CHECK(projective_basis(Partition{1}, Truncation::rows_and_size(1, 4)).size() == 2);
    CHECK(projective_basis(Partition{}, Truncation::rows_and_size(1, 4)).size() == 1);
    // (1,0), (1,1), (2,0), (2,1).
    CHECK(projective_basis(Partition{2, 1}, Truncation::rows_and_size(2, 4)).size() == 4);
    CHECK(projective_basis(Partition{2, 1}, Truncation::rows(2)).size() == 4);
    CHECK_THROWS_AS(projective_basis(Partition{1, 1, 1}, Truncation::rows(2)), std::invalid_argument);
    CHECK(projective_sources(ProjLabel::unbounded(Partition{}), Truncation::columns(3)).size() == 4);
    CHECK_THROWS_AS(projective_sources(ProjLabel::unbounded(Partition{}), Truncation::rows(1)), std::logic_error);
}

TEST_CASE("q module bases") {
    const auto b = q_module_basis(Partition{1}, 1, 4);
    REQUIRE(b.size() == 2);
    CHECK(b[0] == ArrowElement(Partition{1}, Partition{2}));
    CHECK(b[1] == ArrowElement(Partition{2}, Partition{2}));
    CHECK(q_module_basis(Partition{}, 2, 2) ==
          std::vector<ArrowElement>{ArrowElement::idempotent(Partition{1, 1})});
    CHECK_THROWS_AS(q_module_basis(Partition{3}, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(q_module_basis(Partition{1, 1}, 1, 9), std::invalid_argument);
}

TEST_CASE("labels print with an unbounded first part") {
    CHECK(to_string(ProjLabel::unbounded(Partition{1})) == "(inf,1)");
    CHECK(to_string(ProjLabel::unbounded(Partition{})) == "(inf)");
    CHECK(to_string(ProjLabel::finite(Partition{2})) == "(2)");
    CHECK(ProjLabel::unbounded(Partition{1}).clipped(4) == Partition{4, 1});
    CHECK_THROWS_AS(ProjLabel::unbounded(Partition{3}).clipped(2), std::invalid_argument);
}

TEST_CASE("lam^t") {
    CHECK(lam_t(Partition{1}, 2, 0) == Partition{2, 1});
    CHECK(lam_t(Partition{1}, 2, 1) == Partition{2});
    CHECK(lam_t(Partition{1}, 2, 2) == Partition{});
    CHECK(lam_t(Partition{2, 1}, 2, 1) == Partition{3});
    CHECK_THROWS_AS(lam_t(Partition{1}, 2, 3), std::invalid_argument);
}

TEST_CASE("resolution of Q(lam)") {
    const Resolution r = resolution_q(Partition{1}, 2);
    CHECK(r.length() == 2);
    CHECK(to_string(r) == "P(()) -> P((2)) -> P((2,1))");
    CHECK_THROWS_AS(resolution_q(Partition{1}, 0), std::invalid_argument);
    CHECK_THROWS_AS(resolution_q(Partition{1, 1}, 1), std::invalid_argument);
}

TEST_CASE("resolution of DF_n (x) P(mu)") {
    CHECK(to_string(resolution_df_p(Partition{1, 1}, 2)) == "P(()) -> P((inf)) -> P((inf,1))");
    CHECK(to_string(resolution_df_p(Partition{1}, 1)) == "P(()) -> P((inf))");
    CHECK(to_string(resolution_df_p(Partition{3}, 2)) == "P((inf,3))");
    CHECK(to_string(resolution_df_p(Partition{2, 1}, 2)) == "P((1)) -> P((inf)) -> P((inf,2))");
}

TEST_CASE("resolution of L(lam)") {
    CHECK(to_string(resolution_simple(Partition{1}, 1)) == "P(()) -> P((1))");
    CHECK(to_string(resolution_simple(Partition{}, 2)) == "P(())");
    CHECK(to_string(resolution_simple(Partition{2, 1}, 2)) == "P((1)) -> P((1,1)) + P((2)) -> P((2,1))");
    CHECK(to_string(resolution_simple(Partition{2, 2}, 2)) == "P((1,1)) -> P((2,1)) -> P((2,2))");
}

TEST_CASE("all three resolutions are exact in a window") {
    for (int n = 1; n <= 2; ++n)
        for (const auto& lam : partitions_in(n, 4)) {
            const Truncation tr = window(lam, n);
            const LabelDims q = [&](const Partition& e) { return q_module_dim(lam, n, e); };
            const LabelDims df = [&](const Partition& e) { return df_p_dim(lam, e); };
            const LabelDims simple = [&](const Partition& e) { return simple_dim(lam, e); };
            CHECK(graded_euler_check(resolution_q(lam, n), q, tr));
            CHECK(rank_exactness(resolution_q(lam, n), q, tr));
            CHECK(graded_euler_check(resolution_df_p(lam, n), df, tr));
            CHECK(rank_exactness(resolution_df_p(lam, n), df, tr));
            CHECK(graded_euler_check(resolution_simple(lam, n), simple, tr));
            CHECK(rank_exactness(resolution_simple(lam, n), simple, tr));
        }
}

TEST_CASE("the subset lattice does not resolve DF_n (x) P(mu)") {
    const Partition mu{1, 1};
    const Resolution lattice = resolution_df_p_subset_lattice(mu, 2);
    CHECK(to_string(lattice) == "P(()) -> P((1)) -> P((inf,1))");
    const LabelDims df = [&](const Partition& e) { return df_p_dim(mu, e); };
    CHECK_FALSE(graded_euler_check(lattice, df, window(mu, 2)));
    CHECK_FALSE(rank_exactness(lattice, df, window(mu, 2)));
    // For n = 1 both constructions coincide.
    CHECK(to_string(resolution_df_p_subset_lattice(Partition{2}, 1)) == to_string(resolution_df_p(Partition{2}, 1)));
}

TEST_CASE("corrupted resolutions are rejected") {
    const Partition lam{2, 1};
    const Truncation tr = window(lam, 2);
    const LabelDims simple = [&](const Partition& e) { return simple_dim(lam, e); };

    Resolution flipped = resolution_simple(lam, 2);
    for (auto& e : flipped.boundary[1]) e.coefficient = 1;  // breaks d o d = 0
    CHECK_FALSE(rank_exactness(flipped, simple, tr));

    Resolution dropped = resolution_simple(lam, 2);
    dropped.terms[1].pop_back();
    std::erase_if(dropped.boundary[0], [](const BoundaryEntry& e) { return e.from == 1; });
    std::erase_if(dropped.boundary[1], [](const BoundaryEntry& e) { return e.to == 1; });
    CHECK_FALSE(graded_euler_check(dropped, simple, tr));
    CHECK_FALSE(rank_exactness(dropped, simple, tr));

    Resolution zeroed = resolution_q(Partition{1}, 2);
    zeroed.boundary[0][0].coefficient = 0;
    const LabelDims q = [&](const Partition& e) { return q_module_dim(Partition{1}, 2, e); };
    CHECK_FALSE(rank_exactness(zeroed, q, window(Partition{1}, 2)));
}

TEST_CASE("Serre functor on K_0") {
    CHECK(serre_bar_k0(Partition{3}, 1) == Partition{1, 1, 1, 1});
    CHECK(serre_bar_k0(Partition{}, 2) == Partition{2});
    CHECK(serre_k0_pairing(Partition{2, 1}, Partition{1}, 2) == 1);
    CHECK(serre_k0_pairing(Partition{2}, Partition{1}, 1) == -1);
    CHECK(serre_k0_pairing(Partition{2}, Partition{}, 2) == 0);
    CHECK(serre_k0_pairing(Partition{2, 1}, Partition{2}, 2) == 0);
}

TEST_CASE("Serre pairing is a signed delta at lam u 1^n") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& mu : partitions_in(n, 7))
            for (const auto& lam : partitions_in(n, 7)) {
                const long want = (union_columns(lam, n) == mu) ? (n % 2 ? -1 : 1) : 0;
                CHECK(serre_k0_pairing(mu, lam, n) == want);
            }
}
