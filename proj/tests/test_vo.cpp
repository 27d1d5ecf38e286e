#include "bfc/vo.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace bfc;

namespace {

long hook_count(const Partition& p) {
    const Partition d = dual(p);
    Z num = factorial(p.size()), den = 1;
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p.part(i); ++j) den *= (p.part(i) - j - 1) + (d.part(j) - i - 1) + 1;
    return Z(num / den).get_si();
}

}  // namespace

TEST_CASE("tableaux of (2,1) in content order") {
    const auto& ts = tableaux(Partition{2, 1});
    REQUIRE(ts.size() == 2);
    CHECK(ts[0].contents() == std::vector<int>{0, 1, -1});
    CHECK(ts[1].contents() == std::vector<int>{0, -1, 1});
    CHECK(ts[0].rows == std::vector<std::vector<int>>{{1, 2}, {3}});
    CHECK(ts[0].length() == 0);
    CHECK(ts[1].length() == 1);
    CHECK(descents(ts[0]).empty());
    CHECK(descents(ts[1]) == std::vector<int>{2});
    CHECK(swap_entries(ts[1], 2) == ts[0]);
}

TEST_CASE("tableau counts follow the hook length formula") {
    for (const auto& p : partitions_up_to(7)) CHECK(static_cast<long>(tableaux(p).size()) == hook_count(p));
    CHECK(tableaux(Partition{}).size() == 1);
}

TEST_CASE("c_scale") {
    const auto& ts = tableaux(Partition{2, 1});
    CHECK(c_scale(ts[0]) == 1);
    CHECK(c_scale(ts[1]) == frac(2, 3));
}

TEST_CASE("rep_action on (2,1)") {
    CHECK(rep_action(1, Partition{2, 1}) == Matrix{{1, 0}, {0, -1}});
    CHECK(rep_action(2, Partition{2, 1}) == Matrix{{frac(-1, 2), frac(1, 2)}, {frac(3, 2), frac(1, 2)}});
    CHECK_THROWS_AS(rep_action(0, Partition{2, 1}), std::out_of_range);
    CHECK_THROWS_AS(rep_action(3, Partition{2, 1}), std::out_of_range);
}

TEST_CASE("rep_action on one-row and one-column shapes") {
    CHECK(rep_action(1, Partition{3}) == Matrix{{1}});
    CHECK(rep_action(2, Partition{1, 1, 1}) == Matrix{{-1}});
}

TEST_CASE("f_map places n in the new box") {
    CHECK(f_map(Partition{1}, Partition{2}) == Matrix{{1}});
    CHECK(f_map(Partition{2}, Partition{2, 1}) == Matrix{{1}, {0}});
    CHECK(f_map(Partition{1, 1}, Partition{2, 1}) == Matrix{{0}, {1}});
    CHECK_THROWS_AS(f_map(Partition{1}, Partition{3}), std::invalid_argument);
}

TEST_CASE("square partners") {
    CHECK(square_partner(Partition{1}, Partition{2}, Partition{2, 1}) == Partition{1, 1});
    CHECK_FALSE(square_partner(Partition{}, Partition{1}, Partition{2}));
    CHECK_FALSE(square_partner(Partition{}, Partition{1}, Partition{1, 1}));
}

TEST_CASE("square coefficients") {
    const auto sq = square_coeffs(Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1});
    CHECK(sq.alpha == frac(-1, 2));
    CHECK(sq.beta == frac(3, 2));
    CHECK_THROWS_AS(square_coeffs(Partition{1}, Partition{2}, Partition{2}, Partition{2, 1}), std::invalid_argument);
}

TEST_CASE("square coefficients are 1/d and (d-1)/d") {
    for (const auto& mu : partitions_up_to(7))
        for (const auto& lam : res_set(mu))
            for (const auto& lam1 : res_set(lam)) {
                const auto nu = square_partner(lam1, lam, mu);
                if (!nu) continue;
                const int d = added_box(lam, mu).content() - added_box(lam1, lam).content();
                const auto sq = square_coeffs(lam1, lam, *nu, mu);
                CHECK(sq.alpha == frac(1, d));
                CHECK(sq.beta == frac(d - 1, d));
            }
}

TEST_CASE("h coefficients") {
    CHECK(h_coeff(Partition{}, Partition{1}) == 1);
    CHECK(h_coeff(Partition{1}, Partition{2}) == frac(-1, 2));
    CHECK(h_coeff(Partition{2}, Partition{2, 1}) == 2);
    CHECK(h_coeff(Partition{1}, Partition{1, 1}) == 1);
    CHECK(h_coeff(Partition{1, 1}, Partition{2, 1}) == frac(-1, 3));
}

TEST_CASE("a coefficients") {
    CHECK(a_coeff(Partition{}, Partition{1}, Partition{2}, Branch::lam) == frac(-1, 2));
    CHECK(a_coeff(Partition{}, Partition{1}, Partition{1, 1}, Branch::lam) == -1);
    CHECK(a_coeff(Partition{1}, Partition{2}, Partition{2, 1}, Branch::lam) == 2);
    CHECK(a_coeff(Partition{1}, Partition{2}, Partition{2, 1}, Branch::nu) == 1);
    CHECK_THROWS_AS(a_coeff(Partition{}, Partition{1}, Partition{2}, Branch::nu), std::invalid_argument);
    CHECK_THROWS_AS(a_coeff(Partition{}, Partition{2}, Partition{2, 1}, Branch::lam), std::invalid_argument);
}

TEST_CASE("a_closed is defined only above and to the right") {
    CHECK(a_closed(Partition{1}, Partition{2}, Partition{2, 1}) == Q(2));
    CHECK_FALSE(a_closed(Partition{}, Partition{1}, Partition{2}));
    CHECK_FALSE(a_closed(Partition{1}, Partition{1, 1}, Partition{2, 1}));
}

TEST_CASE("ratio form matches the representation oracle") {
    for (const auto& mu : partitions_up_to(6))
        for (const auto& lam : res_set(mu))
            for (const auto& lam1 : res_set(lam)) {
                CHECK(a_coeff(lam1, lam, mu, Branch::lam) == a_oracle(lam1, lam, mu, Branch::lam));
                if (square_partner(lam1, lam, mu))
                    CHECK(a_coeff(lam1, lam, mu, Branch::nu) == a_oracle(lam1, lam, mu, Branch::nu));
            }
}
