#include <random>
#include <stdexcept>

#include "doctest.h"
#include "partnorm/partition.hpp"
#include "partnorm/series.hpp"
#include "partnorm/stats.hpp"

using namespace partnorm;

namespace {

Series geometric_one(unsigned order) {  // 1/(1-q)
    Series s(order);
    s.set(0, 1);
    s.set(1, -1);
    return s.reciprocal();
}

Series random_series(std::mt19937_64& rng, unsigned order) {
    Series s(order);
    for (unsigned k = 0; k <= order; ++k) {
        const long num = static_cast<long>(rng() % 11) - 5;
        const long den = 1 + static_cast<long>(rng() % 7);
        s.set(k, mpq_class(num, den));
    }
    return s;
}

}  // namespace

TEST_CASE("ring operations on toy series") {
    const Series geo = geometric_one(3);
    for (unsigned k = 0; k <= 3; ++k) CHECK(geo[k] == 1);

    Series one_plus(3), one_minus(3);
    one_plus.set(0, 1);
    one_plus.set(1, 1);
    one_minus.set(0, 1);
    one_minus.set(1, -1);
    const Series prod = one_plus * one_minus;
    CHECK(prod[0] == 1);
    CHECK(prod[1] == 0);
    CHECK(prod[2] == -1);
    CHECK(prod[3] == 0);

    const Series inv = one_plus.pow(-1);
    CHECK(inv[0] == 1);
    CHECK(inv[1] == -1);
    CHECK(inv[2] == 1);
    CHECK(inv[3] == -1);

    Series no_constant(2);
    no_constant.set(1, 1);
    CHECK_THROWS_AS(no_constant.reciprocal(), std::domain_error);
}

TEST_CASE("ring laws on randomized series") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Series a = random_series(rng, 8);
        const Series b = random_series(rng, 8);
        const Series c = random_series(rng, 8);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
    for (int trial = 0; trial < 10; ++trial) {
        Series a = random_series(rng, 8);
        a.set(0, mpq_class(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 4)));
        CHECK(a * a.reciprocal() == Series::one(8));
    }
}

TEST_CASE("euler series coefficients are partition numbers") {
    const Series euler = euler_partition_series(200);
    CHECK(euler[0] == 1);
    CHECK(euler[4] == 5);
    CHECK(euler[10] == 42);
    const auto p = partition_numbers(200);
    for (unsigned n = 0; n <= 200; ++n) CHECK(euler[n] == mpq_class(p[n]));
}

TEST_CASE("pentagonal recurrence values") {
    CHECK(pentagonal_p(0) == 1);
    CHECK(pentagonal_p(10) == 42);
    CHECK(pentagonal_p(50) == 204226);
    CHECK(pentagonal_p(100) == mpz_class("190569292"));
    CHECK(pentagonal_p(200) == mpz_class("3972999029388"));
}

TEST_CASE("weighted partition series") {
    const Series norms =
        weighted_partition_series(10, [](unsigned n) { return mpq_class(n); });
    CHECK(norms[3] == 6);   // norms of (3),(2,1),(1,1,1)
    CHECK(norms[4] == 14);  // 4+3+4+2+1

    const Series plain = weighted_partition_series(10, [](unsigned) { return mpq_class(1); });
    CHECK(plain == euler_partition_series(10));

    const Series lehmer =
        weighted_partition_series(10, [](unsigned n) { return mpq_class(1, n); });
    CHECK(lehmer[3] == mpq_class(11, 6));
}

TEST_CASE("weighted distinct series") {
    const Series lehmer_d =
        weighted_distinct_series(10, [](unsigned n) { return mpq_class(1, n); });
    CHECK(lehmer_d[0] == 1);
    CHECK(lehmer_d[3] == mpq_class(5, 6));

    const Series counts = weighted_distinct_series(10, [](unsigned) { return mpq_class(1); });
    CHECK(counts[3] == 2);  // (3) and (2,1)
}

TEST_CASE("sigma power expansion") {
    const Series c1 = sigma_power_expansion(1, +1, 30);
    CHECK(c1[3] == 3);
    CHECK(c1 == euler_partition_series(30));

    const Series minus = sigma_power_expansion(1, -1, 10);
    CHECK(minus[1] == -1);
    CHECK(minus == power_product_series(1, 10));

    const Series c2 = sigma_power_expansion(2, +1, 10);
    CHECK(c2[2] == 5);

    // the general identity at rational c, against direct product expansion
    for (const mpq_class& c : {mpq_class(1), mpq_class(2), mpq_class(3), mpq_class(1, 2)}) {
        CHECK(sigma_power_expansion(c, +1, 20) == power_product_series(-c, 20));
        CHECK(sigma_power_expansion(c, -1, 20) == power_product_series(c, 20));
    }
}

TEST_CASE("dotted diagram counts equal enumeration sums") {
    const auto counts = dotted_diagram_counts(30);
    CHECK(counts[0] == 1);
    CHECK(counts[3] == 6);
    CHECK(counts[4] == 14);
    for (unsigned n = 0; n <= 30; ++n) {
        mpz_class by_enum;
        for_each_partition(n, PartitionClass::all(), [&](const Partition& lambda) {
            by_enum += lambda.norm();
            return true;
        });
        CHECK(counts[n] == by_enum);
    }
}

TEST_CASE("reciprocal norm sums match enumeration and the generic series") {
    const auto sums = reciprocal_norm_sums(25);
    const auto sums_d = reciprocal_norm_sums_distinct(25);
    CHECK(sums[0] == 1);
    CHECK(sums[3] == mpq_class(11, 6));
    CHECK(sums_d[3] == mpq_class(5, 6));

    const Series generic =
        weighted_partition_series(25, [](unsigned n) { return mpq_class(1, n); });
    const Series generic_d =
        weighted_distinct_series(25, [](unsigned n) { return mpq_class(1, n); });
    for (unsigned n = 0; n <= 25; ++n) {
        CHECK(sums[n] == generic[n]);
        CHECK(sums_d[n] == generic_d[n]);

        mpq_class by_enum, by_enum_d;
        for_each_partition(n, PartitionClass::all(), [&](const Partition& lambda) {
            by_enum += mpq_class(1, lambda.norm());
            return true;
        });
        for_each_partition(n, PartitionClass::distinct(), [&](const Partition& lambda) {
            by_enum_d += mpq_class(1, lambda.norm());
            return true;
        });
        CHECK(sums[n] == by_enum);
        CHECK(sums_d[n] == by_enum_d);
    }
}

TEST_CASE("fine identity") {
    CHECK(fine_identity_check(0).status == VerifyStatus::ExactPass);
    CHECK(fine_identity_check(3).status == VerifyStatus::ExactPass);
    CHECK(fine_identity_check(20).status == VerifyStatus::ExactPass);
}

TEST_CASE("macmahon partial fractions at rational q") {
    const VerifyReport n2 = macmahon_partial_fraction_check(2, mpq_class(1, 2));
    CHECK(n2.status == VerifyStatus::ExactPass);
    CHECK(n2.lhs == "8/3");

    const VerifyReport n1 = macmahon_partial_fraction_check(1, mpq_class(1, 3));
    CHECK(n1.status == VerifyStatus::ExactPass);
    CHECK(n1.lhs == "3/2");

    CHECK(macmahon_partial_fraction_check(3, mpq_class(1, 2)).status == VerifyStatus::ExactPass);
    for (unsigned n = 1; n <= 8; ++n)
        CHECK(macmahon_partial_fraction_check(n, mpq_class(-1, 2)).status ==
              VerifyStatus::ExactPass);

    CHECK_THROWS_AS(macmahon_partial_fraction_check(2, mpq_class(3, 2)), std::invalid_argument);
    CHECK_THROWS_AS(macmahon_partial_fraction_check(2, mpq_class(0)), std::invalid_argument);
    CHECK_THROWS_AS(macmahon_partial_fraction_check(26, mpq_class(1, 2)), std::length_error);
}
