#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "partnorm/partition.hpp"
#include "partnorm/series.hpp"

using namespace partnorm;

namespace {

Partition P(std::initializer_list<std::uint64_t> parts) {
    return Partition::from_parts(std::vector<std::uint64_t>(parts));
}

}  // namespace

TEST_CASE("from_parts normalizes to frequency form") {
    CHECK(P({}).empty());
    CHECK(P({}).size() == 0);
    CHECK(P({}).length() == 0);

    const Partition lambda = P({3, 1, 3, 4});
    CHECK(lambda.size() == 11);
    CHECK(lambda.length() == 4);
    CHECK(lambda.freq() == std::vector<PartCount>{{1, 1}, {3, 2}, {4, 1}});
    CHECK(lambda.parts() == std::vector<std::uint64_t>{4, 3, 3, 1});

    CHECK(P({2, 2}).size() == 4);
    CHECK(P({2, 2}).freq() == std::vector<PartCount>{{2, 2}});

    CHECK_THROWS_AS(Partition::from_parts({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_freq({{2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_freq({{3, 1}, {2, 1}}), std::invalid_argument);
}

TEST_CASE("norm") {
    CHECK(P({}).norm() == 1);
    CHECK(P({4, 3, 3, 1}).norm() == 36);
    // <1^5 2^3 7>
    CHECK(Partition::from_freq({{1, 5}, {2, 3}, {7, 1}}).norm() == 56);
}

TEST_CASE("size, length, largest part, rank") {
    const Partition lambda = P({4, 3, 3, 1});
    CHECK(lambda.largest_part() == 4);
    CHECK(lambda.rank() == 0);
    CHECK(P({}).largest_part() == 0);
    CHECK(P({}).rank() == 0);
    CHECK(P({5}).rank() == 4);
    CHECK(P({1, 1, 1}).rank() == -2);
}

TEST_CASE("delete_part") {
    CHECK(P({4, 3, 3, 1}).delete_part(3) == P({4, 3, 1}));
    CHECK(P({2}).delete_part(2) == P({}));
    CHECK_THROWS_AS(P({4, 3, 3, 1}).delete_part(5), std::invalid_argument);
}

TEST_CASE("norm of delete_part times the part restores the norm") {
    for (std::uint64_t n = 1; n <= 12; ++n) {
        for_each_partition(n, PartitionClass::all(), [&](const Partition& lambda) {
            for (const PartCount& pc : lambda.freq())
                CHECK(lambda.delete_part(pc.part).norm() * pc.part == lambda.norm());
            return true;
        });
    }
}

TEST_CASE("enumeration order and counts") {
    const auto all4 = enumerate_partitions(4, PartitionClass::all());
    REQUIRE(all4.size() == 5);
    CHECK(all4[0] == P({4}));
    CHECK(all4[1] == P({3, 1}));
    CHECK(all4[2] == P({2, 2}));
    CHECK(all4[3] == P({2, 1, 1}));
    CHECK(all4[4] == P({1, 1, 1, 1}));
    CHECK(std::is_sorted(all4.begin(), all4.end(), lex_desc_less));

    const auto rr7 = enumerate_partitions(7, PartitionClass::rogers_ramanujan());
    REQUIRE(rr7.size() == 3);
    CHECK(rr7[0] == P({7}));
    CHECK(rr7[1] == P({6, 1}));
    CHECK(rr7[2] == P({5, 2}));

    const auto d0 = enumerate_partitions(0, PartitionClass::distinct());
    REQUIRE(d0.size() == 1);
    CHECK(d0[0].empty());
}

TEST_CASE("enumeration of all partitions matches the pentagonal recurrence") {
    const unsigned n_max = 60;
    const auto p = partition_numbers(n_max);
    for (unsigned n = 0; n <= n_max; ++n) {
        std::uint64_t count = 0;
        for_each_partition(n, PartitionClass::all(), [&](const Partition&) {
            ++count;
            return true;
        });
        CHECK(mpz_class(static_cast<unsigned long>(count)) == p[n]);
    }
}

TEST_CASE("every class yields members of the right size, exactly once") {
    const std::vector<PartitionClass> classes{
        PartitionClass::all(),          PartitionClass::distinct(),
        PartitionClass::odd_parts(),    PartitionClass::even_parts(),
        PartitionClass::prime_parts(),  PartitionClass::nuclear(),
        PartitionClass::rogers_ramanujan(), PartitionClass::gollnitz_gordon(),
        PartitionClass::schur()};
    for (const auto& cls : classes) {
        for (std::uint64_t n = 0; n <= 30; ++n) {
            std::set<std::string> seen;
            for_each_partition(n, cls, [&](const Partition& lambda) {
                CHECK(lambda.size() == n);
                CHECK(cls.contains(lambda));
                CHECK(seen.insert(lambda.to_string()).second);
                return true;
            });
        }
    }
}

TEST_CASE("restricted enumeration equals filtering the full list") {
    const std::vector<PartitionClass> classes{
        PartitionClass::distinct(),        PartitionClass::odd_parts(),
        PartitionClass::even_parts(),      PartitionClass::prime_parts(),
        PartitionClass::nuclear(),         PartitionClass::rogers_ramanujan(),
        PartitionClass::gollnitz_gordon(), PartitionClass::schur()};
    for (std::uint64_t n = 0; n <= 18; ++n) {
        const auto everything = enumerate_partitions(n, PartitionClass::all());
        for (const auto& cls : classes) {
            std::vector<Partition> filtered;
            for (const Partition& lambda : everything)
                if (cls.contains(lambda)) filtered.push_back(lambda);
            CHECK(enumerate_partitions(n, cls) == filtered);
        }
    }
}

TEST_CASE("difference-condition classes") {
    // Gollnitz-Gordon: difference >= 2, no consecutive even numbers as parts
    CHECK(PartitionClass::gollnitz_gordon().contains(P({7, 3})));
    CHECK(PartitionClass::gollnitz_gordon().contains(P({8, 2})));
    CHECK_FALSE(PartitionClass::gollnitz_gordon().contains(P({6, 4})));
    CHECK_FALSE(PartitionClass::gollnitz_gordon().contains(P({5, 4})));
    // Schur: difference >= 3, no consecutive multiples of 3
    CHECK(PartitionClass::schur().contains(P({7, 3})));
    CHECK_FALSE(PartitionClass::schur().contains(P({6, 3})));
    CHECK_FALSE(PartitionClass::schur().contains(P({5, 3})));
    CHECK(PartitionClass::schur().contains(P({8, 5, 1})));
}

TEST_CASE("splitting the stream by largest part partitions the enumeration") {
    for (std::uint64_t n : {0ull, 1ull, 9ull, 14ull}) {
        for (const auto& cls : {PartitionClass::all(), PartitionClass::distinct()}) {
            std::vector<Partition> merged;
            for (std::uint64_t largest = 0; largest <= n; ++largest)
                for_each_partition_with_largest(n, cls, largest, [&](const Partition& lambda) {
                    CHECK(lambda.largest_part() == largest);
                    merged.push_back(lambda);
                    return true;
                });
            auto full = enumerate_partitions(n, cls);
            std::sort(merged.begin(), merged.end(), lex_desc_less);
            std::sort(full.begin(), full.end(), lex_desc_less);
            CHECK(merged == full);
        }
    }
}

TEST_CASE("early stop propagates") {
    int visits = 0;
    const bool finished = for_each_partition(10, PartitionClass::all(), [&](const Partition&) {
        return ++visits < 3;
    });
    CHECK_FALSE(finished);
    CHECK(visits == 3);
}

TEST_CASE("subpartitions") {
    const auto subs22 = subpartitions(P({2, 2}));
    REQUIRE(subs22.size() == 3);
    CHECK(std::count(subs22.begin(), subs22.end(), P({})) == 1);
    CHECK(std::count(subs22.begin(), subs22.end(), P({2})) == 1);
    CHECK(std::count(subs22.begin(), subs22.end(), P({2, 2})) == 1);

    CHECK(subpartitions(P({3, 1})).size() == 4);
    CHECK(subpartitions(P({})).size() == 1);

    for (std::uint64_t n = 0; n <= 12; ++n)
        for_each_partition(n, PartitionClass::all(), [&](const Partition& lambda) {
            CHECK(mpz_class(static_cast<unsigned long>(subpartitions(lambda).size())) ==
                  subpartition_count(lambda));
            return true;
        });
}

TEST_CASE("eq1: size from norm-weighted reciprocal norms") {
    for (std::uint64_t n = 1; n <= 15; ++n)
        for_each_partition(n, PartitionClass::all(), [&](const Partition& lambda) {
            mpq_class acc;
            for (const PartCount& pc : lambda.freq())
                acc += mpq_class(pc.mult) / mpq_class(lambda.delete_part(pc.part).norm());
            mpq_class lhs = mpq_class(lambda.norm()) * acc;
            lhs.canonicalize();
            CHECK(lhs == mpq_class(lambda.size()));
            return true;
        });
}

TEST_CASE("number theory helpers") {
    CHECK(factorize(12) == std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {3, 1}});
    CHECK(factorize(1).empty());
    CHECK(sigma(6) == 12);
    CHECK(sigma(1) == 1);
    CHECK(sigma(12) == 28);
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("allowed-part classes") {
    const auto evens_only = PartitionClass::allowed_parts({2, 4});
    CHECK(enumerate_partitions(6, evens_only).size() == 2);  // (4,2) and (2,2,2)
    CHECK(evens_only.contains(P({4, 2})));
    CHECK_FALSE(evens_only.contains(P({6})));

    const auto big = PartitionClass::allowed_parts([](std::uint64_t p) { return p % 3 == 0; }, 3);
    CHECK(big.contains(P({9, 3})));
    CHECK_FALSE(big.contains(P({9, 2})));

    CHECK_THROWS_AS(PartitionClass::parse("nosuch"), std::invalid_argument);
    CHECK(PartitionClass::parse("rr").tag() == ClassTag::RogersRamanujan);
}
