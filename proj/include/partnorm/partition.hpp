#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace partnorm {

/// One entry of a frequency-form partition: `mult` copies of `part`.
struct PartCount {
    std::uint64_t part = 0;
    std::uint64_t mult = 0;
    friend bool operator==(const PartCount&, const PartCount&) = default;
};

/// An integer partition stored in frequency form: (part, multiplicity)
/// pairs with parts strictly increasing and every multiplicity >= 1.
/// Size and length are cached at construction. The default-constructed
/// value is the empty partition. Instances are immutable.
class Partition {
public:
    Partition() = default;

    /// Builds a partition from an arbitrary multiset of parts (order
    /// irrelevant). Throws std::invalid_argument on a zero part.
    static Partition from_parts(const std::vector<std::uint64_t>& parts);

    /// Builds a partition from frequency pairs; parts must be strictly
    /// increasing with multiplicities >= 1. Throws std::invalid_argument.
    static Partition from_freq(std::vector<PartCount> freq);

    const std::vector<PartCount>& freq() const { return freq_; }
    std::uint64_t size() const { return size_; }
    std::uint64_t length() const { return length_; }
    std::uint64_t largest_part() const;
    /// Dyson's rank: largest part minus length; 0 for the empty partition.
    std::int64_t rank() const;
    std::uint64_t multiplicity(std::uint64_t part) const;
    bool empty() const { return freq_.empty(); }

    /// Product of the parts; 1 for the empty partition.
    mpz_class norm() const;

    /// Parts expanded with multiplicity, largest first.
    std::vector<std::uint64_t> parts() const;

    /// Removes one occurrence of `part`. Throws std::invalid_argument if
    /// `part` does not occur.
    Partition delete_part(std::uint64_t part) const;

    /// Display form "(4,3,3,1)"; "()" for the empty partition.
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<PartCount> freq_;
    std::uint64_t size_ = 0;
    std::uint64_t length_ = 0;
};

/// Orders partitions by lexicographically decreasing part list, the same
/// order in which enumeration emits them.
bool lex_desc_less(const Partition& a, const Partition& b);

/// Every subpartition delta of lambda (multiplicities dominated by
/// lambda's), including the empty partition and lambda itself.
std::vector<Partition> subpartitions(const Partition& lambda);
mpz_class subpartition_count(const Partition& lambda);

enum class ClassTag {
    All,
    Distinct,
    OddParts,
    EvenParts,
    PrimeParts,
    Nuclear,
    RogersRamanujan,
    GollnitzGordon,
    Schur,
    AllowedParts,
};

/// A restricted family of partitions with a total, decidable membership
/// test. Difference classes follow the classical definitions: Rogers-
/// Ramanujan means consecutive parts differ by at least 2; Gollnitz-Gordon
/// additionally forbids consecutive even numbers as parts; Schur means
/// differences of at least 3 with no consecutive multiples of 3.
class PartitionClass {
public:
    PartitionClass() : tag_(ClassTag::All), name_("all") {}

    static PartitionClass all();
    static PartitionClass distinct();
    static PartitionClass odd_parts();
    static PartitionClass even_parts();
    static PartitionClass prime_parts();
    static PartitionClass nuclear();
    static PartitionClass rogers_ramanujan();
    static PartitionClass gollnitz_gordon();
    static PartitionClass schur();
    /// Explicit finite set of allowed parts (each >= 1).
    static PartitionClass allowed_parts(std::vector<std::uint64_t> parts);
    /// Predicate-defined set of allowed parts, all >= min_part.
    static PartitionClass allowed_parts(std::function<bool(std::uint64_t)> pred,
                                        std::uint64_t min_part = 1);

    /// Accepts the CLI names: all, distinct, odd, even, prime, nuclear,
    /// rr, gg, schur. Throws std::invalid_argument on anything else.
    static PartitionClass parse(const std::string& name);
    static std::vector<std::string> known_names();

    ClassTag tag() const { return tag_; }
    const std::string& name() const { return name_; }

    bool allows_part(std::uint64_t p) const;
    /// Required difference between consecutive parts (0 when repeats are allowed).
    std::uint64_t min_gap() const;
    /// Whether `larger` may be immediately followed by `smaller` (larger >= smaller).
    bool pair_allowed(std::uint64_t larger, std::uint64_t smaller) const;
    bool contains(const Partition& lambda) const;

private:
    ClassTag tag_;
    std::string name_;
    std::vector<std::uint64_t> allowed_list_;            // AllowedParts explicit form
    std::function<bool(std::uint64_t)> allowed_pred_;    // AllowedParts predicate form
    std::uint64_t allowed_min_ = 1;
};

/// Visits every partition of n in the class exactly once, in
/// lexicographically decreasing part-list order. The callback returns
/// false to stop early; the function returns false iff it was stopped.
bool for_each_partition(std::uint64_t n, const PartitionClass& cls,
                        const std::function<bool(const Partition&)>& visit);

/// Same stream restricted to partitions whose largest part is exactly
/// `largest` (largest = 0 selects the empty partition at n = 0). The
/// streams for distinct `largest` values are disjoint and their union over
/// 0..n is the full enumeration, so callers may fan out work by largest part.
bool for_each_partition_with_largest(std::uint64_t n, const PartitionClass& cls,
                                     std::uint64_t largest,
                                     const std::function<bool(const Partition&)>& visit);

/// Collects the stream. Throws std::length_error when p(n) exceeds the
/// configured enumeration ceiling.
std::vector<Partition> enumerate_partitions(std::uint64_t n, const PartitionClass& cls);

/// Throws std::length_error when p(n) exceeds the enumeration ceiling;
/// used by every enumeration-backed operation.
void require_enumeration_feasible(std::uint64_t n);

// Small number-theory helpers (trial division; intended for inputs <= 1e6).
bool is_prime(std::uint64_t n);
/// Prime factorization of nu >= 1 as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t nu);
/// Sum of divisors.
std::uint64_t sigma(std::uint64_t n);

}  // namespace partnorm
