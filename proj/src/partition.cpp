#include "partnorm/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "partnorm/config.hpp"
#include "partnorm/series.hpp"

namespace partnorm {

namespace {

// Groups a nonincreasing part list into frequency pairs (ascending parts).
Partition from_sorted_desc(const std::vector<std::uint64_t>& desc) {
    std::vector<PartCount> freq;
    for (auto it = desc.rbegin(); it != desc.rend(); ++it) {
        if (!freq.empty() && freq.back().part == *it)
            ++freq.back().mult;
        else
            freq.push_back({*it, 1});
    }
    return Partition::from_freq(std::move(freq));
}

}  // namespace

Partition Partition::from_parts(const std::vector<std::uint64_t>& parts) {
    for (std::uint64_t p : parts)
        if (p == 0) throw std::invalid_argument("partition parts must be positive");
    std::vector<std::uint64_t> sorted = parts;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    return from_sorted_desc(sorted);
}

Partition Partition::from_freq(std::vector<PartCount> freq) {
    std::uint64_t size = 0, length = 0, prev = 0;
    for (const PartCount& pc : freq) {
        if (pc.part == 0) throw std::invalid_argument("partition parts must be positive");
        if (pc.mult == 0) throw std::invalid_argument("multiplicities must be >= 1");
        if (pc.part <= prev) throw std::invalid_argument("frequency parts must be strictly increasing");
        prev = pc.part;
        size += pc.part * pc.mult;
        length += pc.mult;
    }
    Partition out;
    out.freq_ = std::move(freq);
    out.size_ = size;
    out.length_ = length;
    return out;
}

std::uint64_t Partition::largest_part() const {
    return freq_.empty() ? 0 : freq_.back().part;
}

std::int64_t Partition::rank() const {
    return static_cast<std::int64_t>(largest_part()) - static_cast<std::int64_t>(length_);
}

std::uint64_t Partition::multiplicity(std::uint64_t part) const {
    auto it = std::lower_bound(freq_.begin(), freq_.end(), part,
                               [](const PartCount& pc, std::uint64_t v) { return pc.part < v; });
    return (it != freq_.end() && it->part == part) ? it->mult : 0;
}

mpz_class Partition::norm() const {
    mpz_class n = 1;
    mpz_class pk;
    for (const PartCount& pc : freq_) {
        mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(pc.part),
                      static_cast<unsigned long>(pc.mult));
        n *= pk;
    }
    return n;
}

std::vector<std::uint64_t> Partition::parts() const {
    std::vector<std::uint64_t> out;
    out.reserve(length_);
    for (auto it = freq_.rbegin(); it != freq_.rend(); ++it)
        out.insert(out.end(), it->mult, it->part);
    return out;
}

Partition Partition::delete_part(std::uint64_t part) const {
    std::vector<PartCount> freq = freq_;
    auto it = std::lower_bound(freq.begin(), freq.end(), part,
                               [](const PartCount& pc, std::uint64_t v) { return pc.part < v; });
    if (it == freq.end() || it->part != part)
        throw std::invalid_argument("delete_part: " + std::to_string(part) + " is not a part");
    if (--it->mult == 0) freq.erase(it);
    return from_freq(std::move(freq));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (std::uint64_t p : parts()) {
        if (!first) os << ',';
        os << p;
        first = false;
    }
    os << ')';
    return os.str();
}

bool lex_desc_less(const Partition& a, const Partition& b) {
    const auto pa = a.parts(), pb = b.parts();
    return std::lexicographical_compare(pb.begin(), pb.end(), pa.begin(), pa.end());
}

std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    const auto& freq = lambda.freq();
    std::vector<std::uint64_t> pick(freq.size(), 0);  // chosen multiplicity per part
    for (;;) {
        std::vector<PartCount> f;
        for (std::size_t i = 0; i < freq.size(); ++i)
            if (pick[i] > 0) f.push_back({freq[i].part, pick[i]});
        out.push_back(Partition::from_freq(std::move(f)));
        // mixed-radix increment over multiplicities
        std::size_t i = 0;
        while (i < pick.size() && pick[i] == freq[i].mult) pick[i++] = 0;
        if (i == pick.size()) break;
        ++pick[i];
    }
    return out;
}

mpz_class subpartition_count(const Partition& lambda) {
    mpz_class c = 1;
    for (const PartCount& pc : lambda.freq()) c *= mpz_class(pc.mult + 1);
    return c;
}

PartitionClass PartitionClass::all() { return {}; }

PartitionClass PartitionClass::distinct() {
    PartitionClass c;
    c.tag_ = ClassTag::Distinct;
    c.name_ = "distinct";
    return c;
}

PartitionClass PartitionClass::odd_parts() {
    PartitionClass c;
    c.tag_ = ClassTag::OddParts;
    c.name_ = "odd";
    return c;
}

PartitionClass PartitionClass::even_parts() {
    PartitionClass c;
    c.tag_ = ClassTag::EvenParts;
    c.name_ = "even";
    return c;
}

PartitionClass PartitionClass::prime_parts() {
    PartitionClass c;
    c.tag_ = ClassTag::PrimeParts;
    c.name_ = "prime";
    return c;
}

PartitionClass PartitionClass::nuclear() {
    PartitionClass c;
    c.tag_ = ClassTag::Nuclear;
    c.name_ = "nuclear";
    return c;
}

PartitionClass PartitionClass::rogers_ramanujan() {
    PartitionClass c;
    c.tag_ = ClassTag::RogersRamanujan;
    c.name_ = "rr";
    return c;
}

PartitionClass PartitionClass::gollnitz_gordon() {
    PartitionClass c;
    c.tag_ = ClassTag::GollnitzGordon;
    c.name_ = "gg";
    return c;
}

PartitionClass PartitionClass::schur() {
    PartitionClass c;
    c.tag_ = ClassTag::Schur;
    c.name_ = "schur";
    return c;
}

PartitionClass PartitionClass::allowed_parts(std::vector<std::uint64_t> parts) {
    for (std::uint64_t p : parts)
        if (p == 0) throw std::invalid_argument("allowed parts must be positive");
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    PartitionClass c;
    c.tag_ = ClassTag::AllowedParts;
    c.name_ = "allowed";
    c.allowed_list_ = std::move(parts);
    return c;
}

PartitionClass PartitionClass::allowed_parts(std::function<bool(std::uint64_t)> pred,
                                             std::uint64_t min_part) {
    if (min_part == 0) throw std::invalid_argument("allowed parts must be positive");
    PartitionClass c;
    c.tag_ = ClassTag::AllowedParts;
    c.name_ = "allowed";
    c.allowed_pred_ = std::move(pred);
    c.allowed_min_ = min_part;
    return c;
}

PartitionClass PartitionClass::parse(const std::string& name) {
    if (name == "all") return all();
    if (name == "distinct") return distinct();
    if (name == "odd" || name == "odd-parts") return odd_parts();
    if (name == "even" || name == "even-parts") return even_parts();
    if (name == "prime" || name == "prime-parts") return prime_parts();
    if (name == "nuclear") return nuclear();
    if (name == "rr" || name == "rogers-ramanujan") return rogers_ramanujan();
    if (name == "gg" || name == "gollnitz-gordon") return gollnitz_gordon();
    if (name == "schur") return schur();
    throw std::invalid_argument("unknown partition class: " + name);
}

std::vector<std::string> PartitionClass::known_names() {
    return {"all", "distinct", "odd", "even", "prime", "nuclear", "rr", "gg", "schur"};
}

bool PartitionClass::allows_part(std::uint64_t p) const {
    if (p == 0) return false;
    switch (tag_) {
        case ClassTag::OddParts: return p % 2 == 1;
        case ClassTag::EvenParts: return p % 2 == 0;
        case ClassTag::PrimeParts: return is_prime(p);
        case ClassTag::Nuclear: return p > 1;
        case ClassTag::AllowedParts:
            if (allowed_pred_) return p >= allowed_min_ && allowed_pred_(p);
            return std::binary_search(allowed_list_.begin(), allowed_list_.end(), p);
        default: return true;
    }
}

std::uint64_t PartitionClass::min_gap() const {
    switch (tag_) {
        case ClassTag::Distinct: return 1;
        case ClassTag::RogersRamanujan:
        case ClassTag::GollnitzGordon: return 2;
        case ClassTag::Schur: return 3;
        default: return 0;
    }
}

bool PartitionClass::pair_allowed(std::uint64_t larger, std::uint64_t smaller) const {
    if (larger < smaller + min_gap()) return false;
    if (tag_ == ClassTag::GollnitzGordon)
        return !(larger - smaller == 2 && larger % 2 == 0);  // consecutive even numbers
    if (tag_ == ClassTag::Schur)
        return !(larger - smaller == 3 && larger % 3 == 0);  // consecutive multiples of 3
    return true;
}

bool PartitionClass::contains(const Partition& lambda) const {
    std::uint64_t prev = 0;
    for (const PartCount& pc : lambda.freq()) {
        if (!allows_part(pc.part)) return false;
        if (min_gap() > 0) {
            if (pc.mult > 1) return false;  // repeats break any difference condition
            if (prev != 0 && !pair_allowed(pc.part, prev)) return false;
        }
        prev = pc.part;
    }
    return true;
}

namespace {

// Recursive descent over nonincreasing part lists; emits in lex-decreasing
// order because larger leading parts are tried first.
bool enum_rec(std::uint64_t remaining, std::uint64_t max_part, const PartitionClass& cls,
              std::vector<std::uint64_t>& acc,
              const std::function<bool(const Partition&)>& visit) {
    if (remaining == 0) return visit(from_sorted_desc(acc));
    std::uint64_t hi = std::min(remaining, max_part);
    for (std::uint64_t p = hi; p >= 1; --p) {
        if (!cls.allows_part(p)) continue;
        if (!acc.empty() && !cls.pair_allowed(acc.back(), p)) continue;
        acc.push_back(p);
        std::uint64_t next_max = cls.min_gap() == 0 ? p : (p > cls.min_gap() ? p - cls.min_gap() : 0);
        bool keep_going = true;
        if (remaining == p)
            keep_going = visit(from_sorted_desc(acc));
        else if (next_max > 0)
            keep_going = enum_rec(remaining - p, next_max, cls, acc, visit);
        acc.pop_back();
        if (!keep_going) return false;
    }
    return true;
}

}  // namespace

bool for_each_partition(std::uint64_t n, const PartitionClass& cls,
                        const std::function<bool(const Partition&)>& visit) {
    if (n == 0) return visit(Partition());
    std::vector<std::uint64_t> acc;
    return enum_rec(n, n, cls, acc, visit);
}

bool for_each_partition_with_largest(std::uint64_t n, const PartitionClass& cls,
                                     std::uint64_t largest,
                                     const std::function<bool(const Partition&)>& visit) {
    if (largest == 0) return n == 0 ? visit(Partition()) : true;
    if (largest > n || !cls.allows_part(largest)) return true;
    std::vector<std::uint64_t> acc{largest};
    if (largest == n) return visit(from_sorted_desc(acc));
    std::uint64_t next_max =
        cls.min_gap() == 0 ? largest : (largest > cls.min_gap() ? largest - cls.min_gap() : 0);
    if (next_max == 0) return true;
    return enum_rec(n - largest, next_max, cls, acc, visit);
}

void require_enumeration_feasible(std::uint64_t n) {
    if (n > 100000)
        throw std::length_error("partition count p(" + std::to_string(n) +
                                ") exceeds the enumeration ceiling; raise PARTNORM_ENUM_CEILING");
    const mpz_class count = pentagonal_p(static_cast<unsigned>(n));
    if (count > mpz_class(static_cast<unsigned long>(config::enumeration_ceiling())))
        throw std::length_error("partition count p(" + std::to_string(n) +
                                ") exceeds the enumeration ceiling; raise PARTNORM_ENUM_CEILING");
}

std::vector<Partition> enumerate_partitions(std::uint64_t n, const PartitionClass& cls) {
    require_enumeration_feasible(n);
    std::vector<Partition> out;
    for_each_partition(n, cls, [&](const Partition& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t nu) {
    if (nu == 0) throw std::invalid_argument("factorize: argument must be >= 1");
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= nu; ++d) {
        if (nu % d != 0) continue;
        unsigned e = 0;
        while (nu % d == 0) {
            nu /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (nu > 1) out.emplace_back(nu, 1);
    return out;
}

std::uint64_t sigma(std::uint64_t n) {
    std::uint64_t s = 1;
    for (const auto& [p, e] : factorize(n)) {
        std::uint64_t geom = 1, pw = 1;
        for (unsigned i = 0; i < e; ++i) {
            pw *= p;
            geom += pw;
        }
        s *= geom;
    }
    return s;
}

}  // namespace partnorm
