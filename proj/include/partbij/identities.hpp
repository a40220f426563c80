#pragma once

// Streaming counters for the restricted partition classes and executable
// checks for the counting identities among them, including the
// multiplicity-level decompositions that recount two of the classes. All
// counters enumerate with predicate filters; enumeration doubles as the
// reference computation, there are no closed forms here.

#include <bit>
#include <map>
#include <optional>
#include <stdexcept>

#include "bitmatrix.hpp"
#include "partition.hpp"

namespace partbij {

// ---------------------------------------------------------------------------
// class membership

/// Exactly one distinct even part value (repeated any number of times).
inline bool has_one_distinct_even(const Partition& p) {
    int evens = 0;
    for (const auto& [part, count] : p.multiplicities())
        if (part % 2 == 0) ++evens;
    return evens == 1;
}

/// One part value of multiplicity exactly 3, all others of multiplicity 1.
inline bool is_one_triple(const Partition& p) {
    int triples = 0;
    for (const auto& [part, count] : p.multiplicities()) {
        if (count == 3)
            ++triples;
        else if (count != 1)
            return false;
    }
    return triples == 1;
}

/// One part value of multiplicity exactly 5, all others of multiplicity 1.
inline bool is_one_quintuple(const Partition& p) {
    int quintuples = 0;
    for (const auto& [part, count] : p.multiplicities()) {
        if (count == 5)
            ++quintuples;
        else if (count != 1)
            return false;
    }
    return quintuples == 1;
}

/// Distinct-parts partitions in which no part value occurs together with its
/// double. Encoded, the cells sit in row 0 with no two horizontally adjacent.
inline bool is_doubling_free(const Partition& p) {
    const auto& mult = p.multiplicities();
    for (const auto& [part, count] : mult) {
        if (count > 1) return false;
        if (part <= INT_MAX / 2 && mult.count(2 * part)) return false;
    }
    return true;
}

/// No two adjacent set bits in the binary expansion.
inline bool is_fibbinary(long long m) { return (m & (m >> 1)) == 0; }

/// Odd-parts partitions whose every multiplicity is fibbinary. Encoded, the
/// cells sit in column 0 with no two vertically adjacent.
inline bool is_fibbinary_odd(const Partition& p) {
    for (const auto& [part, count] : p.multiplicities()) {
        if (part % 2 == 0) return false;
        if (!is_fibbinary(count)) return false;
    }
    return true;
}

inline ClassPredicate g_class() {
    return ClassPredicate::tagged(ClassPredicate::Kind::GClass,
                                  [](const Partition& p) { return is_doubling_free(p); });
}

inline ClassPredicate h_class() {
    return ClassPredicate::tagged(ClassPredicate::Kind::HClass,
                                  [](const Partition& p) { return is_fibbinary_odd(p); });
}

// ---------------------------------------------------------------------------
// counters

inline long long count_one_distinct_even(int n) {
    return count_partitions(n, ClassPredicate::custom(has_one_distinct_even));
}

inline long long count_one_triple(int n) {
    return count_partitions(n, ClassPredicate::custom(is_one_triple));
}

inline long long count_one_quintuple(int n) {
    return count_partitions(n, ClassPredicate::custom(is_one_quintuple));
}

/// Partitions of n with exactly k distinct even part values.
inline long long count_k_distinct_even(int n, int k) {
    if (k < 0) throw std::invalid_argument("class index k must be >= 0");
    long long count = 0;
    for (const Partition& p : PartitionRange(n)) {
        int evens = 0;
        for (const auto& [part, c] : p.multiplicities())
            if (part % 2 == 0) ++evens;
        if (evens == k) ++count;
    }
    return count;
}

/// Partitions of n with exactly k part values of multiplicity >= 2.
inline long long count_k_repeated(int n, int k) {
    if (k < 0) throw std::invalid_argument("class index k must be >= 0");
    long long count = 0;
    for (const Partition& p : PartitionRange(n)) {
        int repeated = 0;
        for (const auto& [part, c] : p.multiplicities())
            if (c >= 2) ++repeated;
        if (repeated == k) ++count;
    }
    return count;
}

/// Partitions of n with exactly k distinct part values of 2-adic valuation
/// >= min_valuation.
inline long long count_k_high_valuation(int n, int k, int min_valuation) {
    if (k < 0) throw std::invalid_argument("class index k must be >= 0");
    if (min_valuation < 2) throw std::invalid_argument("valuation threshold must be >= 2");
    long long count = 0;
    for (const Partition& p : PartitionRange(n)) {
        int high = 0;
        for (const auto& [part, c] : p.multiplicities())
            if (dyadic_valuation(part) >= min_valuation) ++high;
        if (high == k) ++count;
    }
    return count;
}

/// Partitions of n with exactly k part values of multiplicity >= 2^min_valuation.
inline long long count_k_high_multiplicity(int n, int k, int min_valuation) {
    if (k < 0) throw std::invalid_argument("class index k must be >= 0");
    if (min_valuation < 2) throw std::invalid_argument("valuation threshold must be >= 2");
    const long long threshold = 1LL << min_valuation;
    long long count = 0;
    for (const Partition& p : PartitionRange(n)) {
        int high = 0;
        for (const auto& [part, c] : p.multiplicities())
            if (c >= threshold) ++high;
        if (high == k) ++count;
    }
    return count;
}

struct GlaisherCounts {
    long long no_multiple_of_d = 0;  // no part divisible by d
    long long mult_below_d = 0;      // every multiplicity <= d - 1
};

inline GlaisherCounts glaisher_counts(int n, int d) {
    if (d < 2) throw std::invalid_argument("glaisher base must be >= 2");
    GlaisherCounts counts;
    for (const Partition& p : PartitionRange(n)) {
        bool no_multiple = true;
        bool low_mult = true;
        for (const auto& [part, count] : p.multiplicities()) {
            if (part % d == 0) no_multiple = false;
            if (count >= d) low_mult = false;
        }
        if (no_multiple) ++counts.no_multiple_of_d;
        if (low_mult) ++counts.mult_below_d;
    }
    return counts;
}

// ---------------------------------------------------------------------------
// multiplicity-level decompositions

/// m minus its binary digit sum.
inline long long binary_excess(long long m) {
    if (m < 0) throw std::invalid_argument("binary_excess needs m >= 0");
    return m - std::popcount(static_cast<unsigned long long>(m));
}

/// Sum of floor(m / 2^j) over j >= 1; equals binary_excess(m) for every m.
inline long long halving_sum(long long m) {
    if (m < 0) throw std::invalid_argument("halving_sum needs m >= 0");
    long long total = 0;
    for (long long q = m / 2; q > 0; q /= 2) total += q;
    return total;
}

/// Sum of binary_excess over every multiplicity of every odd-parts
/// partition of n. Recounts count_one_distinct_even(n).
inline long long count_one_even_via_excess(int n) {
    long long total = 0;
    for (const Partition& p : PartitionRange(n, ClassPredicate::odd_parts()))
        for (const auto& [part, count] : p.multiplicities()) total += binary_excess(count);
    return total;
}

/// Same sum with halving_sum in place of binary_excess: counts the ways to
/// split each multiplicity between a part and one of its doublings.
inline long long count_one_even_via_splits(int n) {
    long long total = 0;
    for (const Partition& p : PartitionRange(n, ClassPredicate::odd_parts()))
        for (const auto& [part, count] : p.multiplicities()) total += halving_sum(count);
    return total;
}

/// Sum over distinct-parts partitions of n, over odd bases x present, of one
/// less than the number of dyadic exponents of x present. Recounts
/// count_one_triple(n).
inline long long count_one_triple_via_bases(int n) {
    long long total = 0;
    for (const Partition& p : PartitionRange(n, ClassPredicate::distinct_parts())) {
        std::map<int, int> exponents_per_base;
        for (const auto& [part, count] : p.multiplicities())
            ++exponents_per_base[split_part(part).odd_base];
        for (const auto& [base, exponents] : exponents_per_base) total += exponents - 1;
    }
    return total;
}

// ---------------------------------------------------------------------------
// identity checks

enum class IdentityId {
    OneEven,            // #1: one even value vs part-count difference
    OneTriple,          // #2: one triple vs parts/distinct-parts difference
    KRepeats,           // #3: k distinct even values vs k repeated values
    Glaisher,           // #4: no multiple of d vs multiplicities below d
    KMultiplicity,      // #5: k high valuations vs k high multiplicities
    OneQuintuple,       // #6: one quintuple vs G/H difference
    OneEvenViaExcess,   // #1 recounted through binary excess
    OneEvenViaSplits,   // #1 recounted through halving splits
    OneTripleViaBases,  // #2 recounted through shared odd bases
};

struct IdentityCheck {
    IdentityCheck(IdentityId id, int n) : id(id), n(n) {}

    IdentityId id;
    int n;
    long long lhs = 0;
    long long rhs = 0;
    std::optional<int> k;
    std::optional<int> p;
    std::optional<int> d;

    bool passed() const { return lhs == rhs; }
};

/// #1: count_one_distinct_even(n) against the difference between the total
/// part counts of the odd-parts and distinct-parts classes.
inline IdentityCheck check_one_even(int n) {
    IdentityCheck check{IdentityId::OneEven, n};
    check.lhs = count_one_distinct_even(n);
    check.rhs = class_part_stats(n, ClassPredicate::odd_parts()).total_parts -
                class_part_stats(n, ClassPredicate::distinct_parts()).total_parts;
    return check;
}

/// #2: count_one_triple(n) against total parts of the distinct class minus
/// total distinct parts of the odd class.
inline IdentityCheck check_one_triple(int n) {
    IdentityCheck check{IdentityId::OneTriple, n};
    check.lhs = count_one_triple(n);
    check.rhs = class_part_stats(n, ClassPredicate::distinct_parts()).total_parts -
                class_part_stats(n, ClassPredicate::odd_parts()).total_distinct_parts;
    return check;
}

/// #3 at one k.
inline IdentityCheck check_k_repeated(int n, int k) {
    IdentityCheck check{IdentityId::KRepeats, n};
    check.k = k;
    check.lhs = count_k_distinct_even(n, k);
    check.rhs = count_k_repeated(n, k);
    return check;
}

/// #4 at one d.
inline IdentityCheck check_glaisher(int n, int d) {
    IdentityCheck check{IdentityId::Glaisher, n};
    check.d = d;
    GlaisherCounts counts = glaisher_counts(n, d);
    check.lhs = counts.no_multiple_of_d;
    check.rhs = counts.mult_below_d;
    return check;
}

/// #5 at one (k, p).
inline IdentityCheck check_k_multiplicity(int n, int k, int min_valuation) {
    IdentityCheck check{IdentityId::KMultiplicity, n};
    check.k = k;
    check.p = min_valuation;
    check.lhs = count_k_high_valuation(n, k, min_valuation);
    check.rhs = count_k_high_multiplicity(n, k, min_valuation);
    return check;
}

/// #6: count_one_quintuple(n) against total parts over the G class minus
/// total distinct parts over the H class. Exhaustive checking shows this
/// equality failing from n = 7 on; the check reports whatever is true.
inline IdentityCheck check_one_quintuple(int n) {
    IdentityCheck check{IdentityId::OneQuintuple, n};
    check.lhs = count_one_quintuple(n);
    check.rhs = class_part_stats(n, g_class()).total_parts -
                class_part_stats(n, h_class()).total_distinct_parts;
    return check;
}

inline IdentityCheck check_one_even_via_excess(int n) {
    IdentityCheck check{IdentityId::OneEvenViaExcess, n};
    check.lhs = count_one_even_via_excess(n);
    check.rhs = count_one_distinct_even(n);
    return check;
}

inline IdentityCheck check_one_even_via_splits(int n) {
    IdentityCheck check{IdentityId::OneEvenViaSplits, n};
    check.lhs = count_one_even_via_splits(n);
    check.rhs = count_one_distinct_even(n);
    return check;
}

inline IdentityCheck check_one_triple_via_bases(int n) {
    IdentityCheck check{IdentityId::OneTripleViaBases, n};
    check.lhs = count_one_triple_via_bases(n);
    check.rhs = count_one_triple(n);
    return check;
}

}  // namespace partbij
