#pragma once

// Explicit weight-preserving partition maps, each with its exact inverse:
//
//  * glaisher_forward / glaisher_inverse: the base-d multiplicity rewrite
//    between "no part divisible by d" and "every multiplicity < d"
//    (d = 2 is the classical odd <-> distinct map);
//  * evens_to_repeats / repeats_to_evens: the diagonal cell shift
//    exchanging distinct even part values for repeated part values;
//  * valuation_to_multiplicity / multiplicity_to_valuation: its
//    generalization exchanging 2-adic valuation >= p for multiplicity
//    >= 2^p, parameterized by any diagonal-preserving permutation of the
//    top-left p×p block (a whole family of bijections).
//
// verify_bijection audits any forward/inverse pair exhaustively over the
// weight-n members of a class.

#include <climits>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "bitmatrix.hpp"
#include "partition.hpp"

namespace partbij {

/// Rewrites each multiplicity m of a part v (v not divisible by d) into its
/// base-d digits m = sum c_i d^i, contributing c_i copies of v·d^i. The
/// image has every multiplicity at most d - 1; weight is preserved.
inline Partition glaisher_forward(const Partition& p, int d) {
    if (d < 2) throw std::invalid_argument("glaisher base must be >= 2");
    std::map<long long, long long> mult;
    for (const auto& [part, count] : p.multiplicities()) {
        if (part % d == 0)
            throw std::invalid_argument("glaisher_forward requires no part divisible by d");
        long long scale = 1;
        for (int rest = count; rest > 0; rest /= d, scale *= d) {
            int digit = rest % d;
            if (digit > 0) mult[part * scale] += digit;
        }
    }
    Partition::Multiplicities narrowed;
    for (const auto& [value, count] : mult) {
        if (value > INT_MAX)
            throw std::overflow_error("scaled part exceeds the supported range");
        narrowed[static_cast<int>(value)] = static_cast<int>(count);
    }
    return Partition::from_multiplicities(narrowed);
}

/// Merges each part v = u·d^i (u not divisible by d) of multiplicity c < d
/// back into c·d^i copies of u. Exact inverse of glaisher_forward.
inline Partition glaisher_inverse(const Partition& p, int d) {
    if (d < 2) throw std::invalid_argument("glaisher base must be >= 2");
    std::map<int, long long> mult;
    for (const auto& [part, count] : p.multiplicities()) {
        if (count >= d)
            throw std::invalid_argument(
                "glaisher_inverse requires every multiplicity below d");
        int base = part;
        long long scale = 1;
        while (base % d == 0) {
            base /= d;
            scale *= d;
        }
        mult[base] += scale * count;
    }
    Partition::Multiplicities narrowed;
    for (const auto& [value, count] : mult) {
        if (count > INT_MAX)
            throw std::overflow_error("merged multiplicity exceeds the supported range");
        narrowed[value] = static_cast<int>(count);
    }
    return Partition::from_multiplicities(narrowed);
}

namespace detail {

// (0,0) fixed; the rest of column 0 flips onto row 0; every other cell
// steps one place down-left along its anti-diagonal.
inline CellPos shift_down_left(CellPos c) {
    if (c.col >= 1) return {c.row + 1, c.col - 1};
    if (c.row >= 1) return {0, c.row};
    return {0, 0};
}

inline CellPos shift_up_right(CellPos c) {
    if (c.row >= 1) return {c.row - 1, c.col + 1};
    if (c.col >= 1) return {c.col, 0};
    return {0, 0};
}

}  // namespace detail

/// Total weight-preserving bijection on partitions: a partition with exactly
/// k distinct even part values maps to one with exactly k part values of
/// multiplicity >= 2 (for every k, including 0).
inline Partition evens_to_repeats(const Partition& p) {
    return decode(encode(p).permuted(detail::shift_down_left));
}

/// Exact inverse of evens_to_repeats.
inline Partition repeats_to_evens(const Partition& p) {
    return decode(encode(p).permuted(detail::shift_up_right));
}

/// A permutation of the top-left size×size cell block in which every cell
/// stays on its own anti-diagonal. Chooses a member of the valuation map
/// family below; default constructed it is the identity for any block size.
class BlockPermutation {
public:
    BlockPermutation() = default;

    BlockPermutation(int size, const std::map<CellPos, CellPos>& mapping) : size_(size) {
        if (size < 1) throw std::invalid_argument("block size must be >= 1");
        for (const auto& [from, to] : mapping) {
            if (!inside(from) || !inside(to))
                throw std::invalid_argument("block permutation leaves the block");
            if (from.row + from.col != to.row + to.col)
                throw std::invalid_argument("block permutation must stay on anti-diagonals");
            if (from == to) continue;
            forward_.emplace(from, to);
            if (!inverse_.emplace(to, from).second)
                throw std::invalid_argument("block permutation is not injective");
        }
        for (const auto& [to, from] : inverse_)
            if (!forward_.count(to))
                throw std::invalid_argument("block permutation is not a bijection");
    }

    /// Nontrivial member: reverses the cell order along every anti-diagonal
    /// of the block (for size 2 this swaps (0,1) and (1,0)).
    static BlockPermutation reversed_diagonals(int size) {
        std::map<CellPos, CellPos> mapping;
        for (int k = 0; k <= 2 * (size - 1); ++k) {
            int lo = std::max(0, k - size + 1);
            int hi = std::min(k, size - 1);
            for (int a = lo; a <= hi; ++a) {
                int b = lo + hi - a;
                mapping[{a, k - a}] = {b, k - b};
            }
        }
        return BlockPermutation(size, mapping);
    }

    int size() const { return size_; }
    bool is_identity() const { return forward_.empty(); }

    CellPos apply(CellPos c) const {
        auto it = forward_.find(c);
        return it == forward_.end() ? c : it->second;
    }

    CellPos unapply(CellPos c) const {
        auto it = inverse_.find(c);
        return it == inverse_.end() ? c : it->second;
    }

private:
    bool inside(CellPos c) const {
        return c.row >= 0 && c.row < size_ && c.col >= 0 && c.col < size_;
    }

    int size_ = 0;  // 0 means unsized identity
    std::map<CellPos, CellPos> forward_;
    std::map<CellPos, CellPos> inverse_;
};

namespace detail {

inline void require_block(int min_valuation, const BlockPermutation& block) {
    if (min_valuation < 2)
        throw std::invalid_argument("valuation threshold must be >= 2");
    if (block.size() != 0 && block.size() != min_valuation)
        throw std::invalid_argument("block permutation size must equal the threshold");
}

}  // namespace detail

/// One member of the family of weight-preserving bijections exchanging high
/// dyadic valuation for high multiplicity: columns j >= p shift p steps
/// down-left along their diagonals, the region (row >= p, col < p) swaps
/// with its transpose, and the p×p corner block is permuted by `block`.
/// A partition with exactly k distinct part values of 2-adic valuation >= p
/// maps to one with exactly k part values of multiplicity >= 2^p, for every
/// choice of block.
inline Partition valuation_to_multiplicity(const Partition& p, int min_valuation,
                                           const BlockPermutation& block = {}) {
    detail::require_block(min_valuation, block);
    const int v = min_valuation;
    return decode(encode(p).permuted([&](CellPos c) -> CellPos {
        if (c.col >= v) return {c.row + v, c.col - v};
        if (c.row >= v) return {c.col, c.row};
        return block.apply(c);
    }));
}

/// Exact inverse of valuation_to_multiplicity with the same block.
inline Partition multiplicity_to_valuation(const Partition& p, int min_valuation,
                                           const BlockPermutation& block = {}) {
    detail::require_block(min_valuation, block);
    const int v = min_valuation;
    return decode(encode(p).permuted([&](CellPos c) -> CellPos {
        if (c.row >= v) return {c.row - v, c.col + v};
        if (c.col >= v) return {c.col, c.row};
        return block.unapply(c);
    }));
}

/// Audit record of a forward/inverse pair verified exhaustively over the
/// weight-n members of a source class.
struct BijectionReport {
    int n = 0;
    long long domain_size = 0;
    long long image_in_target = 0;
    long long roundtrip_failures = 0;
    long long collisions = 0;

    bool passed() const {
        return image_in_target == domain_size && roundtrip_failures == 0 && collisions == 0;
    }
};

using PartitionMap = std::function<Partition(const Partition&)>;

/// Enumerates the source class of weight n, applies `forward` to every
/// member, and counts: images of weight n inside the target class, inverse
/// round-trip failures, and image collisions. Failures are counted, never
/// thrown.
inline BijectionReport verify_bijection(int n, const PartitionMap& forward,
                                        const PartitionMap& inverse,
                                        const ClassPredicate& source,
                                        const ClassPredicate& target) {
    BijectionReport report;
    report.n = n;
    std::set<Partition> images;
    for (const Partition& p : PartitionRange(n, source)) {
        ++report.domain_size;
        Partition image = forward(p);
        if (image.weight() == n && target.matches(image)) ++report.image_in_target;
        if (!(inverse(image) == p)) ++report.roundtrip_failures;
        images.insert(std::move(image));
    }
    report.collisions = report.domain_size - static_cast<long long>(images.size());
    return report;
}

}  // namespace partbij
