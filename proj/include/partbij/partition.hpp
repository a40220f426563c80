#pragma once

// Integer partitions stored as part -> multiplicity maps, restricted-class
// predicates, and a streaming enumerator that yields the partitions of n in
// decreasing lexicographic order of their sorted part lists.

#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace partbij {

// Largest part value accepted from text input. Keeps every derived quantity
// (weights, matrix cell contributions, scaled parts) inside long long.
inline constexpr int kMaxPartValue = 1'000'000;
inline constexpr long long kMaxPartCount = 1'000'000;

/// Multiset of positive integers, keyed by part value with cached weight.
/// Two partitions are equal iff their multiplicity maps are equal.
class Partition {
public:
    using Multiplicities = std::map<int, int>;

    Partition() = default;

    Partition(std::initializer_list<int> parts) {
        for (int part : parts) add(part, 1);
    }

    static Partition from_parts(const std::vector<int>& parts) {
        Partition p;
        for (int part : parts) p.add(part, 1);
        return p;
    }

    static Partition from_multiplicities(const Multiplicities& mult) {
        Partition p;
        for (const auto& [part, count] : mult) p.add(part, count);
        return p;
    }

    /// Sum of all parts, counted with multiplicity.
    long long weight() const { return weight_; }

    /// How often `part` occurs; 0 when absent.
    int multiplicity(int part) const {
        auto it = mult_.find(part);
        return it == mult_.end() ? 0 : it->second;
    }

    /// Total number of parts, counted with multiplicity.
    long long num_parts() const {
        long long total = 0;
        for (const auto& [part, count] : mult_) total += count;
        return total;
    }

    /// Number of distinct part values.
    int num_distinct_parts() const { return static_cast<int>(mult_.size()); }

    bool empty() const { return mult_.empty(); }

    const Multiplicities& multiplicities() const { return mult_; }

    std::vector<int> parts_descending() const {
        std::vector<int> parts;
        parts.reserve(static_cast<std::size_t>(num_parts()));
        for (auto it = mult_.rbegin(); it != mult_.rend(); ++it)
            parts.insert(parts.end(), static_cast<std::size_t>(it->second), it->first);
        return parts;
    }

    /// Canonical text form: parts in decreasing order, comma separated.
    /// The empty partition renders as the empty string.
    std::string to_string() const {
        std::string out;
        for (int part : parts_descending()) {
            if (!out.empty()) out += ',';
            out += std::to_string(part);
        }
        return out;
    }

    /// Parses a comma list of positive integers ("4,2,1,1"); input order and
    /// surrounding whitespace are irrelevant. Empty or all-whitespace text is
    /// the empty partition. Anything else malformed yields nullopt.
    static std::optional<Partition> parse(std::string_view text) {
        Partition p;
        std::size_t start = 0;
        bool saw_token = false;
        long long total_parts = 0;
        while (start <= text.size()) {
            std::size_t comma = text.find(',', start);
            std::string_view token = text.substr(
                start, comma == std::string_view::npos ? text.size() - start : comma - start);
            while (!token.empty() && (token.front() == ' ' || token.front() == '\t'))
                token.remove_prefix(1);
            while (!token.empty() && (token.back() == ' ' || token.back() == '\t'))
                token.remove_suffix(1);
            if (token.empty()) {
                if (saw_token || comma != std::string_view::npos) return std::nullopt;
            } else {
                int value = 0;
                auto [end, err] = std::from_chars(token.data(), token.data() + token.size(), value);
                if (err != std::errc() || end != token.data() + token.size()) return std::nullopt;
                if (value < 1 || value > kMaxPartValue) return std::nullopt;
                if (++total_parts > kMaxPartCount) return std::nullopt;
                p.add(value, 1);
                saw_token = true;
            }
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        return p;
    }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    void add(int part, int count) {
        if (part < 1) throw std::invalid_argument("partition parts must be >= 1");
        if (count < 1) throw std::invalid_argument("part multiplicities must be >= 1");
        mult_[part] += count;
        weight_ += static_cast<long long>(part) * count;
    }

    Multiplicities mult_;
    long long weight_ = 0;
};

inline bool all_parts_odd(const Partition& p) {
    for (const auto& [part, count] : p.multiplicities())
        if (part % 2 == 0) return false;
    return true;
}

inline bool all_parts_distinct(const Partition& p) {
    for (const auto& [part, count] : p.multiplicities())
        if (count > 1) return false;
    return true;
}

/// Membership test for a restricted partition class. The G and H classes
/// are constructed by the identity layer, which owns their definitions.
class ClassPredicate {
public:
    enum class Kind { All, OddParts, DistinctParts, GClass, HClass, Custom };

    ClassPredicate() = default;

    static ClassPredicate all() { return {}; }
    static ClassPredicate odd_parts() { return ClassPredicate(Kind::OddParts, {}); }
    static ClassPredicate distinct_parts() { return ClassPredicate(Kind::DistinctParts, {}); }

    static ClassPredicate custom(std::function<bool(const Partition&)> test) {
        return ClassPredicate(Kind::Custom, std::move(test));
    }

    /// For predicate factories that want a named kind with their own test.
    static ClassPredicate tagged(Kind kind, std::function<bool(const Partition&)> test) {
        return ClassPredicate(kind, std::move(test));
    }

    Kind kind() const { return kind_; }

    bool matches(const Partition& p) const {
        switch (kind_) {
            case Kind::All: return true;
            case Kind::OddParts: return all_parts_odd(p);
            case Kind::DistinctParts: return all_parts_distinct(p);
            default: return test_(p);
        }
    }

private:
    ClassPredicate(Kind kind, std::function<bool(const Partition&)> test)
        : kind_(kind), test_(std::move(test)) {
        if (kind_ != Kind::All && kind_ != Kind::OddParts && kind_ != Kind::DistinctParts &&
            !test_)
            throw std::invalid_argument("class predicate requires a membership test");
    }

    Kind kind_ = Kind::All;
    std::function<bool(const Partition&)> test_;
};

/// Streams the partitions of n that satisfy a class predicate, each exactly
/// once, in decreasing lexicographic order ({4} > {3,1} > {2,2} > {2,1,1} >
/// {1,1,1,1}). State is O(n) per yielded item; nothing is materialized.
class PartitionRange {
public:
    explicit PartitionRange(int n, ClassPredicate pred = ClassPredicate::all())
        : n_(n), pred_(std::move(pred)) {
        if (n < 0) throw std::invalid_argument("partition weight must be >= 0");
    }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Partition*;
        using reference = const Partition&;

        iterator() = default;

        const Partition& operator*() const { return current_; }
        const Partition* operator->() const { return &current_; }

        iterator& operator++() {
            do {
                advance();
            } while (!done_ && !pred_->matches(current_));
            return *this;
        }

        iterator operator++(int) {
            iterator copy = *this;
            ++*this;
            return copy;
        }

        bool operator==(const iterator& other) const {
            if (done_ || other.done_) return done_ == other.done_;
            return parts_ == other.parts_;
        }

    private:
        friend class PartitionRange;

        iterator(const PartitionRange* range) : pred_(&range->pred_) {
            if (range->n_ > 0) parts_.push_back(range->n_);
            current_ = Partition::from_parts(parts_);
            if (!pred_->matches(current_)) ++*this;
        }

        // Successor in decreasing lexicographic order: decrement the
        // rightmost part above 1 and redistribute the freed amount greedily.
        void advance() {
            int i = static_cast<int>(parts_.size()) - 1;
            while (i >= 0 && parts_[i] == 1) --i;
            if (i < 0) {
                done_ = true;
                parts_.clear();
                current_ = Partition();
                return;
            }
            int remainder = parts_[i] + static_cast<int>(parts_.size()) - 1 - i;
            int cap = parts_[i] - 1;
            parts_.resize(static_cast<std::size_t>(i));
            for (; remainder >= cap; remainder -= cap) parts_.push_back(cap);
            if (remainder > 0) parts_.push_back(remainder);
            current_ = Partition::from_parts(parts_);
        }

        const ClassPredicate* pred_ = nullptr;
        std::vector<int> parts_;
        Partition current_;
        bool done_ = false;
    };

    iterator begin() const { return iterator(this); }

    iterator end() const {
        iterator it;
        it.done_ = true;
        return it;
    }

private:
    int n_;
    ClassPredicate pred_;
};

inline long long count_partitions(int n, const ClassPredicate& pred = ClassPredicate::all()) {
    long long count = 0;
    for ([[maybe_unused]] const Partition& p : PartitionRange(n, pred)) ++count;
    return count;
}

struct ClassPartStats {
    long long total_parts = 0;
    long long total_distinct_parts = 0;
};

/// Sums num_parts and num_distinct_parts over every weight-n member of the
/// class.
inline ClassPartStats class_part_stats(int n, const ClassPredicate& pred) {
    ClassPartStats stats;
    for (const Partition& p : PartitionRange(n, pred)) {
        stats.total_parts += p.num_parts();
        stats.total_distinct_parts += p.num_distinct_parts();
    }
    return stats;
}

}  // namespace partbij
