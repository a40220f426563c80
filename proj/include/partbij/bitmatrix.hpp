#pragma once

// Per-odd-base 0/1 matrices encoding a partition: for every odd x, column j
// of the matrix for x holds the binary digits of the multiplicity of the
// part x·2^j (cell (i, j) present <=> bit i set), so each cell contributes
// x·2^(i+j) to the weight. Any cell permutation that keeps every cell on its
// anti-diagonal i + j therefore preserves the encoded weight while changing
// the partition.

#include <climits>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "partition.hpp"

namespace partbij {

/// A part value factored as odd_base · 2^exponent with odd_base odd.
struct PartKey {
    int odd_base = 1;
    int exponent = 0;

    friend bool operator==(const PartKey&, const PartKey&) = default;
};

inline PartKey split_part(int value) {
    if (value < 1) throw std::invalid_argument("part value must be >= 1");
    PartKey key{value, 0};
    while (key.odd_base % 2 == 0) {
        key.odd_base /= 2;
        ++key.exponent;
    }
    return key;
}

inline long long part_value(PartKey key) {
    return static_cast<long long>(key.odd_base) << key.exponent;
}

/// 2-adic valuation of a part value.
inline int dyadic_valuation(int value) { return split_part(value).exponent; }

struct CellPos {
    int row = 0;  // bit index within the multiplicity
    int col = 0;  // dyadic exponent of the part value

    auto operator<=>(const CellPos&) const = default;
};

using CellMap = std::function<CellPos(CellPos)>;

/// Sparse 0/1 matrix as a finite set of occupied cells, immutable after
/// construction.
class BitMatrix {
public:
    using Cells = std::set<CellPos>;

    BitMatrix() = default;

    explicit BitMatrix(Cells cells) : cells_(std::move(cells)) {
        for (const CellPos& cell : cells_)
            if (cell.row < 0 || cell.col < 0)
                throw std::invalid_argument("matrix cells need nonnegative coordinates");
    }

    const Cells& cells() const { return cells_; }
    bool empty() const { return cells_.empty(); }
    std::size_t size() const { return cells_.size(); }
    bool contains(CellPos cell) const { return cells_.count(cell) != 0; }

    /// Multiplicity encoded by column `col`: cell (i, col) sets bit i.
    long long column_value(int col) const {
        long long value = 0;
        for (const CellPos& cell : cells_)
            if (cell.col == col) value |= 1LL << cell.row;
        return value;
    }

    /// Weight this matrix contributes when its columns encode multiplicities
    /// of parts with the given odd base: sum of odd_base · 2^(row+col).
    long long weight(int odd_base) const {
        if (odd_base < 1 || odd_base % 2 == 0)
            throw std::invalid_argument("matrix weight needs an odd base");
        long long total = 0;
        for (const CellPos& cell : cells_)
            total += static_cast<long long>(odd_base) << (cell.row + cell.col);
        return total;
    }

    /// Occupied cells of the anti-diagonal row + col == k.
    Cells diagonal(int k) const {
        if (k < 0) throw std::invalid_argument("diagonal index must be >= 0");
        Cells out;
        for (const CellPos& cell : cells_)
            if (cell.row + cell.col == k) out.insert(cell);
        return out;
    }

    /// Applies a position bijection with gather semantics: every source cell
    /// is read before any target is written, so swapping two occupied cells
    /// is well defined. Two cells landing on one target is a structural
    /// error, never a silent merge.
    BitMatrix permuted(const CellMap& map) const {
        Cells moved;
        for (const CellPos& cell : cells_) {
            CellPos target = map(cell);
            if (target.row < 0 || target.col < 0)
                throw std::invalid_argument("cell permutation left the grid");
            if (!moved.insert(target).second)
                throw std::invalid_argument("cell permutation collision at (" +
                                            std::to_string(target.row) + "," +
                                            std::to_string(target.col) + ")");
        }
        return BitMatrix(std::move(moved));
    }

    bool operator==(const BitMatrix&) const = default;

private:
    Cells cells_;
};

/// The matrices of one partition, keyed by odd base. Empty matrices are
/// never stored: an absent odd base means every multiplicity of x·2^j is 0.
class MatrixFamily {
public:
    using Matrices = std::map<int, BitMatrix>;

    MatrixFamily() = default;

    explicit MatrixFamily(Matrices matrices) : matrices_(std::move(matrices)) {
        for (const auto& [odd_base, matrix] : matrices_) {
            if (odd_base < 1 || odd_base % 2 == 0)
                throw std::invalid_argument("family keys must be odd and positive");
            if (matrix.empty())
                throw std::invalid_argument("family must not store empty matrices");
        }
    }

    const Matrices& matrices() const { return matrices_; }
    bool empty() const { return matrices_.empty(); }

    long long total_weight() const {
        long long total = 0;
        for (const auto& [odd_base, matrix] : matrices_) total += matrix.weight(odd_base);
        return total;
    }

    /// Applies one position bijection to every matrix of the family.
    MatrixFamily permuted(const CellMap& map) const {
        Matrices out;
        for (const auto& [odd_base, matrix] : matrices_)
            out.emplace(odd_base, matrix.permuted(map));
        return MatrixFamily(std::move(out));
    }

    bool operator==(const MatrixFamily&) const = default;

private:
    Matrices matrices_;
};

/// Encodes a partition: each part x·2^j of multiplicity m plants the set
/// bits of m as cells (bit, j) in the matrix for x.
inline MatrixFamily encode(const Partition& p) {
    std::map<int, BitMatrix::Cells> cells;
    for (const auto& [part, count] : p.multiplicities()) {
        PartKey key = split_part(part);
        for (int bit = 0; (count >> bit) != 0; ++bit)
            if ((count >> bit) & 1) cells[key.odd_base].insert({bit, key.exponent});
    }
    MatrixFamily::Matrices matrices;
    for (auto& [odd_base, cs] : cells) matrices.emplace(odd_base, BitMatrix(std::move(cs)));
    return MatrixFamily(std::move(matrices));
}

/// Reads a family back into the partition it encodes. Exact inverse of
/// encode() on valid families.
inline Partition decode(const MatrixFamily& family) {
    std::map<long long, long long> mult;
    for (const auto& [odd_base, matrix] : family.matrices())
        for (const CellPos& cell : matrix.cells()) {
            long long value = part_value({odd_base, cell.col});
            mult[value] += 1LL << cell.row;
        }
    Partition::Multiplicities narrowed;
    for (const auto& [value, count] : mult) {
        if (value > INT_MAX || count > INT_MAX)
            throw std::overflow_error("decoded partition exceeds the supported range");
        narrowed[static_cast<int>(value)] = static_cast<int>(count);
    }
    return Partition::from_multiplicities(narrowed);
}

/// Rendering for human inspection: one block per odd base, one line per
/// occupied row, columns left to right from j = 0, '1' present, '.' absent.
inline std::string render(const MatrixFamily& family) {
    std::ostringstream out;
    for (const auto& [odd_base, matrix] : family.matrices()) {
        int max_col = 0;
        std::set<int> rows;
        for (const CellPos& cell : matrix.cells()) {
            max_col = std::max(max_col, cell.col);
            rows.insert(cell.row);
        }
        out << "x=" << odd_base << "\n";
        out << " i\\j";
        for (int col = 0; col <= max_col; ++col) out << ' ' << std::setw(2) << col;
        out << "\n";
        for (int row : rows) {
            out << std::setw(4) << row;
            for (int col = 0; col <= max_col; ++col)
                out << ' ' << std::setw(2) << (matrix.contains({row, col}) ? '1' : '.');
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace partbij
