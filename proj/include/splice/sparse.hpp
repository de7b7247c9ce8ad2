#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "splice/errors.hpp"
#include "splice/field.hpp"

namespace splice {

using Elem = GaloisField::Elem;

/// Finitely supported coefficient vector indexed by copy index i in Z.
/// Entries are sorted by index and never zero.
class SparseVec {
public:
    using Entry = std::pair<int, Elem>;

    SparseVec() = default;
    /// Drops zeros, sorts, and throws ParseError on duplicate indices.
    explicit SparseVec(std::vector<Entry> entries);

    static SparseVec unit(int i) { return SparseVec({{i, GaloisField::one()}}); }

    bool empty() const noexcept { return entries_.empty(); }
    std::size_t support_size() const noexcept { return entries_.size(); }
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    int min_index() const { return entries_.front().first; }
    int max_index() const { return entries_.back().first; }
    Elem at(int i) const noexcept;

    /// this + factor * other
    SparseVec axpy(const GaloisField& field, Elem factor, const SparseVec& other) const;
    SparseVec scaled(const GaloisField& field, Elem factor) const;
    /// Moves the coefficient at index i to index i + delta.
    SparseVec shifted(int delta) const;

    bool operator==(const SparseVec&) const = default;

private:
    std::vector<Entry> entries_;
};

/// Position of index i in the pivot order 0, -1, 1, -2, 2, ...
constexpr std::uint64_t pivot_key(int i) noexcept {
    return i >= 0 ? 2 * static_cast<std::uint64_t>(i) : 2 * static_cast<std::uint64_t>(-static_cast<std::int64_t>(i)) - 1;
}

/// Subspace of finitely supported vectors kept in reduced row echelon form
/// under pivot_key ordering. Rows have leading coefficient 1 and every pivot
/// column is zero outside its own row, so equal subspaces give equal rows.
class EchelonSpan {
public:
    explicit EchelonSpan(const GaloisField* field) : field_(field) {}

    /// Returns true when v was outside the span (rank grew).
    bool insert(const SparseVec& v);
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    SparseVec reduce(const SparseVec& v) const;

    std::size_t rank() const noexcept { return rows_.size(); }
    /// Rows in pivot order.
    std::vector<SparseVec> basis() const;

    bool operator==(const EchelonSpan& other) const { return rows_ == other.rows_; }

private:
    const GaloisField* field_;
    /// pivot key -> row
    std::map<std::uint64_t, SparseVec> rows_;
};

}  // namespace splice
