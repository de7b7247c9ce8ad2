#include "splice/sparse.hpp"

#include <algorithm>

#include "splice/errors.hpp"

namespace splice {

SparseVec::SparseVec(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i].first == entries[i - 1].first)
            throw Error(ErrorCode::ParseError, "duplicate index " + std::to_string(entries[i].first));
    for (auto& e : entries)
        if (e.second != 0) entries_.push_back(e);
}

Elem SparseVec::at(int i) const noexcept {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, int idx) { return e.first < idx; });
    return (it != entries_.end() && it->first == i) ? it->second : 0;
}

SparseVec SparseVec::axpy(const GaloisField& field, Elem factor, const SparseVec& other) const {
    SparseVec out;
    out.entries_.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            out.entries_.push_back(*a++);
        } else if (a == entries_.end() || b->first < a->first) {
            const Elem v = field.mul(factor, b->second);
            if (v != 0) out.entries_.emplace_back(b->first, v);
            ++b;
        } else {
            const Elem v = field.add(a->second, field.mul(factor, b->second));
            if (v != 0) out.entries_.emplace_back(a->first, v);
            ++a;
            ++b;
        }
    }
    return out;
}

SparseVec SparseVec::scaled(const GaloisField& field, Elem factor) const {
    SparseVec out;
    if (factor == 0) return out;
    out.entries_ = entries_;
    for (auto& e : out.entries_) e.second = field.mul(e.second, factor);
    return out;
}

SparseVec SparseVec::shifted(int delta) const {
    SparseVec out = *this;
    for (auto& e : out.entries_) e.first += delta;
    return out;
}

SparseVec EchelonSpan::reduce(const SparseVec& v) const {
    SparseVec residual = v;
    for (const auto& [index, coeff] : v.entries()) {
        auto it = rows_.find(pivot_key(index));
        if (it != rows_.end()) residual = residual.axpy(*field_, field_->neg(coeff), it->second);
    }
    return residual;
}

bool EchelonSpan::insert(const SparseVec& v) {
    SparseVec residual = reduce(v);
    if (residual.empty()) return false;
    const auto& entries = residual.entries();
    const auto lead = *std::min_element(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        return pivot_key(a.first) < pivot_key(b.first);
    });
    residual = residual.scaled(*field_, field_->inv(lead.second));
    for (auto& [key, row] : rows_) {
        const Elem c = row.at(lead.first);
        if (c != 0) row = row.axpy(*field_, field_->neg(c), residual);
    }
    rows_.emplace(pivot_key(lead.first), std::move(residual));
    return true;
}

std::vector<SparseVec> EchelonSpan::basis() const {
    std::vector<SparseVec> out;
    out.reserve(rows_.size());
    for (const auto& [key, row] : rows_) out.push_back(row);
    return out;
}

}  // namespace splice
