/*
* Copyright 2026 The rqcodes authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*      http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/

#ifndef RQCODES_CODES_HPP
#define RQCODES_CODES_HPP

#include <algorithm>

#include "rqcodes/ring_rq.hpp"

namespace rqcodes {

using FieldWord = std::vector<FieldElement>;
using RingWord = std::vector<RingElement>;

namespace detail {

/// In-place reduced row echelon form; returns the pivot columns. Unique per
/// row space, so equal codes produce identical matrices.
inline std::vector<size_t> rref(std::vector<FieldWord>& rows) {
    std::vector<size_t> pivots;
    if (rows.empty()) return pivots;
    const size_t n = rows[0].size();
    size_t r = 0;
    for (size_t col = 0; col < n && r < rows.size(); ++col) {
        size_t sel = r;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        FieldElement inv = rows[r][col].inverse();
        for (size_t j = col; j < n; ++j) rows[r][j] *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col].is_zero()) continue;
            FieldElement factor = rows[i][col];
            for (size_t j = col; j < n; ++j) rows[i][j] -= factor * rows[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

inline bool reduces_to_zero(const FieldWord& w, const std::vector<FieldWord>& rref_rows,
                            const std::vector<size_t>& pivots) {
    FieldWord v = w;
    for (size_t i = 0; i < rref_rows.size(); ++i) {
        const FieldElement c = v[pivots[i]];
        if (c.is_zero()) continue;
        for (size_t j = pivots[i]; j < v.size(); ++j) v[j] -= c * rref_rows[i][j];
    }
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace detail

/// A linear code over F_q held by its unique RREF generator matrix.
class LinearCode {
   public:
    LinearCode(const FieldSpec& F, size_t n, std::vector<FieldWord> rows) : spec_(&F), n_(n), rows_(std::move(rows)) {
        for (const auto& row : rows_) {
            if (row.size() != n_) fail("wrong_length", "generator rows must all have length n");
            for (const auto& x : row)
                if (&x.spec() != &F) fail("mismatched_specs", "generator entry from a foreign field");
        }
        pivots_ = detail::rref(rows_);
    }

    static LinearCode zero_code(const FieldSpec& F, size_t n) { return LinearCode(F, n, {}); }
    static LinearCode full_space(const FieldSpec& F, size_t n) {
        std::vector<FieldWord> rows(n, FieldWord(n, F.zero()));
        for (size_t i = 0; i < n; ++i) rows[i][i] = F.one();
        return LinearCode(F, n, std::move(rows));
    }

    const FieldSpec& spec() const noexcept { return *spec_; }
    size_t length() const noexcept { return n_; }
    size_t dimension() const noexcept { return rows_.size(); }
    const std::vector<FieldWord>& generator_matrix() const noexcept { return rows_; }
    const std::vector<size_t>& pivot_columns() const noexcept { return pivots_; }

    bool contains(const FieldWord& w) const {
        if (w.size() != n_) fail("wrong_length", "word length differs from code length");
        return detail::reduces_to_zero(w, rows_, pivots_);
    }

    /// Euclidean dual: the null space of the generator matrix.
    LinearCode dual() const {
        std::vector<bool> is_pivot(n_, false);
        for (size_t p : pivots_) is_pivot[p] = true;
        std::vector<FieldWord> basis;
        for (size_t f = 0; f < n_; ++f) {
            if (is_pivot[f]) continue;
            FieldWord w(n_, spec_->zero());
            w[f] = spec_->one();
            for (size_t i = 0; i < rows_.size(); ++i) w[pivots_[i]] = -rows_[i][f];
            basis.push_back(std::move(w));
        }
        return LinearCode(*spec_, n_, std::move(basis));
    }

    bool is_self_dual() const { return *this == dual(); }

    /// Minimum Hamming weight over the nonzero codewords, by exhaustive
    /// enumeration (one representative per projective class).
    size_t min_distance(uint64_t guard = uint64_t(1) << 24) const {
        const size_t k = dimension();
        if (k == 0) fail("zero_code", "minimum distance of the zero code is undefined");
        const uint32_t q = spec_->size();
        uint64_t count = 1;
        for (size_t i = 0; i < k; ++i) {
            count *= q;
            if (count > guard) fail("guard_exceeded", "codeword enumeration exceeds the guard");
        }

        // flat value-code copies of the rows, pre-scaled by every field element
        std::vector<std::vector<uint32_t>> scaled(k * q, std::vector<uint32_t>(n_, 0));
        for (size_t i = 0; i < k; ++i)
            for (uint32_t c = 0; c < q; ++c) {
                FieldElement fc = spec_->from_packed(c);
                for (size_t j = 0; j < n_; ++j) scaled[i * q + c][j] = (fc * rows_[i][j]).value_code();
            }

        size_t best = n_ + 1;
        std::vector<std::vector<uint32_t>> partial(k + 1, std::vector<uint32_t>(n_, 0));

        // first nonzero coefficient fixed to one: weight is scalar-invariant
        const uint32_t one_packed = spec_->one().packed();
        for (size_t start = 0; start < k; ++start) {
            for (size_t j = 0; j < n_; ++j) partial[start + 1][j] = scaled[start * q + one_packed][j];
            dfs(start + 1, k, q, scaled, partial, best);
        }
        return best;
    }

    bool operator==(const LinearCode& o) const { return spec_ == o.spec_ && n_ == o.n_ && rows_ == o.rows_; }
    bool operator!=(const LinearCode& o) const { return !(*this == o); }

   private:
    void dfs(size_t depth, size_t k, uint32_t q, const std::vector<std::vector<uint32_t>>& scaled,
             std::vector<std::vector<uint32_t>>& partial, size_t& best) const {
        if (depth == k) {
            size_t w = 0;
            for (size_t j = 0; j < n_; ++j) w += partial[depth][j] != 0;
            if (w < best) best = w;
            return;
        }
        for (uint32_t c = 0; c < q; ++c) {
            const auto& row = scaled[depth * q + c];
            auto& next = partial[depth + 1];
            const auto& cur = partial[depth];
            for (size_t j = 0; j < n_; ++j) next[j] = spec_->vc_add(cur[j], row[j]);
            dfs(depth + 1, k, q, scaled, partial, best);
        }
    }

    const FieldSpec* spec_;
    size_t n_;
    std::vector<FieldWord> rows_;
    std::vector<size_t> pivots_;
};

inline LinearCode code_from_rows(const FieldSpec& F, size_t n, std::vector<FieldWord> rows) {
    return LinearCode(F, n, std::move(rows));
}

inline size_t hamming_weight(const FieldWord& w) {
    size_t count = 0;
    for (const auto& x : w) count += !x.is_zero();
    return count;
}

// ---------------------------------------------------------------------------
// codes over R_q and the Gray map

/// Phi_i of a word: the length-n word of i-th CRT coordinates.
inline FieldWord phi_component(const RingWord& w, uint32_t i) {
    FieldWord out;
    out.reserve(w.size());
    for (const auto& x : w) out.push_back(x.coord(i));
    return out;
}

/// Phi(a) = (Phi_0(a), ..., Phi_{q-1}(a)), flattened to length q*n.
inline FieldWord gray_map(const RingWord& w) {
    if (w.empty()) return {};
    const FieldSpec& F = w[0].spec();
    FieldWord out;
    out.reserve(static_cast<size_t>(F.size()) * w.size());
    for (uint32_t i = 0; i < F.size(); ++i)
        for (const auto& x : w) out.push_back(x.coord(i));
    return out;
}

/// Inverse of gray_map on words of length q*n.
inline RingWord gray_unmap(const FieldSpec& F, const FieldWord& w) {
    if (w.size() % F.size() != 0) fail("wrong_length", "Gray word length must be divisible by q");
    const size_t n = w.size() / F.size();
    RingWord out;
    out.reserve(n);
    for (size_t j = 0; j < n; ++j) {
        std::vector<FieldElement> coords(F.size());
        for (uint32_t i = 0; i < F.size(); ++i) coords[i] = w[static_cast<size_t>(i) * n + j];
        out.push_back(RingElement::from_coords(F, std::move(coords)));
    }
    return out;
}

inline size_t gray_weight(const RingWord& w) { return hamming_weight(gray_map(w)); }
inline size_t gray_distance(const RingWord& a, const RingWord& b) {
    if (a.size() != b.size()) fail("wrong_length", "Gray distance of words of different lengths");
    RingWord diff(a.size());
    for (size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
    return gray_weight(diff);
}

/// A linear code over R_q stored as its component decomposition
/// C = eta_0 C_0 + ... + eta_{q-1} C_{q-1} (canonical and loss-free).
class RingLinearCode {
   public:
    RingLinearCode(const FieldSpec& F, std::vector<LinearCode> components) : spec_(&F), comps_(std::move(components)) {
        if (comps_.size() != F.size()) fail("wrong_length", "need exactly q component codes");
        for (const auto& c : comps_) {
            if (&c.spec() != &F) fail("mismatched_specs", "component code over a foreign field");
            if (c.length() != comps_[0].length()) fail("wrong_length", "component codes of unequal length");
        }
    }

    /// builds the components from generator words over R_q
    static RingLinearCode from_ring_rows(const FieldSpec& F, size_t n, const std::vector<RingWord>& rows) {
        std::vector<LinearCode> comps;
        for (uint32_t i = 0; i < F.size(); ++i) {
            std::vector<FieldWord> cr;
            cr.reserve(rows.size());
            for (const auto& row : rows) {
                if (row.size() != n) fail("wrong_length", "ring generator rows must all have length n");
                cr.push_back(phi_component(row, i));
            }
            comps.emplace_back(F, n, std::move(cr));
        }
        return RingLinearCode(F, std::move(comps));
    }

    static RingLinearCode zero_code(const FieldSpec& F, size_t n) {
        return RingLinearCode(F, std::vector<LinearCode>(F.size(), LinearCode::zero_code(F, n)));
    }

    const FieldSpec& spec() const noexcept { return *spec_; }
    size_t length() const noexcept { return comps_[0].length(); }
    const LinearCode& component(uint32_t i) const {
        if (i >= comps_.size()) fail("index_out_of_range", "component index");
        return comps_[i];
    }
    const std::vector<LinearCode>& components() const noexcept { return comps_; }

    /// rank over R_q = max_i dim C_i
    size_t rank() const {
        size_t k = 0;
        for (const auto& c : comps_) k = std::max(k, c.dimension());
        return k;
    }
    /// log_q |C| = sum_i dim C_i
    size_t logq_size() const {
        size_t s = 0;
        for (const auto& c : comps_) s += c.dimension();
        return s;
    }

    bool contains(const RingWord& w) const {
        if (w.size() != length()) fail("wrong_length", "word length differs from code length");
        for (uint32_t i = 0; i < spec_->size(); ++i)
            if (!comps_[i].contains(phi_component(w, i))) return false;
        return true;
    }

    RingLinearCode dual() const {
        std::vector<LinearCode> d;
        d.reserve(comps_.size());
        for (const auto& c : comps_) d.push_back(c.dual());
        return RingLinearCode(*spec_, std::move(d));
    }

    bool is_self_dual() const {
        return std::all_of(comps_.begin(), comps_.end(), [](const LinearCode& c) { return c.is_self_dual(); });
    }

    /// Generator matrix over R_q with rank() rows: sum_i eta_i G~_i, where
    /// G~_i pads the i-th component RREF with zero rows.
    std::vector<RingWord> generator_matrix() const {
        const size_t k = rank(), n = length();
        std::vector<RingWord> rows(k, RingWord(n));
        for (size_t t = 0; t < k; ++t)
            for (size_t c = 0; c < n; ++c) {
                std::vector<FieldElement> coords(spec_->size());
                for (uint32_t i = 0; i < spec_->size(); ++i) {
                    const auto& G = comps_[i].generator_matrix();
                    coords[i] = t < G.size() ? G[t][c] : spec_->zero();
                }
                rows[t][c] = RingElement::from_coords(*spec_, std::move(coords));
            }
        return rows;
    }

    /// Phi(C): the length q*n code with block-diagonal generator matrix
    /// diag(G_0, ..., G_{q-1}); the assembled rows are already in RREF.
    LinearCode gray_image() const {
        const size_t n = length();
        std::vector<FieldWord> rows;
        for (uint32_t i = 0; i < spec_->size(); ++i)
            for (const auto& row : comps_[i].generator_matrix()) {
                FieldWord wide(static_cast<size_t>(spec_->size()) * n, spec_->zero());
                for (size_t j = 0; j < n; ++j) wide[static_cast<size_t>(i) * n + j] = row[j];
                rows.push_back(std::move(wide));
            }
        return LinearCode(*spec_, static_cast<size_t>(spec_->size()) * n, std::move(rows));
    }

    bool operator==(const RingLinearCode& o) const { return spec_ == o.spec_ && comps_ == o.comps_; }
    bool operator!=(const RingLinearCode& o) const { return !(*this == o); }

   private:
    const FieldSpec* spec_;
    std::vector<LinearCode> comps_;
};

inline RingLinearCode ring_code_from_components(const FieldSpec& F, std::vector<LinearCode> components) {
    return RingLinearCode(F, std::move(components));
}

/// Oracle cross-check of Phi(C^perp) = (Phi(C))^perp: both sides computed
/// independently (componentwise null spaces vs. the big null space).
inline bool gray_dual_commutes(const RingLinearCode& C) {
    return C.dual().gray_image() == C.gray_image().dual();
}

}  // namespace rqcodes

#endif  // RQCODES_CODES_HPP
