#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "makekex/errors.hpp"

namespace makekex {

// A permutation of {0..degree-1} in one-line notation: perm[x] is the image
// of x.
using Permutation = std::vector<std::uint32_t>;

// Composition (s . t)(x) = s(t(x)): the right factor acts first.
Permutation compose(const Permutation& s, const Permutation& t);

bool is_permutation(const Permutation& p, std::size_t degree);

// A finite group captured as a multiplication table over an enumeration of
// its elements. Index 0 is always the identity. Construction validates the
// table: Latin square rows/columns, identity, inverses, and associativity
// (exhaustive up to order 64, sampled above that).
class FiniteGroupTable {
public:
    static constexpr std::size_t kDefaultOrderCap = 256;

    // Closure of the generators under composition, found by breadth-first
    // search: identity first, generators sorted, discovery order after that.
    static std::shared_ptr<const FiniteGroupTable> from_generators(
        std::size_t degree, std::vector<Permutation> generators,
        std::size_t order_cap = kDefaultOrderCap);

    // Built-ins: "trivial", "c2", "s3", "d4", "q8", "a5".
    static std::shared_ptr<const FiniteGroupTable> builtin(std::string_view name);
    static const std::vector<std::string>& builtin_names();

    std::size_t order() const noexcept { return order_; }
    std::size_t degree() const noexcept { return degree_; }

    // Index of g_i * g_j.
    std::size_t mul(std::size_t i, std::size_t j) const {
        return table_[i * order_ + j];
    }
    std::size_t inverse(std::size_t i) const { return inverse_[i]; }
    std::size_t identity() const noexcept { return 0; }

    const Permutation& element(std::size_t i) const { return elements_[i]; }
    const std::vector<Permutation>& elements() const noexcept { return elements_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }

    // FNV-1a over order and table entries; used for cheap compatibility and
    // file integrity checks.
    std::uint64_t table_hash() const noexcept { return hash_; }

    bool same_table(const FiniteGroupTable& o) const noexcept {
        return order_ == o.order_ && hash_ == o.hash_;
    }

private:
    FiniteGroupTable() = default;
    void validate() const;
    void fill_inverses_and_labels();
    void compute_hash();

    std::size_t order_ = 0;
    std::size_t degree_ = 0;
    std::vector<Permutation> elements_;
    std::vector<std::uint32_t> table_;   // order x order, row-major
    std::vector<std::uint32_t> inverse_;
    std::vector<std::string> labels_;
    std::uint64_t hash_ = 0;
};

using GroupPtr = std::shared_ptr<const FiniteGroupTable>;

} // namespace makekex
