#include "makekex/group.hpp"

#include <algorithm>
#include <map>

#include "makekex/rng.hpp"

namespace makekex {

Permutation compose(const Permutation& s, const Permutation& t) {
    if (s.size() != t.size()) throw ShapeError("permutation degrees differ");
    Permutation out(s.size());
    for (std::size_t x = 0; x < t.size(); ++x) out[x] = s[t[x]];
    return out;
}

bool is_permutation(const Permutation& p, std::size_t degree) {
    if (p.size() != degree) return false;
    std::vector<bool> seen(degree, false);
    for (std::uint32_t v : p) {
        if (v >= degree || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

std::shared_ptr<const FiniteGroupTable> FiniteGroupTable::from_generators(
    std::size_t degree, std::vector<Permutation> generators, std::size_t order_cap) {
    if (degree == 0) throw InvalidInputError("permutation degree must be positive");
    for (const auto& g : generators) {
        if (!is_permutation(g, degree)) {
            throw InvalidInputError("generator is not a permutation of the stated degree");
        }
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    Permutation id(degree);
    for (std::size_t x = 0; x < degree; ++x) id[x] = static_cast<std::uint32_t>(x);

    std::vector<Permutation> elements{id};
    std::map<Permutation, std::size_t> index{{id, 0}};
    for (std::size_t cursor = 0; cursor < elements.size(); ++cursor) {
        for (const auto& g : generators) {
            Permutation c = compose(elements[cursor], g);
            if (index.contains(c)) continue;
            if (elements.size() >= order_cap) {
                throw GroupTooLargeError("group closure exceeds the order cap");
            }
            index.emplace(c, elements.size());
            elements.push_back(std::move(c));
        }
    }

    auto table = std::shared_ptr<FiniteGroupTable>(new FiniteGroupTable());
    table->degree_ = degree;
    table->order_ = elements.size();
    table->elements_ = std::move(elements);
    const std::size_t m = table->order_;
    table->table_.assign(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const Permutation prod = compose(table->elements_[i], table->elements_[j]);
            const auto it = index.find(prod);
            if (it == index.end()) {
                throw InvalidInputError("generator closure is not closed under composition");
            }
            table->table_[i * m + j] = static_cast<std::uint32_t>(it->second);
        }
    }
    table->fill_inverses_and_labels();
    table->compute_hash();
    table->validate();
    return table;
}

void FiniteGroupTable::fill_inverses_and_labels() {
    inverse_.assign(order_, 0);
    for (std::size_t i = 0; i < order_; ++i) {
        bool found = false;
        for (std::size_t j = 0; j < order_; ++j) {
            if (mul(i, j) == 0) {
                inverse_[i] = static_cast<std::uint32_t>(j);
                found = true;
                break;
            }
        }
        if (!found) throw InvalidInputError("element without inverse in group table");
    }
    labels_.clear();
    labels_.reserve(order_);
    for (std::size_t i = 0; i < order_; ++i) {
        std::string s = "[";
        for (std::size_t x = 0; x < degree_; ++x) {
            if (x) s += ' ';
            s += std::to_string(elements_[i][x]);
        }
        s += ']';
        labels_.push_back(std::move(s));
    }
}

void FiniteGroupTable::compute_hash() {
    std::uint64_t h = 14695981039346656037ULL;  // FNV-1a offset basis
    auto mix = [&h](std::uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(order_);
    for (std::uint32_t v : table_) mix(v);
    hash_ = h;
}

void FiniteGroupTable::validate() const {
    const std::size_t m = order_;
    // Identity at index 0.
    for (std::size_t j = 0; j < m; ++j) {
        if (mul(0, j) != j || mul(j, 0) != j) {
            throw InvalidInputError("index 0 is not the identity of the table");
        }
    }
    // Latin square: each row and column is a permutation of {0..m-1}.
    std::vector<bool> seen(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t v = mul(i, j);
            if (v >= m || seen[v]) throw InvalidInputError("table row is not a permutation");
            seen[v] = true;
        }
        std::fill(seen.begin(), seen.end(), false);
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t v = mul(j, i);
            if (v >= m || seen[v]) throw InvalidInputError("table column is not a permutation");
            seen[v] = true;
        }
    }
    // Inverses.
    for (std::size_t i = 0; i < m; ++i) {
        if (mul(i, inverse_[i]) != 0) throw InvalidInputError("inverse table is wrong");
    }
    // Associativity: exhaustive at desk scale, sampled above. The closure is
    // associative by construction, so this guards against table corruption.
    auto check = [this](std::size_t i, std::size_t j, std::size_t k) {
        if (mul(mul(i, j), k) != mul(i, mul(j, k))) {
            throw InvalidInputError("group table is not associative");
        }
    };
    if (m <= 64) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t k = 0; k < m; ++k) check(i, j, k);
    } else {
        SeededRng rng(hash_);
        for (int trial = 0; trial < 100000; ++trial) {
            check(rng.below(m), rng.below(m), rng.below(m));
        }
    }
}

std::shared_ptr<const FiniteGroupTable> FiniteGroupTable::builtin(std::string_view name) {
    if (name == "trivial") {
        return from_generators(1, {});
    }
    if (name == "c2") {
        return from_generators(2, {{1, 0}});
    }
    if (name == "s3") {
        return from_generators(3, {{1, 0, 2}, {1, 2, 0}});
    }
    if (name == "d4") {
        // Rotation and a reflection of the square.
        return from_generators(4, {{1, 2, 3, 0}, {3, 2, 1, 0}});
    }
    if (name == "q8") {
        // Left translations by i and j on {1, -1, i, -i, j, -j, k, -k}.
        return from_generators(8, {{2, 3, 1, 0, 6, 7, 5, 4}, {4, 5, 7, 6, 1, 0, 2, 3}});
    }
    if (name == "a5") {
        // Two 3-cycles sharing one point.
        return from_generators(5, {{1, 2, 0, 3, 4}, {0, 1, 3, 4, 2}});
    }
    throw InvalidInputError("unknown builtin group: " + std::string(name));
}

const std::vector<std::string>& FiniteGroupTable::builtin_names() {
    static const std::vector<std::string> names{"trivial", "c2", "s3", "d4", "q8", "a5"};
    return names;
}

} // namespace makekex
