#include "symtutte/arrangement.hpp"

#include "symtutte/error.hpp"
#include "symtutte/linalg.hpp"

#include <algorithm>
#include <set>

namespace symtutte {

Hyperplane Hyperplane::canonical(std::vector<Rational> coeffs, Rational rhs) {
    auto lead = std::find_if(coeffs.begin(), coeffs.end(), [](const Rational& c) { return sgn(c) != 0; });
    if (lead == coeffs.end()) throw InvalidArgument("arrangement", "not a hyperplane: all coefficients are zero");
    const Rational scale = *lead;
    if (scale != 1) {
        for (auto& c : coeffs) c /= scale;
        rhs /= scale;
    }
    return Hyperplane(std::move(coeffs), std::move(rhs));
}

Hyperplane canonicalize(std::vector<Rational> coeffs, Rational rhs) {
    return Hyperplane::canonical(std::move(coeffs), std::move(rhs));
}

std::strong_ordering operator<=>(const Hyperplane& a, const Hyperplane& b) {
    if (a.dim() != b.dim()) return a.dim() <=> b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    const int c = cmp(a.rhs_, b.rhs_);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::vector<std::size_t> Hyperplane::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) != 0) out.push_back(i);
    }
    return out;
}

Hyperplane Hyperplane::embedded(std::size_t n) const {
    if (n < dim()) throw InvalidArgument("arrangement", "cannot embed a hyperplane into a smaller space");
    auto coeffs = coeffs_;
    coeffs.resize(n, Rational(0));
    return Hyperplane(std::move(coeffs), rhs_);
}

std::string Hyperplane::to_string() const {
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (sgn(c) == 0) continue;
        const Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        if (mag != 1) {
            out += is_integer(mag) ? symtutte::to_string(mag) : "(" + symtutte::to_string(mag) + ")";
        }
        out += "x_" + std::to_string(i + 1);
        first = false;
    }
    return out + " = " + symtutte::to_string(rhs_);
}

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto v : images_) {
        if (v >= images_.size() || seen[v]) throw InvalidArgument("arrangement", "not a permutation");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = i;
    return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& other) const {
    if (size() != other.size()) throw InvalidArgument("arrangement", "permutation size mismatch");
    std::vector<std::size_t> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = images_[other.images_[i]];
    return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[images_[i]] = i;
    return Permutation(std::move(out));
}

Arrangement::Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes) : dim_(dim) {
    std::set<Hyperplane> seen;
    for (auto& h : hyperplanes) {
        if (h.dim() != dim) throw InvalidArgument("arrangement", "hyperplane dimension does not match arrangement");
        if (seen.insert(h).second) hyperplanes_.push_back(std::move(h));
    }
    integer_rows_.reserve(hyperplanes_.size());
    linalg::RationalEchelon<Integer> echelon(dim_);
    for (const auto& h : hyperplanes_) {
        std::vector<Rational> row = h.coeffs();
        row.push_back(h.rhs());
        integer_rows_.push_back(linalg::primitive_integer_row(row));
        if (echelon.rank() < dim_) {
            echelon.insert(std::span<const Integer>(integer_rows_.back().data(), dim_));
        }
    }
    rank_ = echelon.rank();
}

bool Arrangement::contains(const Hyperplane& h) const {
    return std::find(hyperplanes_.begin(), hyperplanes_.end(), h) != hyperplanes_.end();
}

std::vector<Hyperplane> Arrangement::permuted(const Permutation& sigma) const {
    std::vector<Hyperplane> out;
    out.reserve(size());
    for (const auto& h : hyperplanes_) out.push_back(act(sigma, h));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Hyperplane> Arrangement::sorted() const {
    auto out = hyperplanes_;
    std::sort(out.begin(), out.end());
    return out;
}

Subarrangement::Subarrangement(const Arrangement& parent, std::vector<std::size_t> members)
    : parent_(&parent), members_(std::move(members)) {
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i] >= parent.size()) throw InvalidArgument("arrangement", "subarrangement index out of range");
        if (i > 0 && members_[i] <= members_[i - 1]) {
            throw InvalidArgument("arrangement", "subarrangement indices must be strictly increasing");
        }
    }
}

Subarrangement Subarrangement::full(const Arrangement& parent) {
    std::vector<std::size_t> all(parent.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return Subarrangement(parent, std::move(all));
}

Subarrangement Subarrangement::from_mask(const Arrangement& parent, std::uint64_t mask) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < parent.size() && i < 64; ++i) {
        if (mask >> i & 1U) members.push_back(i);
    }
    return Subarrangement(parent, std::move(members));
}

Hyperplane act(const Permutation& sigma, const Hyperplane& h) {
    if (sigma.size() != h.dim()) throw InvalidArgument("arrangement", "permutation and hyperplane dimensions differ");
    std::vector<Rational> coeffs(h.dim());
    for (std::size_t i = 0; i < h.dim(); ++i) coeffs[sigma(i)] = h.coeffs()[i];
    return Hyperplane::canonical(std::move(coeffs), h.rhs());
}

std::vector<Hyperplane> orbit(const Hyperplane& h, std::size_t n) {
    const auto support = h.support();
    if (support.size() > n) throw InvalidArgument("arrangement", "support larger than the ambient dimension");
    const std::size_t j = support.size();

    std::set<Hyperplane> found;
    std::vector<std::size_t> placement(j);
    std::vector<bool> used(n, false);
    std::vector<Rational> coeffs(n);

    // Depth-first enumeration of injective maps support -> [n].
    auto place = [&](auto&& self, std::size_t depth) -> void {
        if (depth == j) {
            std::fill(coeffs.begin(), coeffs.end(), Rational(0));
            for (std::size_t k = 0; k < j; ++k) coeffs[placement[k]] = h.coeffs()[support[k]];
            found.insert(Hyperplane::canonical(coeffs, h.rhs()));
            return;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            placement[depth] = v;
            self(self, depth + 1);
            used[v] = false;
        }
    };
    place(place, 0);
    return {found.begin(), found.end()};
}

namespace {

std::pair<std::size_t, std::size_t> coefficient_and_augmented_rank(const Subarrangement& b) {
    const auto& parent = b.parent();
    const std::size_t n = parent.dim();
    linalg::RationalEchelon<Integer> coef(n);
    linalg::RationalEchelon<Integer> aug(n + 1);
    for (auto index : b.members()) {
        const auto& row = parent.integer_rows()[index];
        coef.insert(std::span<const Integer>(row.data(), n));
        aug.insert(row);
    }
    return {coef.rank(), aug.rank()};
}

}  // namespace

bool is_central(const Subarrangement& b) {
    const auto [coef, aug] = coefficient_and_augmented_rank(b);
    return coef == aug;
}

std::size_t rank_of(const Subarrangement& b) { return coefficient_and_augmented_rank(b).first; }

}  // namespace symtutte
