#include "symtutte/linalg.hpp"

#include "symtutte/error.hpp"

#include <numeric>
#include <stdexcept>

namespace symtutte::linalg {
namespace {

struct Checked {
    static std::int64_t mul(std::int64_t a, std::int64_t b) {
        std::int64_t out;
        if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("int64 echelon overflow");
        return out;
    }
    static std::int64_t sub(std::int64_t a, std::int64_t b) {
        std::int64_t out;
        if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("int64 echelon overflow");
        return out;
    }
};

inline bool is_zero(std::int64_t v) { return v == 0; }
inline bool is_zero(const Integer& v) { return sgn(v) == 0; }

inline std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline Integer gcd_of(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// v <- m1 * v - m2 * b
inline void axpy(std::span<std::int64_t> v, std::int64_t m1, std::int64_t m2,
                 std::span<const std::int64_t> b) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = Checked::sub(Checked::mul(m1, v[i]), Checked::mul(m2, b[i]));
    }
}
inline void axpy(std::span<Integer> v, const Integer& m1, const Integer& m2,
                 std::span<const Integer> b) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = m1 * v[i] - m2 * b[i];
}

template <class Int>
void make_primitive(std::span<Int> v) {
    Int g = 0;
    for (const auto& x : v) {
        if (!is_zero(x)) g = gcd_of(g, x);
    }
    if (is_zero(g) || g == 1) return;
    for (auto& x : v) x /= g;
}

}  // namespace

template <class Int>
bool RationalEchelon<Int>::insert(std::span<const Int> row) {
    if (row.size() != width_) throw InvalidArgument("linalg", "row width mismatch");
    scratch_.assign(row.begin(), row.end());
    std::span<Int> v(scratch_);
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        const std::size_t c = pivots_[k];
        if (is_zero(v[c])) continue;
        std::span<const Int> b(rows_.data() + k * width_, width_);
        const Int g = gcd_of(b[c], v[c]);
        const Int m1 = b[c] / g;
        const Int m2 = v[c] / g;
        axpy(v, m1, m2, b);
        make_primitive(v);
    }
    std::size_t pivot = width_;
    for (std::size_t c = 0; c < width_; ++c) {
        if (!is_zero(v[c])) {
            pivot = c;
            break;
        }
    }
    if (pivot == width_) return false;
    make_primitive(v);
    rows_.insert(rows_.end(), scratch_.begin(), scratch_.end());
    pivots_.push_back(pivot);
    return true;
}

template <class Int>
void RationalEchelon<Int>::pop() {
    if (pivots_.empty()) return;
    pivots_.pop_back();
    rows_.resize(pivots_.size() * width_);
}

template <class Int>
void RationalEchelon<Int>::clear() {
    pivots_.clear();
    rows_.clear();
}

template class RationalEchelon<std::int64_t>;
template class RationalEchelon<Integer>;

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        const std::int64_t quotient = r / new_r;
        t = std::exchange(new_t, t - quotient * new_t);
        r = std::exchange(new_r, r - quotient * new_r);
    }
    if (r != 1) throw InvalidArgument("linalg", "element not invertible modulo p");
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

bool ModularEchelon::insert(std::span<const std::uint32_t> row) {
    if (row.size() != width_) throw InvalidArgument("linalg", "row width mismatch");
    scratch_.assign(row.begin(), row.end());
    const std::uint64_t p = p_;
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        const std::size_t c = pivots_[k];
        const std::uint64_t factor = scratch_[c];
        if (factor == 0) continue;
        const std::uint32_t* b = rows_.data() + k * width_;
        for (std::size_t i = 0; i < width_; ++i) {
            scratch_[i] = static_cast<std::uint32_t>((scratch_[i] + (p - factor) * b[i]) % p);
        }
    }
    std::size_t pivot = width_;
    for (std::size_t c = 0; c < width_; ++c) {
        if (scratch_[c] != 0) {
            pivot = c;
            break;
        }
    }
    if (pivot == width_) return false;
    const std::uint64_t inv = inverse_mod(scratch_[pivot], p_);
    for (auto& x : scratch_) x = static_cast<std::uint32_t>(x * inv % p);
    rows_.insert(rows_.end(), scratch_.begin(), scratch_.end());
    pivots_.push_back(pivot);
    return true;
}

void ModularEchelon::pop() {
    if (pivots_.empty()) return;
    pivots_.pop_back();
    rows_.resize(pivots_.size() * width_);
}

void ModularEchelon::clear() {
    pivots_.clear();
    rows_.clear();
}

std::vector<Integer> primitive_integer_row(std::span<const Rational> row) {
    Integer lcm = 1;
    for (const auto& x : row) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    }
    std::vector<Integer> out;
    out.reserve(row.size());
    Integer g = 0;
    for (const auto& x : row) {
        Integer v = x.get_num() * (lcm / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    if (g > 1) {
        for (auto& v : out) v /= g;
    }
    return out;
}

bool fits_small(std::span<const Integer> row) {
    for (const auto& x : row) {
        if (abs(x) >= (Integer(1) << 31)) return false;
    }
    return true;
}

std::size_t rank(const std::vector<std::vector<Rational>>& rows, std::size_t width) {
    RationalEchelon<Integer> echelon(width);
    for (const auto& row : rows) {
        if (row.size() != width) throw InvalidArgument("linalg", "row width mismatch");
        const auto integral = primitive_integer_row(row);
        echelon.insert(integral);
        if (echelon.rank() == width) break;
    }
    return echelon.rank();
}

}  // namespace symtutte::linalg
