#include "lapn/field.hpp"

#include <string>

#include "lapn/error.hpp"
#include "lapn/numtheory.hpp"

namespace lapn {

const char* to_string(SijClass c) {
    switch (c) {
    case SijClass::S00: return "S00";
    case SijClass::S01: return "S01";
    case SijClass::S10: return "S10";
    case SijClass::S11: return "S11";
    case SijClass::Zero: return "Zero";
    case SijClass::MinusOne: return "MinusOne";
    }
    return "?";
}

poly::Poly smallest_irreducible(std::uint64_t p, unsigned n) {
    // coeffs[0..n-1] is the candidate tail; coeffs[n] = 1 is the leading term.
    poly::Poly coeffs(n + 1, 0);
    coeffs[n] = 1;
    if (n > 1) coeffs[0] = 1;  // x | f otherwise
    for (;;) {
        if (poly::is_irreducible(coeffs, p)) return coeffs;
        // Advance in lexicographic order with c_0 most significant.
        int i = static_cast<int>(n) - 1;
        while (i >= 0 && coeffs[i] == p - 1) {
            coeffs[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++coeffs[i];
    }
    throw Error(ErrorCode::BadDegree, "no irreducible polynomial found");
}

Field Field::make(std::uint64_t p, unsigned n, Acceleration accel) {
    if (n < 1) throw Error(ErrorCode::BadDegree, "extension degree must be >= 1");
    if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
    if (!nt::is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
    auto q = nt::checked_pow(p, n);
    if (!q) throw Error(ErrorCode::Overflow, "field order p^n must be below 2^63");

    Field f;
    f.p_ = p;
    f.n_ = n;
    f.q_ = *q;
    f.powers_.resize(n);
    std::uint64_t pw = 1;
    for (unsigned i = 0; i < n; ++i) {
        f.powers_[i] = pw;
        if (i + 1 < n) pw *= p;
    }
    if (n > 1) f.modulus_ = smallest_irreducible(p, n);
    f.find_generator();
    if (accel == Acceleration::Auto && f.q_ <= kTableLimit) f.build_tables();
    return f;
}

Elt Field::from_int(std::int64_t k) const {
    const auto sp = static_cast<std::int64_t>(p_);
    std::int64_t r = k % sp;
    if (r < 0) r += sp;
    return Elt{static_cast<std::uint64_t>(r)};
}

Elt Field::add(Elt a, Elt b) const {
    if (n_ == 1) {
        std::uint64_t s = a.value() + b.value();
        return Elt{s >= p_ ? s - p_ : s};
    }
    if (tables_) return sub_zech(a, neg(b));
    return add_digits(a, b);
}

Elt Field::sub(Elt a, Elt b) const {
    if (n_ == 1) {
        return Elt{a.value() >= b.value() ? a.value() - b.value() : a.value() + p_ - b.value()};
    }
    if (tables_) return sub_zech(a, b);
    return sub_digits(a, b);
}

Elt Field::neg(Elt a) const {
    if (a.value() == 0) return a;
    if (n_ == 1) return Elt{p_ - a.value()};
    if (tables_) {
        const auto& t = *tables_;
        return Elt{t.exp[t.log[a.value()] + order() / 2]};
    }
    return sub_digits(zero(), a);
}

// a - b = a (1 - b/a), with log(1 - g^t) read from the Zech table.
Elt Field::sub_zech(Elt a, Elt b) const {
    if (b.value() == 0) return a;
    if (a.value() == 0) return neg(b);
    const auto& t = *tables_;
    const std::uint64_t la = t.log[a.value()];
    const std::uint64_t lb = t.log[b.value()];
    if (la == lb) return zero();
    const std::uint64_t shift = lb >= la ? lb - la : lb + order() - la;
    return Elt{t.exp[la + t.zech[shift]]};
}

Elt Field::add_digits(Elt a, Elt b) const {
    std::uint64_t x = a.value(), y = b.value(), r = 0;
    for (unsigned i = 0; i < n_; ++i) {
        std::uint64_t s = x % p_ + y % p_;
        if (s >= p_) s -= p_;
        r += s * powers_[i];
        x /= p_;
        y /= p_;
    }
    return Elt{r};
}

Elt Field::sub_digits(Elt a, Elt b) const {
    std::uint64_t x = a.value(), y = b.value(), r = 0;
    for (unsigned i = 0; i < n_; ++i) {
        std::uint64_t dx = x % p_, dy = y % p_;
        r += (dx >= dy ? dx - dy : dx + p_ - dy) * powers_[i];
        x /= p_;
        y /= p_;
    }
    return Elt{r};
}

Elt Field::mul(Elt a, Elt b) const {
    if (a.value() == 0 || b.value() == 0) return zero();
    if (tables_) {
        const auto& t = *tables_;
        return Elt{t.exp[t.log[a.value()] + t.log[b.value()]]};
    }
    return mul_direct(a, b);
}

Elt Field::mul_direct(Elt a, Elt b) const {
    if (n_ == 1) return Elt{nt::mulmod(a.value(), b.value(), p_)};
    // Schoolbook product of the coefficient vectors, then reduction by the
    // monic modulus from the top down.
    std::array<std::uint64_t, 64> x{}, y{};
    std::array<std::uint64_t, 128> prod{};
    std::uint64_t av = a.value(), bv = b.value();
    for (unsigned i = 0; i < n_; ++i) {
        x[i] = av % p_;
        av /= p_;
        y[i] = bv % p_;
        bv /= p_;
    }
    for (unsigned i = 0; i < n_; ++i) {
        if (x[i] == 0) continue;
        for (unsigned j = 0; j < n_; ++j) {
            prod[i + j] = (prod[i + j] + nt::mulmod(x[i], y[j], p_)) % p_;
        }
    }
    for (unsigned k = 2 * n_ - 2; k >= n_; --k) {
        const std::uint64_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (unsigned j = 0; j < n_; ++j) {
            const std::uint64_t t = nt::mulmod(c, modulus_[j], p_);
            prod[k - n_ + j] = (prod[k - n_ + j] + p_ - t) % p_;
        }
    }
    std::uint64_t r = 0;
    for (unsigned i = 0; i < n_; ++i) r += prod[i] * powers_[i];
    return Elt{r};
}

Elt Field::inv(Elt a) const {
    if (a.value() == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    if (tables_) {
        const auto& t = *tables_;
        const std::uint32_t l = t.log[a.value()];
        return Elt{t.exp[l == 0 ? 0 : order() - l]};
    }
    return pow_direct(a, q_ - 2);
}

Elt Field::pow(Elt x, std::uint64_t e) const {
    if (!tables_) return pow_direct(x, e);
    if (x.value() == 0) return e == 0 ? one() : zero();
    const auto& t = *tables_;
    const std::uint64_t l = nt::mulmod(t.log[x.value()], e % order(), order());
    return Elt{t.exp[l]};
}

Elt Field::pow_square_multiply(Elt x, std::uint64_t e) const { return pow_direct(x, e); }

Elt Field::pow_direct(Elt x, std::uint64_t e) const {
    if (x.value() == 0) return e == 0 ? one() : zero();
    e %= order();
    Elt result = one();
    Elt base = x;
    while (e > 0) {
        if (e & 1) result = mul_direct(result, base);
        e >>= 1;
        if (e > 0) base = mul_direct(base, base);
    }
    return result;
}

int Field::chi(Elt x) const {
    if (tables_) return tables_->chi[x.value()];
    if (x.value() == 0) return 0;
    return pow_direct(x, (q_ - 1) / 2) == one() ? 1 : -1;
}

Elt Field::chi_elt(Elt x) const {
    switch (chi(x)) {
    case 1: return one();
    case -1: return minus_one();
    default: return zero();
    }
}

SijClass Field::classify(Elt x) const {
    if (x.value() == 0) return SijClass::Zero;
    if (x == minus_one()) return SijClass::MinusOne;
    const int i = chi(x) == 1 ? 0 : 1;
    const int j = chi(add(x, one())) == 1 ? 0 : 1;
    return static_cast<SijClass>(2 * i + j);
}

SijSizes Field::sij_sizes() const {
    SijSizes s;
    for (std::uint64_t v = 0; v < q_; ++v) {
        switch (classify(Elt{v})) {
        case SijClass::S00: ++s.s00; break;
        case SijClass::S01: ++s.s01; break;
        case SijClass::S10: ++s.s10; break;
        case SijClass::S11: ++s.s11; break;
        case SijClass::Zero: ++s.zero; break;
        case SijClass::MinusOne: ++s.minus_one; break;
        }
    }
    return s;
}

std::vector<std::uint64_t> Field::decode(Elt x) const {
    std::vector<std::uint64_t> c(n_);
    std::uint64_t v = x.value();
    for (unsigned i = 0; i < n_; ++i) {
        c[i] = v % p_;
        v /= p_;
    }
    return c;
}

Elt Field::encode(std::span<const std::uint64_t> coeffs) const {
    std::uint64_t r = 0;
    for (unsigned i = 0; i < n_ && i < coeffs.size(); ++i) r += (coeffs[i] % p_) * powers_[i];
    return Elt{r};
}

void Field::find_generator() {
    if (q_ == 3) {
        generator_ = Elt{2};
        return;
    }
    const auto factors = nt::prime_factors(order());
    for (std::uint64_t v = 2; v < q_; ++v) {
        bool primitive = true;
        for (std::uint64_t l : factors) {
            if (pow_direct(Elt{v}, order() / l) == one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            generator_ = Elt{v};
            return;
        }
    }
}

void Field::build_tables() {
    auto t = std::make_shared<Tables>();
    const std::uint64_t m = order();
    t->log.assign(q_, 0);
    t->exp.assign(2 * m, 0);
    t->chi.assign(q_, 0);
    Elt x = one();
    for (std::uint64_t i = 0; i < m; ++i) {
        t->exp[i] = static_cast<std::uint32_t>(x.value());
        t->exp[i + m] = t->exp[i];
        t->log[x.value()] = static_cast<std::uint32_t>(i);
        t->chi[x.value()] = (i % 2 == 0) ? 1 : -1;
        x = mul_direct(x, generator_);
    }
    if (n_ > 1) {
        t->zech.assign(m, 0);
        for (std::uint64_t i = 1; i < m; ++i) {
            t->zech[i] = t->log[sub_digits(one(), Elt{t->exp[i]}).value()];
        }
    }
    tables_ = std::move(t);
}

} // namespace lapn
