#include "lapn/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "lapn/numtheory.hpp"

namespace lapn::poly {

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
        if (f[i] != 0) return i;
    }
    return -1;
}

Poly add(const Poly& f, const Poly& g, std::uint64_t p) {
    Poly r(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t a = i < f.size() ? f[i] : 0;
        std::uint64_t b = i < g.size() ? g[i] : 0;
        r[i] = (a + b) % p;
    }
    trim(r);
    return r;
}

Poly sub(const Poly& f, const Poly& g, std::uint64_t p) {
    Poly r(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t a = i < f.size() ? f[i] : 0;
        std::uint64_t b = i < g.size() ? g[i] : 0;
        r[i] = (a + p - b) % p;
    }
    trim(r);
    return r;
}

Poly mul(const Poly& f, const Poly& g, std::uint64_t p) {
    if (f.empty() || g.empty()) return {};
    Poly r(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j) {
            r[i + j] = (r[i + j] + nt::mulmod(f[i], g[j], p)) % p;
        }
    }
    trim(r);
    return r;
}

namespace {

// Quotient and remainder in one pass; m must be nonzero.
std::pair<Poly, Poly> divmod(Poly f, const Poly& m, std::uint64_t p) {
    trim(f);
    const int dm = degree(m);
    if (dm < 0) throw std::domain_error("polynomial division by zero");
    const std::uint64_t lead_inv = nt::powmod(m[dm], p - 2, p);
    Poly quot;
    if (degree(f) >= dm) quot.assign(f.size() - dm, 0);
    for (int i = degree(f); i >= dm; --i) {
        std::uint64_t c = nt::mulmod(f[i], lead_inv, p);
        if (c == 0) continue;
        quot[i - dm] = c;
        for (int j = 0; j <= dm; ++j) {
            f[i - dm + j] = (f[i - dm + j] + p - nt::mulmod(c, m[j], p)) % p;
        }
    }
    trim(f);
    trim(quot);
    return {quot, f};
}

} // namespace

Poly mod(Poly f, const Poly& m, std::uint64_t p) {
    return divmod(std::move(f), m, p).second;
}

Poly div(const Poly& f, const Poly& g, std::uint64_t p) {
    return divmod(f, g, p).first;
}

Poly make_monic(Poly f, std::uint64_t p) {
    trim(f);
    if (f.empty()) return f;
    const std::uint64_t inv = nt::powmod(f.back(), p - 2, p);
    for (auto& c : f) c = nt::mulmod(c, inv, p);
    return f;
}

Poly gcd(Poly f, Poly g, std::uint64_t p) {
    trim(f);
    trim(g);
    while (!g.empty()) {
        Poly r = mod(f, g, p);
        f = std::move(g);
        g = std::move(r);
    }
    return make_monic(std::move(f), p);
}

Poly derivative(const Poly& f, std::uint64_t p) {
    if (f.size() <= 1) return {};
    Poly r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = nt::mulmod(f[i], i % p, p);
    trim(r);
    return r;
}

Poly powmod(Poly base, std::uint64_t exp, const Poly& m, std::uint64_t p) {
    Poly result = mod(Poly{1}, m, p);
    base = mod(std::move(base), m, p);
    while (exp > 0) {
        if (exp & 1) result = mod(mul(result, base, p), m, p);
        exp >>= 1;
        if (exp > 0) base = mod(mul(base, base, p), m, p);
    }
    return result;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
    const int n = degree(f);
    if (n < 1) return false;
    if (n == 1) return true;
    const Poly x{0, 1};
    Poly frob = x;  // x^{p^k} mod f
    for (int k = 1; k <= n / 2; ++k) {
        frob = powmod(frob, p, f, p);
        if (degree(gcd(f, sub(frob, x, p), p)) != 0) return false;
    }
    return true;
}

namespace {

// For f with f' = 0, f(x) = h(x^p) = h(x)^p over F_p.
Poly pth_root(const Poly& f, std::uint64_t p) {
    Poly h;
    for (std::size_t i = 0; i < f.size(); i += p) h.push_back(f[i]);
    trim(h);
    return h;
}

} // namespace

int distinct_root_count(const Poly& f_in, std::uint64_t p) {
    Poly f = make_monic(f_in, p);
    if (degree(f) <= 0) return 0;
    Poly df = derivative(f, p);
    if (df.empty()) return distinct_root_count(pth_root(f, p), p);

    Poly c = gcd(f, df, p);
    const Poly w = div(f, c, p);  // factors whose multiplicity is prime to p
    for (;;) {
        Poly g = gcd(c, w, p);
        if (degree(g) <= 0) break;
        c = div(c, g, p);
    }
    // What remains of c has every multiplicity divisible by p.
    int rest = degree(c) > 0 ? distinct_root_count(pth_root(c, p), p) : 0;
    return degree(w) + rest;
}

} // namespace lapn::poly
