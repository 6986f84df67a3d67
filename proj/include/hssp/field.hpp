#pragma once

// Exact arithmetic over F_q, q = p^k <= 2^16.  Elements are encoded as
// integers in [0, q): the code of an element with power-basis coordinates
// (c_0, ..., c_{k-1}) is sum c_i p^i.  This encoding doubles as the canonical
// total order used everywhere a deterministic representative is needed.

#include <cstdint>
#include <memory>
#include <numeric>
#include <vector>

#include "hssp/errors.hpp"

namespace hssp {

constexpr int kMaxFieldSize = 1 << 16;

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

class Field {
public:
    // Deterministic construction: the modulus is the lexicographically
    // smallest monic irreducible of degree k over F_p (constant coefficient
    // most significant in the ordering), so the same (p, k) always yields the
    // same field.
    Field(int p, int k) : p_(p), k_(k) {
        if (!is_prime(p)) throw NotPrimeError("field characteristic must be prime: " + std::to_string(p));
        if (k < 1) throw TooLargeError("extension degree must be >= 1");
        long long q = 1;
        for (int i = 0; i < k; ++i) {
            q *= p;
            if (q > kMaxFieldSize) throw TooLargeError("field size exceeds 2^16");
        }
        q_ = static_cast<int>(q);
        modulus_ = find_modulus();
        build_tables();
    }

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }

    // Monic irreducible modulus, coefficient list lowest degree first,
    // length k+1.  For k = 1 this is [0, 1] (the polynomial x).
    const std::vector<int>& modulus() const { return modulus_; }

    int zero() const { return 0; }
    int one() const { return k_ == 0 ? 0 : 1; }

    std::vector<int> coords(int a) const {
        check(a);
        std::vector<int> c(k_);
        for (int i = 0; i < k_; ++i) { c[i] = a % p_; a /= p_; }
        return c;
    }
    int from_coords(const std::vector<int>& c) const {
        int a = 0;
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) a = a * p_ + mod_p(c[i]);
        check(a);
        return a;
    }
    // Embedding of integers via the prime subfield.
    int from_int(long long n) const { return static_cast<int>(((n % p_) + p_) % p_); }

    int add(int a, int b) const {
        check(a); check(b);
        int r = 0, mult = 1;
        for (int i = 0; i < k_; ++i) {
            int da = a % p_, db = b % p_;
            int s = da + db; if (s >= p_) s -= p_;
            r += s * mult;
            a /= p_; b /= p_; mult *= p_;
        }
        return r;
    }
    int neg(int a) const { check(a); return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }

    int mul(int a, int b) const {
        check(a); check(b);
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }
    int inv(int a) const {
        check(a);
        if (a == 0) throw DivisionByZeroError("inverse of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    int div(int a, int b) const { return mul(a, inv(b)); }

    int pow(int a, long long e) const {
        check(a);
        if (a == 0) return e == 0 ? one() : 0;
        long long le = log_[a] * (e % (q_ - 1));
        le %= (q_ - 1);
        if (le < 0) le += q_ - 1;
        return exp_[le];
    }

    // Order of a in the multiplicative group; a != 0.
    int mult_order(int a) const {
        if (a == 0) throw DivisionByZeroError("order of zero");
        int n = q_ - 1, l = log_[a];
        return n / std::gcd(n, l == 0 ? n : l);
    }

    bool same(const Field& other) const {
        return p_ == other.p_ && k_ == other.k_;
    }

private:
    int p_, k_, q_;
    std::vector<int> modulus_;
    std::vector<int> exp_, log_, neg_;

    void check(int a) const {
        if (a < 0 || a >= q_) throw FieldMismatchError("element code out of range");
    }
    int mod_p(int c) const { return ((c % p_) + p_) % p_; }

    // Polynomial helpers on raw coefficient vectors over F_p (used only
    // during construction, before the log tables exist).
    static std::vector<int> pmul_mod(const std::vector<int>& a, const std::vector<int>& b,
                                     const std::vector<int>& mod, int p) {
        std::vector<int> r(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j)
                r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        // reduce by the monic modulus
        int deg = static_cast<int>(mod.size()) - 1;
        for (int i = static_cast<int>(r.size()) - 1; i >= deg; --i) {
            int c = r[i];
            if (c == 0) continue;
            for (int j = 0; j <= deg; ++j) {
                int idx = i - deg + j;
                r[idx] = ((r[idx] - c * mod[j]) % p + p) % p;
            }
        }
        r.resize(deg);
        return r;
    }

    static bool divides(const std::vector<int>& d, std::vector<int> f, int p) {
        // monic d; returns true if d | f over F_p
        int dd = static_cast<int>(d.size()) - 1;
        for (int i = static_cast<int>(f.size()) - 1; i >= dd; --i) {
            int c = f[i];
            if (c == 0) continue;
            for (int j = 0; j <= dd; ++j) {
                int idx = i - dd + j;
                f[idx] = ((f[idx] - c * d[j]) % p + p) % p;
            }
        }
        for (int i = 0; i < dd; ++i)
            if (f[i] != 0) return false;
        return true;
    }

    bool irreducible(const std::vector<int>& f) const {
        // exhaustive trial division by monic polynomials of degree 1..k/2
        int deg = static_cast<int>(f.size()) - 1;
        for (int d = 1; 2 * d <= deg; ++d) {
            long long count = 1;
            for (int i = 0; i < d; ++i) count *= p_;
            for (long long code = 0; code < count; ++code) {
                std::vector<int> g(d + 1, 0);
                long long c = code;
                for (int i = 0; i < d; ++i) { g[i] = static_cast<int>(c % p_); c /= p_; }
                g[d] = 1;
                if (divides(g, f, p_)) return false;
            }
        }
        return true;
    }

    std::vector<int> find_modulus() const {
        if (k_ == 1) return {0, 1};
        // iterate (c_0, ..., c_{k-1}) in lexicographic order, c_0 major
        std::vector<int> c(k_, 0);
        for (;;) {
            std::vector<int> f(c);
            f.push_back(1);
            if (irreducible(f)) return f;
            int i = k_ - 1;
            while (i >= 0 && c[i] == p_ - 1) c[i--] = 0;
            if (i < 0) throw Error("no irreducible modulus found");  // unreachable
            ++c[i];
        }
    }

    void build_tables() {
        neg_.resize(q_);
        for (int a = 0; a < q_; ++a) {
            int r = 0, mult = 1, x = a;
            for (int i = 0; i < k_; ++i) {
                int d = x % p_;
                r += (d == 0 ? 0 : p_ - d) * mult;
                x /= p_; mult *= p_;
            }
            neg_[a] = r;
        }
        // discrete log tables via a multiplicative generator
        exp_.assign(q_ - 1, 0);
        log_.assign(q_, -1);
        for (int g = 1; g < q_; ++g) {
            std::vector<int> gc(k_);
            { int x = g; for (int i = 0; i < k_; ++i) { gc[i] = x % p_; x /= p_; } }
            std::vector<int> acc(k_, 0);
            acc[0] = 1;
            int steps = 0;
            bool ok = true;
            std::vector<int> seen_log(q_, -1);
            std::vector<int> seen_exp;
            seen_exp.reserve(q_ - 1);
            for (;;) {
                int code = 0;
                for (int i = k_ - 1; i >= 0; --i) code = code * p_ + acc[i];
                if (seen_log[code] != -1) { ok = (steps == q_ - 1); break; }
                seen_log[code] = steps;
                seen_exp.push_back(code);
                acc = pmul_mod(acc, gc, modulus_, p_);
                ++steps;
                if (steps > q_ - 1) { ok = false; break; }
            }
            if (ok && static_cast<int>(seen_exp.size()) == q_ - 1) {
                exp_ = std::move(seen_exp);
                for (int e = 0; e < q_ - 1; ++e) log_[exp_[e]] = e;
                return;
            }
        }
        throw Error("no multiplicative generator found");  // unreachable
    }
};

using FieldPtr = std::shared_ptr<const Field>;

inline FieldPtr field_make(int p, int k) { return std::make_shared<const Field>(p, k); }

}  // namespace hssp
