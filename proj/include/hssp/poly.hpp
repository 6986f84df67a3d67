#pragma once

// Univariate and multivariate polynomials over F_q.  Univariate coefficients
// are stored lowest degree first with trailing zeros stripped; multivariate
// polynomials are sparse term maps with exponents reduced mod x_i^q - x_i.

#include <algorithm>
#include <map>
#include <vector>

#include "hssp/field.hpp"

namespace hssp {

class FieldPoly {
public:
    FieldPoly() = default;
    explicit FieldPoly(FieldPtr f) : field_(std::move(f)) {}
    FieldPoly(FieldPtr f, std::vector<int> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
        strip();
    }

    const FieldPtr& field() const { return field_; }
    const std::vector<int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    int coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : 0; }

    int eval(int x) const {
        const Field& F = *field_;
        int r = 0;
        for (int i = degree(); i >= 0; --i) r = F.add(F.mul(r, x), c_[i]);
        return r;
    }

    FieldPoly add(const FieldPoly& o) const {
        require_same(o);
        const Field& F = *field_;
        std::vector<int> r(std::max(c_.size(), o.c_.size()), 0);
        for (size_t i = 0; i < r.size(); ++i) r[i] = F.add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
        return FieldPoly(field_, std::move(r));
    }
    FieldPoly neg() const {
        std::vector<int> r(c_);
        for (int& x : r) x = field_->neg(x);
        return FieldPoly(field_, std::move(r));
    }
    FieldPoly sub(const FieldPoly& o) const { return add(o.neg()); }
    FieldPoly scale(int s) const {
        std::vector<int> r(c_);
        for (int& x : r) x = field_->mul(x, s);
        return FieldPoly(field_, std::move(r));
    }

    // Q(x - t): the shift automorphism a_t.
    FieldPoly shift(int t) const {
        const Field& F = *field_;
        FieldPoly result(field_);
        // expand sum c_i (x - t)^i via binomials
        std::vector<int> pw{F.one()};  // (x-t)^i coefficients
        std::vector<int> acc;
        int mt = F.neg(t);
        for (int i = 0; i <= degree(); ++i) {
            if (c_[i] != 0) {
                if (acc.size() < pw.size()) acc.resize(pw.size(), 0);
                for (size_t j = 0; j < pw.size(); ++j) acc[j] = F.add(acc[j], F.mul(c_[i], pw[j]));
            }
            // pw *= (x - t)
            std::vector<int> nx(pw.size() + 1, 0);
            for (size_t j = 0; j < pw.size(); ++j) {
                nx[j + 1] = F.add(nx[j + 1], pw[j]);
                nx[j] = F.add(nx[j], F.mul(mt, pw[j]));
            }
            pw = std::move(nx);
        }
        return FieldPoly(field_, std::move(acc));
    }

    FieldPoly drop_constant() const {
        std::vector<int> r(c_);
        if (!r.empty()) r[0] = 0;
        return FieldPoly(field_, std::move(r));
    }

    bool operator==(const FieldPoly& o) const { return c_ == o.c_; }

    // Code in [0, q^(d+1)): base-q digits are the coefficients.  Canonical
    // encoding used by the function graph groups.
    long long encode(int d) const {
        long long code = 0;
        for (int i = d; i >= 0; --i) code = code * field_->q() + coeff(i);
        return code;
    }
    static FieldPoly decode(const FieldPtr& f, long long code, int d) {
        std::vector<int> c(d + 1);
        for (int i = 0; i <= d; ++i) { c[i] = static_cast<int>(code % f->q()); code /= f->q(); }
        return FieldPoly(f, std::move(c));
    }

private:
    FieldPtr field_;
    std::vector<int> c_;

    void strip() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void require_same(const FieldPoly& o) const {
        if (!field_->same(*o.field_)) throw FieldMismatchError("polynomials over different fields");
    }
};

// points (x_i, y_i), pairwise distinct x_i, at least d+1 of them
inline FieldPoly lagrange_interpolate(const FieldPtr& f,
                                      const std::vector<std::pair<int, int>>& points, int d) {
    const Field& F = *f;
    if (static_cast<int>(points.size()) < d + 1) throw TooFewPointsError("need at least d+1 points");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw DuplicateAbscissaError("duplicate abscissa in interpolation");

    FieldPoly result(f);
    size_t m = static_cast<size_t>(d) + 1;
    for (size_t i = 0; i < m; ++i) {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        FieldPoly basis(f, {F.one()});
        int denom = F.one();
        for (size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            std::vector<int> lin{F.neg(points[j].first), F.one()};
            // basis *= (x - x_j)
            std::vector<int> nb(basis.coeffs().size() + 1, 0);
            for (size_t a = 0; a < basis.coeffs().size(); ++a)
                for (size_t b = 0; b < 2; ++b)
                    nb[a + b] = F.add(nb[a + b], F.mul(basis.coeffs()[a], lin[b]));
            basis = FieldPoly(f, std::move(nb));
            denom = F.mul(denom, F.sub(points[i].first, points[j].first));
        }
        result = result.add(basis.scale(F.div(points[i].second, denom)));
    }
    // the remaining points must lie on the curve
    for (size_t i = m; i < points.size(); ++i)
        if (result.eval(points[i].first) != points[i].second)
            throw InconsistentSystemError("points not on a degree-d polynomial");
    return result;
}

// Sparse multivariate polynomial, exponents reduced mod x_i^q - x_i at
// construction.  The constant term is kept; hidden-polynomial constructors
// strip it explicitly.
class MultiPoly {
public:
    using Exponent = std::vector<int>;

    MultiPoly() = default;
    MultiPoly(FieldPtr f, int nvars) : field_(std::move(f)), nvars_(nvars) {}

    const FieldPtr& field() const { return field_; }
    int nvars() const { return nvars_; }
    const std::map<Exponent, int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Exponent e, int coef) {
        if (static_cast<int>(e.size()) != nvars_) throw ArityMismatchError("exponent arity mismatch");
        reduce_exponent(e);
        int& slot = terms_[e];
        slot = field_->add(slot, coef);
        if (slot == 0) terms_.erase(e);
    }

    int coeff(const Exponent& e) const {
        Exponent r(e);
        reduce_exponent(r);
        auto it = terms_.find(r);
        return it == terms_.end() ? 0 : it->second;
    }

    int eval(const std::vector<int>& point) const {
        if (static_cast<int>(point.size()) != nvars_) throw ArityMismatchError("evaluation arity mismatch");
        const Field& F = *field_;
        int r = 0;
        for (const auto& [e, c] : terms_) {
            int t = c;
            for (int i = 0; i < nvars_; ++i) t = F.mul(t, F.pow(point[i], e[i]));
            r = F.add(r, t);
        }
        return r;
    }

    MultiPoly drop_constant() const {
        MultiPoly r(*this);
        r.terms_.erase(Exponent(nvars_, 0));
        return r;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    // true when o == s * this for a nonzero scalar s
    bool proportional_to(const MultiPoly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        if (terms_.empty()) return true;
        const Field& F = *field_;
        int s = -1;
        for (const auto& [e, c] : terms_) {
            int oc = o.coeff(e);
            if (oc == 0) return false;
            int ratio = F.div(oc, c);
            if (s == -1) s = ratio;
            else if (s != ratio) return false;
        }
        return true;
    }

private:
    FieldPtr field_;
    int nvars_ = 0;
    std::map<Exponent, int> terms_;

    void reduce_exponent(Exponent& e) const {
        int q = field_->q();
        for (int& x : e) {
            if (x >= q) x = (x - 1) % (q - 1) + 1;
        }
    }
};

}  // namespace hssp
