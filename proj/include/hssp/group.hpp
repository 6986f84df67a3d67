#pragma once

// Semidirect products K ⋊ H with actions on finite sets, orbits,
// stabilizers, and the Galois connection between subgroups and partitions.
// Elements are pairs of integer codes into the two factor groups; the
// canonical total order on group elements is the encoding
// k * |H| + h, used wherever a deterministic representative is needed.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <unordered_set>
#include <vector>

#include "hssp/field.hpp"
#include "hssp/poly.hpp"

namespace hssp {

struct GroupElem {
    long long k = 0;
    int h = 0;
    bool operator==(const GroupElem& o) const { return k == o.k && h == o.h; }
    bool operator!=(const GroupElem& o) const { return !(*this == o); }
};

class Group {
public:
    virtual ~Group() = default;

    virtual long long k_size() const = 0;
    virtual int h_size() const = 0;
    virtual long long k_op(long long a, long long b) const = 0;
    virtual long long k_inv(long long a) const = 0;
    virtual int h_op(int a, int b) const = 0;
    virtual int h_inv(int a) const = 0;
    // phi_h(k'), the automorphism of K induced by h
    virtual long long twist(int h, long long k) const = 0;

    long long order() const { return k_size() * h_size(); }
    GroupElem identity() const { return {0, 0}; }

    // (k,h)(k',h') = (k * phi_h(k'), h h')
    GroupElem mul(const GroupElem& a, const GroupElem& b) const {
        return {k_op(a.k, twist(a.h, b.k)), h_op(a.h, b.h)};
    }
    GroupElem inv(const GroupElem& a) const {
        int hi = h_inv(a.h);
        return {twist(hi, k_inv(a.k)), hi};
    }
    GroupElem conj(const GroupElem& x, const GroupElem& g) const {  // x g x^-1
        return mul(mul(x, g), inv(x));
    }

    long long encode(const GroupElem& e) const { return e.k * h_size() + e.h; }
    GroupElem decode(long long code) const { return {code / h_size(), static_cast<int>(code % h_size())}; }

    // Exhaustive check of the automorphism/homomorphism laws; desk scale.
    bool verify_semidirect() const {
        long long K = k_size();
        int H = h_size();
        for (int h = 0; h < H; ++h) {
            if (twist(h, 0) != 0) return false;
            for (long long a = 0; a < K; ++a)
                for (long long b = 0; b < K; ++b)
                    if (twist(h, k_op(a, b)) != k_op(twist(h, a), twist(h, b))) return false;
        }
        for (int h1 = 0; h1 < H; ++h1)
            for (int h2 = 0; h2 < H; ++h2)
                for (long long a = 0; a < K; ++a)
                    if (twist(h_op(h1, h2), a) != twist(h1, twist(h2, a))) return false;
        return true;
    }
};

using GroupPtr = std::shared_ptr<const Group>;

// Aff_q(H) = F_q ⋊ H for a subgroup H of the multiplicative group.
// Elements (b, a) act on F_q by x -> a x + b.
class AffineGroup : public Group {
public:
    AffineGroup(FieldPtr f, std::vector<int> h_elems) : field_(std::move(f)), h_(std::move(h_elems)) {
        std::sort(h_.begin(), h_.end());
        h_.erase(std::unique(h_.begin(), h_.end()), h_.end());
        const Field& F = *field_;
        h_index_.assign(F.q(), -1);
        for (size_t i = 0; i < h_.size(); ++i) {
            if (h_[i] == 0) throw DomainMismatchError("0 is not in the multiplicative group");
            h_index_[h_[i]] = static_cast<int>(i);
        }
        for (int a : h_)
            for (int b : h_)
                if (h_index_[F.mul(a, b)] < 0)
                    throw DomainMismatchError("H is not closed under multiplication");
        if (h_index_[F.one()] < 0) throw DomainMismatchError("H does not contain 1");
        // reorder so h = 0 is the identity
        std::swap(h_[0], h_[h_index_[F.one()]]);
        for (size_t i = 0; i < h_.size(); ++i) h_index_[h_[i]] = static_cast<int>(i);
    }

    const FieldPtr& field() const { return field_; }
    int h_value(int h) const { return h_[h]; }
    const std::vector<int>& h_values() const { return h_; }

    long long k_size() const override { return field_->q(); }
    int h_size() const override { return static_cast<int>(h_.size()); }
    long long k_op(long long a, long long b) const override {
        return field_->add(static_cast<int>(a), static_cast<int>(b));
    }
    long long k_inv(long long a) const override { return field_->neg(static_cast<int>(a)); }
    int h_op(int a, int b) const override { return h_index_[field_->mul(h_[a], h_[b])]; }
    int h_inv(int a) const override { return h_index_[field_->inv(h_[a])]; }
    long long twist(int h, long long k) const override {
        return field_->mul(h_[h], static_cast<int>(k));
    }

    GroupElem make(int b, int a_value) const {
        int idx = h_index_[a_value];
        if (idx < 0) throw DomainMismatchError("value not in H");
        return {b, idx};
    }

private:
    FieldPtr field_;
    std::vector<int> h_;       // multiplicative values, identity first
    std::vector<int> h_index_;  // value -> code
};

inline std::shared_ptr<const AffineGroup> make_affine(const FieldPtr& f, std::vector<int> h_values) {
    return std::make_shared<const AffineGroup>(f, std::move(h_values));
}
inline std::shared_ptr<const AffineGroup> make_full_affine(const FieldPtr& f) {
    std::vector<int> h;
    for (int a = 1; a < f->q(); ++a) h.push_back(a);
    return make_affine(f, std::move(h));
}
inline std::shared_ptr<const AffineGroup> make_affine_pm1(const FieldPtr& f) {
    return make_affine(f, {f->one(), f->neg(f->one())});
}

// Fg(F_q^(d)[x]) = polynomials of degree <= d under addition, extended by the
// shift maps a_t : Q(x) -> Q(x - t).  K codes are base-q digit encodings of
// the coefficient vector; H codes are elements of the additive group F_q.
class FunctionGraphGroup : public Group {
public:
    FunctionGraphGroup(FieldPtr f, int d) : field_(std::move(f)), d_(d) {
        const Field& F = *field_;
        ksize_ = 1;
        for (int i = 0; i <= d_; ++i) {
            ksize_ *= F.q();
            if (ksize_ > (1LL << 40)) throw TooLargeError("function graph group too large");
        }
        // precompute the shift matrices: coefficient vectors of (x - t)^i
        shift_.resize(F.q());
        for (int t = 0; t < F.q(); ++t) {
            auto& m = shift_[t];
            m.assign(d_ + 1, std::vector<int>(d_ + 1, 0));
            std::vector<int> pw{F.one()};
            int mt = F.neg(t);
            for (int i = 0; i <= d_; ++i) {
                for (size_t j = 0; j < pw.size(); ++j) m[i][j] = pw[j];
                std::vector<int> nx(pw.size() + 1, 0);
                for (size_t j = 0; j < pw.size(); ++j) {
                    nx[j + 1] = F.add(nx[j + 1], pw[j]);
                    nx[j] = F.add(nx[j], F.mul(mt, pw[j]));
                }
                pw = std::move(nx);
            }
        }
    }

    const FieldPtr& field() const { return field_; }
    int degree_bound() const { return d_; }

    long long k_size() const override { return ksize_; }
    int h_size() const override { return field_->q(); }
    long long k_op(long long a, long long b) const override {
        const Field& F = *field_;
        long long r = 0, mult = 1;
        for (int i = 0; i <= d_; ++i) {
            r += static_cast<long long>(F.add(static_cast<int>(a % F.q()), static_cast<int>(b % F.q()))) * mult;
            a /= F.q(); b /= F.q(); mult *= F.q();
        }
        return r;
    }
    long long k_inv(long long a) const override {
        const Field& F = *field_;
        long long r = 0, mult = 1;
        for (int i = 0; i <= d_; ++i) {
            r += static_cast<long long>(F.neg(static_cast<int>(a % F.q()))) * mult;
            a /= F.q(); mult *= F.q();
        }
        return r;
    }
    int h_op(int a, int b) const override { return field_->add(a, b); }
    int h_inv(int a) const override { return field_->neg(a); }
    long long twist(int t, long long k) const override {
        const Field& F = *field_;
        std::vector<int> c(d_ + 1);
        for (int i = 0; i <= d_; ++i) { c[i] = static_cast<int>(k % F.q()); k /= F.q(); }
        const auto& m = shift_[t];
        long long r = 0, mult = 1;
        for (int j = 0; j <= d_; ++j) {
            int acc = 0;
            for (int i = j; i <= d_; ++i) acc = F.add(acc, F.mul(c[i], m[i][j]));
            r += static_cast<long long>(acc) * mult;
            mult *= F.q();
        }
        return r;
    }

    FieldPoly poly_of(long long k) const { return FieldPoly::decode(field_, k, d_); }
    long long code_of(const FieldPoly& p) const {
        if (p.degree() > d_) throw DomainMismatchError("polynomial degree exceeds group bound");
        return p.encode(d_);
    }
    GroupElem make(const FieldPoly& p, int t) const { return {code_of(p), t}; }

private:
    FieldPtr field_;
    int d_;
    long long ksize_;
    std::vector<std::vector<std::vector<int>>> shift_;  // t -> (x-t)^i coeff rows
};

inline std::shared_ptr<const FunctionGraphGroup> make_function_graph(const FieldPtr& f, int d) {
    return std::make_shared<const FunctionGraphGroup>(f, d);
}

// Z_p^m ⋊ Z_p where the generator of Z_p acts by an m x m matrix A with A^p = I.
class ZpmZpGroup : public Group {
public:
    ZpmZpGroup(int p, int m, std::vector<std::vector<int>> a)
        : p_(p), m_(m), a_(std::move(a)) {
        if (!is_prime(p_)) throw NotPrimeError("Z_p^m ⋊ Z_p requires prime p");
        ksize_ = 1;
        for (int i = 0; i < m_; ++i) ksize_ *= p_;
        // powers A^0 .. A^{p-1}, and validate A^p = I
        apow_.push_back(identity_matrix());
        for (int j = 1; j <= p_; ++j) apow_.push_back(mat_mul(apow_.back(), a_));
        if (apow_[p_] != apow_[0]) throw DomainMismatchError("A^p != I");
        apow_.pop_back();
    }

    int p() const { return p_; }
    int m() const { return m_; }
    const std::vector<std::vector<int>>& a_matrix() const { return a_; }
    const std::vector<std::vector<int>>& a_power(int j) const { return apow_[j % p_]; }

    long long k_size() const override { return ksize_; }
    int h_size() const override { return p_; }
    long long k_op(long long a, long long b) const override {
        long long r = 0, mult = 1;
        for (int i = 0; i < m_; ++i) {
            r += ((a % p_ + b % p_) % p_) * mult;
            a /= p_; b /= p_; mult *= p_;
        }
        return r;
    }
    long long k_inv(long long a) const override {
        long long r = 0, mult = 1;
        for (int i = 0; i < m_; ++i) {
            long long d = a % p_;
            r += ((p_ - d) % p_) * mult;
            a /= p_; mult *= p_;
        }
        return r;
    }
    int h_op(int a, int b) const override { return (a + b) % p_; }
    int h_inv(int a) const override { return (p_ - a) % p_; }
    long long twist(int h, long long k) const override {
        return encode_vec(mat_apply(apow_[h], decode_vec(k)));
    }

    std::vector<int> decode_vec(long long k) const {
        std::vector<int> v(m_);
        for (int i = 0; i < m_; ++i) { v[i] = static_cast<int>(k % p_); k /= p_; }
        return v;
    }
    long long encode_vec(const std::vector<int>& v) const {
        long long r = 0;
        for (int i = m_ - 1; i >= 0; --i) r = r * p_ + (v[i] % p_ + p_) % p_;
        return r;
    }

private:
    int p_, m_;
    std::vector<std::vector<int>> a_;
    std::vector<std::vector<std::vector<int>>> apow_;
    long long ksize_;

    std::vector<std::vector<int>> identity_matrix() const {
        std::vector<std::vector<int>> id(m_, std::vector<int>(m_, 0));
        for (int i = 0; i < m_; ++i) id[i][i] = 1;
        return id;
    }
    std::vector<std::vector<int>> mat_mul(const std::vector<std::vector<int>>& x,
                                          const std::vector<std::vector<int>>& y) const {
        std::vector<std::vector<int>> r(m_, std::vector<int>(m_, 0));
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j) {
                int s = 0;
                for (int l = 0; l < m_; ++l) s = (s + x[i][l] * y[l][j]) % p_;
                r[i][j] = s;
            }
        return r;
    }
    std::vector<int> mat_apply(const std::vector<std::vector<int>>& x, const std::vector<int>& v) const {
        std::vector<int> r(m_, 0);
        for (int i = 0; i < m_; ++i) {
            int s = 0;
            for (int j = 0; j < m_; ++j) s = (s + x[i][j] * v[j]) % p_;
            r[i] = s;
        }
        return r;
    }
};

inline std::shared_ptr<const ZpmZpGroup> make_zpmzp(int p, int m, std::vector<std::vector<int>> a) {
    return std::make_shared<const ZpmZpGroup>(p, m, std::move(a));
}

// Explicit multiplication tables, for small ad-hoc semidirect products.
class TableGroup : public Group {
public:
    TableGroup(std::vector<std::vector<int>> k_table, std::vector<std::vector<int>> h_table,
               std::vector<std::vector<int>> phi_table)
        : kt_(std::move(k_table)), ht_(std::move(h_table)), phi_(std::move(phi_table)) {
        if (kt_.empty() || ht_.empty() || phi_.size() != ht_.size())
            throw DomainMismatchError("bad group tables");
        if (!verify_semidirect()) throw DomainMismatchError("tables do not define a semidirect product");
    }

    long long k_size() const override { return static_cast<long long>(kt_.size()); }
    int h_size() const override { return static_cast<int>(ht_.size()); }
    long long k_op(long long a, long long b) const override { return kt_[a][b]; }
    long long k_inv(long long a) const override {
        for (size_t b = 0; b < kt_.size(); ++b)
            if (kt_[a][b] == 0) return static_cast<long long>(b);
        throw DomainMismatchError("K table has no inverse");
    }
    int h_op(int a, int b) const override { return ht_[a][b]; }
    int h_inv(int a) const override {
        for (size_t b = 0; b < ht_.size(); ++b)
            if (ht_[a][b] == 0) return static_cast<int>(b);
        throw DomainMismatchError("H table has no inverse");
    }
    long long twist(int h, long long k) const override { return phi_[h][k]; }

private:
    std::vector<std::vector<int>> kt_, ht_;
    std::vector<std::vector<int>> phi_;
};

// ----------------------------------------------------------------------------
// Actions

class Action {
public:
    explicit Action(GroupPtr g, long long domain_size) : group_(std::move(g)), domain_(domain_size) {}
    virtual ~Action() = default;

    const Group& group() const { return *group_; }
    const GroupPtr& group_ptr() const { return group_; }
    long long domain_size() const { return domain_; }

    virtual long long apply(const GroupElem& g, long long m) const = 0;

    // e∘m = m and g∘(h∘m) = (gh)∘m, exhaustive; plus faithfulness.
    bool verify_axioms() const;

private:
    GroupPtr group_;
    long long domain_;
};

using ActionPtr = std::shared_ptr<const Action>;

// The kernel action of a Frobenius-style semidirect product:
// (y,h) ∘ x = y · phi_h(x), domain = K.  For Aff_q(H) this is x -> ax + b.
class KernelAction : public Action {
public:
    explicit KernelAction(GroupPtr g) : Action(g, g->k_size()) {}
    long long apply(const GroupElem& g, long long m) const override {
        return group().k_op(g.k, group().twist(g.h, m));
    }
};

// Right regular action used to view the HSP as an HSSP: domain = G itself.
class RegularAction : public Action {
public:
    explicit RegularAction(GroupPtr g) : Action(g, g->order()) {}
    long long apply(const GroupElem& g, long long m) const override {
        return group().encode(group().mul(g, group().decode(m)));
    }
};

// The shifting action of Fg(K) on F_q x F_q: (Q,t)∘(x,y) = (x+t, y+Q(x+t)).
class ShiftingAction : public Action {
public:
    explicit ShiftingAction(std::shared_ptr<const FunctionGraphGroup> g)
        : Action(g, static_cast<long long>(g->field()->q()) * g->field()->q()), fg_(std::move(g)) {}

    const FunctionGraphGroup& fg() const { return *fg_; }

    long long encode_point(int x, int y) const { return static_cast<long long>(x) * fg_->field()->q() + y; }
    std::pair<int, int> decode_point(long long m) const {
        int q = fg_->field()->q();
        return {static_cast<int>(m / q), static_cast<int>(m % q)};
    }

    long long apply(const GroupElem& g, long long m) const override {
        const Field& F = *fg_->field();
        auto [x, y] = decode_point(m);
        int xt = F.add(x, g.h);
        FieldPoly Q = fg_->poly_of(g.k);
        return encode_point(xt, F.add(y, Q.eval(xt)));
    }

private:
    std::shared_ptr<const FunctionGraphGroup> fg_;
};

inline bool Action::verify_axioms() const {
    const Group& G = group();
    long long n = G.order();
    for (long long m = 0; m < domain_; ++m)
        if (apply(G.identity(), m) != m) return false;
    for (long long i = 0; i < n; ++i) {
        GroupElem g = G.decode(i);
        for (long long j = 0; j < n; ++j) {
            GroupElem h = G.decode(j);
            GroupElem gh = G.mul(g, h);
            for (long long m = 0; m < domain_; ++m)
                if (apply(g, apply(h, m)) != apply(gh, m)) return false;
        }
    }
    // faithfulness
    for (long long i = 0; i < n; ++i) {
        GroupElem g = G.decode(i);
        if (g == G.identity()) continue;
        bool fixes_all = true;
        for (long long m = 0; m < domain_ && fixes_all; ++m)
            if (apply(g, m) != m) fixes_all = false;
        if (fixes_all) return false;
    }
    return true;
}

// ----------------------------------------------------------------------------
// Subgroups and partitions

class Subgroup {
public:
    Subgroup(GroupPtr g, std::vector<GroupElem> generators)
        : group_(std::move(g)), gens_(std::move(generators)) {
        close();
    }

    const Group& group() const { return *group_; }
    const GroupPtr& group_ptr() const { return group_; }
    const std::vector<GroupElem>& generators() const { return gens_; }
    const std::vector<GroupElem>& elements() const { return elems_; }
    long long size() const { return static_cast<long long>(elems_.size()); }

    bool contains(const GroupElem& e) const { return codes_.count(group_->encode(e)) > 0; }
    bool contains_code(long long c) const { return codes_.count(c) > 0; }

    bool operator==(const Subgroup& o) const { return codes_ == o.codes_; }
    bool operator!=(const Subgroup& o) const { return !(*this == o); }
    bool subset_of(const Subgroup& o) const {
        for (long long c : codes_)
            if (!o.codes_.count(c)) return false;
        return true;
    }

    // canonical sorted element codes (for hashing / dedup)
    std::vector<long long> sorted_codes() const {
        std::vector<long long> v(codes_.begin(), codes_.end());
        std::sort(v.begin(), v.end());
        return v;
    }

    Subgroup conjugate(const GroupElem& x) const {
        std::vector<GroupElem> g;
        g.reserve(gens_.size());
        for (const auto& e : gens_) g.push_back(group_->conj(x, e));
        return Subgroup(group_, std::move(g));
    }

private:
    GroupPtr group_;
    std::vector<GroupElem> gens_;
    std::vector<GroupElem> elems_;
    std::unordered_set<long long> codes_;

    void close() {
        const Group& G = *group_;
        std::vector<GroupElem> frontier{G.identity()};
        codes_.insert(G.encode(G.identity()));
        for (const auto& e : gens_) {
            long long c = G.encode(e);
            if (codes_.insert(c).second) frontier.push_back(e);
        }
        size_t head = 0;
        while (head < frontier.size()) {
            GroupElem cur = frontier[head++];
            for (const auto& g : gens_) {
                for (GroupElem nxt : {G.mul(cur, g), G.mul(cur, G.inv(g))}) {
                    if (codes_.insert(G.encode(nxt)).second) frontier.push_back(nxt);
                }
            }
        }
        elems_ = std::move(frontier);
        std::sort(elems_.begin(), elems_.end(), [&](const GroupElem& a, const GroupElem& b) {
            return G.encode(a) < G.encode(b);
        });
    }
};

inline Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {}); }
inline Subgroup full_subgroup(const GroupPtr& g) {
    std::vector<GroupElem> gens;
    for (long long i = 0; i < g->order(); ++i) gens.push_back(g->decode(i));
    return Subgroup(g, std::move(gens));
}

// Partition of a finite domain; the class id of a class is its minimal member.
class Partition {
public:
    explicit Partition(std::vector<long long> classof) : classof_(std::move(classof)) {}

    long long domain_size() const { return static_cast<long long>(classof_.size()); }
    long long class_id(long long m) const { return classof_[m]; }
    const std::vector<long long>& classof() const { return classof_; }

    static Partition discrete(long long n) {
        std::vector<long long> c(n);
        for (long long i = 0; i < n; ++i) c[i] = i;
        return Partition(std::move(c));
    }

    // canonicalize arbitrary labels into min-member class ids
    static Partition from_labels(const std::vector<long long>& labels) {
        std::vector<long long> c(labels.size());
        std::map<long long, long long> min_of;
        for (long long i = 0; i < static_cast<long long>(labels.size()); ++i) {
            auto it = min_of.find(labels[i]);
            if (it == min_of.end()) min_of[labels[i]] = i;
        }
        for (long long i = 0; i < static_cast<long long>(labels.size()); ++i) c[i] = min_of[labels[i]];
        return Partition(std::move(c));
    }

    long long class_count() const {
        std::set<long long> ids(classof_.begin(), classof_.end());
        return static_cast<long long>(ids.size());
    }

    bool operator==(const Partition& o) const { return classof_ == o.classof_; }

    // refinement order: *this <= other iff other is finer
    bool coarser_or_equal(const Partition& o) const {
        // every class of o is contained in a class of *this
        for (size_t m = 0; m < classof_.size(); ++m)
            if (classof_[o.classof_[m]] != classof_[m]) return false;
        return true;
    }

private:
    std::vector<long long> classof_;
};

// ----------------------------------------------------------------------------
// Operations

inline long long act(const Action& a, const GroupElem& g, long long m) {
    if (m < 0 || m >= a.domain_size()) throw DomainMismatchError("point outside action domain");
    return a.apply(g, m);
}

inline std::set<long long> orbit(const Subgroup& h, long long m, const Action& a) {
    std::set<long long> o;
    for (const auto& e : h.elements()) o.insert(act(a, e, m));
    return o;
}

inline Subgroup stabilizer(long long m, const Action& a) {
    const Group& G = a.group();
    std::vector<GroupElem> elems;
    for (long long i = 0; i < G.order(); ++i) {
        GroupElem g = G.decode(i);
        if (act(a, g, m) == m) elems.push_back(g);
    }
    return Subgroup(a.group_ptr(), std::move(elems));
}

// H* : the orbit partition of H on the action's domain.
inline Partition subgroup_star(const Subgroup& h, const Action& a) {
    std::vector<long long> classof(a.domain_size(), -1);
    for (long long m = 0; m < a.domain_size(); ++m) {
        if (classof[m] != -1) continue;
        auto o = orbit(h, m, a);
        long long id = *o.begin();
        for (long long x : o) classof[x] = id;
    }
    return Partition(std::move(classof));
}

// π* : the subgroup of elements of G stabilizing every class of π.
inline Subgroup partition_star(const Partition& pi, const Action& a) {
    const Group& G = a.group();
    if (pi.domain_size() != a.domain_size()) throw DomainMismatchError("partition domain mismatch");
    std::vector<GroupElem> elems;
    for (long long i = 0; i < G.order(); ++i) {
        GroupElem g = G.decode(i);
        bool keeps = true;
        for (long long m = 0; m < a.domain_size() && keeps; ++m)
            if (pi.class_id(act(a, g, m)) != pi.class_id(m)) keeps = false;
        if (keeps) elems.push_back(g);
    }
    return Subgroup(a.group_ptr(), std::move(elems));
}

inline Subgroup closure(const Subgroup& h, const Action& a) {
    return partition_star(subgroup_star(h, a), a);
}

inline bool is_closed(const Subgroup& h, const Action& a) { return closure(h, a) == h; }

// Generators of A_Q = {(Q - a_t Q, t) : t in F_q}: one generator per
// power-basis unit t, which together generate the additive group of F_q.
inline Subgroup fg_conjugate_complement(const std::shared_ptr<const FunctionGraphGroup>& fg,
                                        const FieldPoly& q_poly) {
    const Field& F = *fg->field();
    std::vector<GroupElem> gens;
    for (int j = 0; j < F.k(); ++j) {
        int t = F.from_coords([&] {
            std::vector<int> c(F.k(), 0);
            c[j] = 1;
            return c;
        }());
        FieldPoly diff = q_poly.sub(q_poly.shift(t));
        gens.push_back(fg->make(diff, t));
    }
    return Subgroup(fg, std::move(gens));
}

inline GroupElem fg_a_qt(const FunctionGraphGroup& fg, const FieldPoly& q_poly, int t) {
    return fg.make(q_poly.sub(q_poly.shift(t)), t);
}

// All subgroups of a small group, by iterated closure of generator extensions.
inline std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
    std::vector<Subgroup> out;
    std::set<std::vector<long long>> seen;
    std::vector<Subgroup> frontier{trivial_subgroup(g)};
    seen.insert(frontier[0].sorted_codes());
    out.push_back(frontier[0]);
    while (!frontier.empty()) {
        Subgroup cur = frontier.back();
        frontier.pop_back();
        for (long long i = 0; i < g->order(); ++i) {
            GroupElem e = g->decode(i);
            if (cur.contains(e)) continue;
            std::vector<GroupElem> gens(cur.generators());
            gens.insert(gens.end(), cur.elements().begin(), cur.elements().end());
            gens.push_back(e);
            Subgroup bigger(g, std::move(gens));
            auto key = bigger.sorted_codes();
            if (seen.insert(key).second) {
                out.push_back(bigger);
                frontier.push_back(bigger);
            }
        }
    }
    return out;
}

}  // namespace hssp
