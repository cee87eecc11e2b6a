#ifndef CF_MONOMIAL_HPP
#define CF_MONOMIAL_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "cf/errors.hpp"
#include "cf/ring.hpp"

namespace cf {

/// Dense exponent vector, one entry per ring variable.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int arity) : e_(static_cast<std::size_t>(arity), 0) {}
    explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {}

    int arity() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    int& exp(int i) { return e_[static_cast<std::size_t>(i)]; }
    int deg() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    bool is_unit() const {
        return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }
    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }
    /// o / *this, requires divisibility.
    Monomial divide_into(const Monomial& o) const {
        Monomial r(o);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
        return r;
    }
    static bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] > 0 && b.e_[i] > 0) return false;
        return true;
    }

    // structural order, used as the map key order inside Polynomial
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    std::vector<int> e_;
};

enum class OrderKind { Lex, DegRevLex, BlockElimination };

/// A monomial order with an explicit variable sequence (most significant
/// first). BlockElimination compares the first-block part degrevlex-style
/// before the rest, so any monomial touching the first block beats every
/// monomial free of it.
class MonomialOrder {
public:
    static MonomialOrder lex(const Ring& ring) {
        return MonomialOrder(OrderKind::Lex, default_seq(ring), {});
    }
    static MonomialOrder degrevlex(const Ring& ring) {
        return MonomialOrder(OrderKind::DegRevLex, default_seq(ring), {});
    }
    static MonomialOrder degrevlex(const Ring& ring, const std::vector<std::string>& seq_names) {
        return MonomialOrder(OrderKind::DegRevLex, resolve(ring, seq_names), {});
    }
    static MonomialOrder lex(const Ring& ring, const std::vector<std::string>& seq_names) {
        return MonomialOrder(OrderKind::Lex, resolve(ring, seq_names), {});
    }
    static MonomialOrder block_elimination(const Ring& ring,
                                           const std::vector<std::string>& first_block) {
        std::vector<char> in_first(static_cast<std::size_t>(ring.arity()), 0);
        for (const auto& name : first_block) {
            auto idx = ring.index_of(name);
            if (!idx) throw DomainError("elimination block names unknown variable '" + name + "'");
            in_first[static_cast<std::size_t>(*idx)] = 1;
        }
        return MonomialOrder(OrderKind::BlockElimination, default_seq(ring), std::move(in_first));
    }

    OrderKind kind() const { return kind_; }
    const std::vector<int>& sequence() const { return seq_; }

    /// negative: a < b, zero: equal, positive: a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
        case OrderKind::Lex:
            return cmp_lex(a, b, seq_);
        case OrderKind::DegRevLex:
            return cmp_drl(a, b, seq_, nullptr, false);
        case OrderKind::BlockElimination: {
            int c = cmp_drl(a, b, seq_, &in_first_, true);
            if (c != 0) return c;
            return cmp_drl(a, b, seq_, &in_first_, false);
        }
        }
        return 0;
    }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

private:
    MonomialOrder(OrderKind k, std::vector<int> seq, std::vector<char> in_first)
        : kind_(k), seq_(std::move(seq)), in_first_(std::move(in_first)) {}

    static std::vector<int> default_seq(const Ring& ring) {
        std::vector<int> s(static_cast<std::size_t>(ring.arity()));
        std::iota(s.begin(), s.end(), 0);
        return s;
    }
    static std::vector<int> resolve(const Ring& ring, const std::vector<std::string>& names) {
        if (static_cast<int>(names.size()) != ring.arity())
            throw DomainError("order sequence must list every ring variable exactly once");
        std::vector<int> s;
        std::vector<char> seen(names.size(), 0);
        for (const auto& n : names) {
            auto idx = ring.index_of(n);
            if (!idx) throw DomainError("order sequence names unknown variable '" + n + "'");
            if (seen[static_cast<std::size_t>(*idx)]) throw DomainError("order sequence repeats '" + n + "'");
            seen[static_cast<std::size_t>(*idx)] = 1;
            s.push_back(*idx);
        }
        return s;
    }

    static int cmp_lex(const Monomial& a, const Monomial& b, const std::vector<int>& seq) {
        for (int v : seq) {
            if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
        }
        return 0;
    }
    // degrevlex restricted to block (or its complement); block==nullptr: all vars
    static int cmp_drl(const Monomial& a, const Monomial& b, const std::vector<int>& seq,
                       const std::vector<char>* block, bool in_block) {
        auto member = [&](int v) {
            return block == nullptr || (*block)[static_cast<std::size_t>(v)] == (in_block ? 1 : 0);
        };
        int da = 0, db = 0;
        for (int v : seq) {
            if (!member(v)) continue;
            da += a[v];
            db += b[v];
        }
        if (da != db) return da < db ? -1 : 1;
        for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
            int v = *it;
            if (!member(v)) continue;
            if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1; // larger trailing exponent is smaller
        }
        return 0;
    }

    OrderKind kind_;
    std::vector<int> seq_;
    std::vector<char> in_first_;
};

} // namespace cf

#endif
