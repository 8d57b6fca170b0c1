#pragma once

#include <algorithm>
#include <vector>

#include "ramify/field.hpp"
#include "ramify/filtration.hpp"

namespace ramify {

// Sparse vector over the coefficient field, indexed by canonical simplex
// indices of one homological degree.  Entries are sorted by index and never
// hold zero coefficients, so the largest-index term (the "low" entry of
// matrix reduction) is always back().
template <class F>
class Chain {
public:
    struct Term {
        SimplexIndex index;
        F coeff;
        friend bool operator==(const Term& a, const Term& b) { return a.index == b.index && a.coeff == b.coeff; }
    };

    Chain() : degree_(-1) {}
    explicit Chain(int degree) : degree_(degree) {}
    Chain(int degree, std::vector<Term> terms) : degree_(degree), terms_(std::move(terms)) {
        std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
        prune();
    }

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    SimplexIndex low() const { return terms_.back().index; }
    const F& low_coeff() const { return terms_.back().coeff; }

    F coeff_of(SimplexIndex i) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), i,
                                   [](const Term& t, SimplexIndex x) { return t.index < x; });
        return (it != terms_.end() && it->index == i) ? it->coeff : FieldOps<F>::zero();
    }

    void add_term(SimplexIndex i, const F& c) {
        if (FieldOps<F>::is_zero(c)) return;
        auto it = std::lower_bound(terms_.begin(), terms_.end(), i,
                                   [](const Term& t, SimplexIndex x) { return t.index < x; });
        if (it != terms_.end() && it->index == i) {
            it->coeff += c;
            if (FieldOps<F>::is_zero(it->coeff)) terms_.erase(it);
        } else {
            terms_.insert(it, Term{i, c});
        }
    }

    // this += scale * other  (sorted merge)
    void add_scaled(const Chain& other, const F& scale) {
        if (FieldOps<F>::is_zero(scale) || other.terms_.empty()) return;
        std::vector<Term> merged;
        merged.reserve(terms_.size() + other.terms_.size());
        auto a = terms_.begin(), ae = terms_.end();
        auto b = other.terms_.begin(), be = other.terms_.end();
        while (a != ae || b != be) {
            if (b == be || (a != ae && a->index < b->index)) {
                merged.push_back(*a++);
            } else if (a == ae || b->index < a->index) {
                F c = b->coeff * scale;
                if (!FieldOps<F>::is_zero(c)) merged.push_back(Term{b->index, std::move(c)});
                ++b;
            } else {
                F c = a->coeff + b->coeff * scale;
                if (!FieldOps<F>::is_zero(c)) merged.push_back(Term{a->index, std::move(c)});
                ++a;
                ++b;
            }
        }
        terms_ = std::move(merged);
    }

    void scale(const F& s) {
        if (FieldOps<F>::is_zero(s)) {
            terms_.clear();
            return;
        }
        for (auto& t : terms_) t.coeff *= s;
    }

    friend bool operator==(const Chain& a, const Chain& b) { return a.degree_ == b.degree_ && a.terms_ == b.terms_; }

private:
    void prune() {
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                    [](const Term& t) { return FieldOps<F>::is_zero(t.coeff); }),
                     terms_.end());
        for (std::size_t i = 1; i < terms_.size(); ++i)
            if (terms_[i].index == terms_[i - 1].index)
                throw InvalidArgumentError("duplicate simplex index in chain terms");
    }

    int degree_;
    std::vector<Term> terms_;
};

template <class F>
Chain<F> unit_chain(int degree, SimplexIndex i) {
    return Chain<F>(degree, {typename Chain<F>::Term{i, FieldOps<F>::one()}});
}

}  // namespace ramify
