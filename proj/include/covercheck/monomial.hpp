#pragma once

#include <cassert>
#include <compare>
#include <cstddef>
#include <numeric>
#include <vector>

namespace covercheck {

// Exponent vector. Comparison operators give the fixed structural order used
// for internal term storage (lexicographic on exponents); monomial *orders*
// live in MonomialOrder.
class Monomial {
public:
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
        for (int k : e_) assert(k >= 0), (void)k;
    }

    static Monomial var(std::size_t nvars, std::size_t i, int k = 1) {
        Monomial m(nvars);
        m.e_.at(i) = k;
        return m;
    }

    std::size_t nvars() const { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }
    int degree_in(std::size_t i) const { return e_.at(i); }
    int total_degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    bool is_one() const {
        for (int k : e_)
            if (k != 0) return false;
        return true;
    }
    // True when the only nonzero exponent sits at index i (and is positive).
    bool pure_power_of(std::size_t i) const {
        if (e_[i] <= 0) return false;
        for (std::size_t j = 0; j < e_.size(); ++j)
            if (j != i && e_[j] != 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        assert(e_.size() == o.e_.size());
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }
    bool divides(const Monomial& o) const {
        assert(e_.size() == o.e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }
    // this / o; o must divide this.
    Monomial divide(const Monomial& o) const {
        assert(o.divides(*this));
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        assert(a.e_.size() == b.e_.size());
        Monomial r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i)
            if (b.e_[i] > r.e_[i]) r.e_[i] = b.e_[i];
        return r;
    }
    bool coprime(const Monomial& o) const {
        assert(e_.size() == o.e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && o.e_[i] > 0) return false;
        return true;
    }

    const std::vector<int>& exponents() const { return e_; }
    auto operator<=>(const Monomial&) const = default;

private:
    std::vector<int> e_;
};

}  // namespace covercheck
