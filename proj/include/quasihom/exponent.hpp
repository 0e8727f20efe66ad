#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "quasihom/errors.hpp"

namespace qh {

// Monomial exponent vector in N^d.
class Exponent {
public:
    Exponent() = default;
    explicit Exponent(int dim) : c_(dim, 0) {}
    explicit Exponent(std::vector<int> components) : c_(std::move(components)) {
        for (int v : c_) require(v >= 0, ErrorKind::BadInput, "negative exponent component");
    }
    static Exponent unit(int dim, int index) {
        Exponent e(dim);
        e.c_[index] = 1;
        return e;
    }

    int dim() const { return static_cast<int>(c_.size()); }
    int operator[](int i) const { return c_[i]; }
    const std::vector<int>& components() const { return c_; }
    int total_degree() const { return std::accumulate(c_.begin(), c_.end(), 0); }
    bool is_zero() const { return total_degree() == 0; }

    Exponent operator+(const Exponent& o) const {
        Exponent r = *this;
        for (int i = 0; i < dim(); ++i) r.c_[i] += o.c_[i];
        return r;
    }

    friend bool operator==(const Exponent& a, const Exponent& b) { return a.c_ == b.c_; }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < dim(); ++i) s += (i ? "," : "") + std::to_string(c_[i]);
        return s + ")";
    }

private:
    std::vector<int> c_;
};

inline bool lex_less(const Exponent& a, const Exponent& b) {
    return a.components() < b.components();
}

// Graded lexicographic: total degree first, then lex.
struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return lex_less(a, b);
    }
};

}  // namespace qh
