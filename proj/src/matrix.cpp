#include "quasihom/matrix.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "quasihom/factor.hpp"

namespace qh {

GMatrix GMatrix::identity(int n) {
    GMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

GMatrix GMatrix::transpose() const {
    GMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

GMatrix GMatrix::operator*(const GMatrix& o) const {
    require(cols_ == o.rows_, ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    GMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += at(i, k) * o.at(k, j);
            }
        }
    return r;
}

GMatrix GMatrix::operator+(const GMatrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::DimensionMismatch,
            "matrix sum shape mismatch");
    GMatrix r = *this;
    for (int i = 0; i < rows_ * cols_; ++i) r.data_[i] += o.data_[i];
    return r;
}

GMatrix GMatrix::operator-(const GMatrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::DimensionMismatch,
            "matrix difference shape mismatch");
    GMatrix r = *this;
    for (int i = 0; i < rows_ * cols_; ++i) r.data_[i] -= o.data_[i];
    return r;
}

std::vector<GaussianRational> GMatrix::apply(const std::vector<GaussianRational>& v) const {
    require(static_cast<int>(v.size()) == cols_, ErrorKind::DimensionMismatch,
            "matrix-vector shape mismatch");
    std::vector<GaussianRational> r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

bool GMatrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

RowReducer::RowReducer(const GMatrix& a, PivotOrder order)
    : nrows_(a.rows()), ncols_(a.cols()), reduced_(a), transform_(GMatrix::identity(a.rows())) {
    int r = 0;
    for (int col = 0; col < ncols_ && r < nrows_; ++col) {
        int piv = -1;
        if (order == PivotOrder::FirstRow) {
            for (int i = r; i < nrows_; ++i)
                if (!reduced_.at(i, col).is_zero()) {
                    piv = i;
                    break;
                }
        } else {
            for (int i = nrows_ - 1; i >= r; --i)
                if (!reduced_.at(i, col).is_zero()) {
                    piv = i;
                    break;
                }
        }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < ncols_; ++j) std::swap(reduced_.at(piv, j), reduced_.at(r, j));
        if (piv != r)
            for (int j = 0; j < nrows_; ++j) std::swap(transform_.at(piv, j), transform_.at(r, j));
        GaussianRational inv = reduced_.at(r, col).reciprocal();
        for (int j = 0; j < ncols_; ++j) reduced_.at(r, j) *= inv;
        for (int j = 0; j < nrows_; ++j) transform_.at(r, j) *= inv;
        for (int i = 0; i < nrows_; ++i) {
            if (i == r || reduced_.at(i, col).is_zero()) continue;
            GaussianRational f = reduced_.at(i, col);
            for (int j = 0; j < ncols_; ++j) reduced_.at(i, j) -= f * reduced_.at(r, j);
            for (int j = 0; j < nrows_; ++j) transform_.at(i, j) -= f * transform_.at(r, j);
        }
        pivot_cols_.push_back(col);
        ++r;
    }
}

std::optional<std::vector<GaussianRational>> RowReducer::solve(
    const std::vector<GaussianRational>& b) const {
    require(static_cast<int>(b.size()) == nrows_, ErrorKind::DimensionMismatch,
            "rhs size mismatch");
    std::vector<GaussianRational> c = transform_.apply(b);
    for (int i = rank(); i < nrows_; ++i)
        if (!c[i].is_zero()) return std::nullopt;
    std::vector<GaussianRational> x(ncols_);
    for (int i = 0; i < rank(); ++i) x[pivot_cols_[i]] = c[i];
    return x;
}

GaussianRational determinant(GMatrix m) {
    require(m.rows() == m.cols(), ErrorKind::DimensionMismatch, "determinant of non-square");
    const int n = m.rows();
    GaussianRational det(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!m.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) return GaussianRational(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        GaussianRational inv = m.at(col, col).reciprocal();
        for (int i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            GaussianRational f = m.at(i, col) * inv;
            for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return det;
}

std::optional<GMatrix> inverse(const GMatrix& m) {
    require(m.rows() == m.cols(), ErrorKind::DimensionMismatch, "inverse of non-square");
    RowReducer red(m);
    if (red.rank() < m.rows()) return std::nullopt;
    const int n = m.rows();
    GMatrix inv(n, n);
    std::vector<GaussianRational> e(n);
    for (int j = 0; j < n; ++j) {
        std::fill(e.begin(), e.end(), GaussianRational(0));
        e[j] = GaussianRational(1);
        auto col = red.solve(e);
        for (int i = 0; i < n; ++i) inv.at(i, j) = (*col)[i];
    }
    return inv;
}

int rank(const GMatrix& m) { return RowReducer(m).rank(); }

std::vector<std::vector<GaussianRational>> kernel_basis(const GMatrix& m) {
    const int n = m.cols();
    GMatrix a = m;
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < n && r < a.rows(); ++col) {
        int piv = -1;
        for (int i = r; i < a.rows(); ++i)
            if (!a.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(r, j));
        GaussianRational inv = a.at(r, col).reciprocal();
        for (int j = 0; j < n; ++j) a.at(r, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, col).is_zero()) continue;
            GaussianRational f = a.at(i, col);
            for (int j = 0; j < n; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    std::vector<std::vector<GaussianRational>> out;
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        std::vector<GaussianRational> v(n);
        v[col] = GaussianRational(1);
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a.at(static_cast<int>(i), col);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<GaussianRational> charpoly(const GMatrix& m) {
    require(m.rows() == m.cols(), ErrorKind::DimensionMismatch, "charpoly of non-square");
    const int n = m.rows();
    // Faddeev-LeVerrier: exact over the Gaussian rationals.
    std::vector<GaussianRational> c(n + 1);
    c[n] = GaussianRational(1);
    GMatrix mk = GMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        mk = m * mk;
        GaussianRational tr(0);
        for (int i = 0; i < n; ++i) tr += mk.at(i, i);
        GaussianRational ck = tr / GaussianRational(Rational(-k));
        c[n - k] = ck;
        for (int i = 0; i < n; ++i) mk.at(i, i) += ck;
    }
    return c;
}

namespace {

GaussianRational poly_eval(const std::vector<GaussianRational>& p, const GaussianRational& z) {
    GaussianRational acc(0);
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) acc = acc * z + p[i];
    return acc;
}

// Synthetic division by (x - z); requires z to be a root.
std::vector<GaussianRational> deflate(const std::vector<GaussianRational>& p,
                                      const GaussianRational& z) {
    const int n = static_cast<int>(p.size()) - 1;
    std::vector<GaussianRational> q(n);
    GaussianRational carry(0);
    for (int i = n; i >= 1; --i) {
        carry = p[i] + carry * z;
        q[i - 1] = carry;
    }
    return q;
}

// All divisors of a nonzero Gaussian integer, up to associates.
std::vector<GaussianRational> gaussian_divisors(const GaussianRational& g) {
    GaussianFactorization f = factor(g);
    std::vector<GaussianRational> out{GaussianRational(1)};
    for (const auto& pp : f.factors) {
        std::vector<GaussianRational> next;
        GaussianRational power(1);
        for (long e = 0; e <= pp.exponent; ++e) {
            for (const auto& base : out) next.push_back(base * power);
            power *= pp.prime;
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace

RootSearch gaussian_rational_roots(std::vector<GaussianRational> poly) {
    while (!poly.empty() && poly.back().is_zero()) poly.pop_back();
    require(!poly.empty(), ErrorKind::BadInput, "zero polynomial has no well-defined roots");

    RootSearch out;
    // roots at zero
    int zero_mult = 0;
    while (poly.size() > 1 && poly.front().is_zero()) {
        poly.erase(poly.begin());
        ++zero_mult;
    }
    if (zero_mult) out.roots.push_back({GaussianRational(0), zero_mult});

    while (poly.size() > 1) {
        // clear denominators: coefficients become Gaussian integers
        mpz_class scale = 1;
        for (const auto& c : poly) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.re().den().get_mpz_t());
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.im().den().get_mpz_t());
        }
        GaussianRational s{Rational(scale)};
        std::vector<GaussianRational> ip;
        for (const auto& c : poly) ip.push_back(c * s);

        auto numerators = gaussian_divisors(ip.front());
        auto denominators = gaussian_divisors(ip.back());
        GaussianRational iunit = GaussianRational::i();

        std::set<std::pair<Rational, Rational>> seen;
        bool found = false;
        GaussianRational root;
        for (const auto& p : numerators) {
            for (const auto& q : denominators) {
                GaussianRational cand = p / q;
                for (int u = 0; u < 4 && !found; ++u) {
                    if (seen.insert({cand.re(), cand.im()}).second &&
                        poly_eval(poly, cand).is_zero()) {
                        found = true;
                        root = cand;
                    }
                    cand *= iunit;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;

        int mult = 0;
        while (poly.size() > 1 && poly_eval(poly, root).is_zero()) {
            poly = deflate(poly, root);
            ++mult;
        }
        out.roots.push_back({root, mult});
    }

    // canonical root order: modulus descending, then (re, im)
    std::sort(out.roots.begin(), out.roots.end(), [](const auto& x, const auto& y) {
        Rational mx = x.first.modulus_squared(), my = y.first.modulus_squared();
        if (mx != my) return mx > my;
        return x.first < y.first;
    });
    out.residual = std::move(poly);
    return out;
}

namespace {

bool is_lower_jordan_nicely_ordered(const GMatrix& m) {
    const int n = m.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || (i == j + 1)) continue;
            if (!m.at(i, j).is_zero()) return false;
        }
    for (int i = 1; i < n; ++i) {
        const GaussianRational& e = m.at(i, i - 1);
        if (e.is_zero()) continue;
        if (!e.is_one()) return false;
        if (!(m.at(i, i) == m.at(i - 1, i - 1))) return false;
    }
    for (int i = 1; i < n; ++i)
        if (m.at(i, i).modulus_squared() > m.at(i - 1, i - 1).modulus_squared()) return false;
    return true;
}

// Incremental independent-set tracker over reduced rows.
class Span {
public:
    explicit Span(int n) : n_(n) {}

    // Returns true (and absorbs v) if v is independent from the current span.
    bool extend(std::vector<GaussianRational> v) {
        for (const auto& [lead, row] : rows_) {
            if (!v[lead].is_zero()) {
                GaussianRational f = v[lead];
                for (int j = 0; j < n_; ++j) v[j] -= f * row[j];
            }
        }
        int lead = -1;
        for (int j = 0; j < n_; ++j)
            if (!v[j].is_zero()) {
                lead = j;
                break;
            }
        if (lead < 0) return false;
        GaussianRational inv = v[lead].reciprocal();
        for (int j = 0; j < n_; ++j) v[j] *= inv;
        rows_.emplace_back(lead, std::move(v));
        return true;
    }

private:
    int n_;
    std::vector<std::pair<int, std::vector<GaussianRational>>> rows_;
};

}  // namespace

JordanForm jordan_lower(const GMatrix& m) {
    require(m.rows() == m.cols(), ErrorKind::DimensionMismatch, "Jordan form of non-square");
    const int n = m.rows();

    if (is_lower_jordan_nicely_ordered(m)) {
        JordanForm out{m, GMatrix::identity(n), GMatrix::identity(n), {}, {}};
        for (int i = 0; i < n; ++i) out.diagonal.push_back(m.at(i, i));
        for (int i = 1; i < n; ++i) out.subdiagonal.push_back(!m.at(i, i - 1).is_zero());
        return out;
    }

    auto cp = charpoly(m);
    auto roots = gaussian_rational_roots(cp);
    if (!roots.complete()) {
        std::string res = "degree-" + std::to_string(roots.residual.size() - 1) + " factor [";
        for (size_t i = 0; i < roots.residual.size(); ++i)
            res += (i ? ", " : "") + roots.residual[i].str();
        fail(ErrorKind::IrrationalSpectrum,
             "characteristic polynomial has roots outside the Gaussian rationals: " + res + "]");
    }
    // eigenvalue order: modulus descending, (re, im) ties lexicographic
    auto eigs = roots.roots;

    struct Chain {
        std::vector<std::vector<GaussianRational>> vectors;  // height-descending
    };

    GMatrix s(n, n);
    int col = 0;
    std::vector<GaussianRational> diag;
    std::vector<bool> sub;

    for (const auto& [mu, mult] : eigs) {
        GMatrix shifted = m;
        for (int i = 0; i < n; ++i) shifted.at(i, i) -= mu;

        // kernel filtration of (M - mu I)^k
        std::vector<std::vector<std::vector<GaussianRational>>> kernels;  // [k-1]
        GMatrix pw = shifted;
        while (true) {
            kernels.push_back(kernel_basis(pw));
            if (static_cast<int>(kernels.back().size()) >= mult) break;
            pw = shifted * pw;
            require(static_cast<int>(kernels.size()) <= n, ErrorKind::Internal,
                    "kernel filtration failed to stabilize");
        }
        const int smax = static_cast<int>(kernels.size());

        std::vector<Chain> chains;
        Span span(n);
        // seed the span with N_{k-1} at each level before picking starters
        for (int k = smax; k >= 1; --k) {
            Span level(n);
            if (k >= 2)
                for (const auto& v : kernels[k - 2]) level.extend(v);
            // existing chain vectors of height k
            for (const auto& ch : chains) {
                int h = static_cast<int>(ch.vectors.size());
                if (h >= k) level.extend(ch.vectors[h - k]);
            }
            for (const auto& cand : kernels[k - 1]) {
                if (!level.extend(cand)) continue;
                Chain ch;
                std::vector<GaussianRational> cur = cand;
                for (int t = 0; t < k; ++t) {
                    ch.vectors.push_back(cur);
                    cur = shifted.apply(cur);
                }
                chains.push_back(std::move(ch));
            }
        }
        // blocks by decreasing size; the construction above already emits them
        // largest first, but make the convention explicit
        std::stable_sort(chains.begin(), chains.end(), [](const Chain& a, const Chain& b) {
            return a.vectors.size() > b.vectors.size();
        });
        int placed = 0;
        for (const auto& ch : chains) {
            for (size_t t = 0; t < ch.vectors.size(); ++t) {
                for (int i = 0; i < n; ++i) s.at(i, col) = ch.vectors[t][i];
                diag.push_back(mu);
                sub.push_back(t > 0);
                ++col;
                ++placed;
            }
        }
        require(placed == mult, ErrorKind::Internal, "Jordan chains do not fill multiplicity");
    }
    require(col == n, ErrorKind::Internal, "Jordan basis incomplete");

    auto sinv = inverse(s);
    require(sinv.has_value(), ErrorKind::Internal, "Jordan transition matrix singular");
    GMatrix j = *sinv * m * s;

    // exact structural check
    for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj) {
            GaussianRational expect(0);
            if (i == jj) expect = diag[i];
            if (i == jj + 1 && sub[i]) expect = GaussianRational(1);
            require(j.at(i, jj) == expect, ErrorKind::Internal, "Jordan form verification failed");
        }

    JordanForm out{std::move(j), std::move(s), std::move(*sinv), std::move(diag), {}};
    out.subdiagonal.assign(sub.begin() + 1, sub.end());
    return out;
}

}  // namespace qh
