#pragma once

// Exact dense linear algebra over the two coefficient rings.  Elimination is
// fraction-free: rows are scaled to a primitive integral form (integer entries
// with gcd 1 over the rationals; integer-coefficient polynomials with unit
// content and no common polynomial factor over the rational functions) and
// pivoting uses exact cross-multiplication, never division.  Pivots are chosen
// as the first nonzero column under the caller's fixed column order, so
// echelon forms are reproducible.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wbr/scalar.hpp"

namespace wbr {

class ExactMatrix {
public:
    ExactMatrix(int rows, int cols, const Ring& ring)
        : rows_(rows), cols_(cols), ring_(ring), a_(rows * cols, ring.zero()) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Ring& ring() const { return ring_; }
    Scalar& at(int i, int j) { return a_[i * cols_ + j]; }
    const Scalar& at(int i, int j) const { return a_[i * cols_ + j]; }

    std::vector<Scalar> row(int i) const {
        return {a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_};
    }

private:
    int rows_, cols_;
    Ring ring_;
    std::vector<Scalar> a_;
};

namespace detail {

// Domain adapters for the elimination core: plain rationals and integer-
// normalized polynomials.

struct RationalDomain {
    using Elem = Rational;

    static Elem from_scalar(const Scalar& s) { return s.rat(); }
    static Scalar to_scalar(const Ring& ring, const Elem& e) { return ring.from_rational(e); }

    // Scale to coprime integers with positive first nonzero entry.
    static void make_primitive(std::vector<Elem>& v) {
        mpz_class num_gcd = 0, den_lcm = 1;
        for (const auto& x : v) {
            if (x.is_zero()) continue;
            num_gcd = gcd(num_gcd, x.num());
            den_lcm = lcm(den_lcm, x.den());
        }
        if (num_gcd == 0) return;
        Rational f{den_lcm, num_gcd};
        int lead_sign = 0;
        for (auto& x : v) {
            if (x.is_zero()) continue;
            x *= f;
            if (lead_sign == 0) lead_sign = x.sign();
            if (lead_sign < 0) x = -x;
        }
    }
};

struct PolyDomain {
    using Elem = Poly;

    static Scalar to_scalar(const Ring&, const Elem& e) { return Scalar(e); }

    static void make_primitive(std::vector<Elem>& v) {
        // Common rational factor across every coefficient of every entry.
        mpz_class num_gcd = 0, den_lcm = 1;
        for (const auto& p : v)
            for (const auto& c : p.coeffs()) {
                if (c.is_zero()) continue;
                num_gcd = gcd(num_gcd, c.num());
                den_lcm = lcm(den_lcm, c.den());
            }
        if (num_gcd == 0) return;
        Rational f{den_lcm, num_gcd};
        for (auto& p : v) p = p.scaled(f);
        // Common polynomial factor across the entries.
        Poly g;
        for (const auto& p : v) {
            g = poly_gcd(g, p);
            if (g.degree() == 0) break;
        }
        if (g.degree() >= 1) {
            for (auto& p : v)
                if (!p.is_zero()) p = poly_div_exact(p, g);
            std::vector<Elem> tmp;  // re-normalize the rational content
            tmp.swap(v);
            make_primitive(tmp);
            v.swap(tmp);
            return;
        }
        int lead_sign = 0;
        for (auto& p : v) {
            if (p.is_zero()) continue;
            if (lead_sign == 0) lead_sign = p.leading().sign();
            if (lead_sign < 0) p = -p;
        }
    }
};

}  // namespace detail

// Incremental row-echelon accumulator: rows are inserted one at a time,
// reduced fraction-freely against the stored rows, and kept primitive.
template <class Domain>
class EchelonCore {
public:
    using Elem = typename Domain::Elem;

    explicit EchelonCore(int cols) : cols_(cols) {}

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<Elem>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Returns true iff the row was independent of the span so far.
    bool insert(std::vector<Elem> v) {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Elem& coef = v[pivots_[i]];
            if (coef.is_zero()) continue;
            cross_reduce(v, rows_[i], pivots_[i]);
        }
        int p = first_nonzero(v);
        if (p < 0) return false;
        Domain::make_primitive(v);
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, p);
        return true;
    }

    // Eliminate above the pivots as well (still fraction-free), giving the
    // unique primitive reduced form used for kernel extraction.
    void back_eliminate() {
        for (int i = static_cast<int>(rows_.size()) - 1; i >= 0; --i) {
            for (int j = 0; j < i; ++j) {
                if (rows_[j][pivots_[i]].is_zero()) continue;
                cross_reduce(rows_[j], rows_[i], pivots_[i]);
                Domain::make_primitive(rows_[j]);
            }
        }
    }

private:
    static void cross_reduce(std::vector<Elem>& v, const std::vector<Elem>& row, int p) {
        Elem lead = row[p], coef = v[p];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = lead * v[j] - coef * row[j];
    }

    static int first_nonzero(const std::vector<Elem>& v) {
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) return static_cast<int>(j);
        return -1;
    }

    int cols_;
    std::vector<std::vector<Elem>> rows_;
    std::vector<int> pivots_;
};

namespace detail {

inline std::vector<Rational> to_rational_row(const std::vector<Scalar>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(s.rat());
    return out;
}

// Clear rational-function denominators so the row has polynomial entries.
inline std::vector<Poly> to_poly_row(const std::vector<Scalar>& v) {
    Poly common(Rational(1));
    for (const auto& s : v) {
        if (s.holds_poly()) continue;
        RatFun f = s.ratfun();
        Poly g = poly_gcd(common, f.den());
        common = common * poly_div_exact(f.den(), g);
    }
    std::vector<Poly> out;
    out.reserve(v.size());
    for (const auto& s : v) {
        if (s.holds_poly())
            out.push_back(s.poly() * common);
        else {
            RatFun f = s.ratfun();
            out.push_back(f.num() * poly_div_exact(common, f.den()));
        }
    }
    return out;
}

// Kernel basis from a back-eliminated echelon form: one vector per free
// column, solved over the fraction field and cleared to primitive form.
template <class Domain, class DivideToScalar>
std::vector<std::vector<Scalar>> kernel_from_echelon(const EchelonCore<Domain>& ech,
                                                     const Ring& ring,
                                                     DivideToScalar divide) {
    const auto& rows = ech.rows();
    const auto& pivots = ech.pivots();
    std::vector<char> is_pivot(ech.cols(), 0);
    for (int p : pivots) is_pivot[p] = 1;

    std::vector<std::vector<Scalar>> kernel;
    for (int f = 0; f < ech.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(ech.cols(), ring.zero());
        v[f] = ring.one();
        // Back-eliminated rows have support on their pivot and free columns
        // only, so each pivot coordinate is determined directly.
        for (std::size_t i = 0; i < rows.size(); ++i)
            v[pivots[i]] = -divide(rows[i][f], rows[i][pivots[i]]);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace detail

struct RankKernel {
    int rank = 0;
    std::vector<std::vector<Scalar>> kernel;
};

// Incremental rank tracker over either ring: feed coordinate rows, learn
// whether each enlarges the span.  Used for span stabilization and for
// dimension cross-checks without materializing a matrix.
class RowSpace {
public:
    RowSpace(int cols, const Ring& ring)
        : ring_(ring), rat_(ring.kind() == RingKind::rationals
                                ? std::optional<EchelonCore<detail::RationalDomain>>(
                                      EchelonCore<detail::RationalDomain>(cols))
                                : std::nullopt),
          pol_(ring.kind() == RingKind::rational_functions
                   ? std::optional<EchelonCore<detail::PolyDomain>>(
                         EchelonCore<detail::PolyDomain>(cols))
                   : std::nullopt) {}

    bool insert(const std::vector<Scalar>& row) {
        if (rat_) return rat_->insert(detail::to_rational_row(row));
        return pol_->insert(detail::to_poly_row(row));
    }
    int rank() const { return rat_ ? rat_->rank() : pol_->rank(); }
    const Ring& ring() const { return ring_; }

private:
    Ring ring_;
    std::optional<EchelonCore<detail::RationalDomain>> rat_;
    std::optional<EchelonCore<detail::PolyDomain>> pol_;
};

// Exact rank and kernel basis of M over its ring's fraction field.  Kernel
// vectors are normalized to primitive integral form with a positive leading
// entry, and satisfy M.v = 0 exactly.
inline RankKernel rank_kernel(const ExactMatrix& M) {
    RankKernel out;
    if (M.ring().kind() == RingKind::rationals) {
        EchelonCore<detail::RationalDomain> ech(M.cols());
        for (int i = 0; i < M.rows(); ++i) ech.insert(detail::to_rational_row(M.row(i)));
        ech.back_eliminate();
        out.rank = ech.rank();
        out.kernel = detail::kernel_from_echelon(
            ech, M.ring(), [&](const Rational& a, const Rational& b) {
                return M.ring().from_rational(a / b);
            });
        for (auto& v : out.kernel) {
            auto raw = detail::to_rational_row(v);
            detail::RationalDomain::make_primitive(raw);
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = M.ring().from_rational(raw[j]);
        }
    } else {
        EchelonCore<detail::PolyDomain> ech(M.cols());
        for (int i = 0; i < M.rows(); ++i) ech.insert(detail::to_poly_row(M.row(i)));
        ech.back_eliminate();
        out.rank = ech.rank();
        out.kernel = detail::kernel_from_echelon(
            ech, M.ring(),
            [](const Poly& a, const Poly& b) { return Scalar(RatFun(a, b)); });
        for (auto& v : out.kernel) {
            auto raw = detail::to_poly_row(v);
            detail::PolyDomain::make_primitive(raw);
            for (std::size_t j = 0; j < v.size(); ++j) v[j] = Scalar(raw[j]);
        }
    }
    return out;
}

}  // namespace wbr
