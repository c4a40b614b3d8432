#pragma once

// Exact piecewise-quadratic curves on a closed rational domain. Persistence
// constructions instantiated on an interval are piecewise linear, or products
// of two piecewise-linear factors (tapers), so degree 2 suffices and every
// shape question (monotonicity, sign, minimum) has an exact rational answer.

#include <utility>
#include <vector>

#include "dpers/persistence.hpp"
#include "dpers/rational.hpp"

namespace dpers {

/// c0 + c1 x + c2 x^2
struct Quadratic {
    Rational c0{0};
    Rational c1{0};
    Rational c2{0};

    Rational operator()(const Rational& x) const { return c0 + x * (c1 + x * c2); }
    Rational slope(const Rational& x) const { return c1 + Rational(2) * c2 * x; }
    bool is_zero() const { return c0 == 0 && c1 == 0 && c2 == 0; }
    bool is_linear() const { return c2 == 0; }
    /// x -> p(a + b x)
    Quadratic compose(const Rational& a, const Rational& b) const;

    friend Quadratic operator+(const Quadratic& p, const Quadratic& q) { return {p.c0 + q.c0, p.c1 + q.c1, p.c2 + q.c2}; }
    friend Quadratic operator-(const Quadratic& p, const Quadratic& q) { return {p.c0 - q.c0, p.c1 - q.c1, p.c2 - q.c2}; }
    /// Both factors must be linear.
    friend Quadratic operator*(const Quadratic& p, const Quadratic& q);
    friend bool operator==(const Quadratic&, const Quadratic&) = default;
};

/// Closed sub-range [lo, hi] of a curve's domain.
struct Span {
    Rational lo;
    Rational hi;
    friend bool operator==(const Span&, const Span&) = default;
};

class Curve {
public:
    struct Piece {
        Rational lo;
        Rational hi;
        Quadratic poly;
    };

    /// Pieces must be contiguous with lo < hi, except a single degenerate piece.
    explicit Curve(std::vector<Piece> pieces);

    static Curve constant(const Rational& lo, const Rational& hi, const Rational& value);
    static Curve linear(const Rational& lo, const Rational& hi, const Rational& value_lo, const Rational& value_hi);
    /// The function on [0, hi], including its constant tail past the last knot.
    static Curve from_pl(const PiecewiseLinearFn& fn, const Rational& hi);

    const std::vector<Piece>& pieces() const noexcept { return pieces_; }
    const Rational& lo() const noexcept { return pieces_.front().lo; }
    const Rational& hi() const noexcept { return pieces_.back().hi; }

    /// Value at x; at a shared boundary the left piece wins.
    Rational operator()(const Rational& x) const;

    /// y -> f(a + b y), b != 0, on the preimage of the domain.
    Curve compose(const Rational& a, const Rational& b) const;
    Curve restrict(const Rational& lo, const Rational& hi) const;
    Curve split_at(const std::vector<Rational>& points) const;

    /// Operands must share the same domain.
    friend Curve operator-(const Curve& f, const Curve& g);
    friend Curve operator*(const Curve& f, const Curve& g);
    /// Pointwise max of two piecewise-linear curves on the same domain.
    static Curve max(const Curve& f, const Curve& g);

    /// First global minimizer and the minimum value.
    std::pair<Rational, Rational> minimum() const;

    /// Maximal parts of [lo, hi] where the curve strictly increases (resp.
    /// decreases), including upward (downward) jumps at piece boundaries.
    std::vector<Span> rising_parts(const Rational& lo, const Rational& hi) const;
    std::vector<Span> falling_parts(const Rational& lo, const Rational& hi) const;
    /// Pieces of [lo, hi] where the curve is not identically zero.
    std::vector<Span> nonzero_parts(const Rational& lo, const Rational& hi) const;
    /// Pieces where the curve takes a negative value.
    std::vector<Span> negative_parts() const;

private:
    std::vector<Span> monotone_violations(const Rational& lo, const Rational& hi, int sign) const;

    std::vector<Piece> pieces_;
};

}  // namespace dpers
