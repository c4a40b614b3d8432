#include "dpers/curve.hpp"

#include <algorithm>
#include <optional>

#include "dpers/errors.hpp"

namespace dpers {

Quadratic Quadratic::compose(const Rational& a, const Rational& b) const {
    return {c0 + c1 * a + c2 * a * a, c1 * b + Rational(2) * c2 * a * b, c2 * b * b};
}

Quadratic operator*(const Quadratic& p, const Quadratic& q) {
    if (!p.is_linear() || !q.is_linear()) throw DomainError("curve product would exceed degree 2");
    return {p.c0 * q.c0, p.c0 * q.c1 + p.c1 * q.c0, p.c1 * q.c1};
}

Curve::Curve(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw DomainError("curve needs at least one piece");
    if (pieces_.size() == 1 && pieces_.front().lo == pieces_.front().hi) return;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (!(pieces_[i].lo < pieces_[i].hi)) throw DomainError("curve piece must have lo < hi");
        if (i > 0 && pieces_[i].lo != pieces_[i - 1].hi) throw DomainError("curve pieces must be contiguous");
    }
}

Curve Curve::constant(const Rational& lo, const Rational& hi, const Rational& value) {
    return Curve({{lo, hi, Quadratic{value, 0, 0}}});
}

Curve Curve::linear(const Rational& lo, const Rational& hi, const Rational& value_lo, const Rational& value_hi) {
    if (lo == hi) return constant(lo, hi, value_lo);
    Rational slope = (value_hi - value_lo) / (hi - lo);
    return Curve({{lo, hi, Quadratic{value_lo - slope * lo, slope, 0}}});
}

Curve Curve::from_pl(const PiecewiseLinearFn& fn, const Rational& hi) {
    if (!(hi > 0)) throw DomainError("curve domain must have positive length");
    std::vector<Piece> pieces;
    const auto& k = fn.knots();
    for (std::size_t i = 0; i + 1 < k.size() && k[i].offset < hi; ++i) {
        auto seg = linear(k[i].offset, k[i + 1].offset, k[i].value, k[i + 1].value);
        pieces.push_back({k[i].offset, std::min(k[i + 1].offset, hi), seg.pieces_.front().poly});
    }
    if (fn.horizon() < hi) pieces.push_back({fn.horizon(), hi, Quadratic{k.back().value, 0, 0}});
    return Curve(std::move(pieces));
}

Rational Curve::operator()(const Rational& x) const {
    for (const auto& p : pieces_)
        if (p.lo <= x && x <= p.hi) return p.poly(x);
    throw DomainError("point " + to_string(x) + " outside curve domain");
}

Curve Curve::compose(const Rational& a, const Rational& b) const {
    if (b == 0) throw DomainError("degenerate affine map");
    std::vector<Piece> out;
    for (const auto& p : pieces_) {
        Rational y0 = (p.lo - a) / b;
        Rational y1 = (p.hi - a) / b;
        if (b < 0) std::swap(y0, y1);
        out.push_back({y0, y1, p.poly.compose(a, b)});
    }
    if (b < 0) std::reverse(out.begin(), out.end());
    return Curve(std::move(out));
}

Curve Curve::restrict(const Rational& lo, const Rational& hi) const {
    if (lo < this->lo() || hi > this->hi() || hi < lo) throw DomainError("restriction outside curve domain");
    if (lo == hi) {
        for (const auto& p : pieces_)
            if (p.lo <= lo && lo <= p.hi) return Curve({{lo, hi, p.poly}});
    }
    std::vector<Piece> out;
    for (const auto& p : pieces_) {
        Rational a = std::max(p.lo, lo);
        Rational b = std::min(p.hi, hi);
        if (a < b) out.push_back({a, b, p.poly});
    }
    return Curve(std::move(out));
}

Curve Curve::split_at(const std::vector<Rational>& points) const {
    std::vector<Piece> out;
    for (const auto& p : pieces_) {
        Rational start = p.lo;
        for (const auto& x : points) {
            if (start < x && x < p.hi) {
                out.push_back({start, x, p.poly});
                start = x;
            }
        }
        out.push_back({start, p.hi, p.poly});
    }
    return Curve(std::move(out));
}

namespace {

std::vector<Rational> boundaries(const Curve& f) {
    std::vector<Rational> out;
    for (const auto& p : f.pieces()) out.push_back(p.lo);
    out.push_back(f.hi());
    return out;
}

std::pair<Curve, Curve> common_grid(const Curve& f, const Curve& g) {
    if (f.lo() != g.lo() || f.hi() != g.hi()) throw DomainError("curves have different domains");
    auto points = boundaries(f);
    auto more = boundaries(g);
    points.insert(points.end(), more.begin(), more.end());
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return {f.split_at(points), g.split_at(points)};
}

template <class Op>
Curve zip(const Curve& f, const Curve& g, Op op) {
    auto [a, b] = common_grid(f, g);
    std::vector<Curve::Piece> out;
    for (std::size_t i = 0; i < a.pieces().size(); ++i) {
        const auto& p = a.pieces()[i];
        out.push_back({p.lo, p.hi, op(p.poly, b.pieces()[i].poly)});
    }
    return Curve(std::move(out));
}

void merge_into(std::vector<Span>& spans, Span s) {
    if (!spans.empty() && spans.back().hi == s.lo) {
        spans.back().hi = s.hi;
        return;
    }
    spans.push_back(std::move(s));
}

}  // namespace

Curve operator-(const Curve& f, const Curve& g) {
    return zip(f, g, [](const Quadratic& p, const Quadratic& q) { return p - q; });
}

Curve operator*(const Curve& f, const Curve& g) {
    return zip(f, g, [](const Quadratic& p, const Quadratic& q) { return p * q; });
}

Curve Curve::max(const Curve& f, const Curve& g) {
    auto [a, b] = common_grid(f, g);
    std::vector<Piece> out;
    for (std::size_t i = 0; i < a.pieces().size(); ++i) {
        const auto& p = a.pieces()[i];
        const auto& q = b.pieces()[i];
        if (!p.poly.is_linear() || !q.poly.is_linear()) throw DomainError("max is defined for piecewise-linear curves");
        Quadratic d = p.poly - q.poly;
        Rational dl = d(p.lo);
        Rational dh = d(p.hi);
        auto pick = [&](const Rational& lo, const Rational& hi) {
            Rational mid = (lo + hi) / 2;
            out.push_back({lo, hi, d(mid) >= 0 ? p.poly : q.poly});
        };
        if ((dl < 0 && dh > 0) || (dl > 0 && dh < 0)) {
            Rational root = -d.c0 / d.c1;
            pick(p.lo, root);
            pick(root, p.hi);
        } else if (p.lo == p.hi) {
            out.push_back({p.lo, p.hi, dl >= 0 ? p.poly : q.poly});
        } else {
            pick(p.lo, p.hi);
        }
    }
    return Curve(std::move(out));
}

std::pair<Rational, Rational> Curve::minimum() const {
    std::optional<std::pair<Rational, Rational>> best;
    auto consider = [&best](const Rational& x, const Rational& v) {
        if (!best || v < best->second) best = {x, v};
    };
    for (const auto& p : pieces_) {
        consider(p.lo, p.poly(p.lo));
        if (p.poly.c2 > 0) {
            Rational vertex = -p.poly.c1 / (Rational(2) * p.poly.c2);
            if (p.lo < vertex && vertex < p.hi) consider(vertex, p.poly(vertex));
        }
        consider(p.hi, p.poly(p.hi));
    }
    return *best;
}

std::vector<Span> Curve::monotone_violations(const Rational& lo, const Rational& hi, int sign) const {
    std::vector<Span> spans;
    auto bad = [sign](const Rational& slope) { return sign > 0 ? slope > 0 : slope < 0; };
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const auto& p = pieces_[i];
        // Jump at the boundary with the previous piece.
        if (i > 0 && lo <= p.lo && p.lo < hi) {
            Rational jump = p.poly(p.lo) - pieces_[i - 1].poly(p.lo);
            if (bad(jump)) merge_into(spans, {p.lo, p.lo});
        }
        Rational a = std::max(p.lo, lo);
        Rational b = std::min(p.hi, hi);
        if (!(a < b)) continue;
        Rational sa = p.poly.slope(a);
        Rational sb = p.poly.slope(b);
        bool ba = bad(sa);
        bool bb = bad(sb);
        if (ba && bb) {
            merge_into(spans, {a, b});
        } else if (ba || bb) {
            Rational root = -p.poly.c1 / (Rational(2) * p.poly.c2);
            merge_into(spans, ba ? Span{a, root} : Span{root, b});
        }
    }
    return spans;
}

std::vector<Span> Curve::rising_parts(const Rational& lo, const Rational& hi) const {
    return monotone_violations(lo, hi, +1);
}

std::vector<Span> Curve::falling_parts(const Rational& lo, const Rational& hi) const {
    return monotone_violations(lo, hi, -1);
}

std::vector<Span> Curve::nonzero_parts(const Rational& lo, const Rational& hi) const {
    std::vector<Span> spans;
    if (lo == hi) {
        if ((*this)(lo) != 0) spans.push_back({lo, hi});
        return spans;
    }
    for (const auto& p : pieces_) {
        Rational a = std::max(p.lo, lo);
        Rational b = std::min(p.hi, hi);
        if (a < b && !p.poly.is_zero()) merge_into(spans, {a, b});
    }
    return spans;
}

std::vector<Span> Curve::negative_parts() const {
    std::vector<Span> spans;
    for (const auto& p : pieces_) {
        if (Curve({p}).minimum().second < 0) merge_into(spans, {p.lo, p.hi});
    }
    return spans;
}

}  // namespace dpers
