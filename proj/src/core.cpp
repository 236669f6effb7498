#include "projlab/core.hpp"

#include "projlab/errors.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace projlab {

Scale::Scale(int n) : n_(n) {
    if (n < 0 || n > kMaxLevel) {
        throw InvalidParameter("dyadic level must lie in [0, 62], got " + std::to_string(n));
    }
}

double Scale::delta() const noexcept { return std::ldexp(1.0, -n_); }

Direction::Direction(double theta) {
    double t = std::fmod(theta, kPi);
    if (t < 0) t += kPi;
    if (t >= kPi) t = 0.0;
    theta_ = t;
    cos_ = std::cos(t);
    sin_ = std::sin(t);
}

ExactSlope::ExactSlope(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw InvalidParameter("slope denominator is zero");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

double ExactSlope::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string ExactSlope::str() const { return num_.str() + "/" + den_.str(); }

std::strong_ordering operator<=>(const ExactSlope& a, const ExactSlope& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

ParamTriple::ParamTriple(int log2delta, Rational s, int log2r) : scale_(log2delta), s_(s), log2r_(log2r) {
    if (log2r < 0 || log2r > log2delta) {
        throw InvalidParameter("need delta <= r <= 1, i.e. 0 <= log2r <= log2delta");
    }
    if (s < Rational(0) || s > Rational(1)) {
        throw InvalidParameter("s must lie in [0, 1]");
    }
}

double ParamTriple::r() const noexcept { return std::ldexp(1.0, -log2r_); }

Rational ParamTriple::tau() const noexcept {
    if (scale_.n() == 0) return Rational(0);
    return Rational(log2r_, scale_.n());
}

double ParamTriple::threshold() const noexcept {
    return std::exp2(static_cast<double>(scale_.n()) * s_real());
}

namespace {

std::int64_t parse_int(const std::string& text, const std::string& whole) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw InvalidParameter("not a rational number: '" + whole + "'");
    }
    return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    if (auto slash = text.find('/'); slash != std::string::npos) {
        const auto p = parse_int(text.substr(0, slash), text);
        const auto q = parse_int(text.substr(slash + 1), text);
        if (q == 0) throw InvalidParameter("zero denominator in '" + text + "'");
        return Rational(p, q);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
        const std::string ip = text.substr(0, dot);
        const std::string fp = text.substr(dot + 1);
        if (fp.size() > 15) throw InvalidParameter("too many decimals in '" + text + "'");
        const bool negative = !ip.empty() && ip[0] == '-';
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        const std::int64_t whole = (ip.empty() || ip == "-") ? 0 : parse_int(ip, text);
        const std::int64_t frac = fp.empty() ? 0 : parse_int(fp, text);
        const std::int64_t mag = (whole < 0 ? -whole : whole) * scale + frac;
        return Rational(negative ? -mag : mag, scale);
    }
    return Rational(parse_int(text, text));
}

std::string format_rational(Rational q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

double arc_distance(const Direction& a, const Direction& b) {
    const double d = std::fabs(a.theta() - b.theta());
    return std::min(d, kPi - d);
}

std::vector<Direction> direction_grid(std::int64_t p) {
    if (p < 1) throw InvalidParameter("direction grid needs p >= 1");
    std::vector<Direction> grid;
    grid.reserve(static_cast<std::size_t>(p));
    for (std::int64_t k = 0; k < p; ++k) {
        grid.emplace_back(kPi * static_cast<double>(k) / static_cast<double>(p));
    }
    return grid;
}

Direction perpendicular_direction(const ExactSlope& slope) {
    return Direction(std::atan2(1.0, -slope.to_double()));
}

BigInt floor_pow2(Rational x) {
    const std::int64_t p = x.numerator();
    const std::int64_t q = x.denominator();
    if (p < 0) return 0;
    const std::int64_t whole = p / q;
    if (p % q == 0) return BigInt(1) << whole;
    // Largest K with K^q <= 2^p, searched in [2^whole, 2^(whole+1)).
    const BigInt target = BigInt(1) << p;
    BigInt lo = BigInt(1) << whole;
    BigInt hi = BigInt(1) << (whole + 1);
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, static_cast<unsigned>(q)) <= target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

}  // namespace projlab
