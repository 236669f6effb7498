#pragma once

// Dyadic scales, directions on the half circle, exact slopes and the
// (delta, s, r) parameter triple shared by every other module.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

namespace projlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<std::int64_t>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr int kMaxLevel = 62;

/// Dyadic scale delta = 2^-n.
class Scale {
public:
    Scale() = default;
    explicit Scale(int n);

    int n() const noexcept { return n_; }
    double delta() const noexcept;
    /// 2^n, the lattice side length.
    std::int64_t side() const noexcept { return std::int64_t{1} << n_; }

    friend bool operator==(Scale, Scale) = default;

private:
    int n_ = 0;
};

/// Unit vector on the half circle, theta in [0, pi).
class Direction {
public:
    Direction() : Direction(0.0) {}
    /// Any real angle; reduced modulo pi.
    explicit Direction(double theta);

    double theta() const noexcept { return theta_; }
    double cos() const noexcept { return cos_; }
    double sin() const noexcept { return sin_; }

    friend bool operator==(const Direction& a, const Direction& b) { return a.theta_ == b.theta_; }
    friend auto operator<=>(const Direction& a, const Direction& b) { return a.theta_ <=> b.theta_; }

private:
    double theta_;
    double cos_;
    double sin_;
};

/// Reduced fraction num/den with den > 0. Comparisons are exact.
class ExactSlope {
public:
    ExactSlope() : num_(0), den_(1) {}
    ExactSlope(BigInt num, BigInt den);
    ExactSlope(std::int64_t num, std::int64_t den) : ExactSlope(BigInt(num), BigInt(den)) {}

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }
    double to_double() const;
    std::string str() const;

    friend bool operator==(const ExactSlope&, const ExactSlope&) = default;
    friend std::strong_ordering operator<=>(const ExactSlope& a, const ExactSlope& b);

private:
    BigInt num_;
    BigInt den_;
};

/// delta = 2^-a, s rational, r = 2^-b with 0 <= b <= a; tau = b/a.
class ParamTriple {
public:
    ParamTriple(int log2delta, Rational s, int log2r);

    Scale scale() const noexcept { return scale_; }
    int log2delta() const noexcept { return scale_.n(); }
    int log2r() const noexcept { return log2r_; }
    Rational s() const noexcept { return s_; }
    double s_real() const noexcept { return boost::rational_cast<double>(s_); }
    double delta() const noexcept { return scale_.delta(); }
    double r() const noexcept;
    Rational tau() const noexcept;
    double tau_real() const noexcept { return boost::rational_cast<double>(tau()); }
    /// delta^-s
    double threshold() const noexcept;

private:
    Scale scale_;
    Rational s_;
    int log2r_;
};

/// Parses "p/q", an integer, or a finite decimal ("0.85") into an exact rational.
Rational parse_rational(const std::string& text);
std::string format_rational(Rational q);

/// Angular distance on the quotient circle [0, pi); result in [0, pi/2].
double arc_distance(const Direction& a, const Direction& b);

/// theta_k = pi k / p for k = 0..p-1.
std::vector<Direction> direction_grid(std::int64_t p);

/// Direction of (-slope, 1)/|(-slope, 1)|: lines of this slope project to points.
Direction perpendicular_direction(const ExactSlope& slope);

/// floor(2^x) for rational x, exact.
BigInt floor_pow2(Rational x);

}  // namespace projlab
