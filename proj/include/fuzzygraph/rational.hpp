#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fuzzygraph {

/// Exact rational number over checked 64-bit integers.
///
/// Memberships are compared against thresholds with `>=`, so they are kept
/// exact: every value read from a file is a finite decimal, and min, product
/// and Lukasiewicz aggregation of decimals stay decimal. Arithmetic that would
/// leave the 64-bit range throws std::overflow_error instead of rounding.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t numerator, std::int64_t denominator = 1);

    /// Parses "3", "0.25", "1.000". Up to 18 fractional digits; no sign, no exponent.
    static Rational parse_decimal(std::string_view text);

    [[nodiscard]] std::int64_t numerator() const noexcept { return num_; }
    [[nodiscard]] std::int64_t denominator() const noexcept { return den_; }

    /// Shortest exact decimal with at least one fractional digit ("1.0",
    /// "0.25"); "n/d" when the value has no finite decimal expansion.
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& other) { return *this = *this + other; }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

private:
    static Rational from_wide(__int128 numerator, __int128 denominator);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace fuzzygraph
