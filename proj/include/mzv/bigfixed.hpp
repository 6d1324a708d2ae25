#pragma once

#include <gmpxx.h>

#include <string>

namespace mzv {

/// Fixed-point real: mantissa * 2^{-frac_bits}. Add/sub are exact;
/// multiply and divide round toward zero, at most 1 ulp off.
class BigFixed {
public:
    BigFixed() : frac_bits_(0) {}
    explicit BigFixed(int frac_bits) : frac_bits_(frac_bits) {}

    static BigFixed from_int(long v, int frac_bits);
    static BigFixed from_ratio(const mpz_class& num, const mpz_class& den, int frac_bits);
    /// 10^{-pow10} at the given precision, e.g. a decimal tolerance.
    static BigFixed pow10_inv(int pow10, int frac_bits);

    int frac_bits() const { return frac_bits_; }
    const mpz_class& mantissa() const { return mant_; }
    bool is_zero() const { return mant_ == 0; }

    BigFixed& operator+=(const BigFixed& o);
    BigFixed& operator-=(const BigFixed& o);
    friend BigFixed operator+(BigFixed a, const BigFixed& b) { return a += b; }
    friend BigFixed operator-(BigFixed a, const BigFixed& b) { return a -= b; }

    BigFixed mul(const BigFixed& o) const;
    BigFixed div_int(const mpz_class& d) const;
    BigFixed scaled_int(long c) const;  // exact
    BigFixed abs() const;

    /// Change precision (left-shift exact, right-shift truncates).
    BigFixed rescaled(int frac_bits) const;

    int compare(const BigFixed& o) const;
    bool operator<(const BigFixed& o) const { return compare(o) < 0; }
    bool operator<=(const BigFixed& o) const { return compare(o) <= 0; }

    std::string to_decimal(int digits) const;
    double to_double() const;

private:
    mpz_class mant_;
    int frac_bits_;
};

}  // namespace mzv
