#include "mzv/bigfixed.hpp"

#include "mzv/errors.hpp"

namespace mzv {

BigFixed BigFixed::from_int(long v, int frac_bits) {
    BigFixed out(frac_bits);
    out.mant_ = v;
    out.mant_ <<= frac_bits;
    return out;
}

BigFixed BigFixed::from_ratio(const mpz_class& num, const mpz_class& den, int frac_bits) {
    if (den == 0) throw InvalidParams("BigFixed: zero denominator");
    BigFixed out(frac_bits);
    mpz_class scaled = num << frac_bits;
    // round toward zero
    mpz_tdiv_q(out.mant_.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    return out;
}

BigFixed BigFixed::pow10_inv(int pow10, int frac_bits) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(pow10));
    return from_ratio(1, den, frac_bits);
}

BigFixed& BigFixed::operator+=(const BigFixed& o) {
    if (frac_bits_ != o.frac_bits_) throw InvalidParams("BigFixed: precision mismatch");
    mant_ += o.mant_;
    return *this;
}

BigFixed& BigFixed::operator-=(const BigFixed& o) {
    if (frac_bits_ != o.frac_bits_) throw InvalidParams("BigFixed: precision mismatch");
    mant_ -= o.mant_;
    return *this;
}

BigFixed BigFixed::mul(const BigFixed& o) const {
    if (frac_bits_ != o.frac_bits_) throw InvalidParams("BigFixed: precision mismatch");
    BigFixed out(frac_bits_);
    mpz_class prod = mant_ * o.mant_;
    mpz_tdiv_q_2exp(out.mant_.get_mpz_t(), prod.get_mpz_t(), static_cast<mp_bitcnt_t>(frac_bits_));
    return out;
}

BigFixed BigFixed::div_int(const mpz_class& d) const {
    if (d == 0) throw InvalidParams("BigFixed: division by zero");
    BigFixed out(frac_bits_);
    mpz_tdiv_q(out.mant_.get_mpz_t(), mant_.get_mpz_t(), d.get_mpz_t());
    return out;
}

BigFixed BigFixed::scaled_int(long c) const {
    BigFixed out(frac_bits_);
    out.mant_ = mant_ * c;
    return out;
}

BigFixed BigFixed::abs() const {
    BigFixed out(frac_bits_);
    out.mant_ = ::abs(mant_);
    return out;
}

BigFixed BigFixed::rescaled(int frac_bits) const {
    BigFixed out(frac_bits);
    if (frac_bits >= frac_bits_)
        out.mant_ = mant_ << (frac_bits - frac_bits_);
    else
        mpz_tdiv_q_2exp(out.mant_.get_mpz_t(), mant_.get_mpz_t(),
                        static_cast<mp_bitcnt_t>(frac_bits_ - frac_bits));
    return out;
}

int BigFixed::compare(const BigFixed& o) const {
    if (frac_bits_ != o.frac_bits_) throw InvalidParams("BigFixed: precision mismatch");
    return cmp(mant_, o.mant_);
}

std::string BigFixed::to_decimal(int digits) const {
    mpz_class m = mant_;
    bool neg = m < 0;
    if (neg) m = -m;
    mpz_class ip = m >> frac_bits_;
    mpz_class frac = m - (ip << frac_bits_);
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    frac *= p10;
    frac >>= frac_bits_;
    std::string fs = frac.get_str();
    if (static_cast<int>(fs.size()) < digits) fs.insert(0, static_cast<size_t>(digits) - fs.size(), '0');
    return (neg ? "-" : "") + ip.get_str() + "." + fs;
}

double BigFixed::to_double() const {
    mpf_class f(mant_, 64);
    f /= mpf_class(mpz_class(1) << frac_bits_, 64);
    return f.get_d();
}

}  // namespace mzv
