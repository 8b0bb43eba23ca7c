#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wpvol {

using BigInt = boost::multiprecision::cpp_int;
using Float100 = boost::multiprecision::cpp_dec_float_100;

// Reduced fraction p/q with q > 0. Zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt n, BigInt d);

    static Rational parse(const std::string& s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Rational& o) const { return num_ * o.den_ <= o.num_ * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    std::string str() const;  // always "p/q"
    Float100 to_float() const;
    double to_double() const;

private:
    BigInt num_, den_;
    void normalize();
};

BigInt factorial(int n);
BigInt binomial(int n, int k);
// m!! for odd m >= -1, with (-1)!! = 1.
BigInt odd_double_factorial(long m);

// Element of Q[pi^2]: c_[k] multiplies pi^(2k). Trailing zeros trimmed;
// zero element has an empty coefficient list.
class RingElem {
public:
    RingElem() {}
    RingElem(const Rational& r);
    RingElem(long long v);

    // c * pi^(2k)
    static RingElem pi2(int k, const Rational& c = Rational(1));
    // (-4 pi^2)^j, the shift-operator weight
    static RingElem neg4pi2_pow(int j);

    bool is_zero() const { return c_.empty(); }
    // highest power of pi^2 present; -1 for the zero element
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int k) const;
    bool is_rational() const { return c_.size() <= 1; }
    // true when every pi^2-coefficient is >= 0
    bool all_coeffs_nonnegative() const;

    RingElem operator-() const;
    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator*(const RingElem& o) const;
    RingElem& operator+=(const RingElem& o) { return *this = *this + o; }
    RingElem& operator-=(const RingElem& o) { return *this = *this - o; }
    RingElem& operator*=(const RingElem& o) { return *this = *this * o; }

    RingElem scaled(const Rational& r) const;
    RingElem div_by(const Rational& r) const;

    bool operator==(const RingElem& o) const { return c_ == o.c_; }
    bool operator!=(const RingElem& o) const { return !(*this == o); }

    // Numeric value with pi carried to `digits` significant decimal digits
    // (digits >= 15).
    Float100 eval(int digits) const;
    double eval_double() const;

    std::string str() const;

    const std::vector<Rational>& coeffs() const { return c_; }
    static RingElem from_coeffs(std::vector<Rational> c);

private:
    std::vector<Rational> c_;
    void trim();
};

}  // namespace wpvol
