#include "wpvol/ring.hpp"

#include <boost/math/constants/constants.hpp>

#include <sstream>

namespace wpvol {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s), 1);
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

std::string Rational::str() const {
    std::ostringstream os;
    os << num_ << "/" << den_;
    return os.str();
}

Float100 Rational::to_float() const {
    return Float100(num_) / Float100(den_);
}

double Rational::to_double() const { return to_float().convert_to<double>(); }

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

BigInt odd_double_factorial(long m) {
    if (m < -1 || m % 2 == 0) throw std::invalid_argument("odd_double_factorial: even or < -1");
    BigInt r = 1;
    for (long v = m; v >= 3; v -= 2) r *= v;
    return r;
}

RingElem::RingElem(const Rational& r) {
    if (!r.is_zero()) c_.push_back(r);
}

RingElem::RingElem(long long v) : RingElem(Rational(v)) {}

RingElem RingElem::pi2(int k, const Rational& c) {
    if (k < 0) throw std::invalid_argument("RingElem::pi2: negative power");
    RingElem e;
    if (c.is_zero()) return e;
    e.c_.assign(k + 1, Rational(0));
    e.c_[k] = c;
    return e;
}

RingElem RingElem::neg4pi2_pow(int j) {
    BigInt p = 1;
    for (int i = 0; i < j; ++i) p *= -4;
    return pi2(j, Rational(p, 1));
}

Rational RingElem::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[k];
}

bool RingElem::all_coeffs_nonnegative() const {
    for (const auto& r : c_)
        if (r.is_negative()) return false;
    return true;
}

void RingElem::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RingElem RingElem::operator-() const {
    RingElem r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

RingElem RingElem::operator+(const RingElem& o) const {
    RingElem r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i < c_.size()) r.c_[i] += c_[i];
        if (i < o.c_.size()) r.c_[i] += o.c_[i];
    }
    r.trim();
    return r;
}

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::operator*(const RingElem& o) const {
    RingElem r;
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    r.trim();
    return r;
}

RingElem RingElem::scaled(const Rational& s) const {
    RingElem r;
    if (s.is_zero()) return r;
    r.c_ = c_;
    for (auto& v : r.c_) v *= s;
    return r;
}

RingElem RingElem::div_by(const Rational& s) const {
    if (s.is_zero()) throw std::invalid_argument("RingElem: division by zero scalar");
    return scaled(Rational(s.den(), s.num()));
}

Float100 RingElem::eval(int digits) const {
    if (digits < 15) throw std::invalid_argument("RingElem::eval: digits must be >= 15");
    if (digits > 90) digits = 90;
    static const Float100 pi_full = boost::math::constants::pi<Float100>();
    // keep digits+2 significant digits of pi; the slack absorbs the error
    // amplification from high pi^2-powers
    Float100 scale = boost::multiprecision::pow(Float100(10), digits + 1);
    Float100 pi_t = boost::multiprecision::floor(pi_full * scale) / scale;
    Float100 pi2 = pi_t * pi_t;
    Float100 acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * pi2 + c_[i].to_float();
    return acc;
}

double RingElem::eval_double() const {
    if (c_.empty()) return 0.0;
    return eval(40).convert_to<double>();
}

std::string RingElem::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[k].str();
        if (k == 1)
            os << "*pi^2";
        else if (k > 1)
            os << "*pi^" << 2 * k;
        first = false;
    }
    return os.str();
}

RingElem RingElem::from_coeffs(std::vector<Rational> c) {
    RingElem e;
    e.c_ = std::move(c);
    e.trim();
    return e;
}

}  // namespace wpvol
