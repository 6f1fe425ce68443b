#include "gcw/scalar.hpp"

#include <cmath>
#include <sstream>

namespace gcw {

CircleScalar CircleScalar::rational(Rat q) { return tau(std::move(q), 0); }

CircleScalar CircleScalar::tau(Rat coeff, unsigned power) {
    CircleScalar s;
    if (coeff != 0) {
        s.c_.assign(power + 1, Rat(0));
        s.c_[power] = std::move(coeff);
    }
    return s;
}

void CircleScalar::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

CircleScalar& CircleScalar::operator+=(const CircleScalar& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

CircleScalar& CircleScalar::operator-=(const CircleScalar& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

CircleScalar operator*(const CircleScalar& a, const CircleScalar& b) {
    CircleScalar out;
    if (a.is_zero() || b.is_zero()) return out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    out.trim();
    return out;
}

CircleScalar CircleScalar::operator-() const {
    CircleScalar out = *this;
    for (auto& q : out.c_) q = -q;
    return out;
}

CircleScalar operator*(const Rat& q, const CircleScalar& s) {
    return CircleScalar::rational(q) * s;
}

double CircleScalar::to_double() const {
    const double tau = 2.0 * std::acos(-1.0);
    double acc = 0.0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * tau + c_[k].convert_to<double>();
    return acc;
}

std::string CircleScalar::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const Rat& q = c_[k];
        if (q == 0) continue;
        const bool neg = q < 0;
        const Rat a = neg ? Rat(-q) : q;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        if (k == 0) {
            os << gcw::to_string(a);
            continue;
        }
        if (a != 1) os << gcw::to_string(a) << "*";
        os << (k == 1 ? "2π" : "(2π)^" + std::to_string(k));
    }
    return os.str();
}

} // namespace gcw
