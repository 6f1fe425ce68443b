#include "gcw/fieldform.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace gcw {

int FieldKey::form_degree() const { return std::popcount(dmask); }

namespace {

FieldKey empty_key(const Worldvolume& wv) {
    FieldKey k;
    k.trig.assign(wv.dimension(), std::nullopt);
    k.tpow.assign(wv.dimension(), 0);
    return k;
}

/// sin/cos of a possibly zero or negative frequency, reduced to the stored
/// convention (freq >= 1): returns the sign factor and the factor itself,
/// or nullopt when the function is identically zero (sin 0).
std::optional<std::pair<int, std::optional<TrigFactor>>> reduce_trig(bool is_cos, long long freq) {
    if (freq == 0) return is_cos ? std::make_optional(std::make_pair(1, std::optional<TrigFactor>{}))
                                 : std::nullopt;
    int sign = 1;
    if (freq < 0) {
        freq = -freq;
        if (!is_cos) sign = -1;
    }
    return std::make_pair(sign, std::make_optional(TrigFactor{is_cos, static_cast<std::uint32_t>(freq)}));
}

/// Product of two optional trig factors on one coordinate: list of
/// (rational coefficient, factor) summands via product-to-sum.
std::vector<std::pair<Rat, std::optional<TrigFactor>>> trig_product(const std::optional<TrigFactor>& a,
                                                                    const std::optional<TrigFactor>& b) {
    if (!a && !b) return {{Rat(1), std::nullopt}};
    if (!a) return {{Rat(1), b}};
    if (!b) return {{Rat(1), a}};
    const auto p = static_cast<long long>(a->freq);
    const auto q = static_cast<long long>(b->freq);
    std::vector<std::pair<bool, std::pair<Rat, long long>>> raw; // (is_cos, (coeff, freq))
    if (!a->is_cos && !b->is_cos) {
        // sin p sin q = 1/2 cos(p-q) - 1/2 cos(p+q)
        raw = {{true, {Rat(1, 2), p - q}}, {true, {Rat(-1, 2), p + q}}};
    } else if (!a->is_cos && b->is_cos) {
        // sin p cos q = 1/2 sin(p+q) + 1/2 sin(p-q)
        raw = {{false, {Rat(1, 2), p + q}}, {false, {Rat(1, 2), p - q}}};
    } else if (a->is_cos && !b->is_cos) {
        // cos p sin q = 1/2 sin(p+q) - 1/2 sin(p-q)
        raw = {{false, {Rat(1, 2), p + q}}, {false, {Rat(-1, 2), p - q}}};
    } else {
        // cos p cos q = 1/2 cos(p-q) + 1/2 cos(p+q)
        raw = {{true, {Rat(1, 2), p - q}}, {true, {Rat(1, 2), p + q}}};
    }
    std::vector<std::pair<Rat, std::optional<TrigFactor>>> out;
    for (const auto& [is_cos, cf] : raw) {
        auto red = reduce_trig(is_cos, cf.second);
        if (!red) continue;
        Rat c = cf.first;
        if (red->first < 0) c = -c;
        out.emplace_back(std::move(c), red->second);
    }
    return out;
}

/// Koszul sign for wedging two disjoint ascending differential sets: counts
/// pairs (i in a, j in b) with i > j.
int interleave_sign(std::uint64_t a, std::uint64_t b) {
    int inversions = 0;
    for (std::uint64_t bits = b; bits != 0; bits &= bits - 1) {
        const int j = std::countr_zero(bits);
        inversions += std::popcount(a & ~((std::uint64_t(1) << (j + 1)) - 1));
    }
    return inversions % 2 == 0 ? 1 : -1;
}

} // namespace

FieldForm FieldForm::zero(WvPtr wv) {
    FieldForm f;
    f.wv_ = std::move(wv);
    if (!f.wv_) throw Error("FieldForm: null worldvolume");
    return f;
}

FieldForm FieldForm::constant(WvPtr wv, CircleScalar c) {
    FieldForm f = zero(std::move(wv));
    f.add_term(empty_key(*f.wv_), c);
    return f;
}

FieldForm FieldForm::differential(WvPtr wv, std::size_t coord) {
    FieldForm f = zero(std::move(wv));
    if (coord >= f.wv_->dimension()) throw Error("differential: coordinate index out of range");
    FieldKey k = empty_key(*f.wv_);
    k.dmask = std::uint64_t(1) << coord;
    f.add_term(k, CircleScalar::rational(1));
    return f;
}

FieldForm FieldForm::trig(WvPtr wv, std::size_t coord, bool is_cos, std::uint32_t freq) {
    FieldForm f = zero(std::move(wv));
    if (coord >= f.wv_->dimension()) throw Error("trig: coordinate index out of range");
    if (f.wv_->factor(coord).kind != FactorKind::circle)
        throw DomainError("trig factor on non-circle coordinate '" + f.wv_->factor(coord).coord + "'");
    if (freq == 0) throw DomainError("trig frequency must be >= 1");
    FieldKey k = empty_key(*f.wv_);
    k.trig[coord] = TrigFactor{is_cos, freq};
    f.add_term(k, CircleScalar::rational(1));
    return f;
}

FieldForm FieldForm::interval_power(WvPtr wv, std::size_t coord, std::uint32_t m) {
    FieldForm f = zero(std::move(wv));
    if (coord >= f.wv_->dimension()) throw Error("interval_power: coordinate index out of range");
    if (f.wv_->factor(coord).kind != FactorKind::interval)
        throw DomainError("monomial factor on non-interval coordinate '" +
                          f.wv_->factor(coord).coord + "'");
    FieldKey k = empty_key(*f.wv_);
    k.tpow[coord] = m;
    f.add_term(k, CircleScalar::rational(1));
    return f;
}

void FieldForm::add_term(const FieldKey& k, const CircleScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    if (term_budget() != 0 && terms_.size() > term_budget())
        throw TermBudgetError("field form exceeded term budget");
}

std::optional<int> FieldForm::degree() const {
    std::optional<int> d;
    for (const auto& [k, c] : terms_) {
        if (!d)
            d = k.form_degree();
        else if (*d != k.form_degree())
            return std::nullopt;
    }
    return d;
}

bool FieldForm::homogeneous_of_degree(int d) const {
    for (const auto& [k, c] : terms_)
        if (k.form_degree() != d) return false;
    return true;
}

FieldForm FieldForm::operator-() const {
    FieldForm out = zero(wv_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

FieldForm& FieldForm::operator+=(const FieldForm& o) {
    if (!same_worldvolume(wv_, o.wv_)) throw SignatureMismatchError("field forms on different worldvolumes");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

FieldForm& FieldForm::operator-=(const FieldForm& o) {
    if (!same_worldvolume(wv_, o.wv_)) throw SignatureMismatchError("field forms on different worldvolumes");
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

FieldForm operator*(const FieldForm& a, const FieldForm& b) {
    if (!same_worldvolume(a.wv_, b.wv_))
        throw SignatureMismatchError("wedge: field forms on different worldvolumes");
    FieldForm out = FieldForm::zero(a.wv_);
    const std::size_t dim = a.wv_->dimension();
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            if ((ka.dmask & kb.dmask) != 0) continue;
            const int sign = interleave_sign(ka.dmask, kb.dmask);
            // per-coordinate trig products expand into a small sum
            std::vector<std::pair<Rat, FieldKey>> partial;
            FieldKey base = ka;
            base.dmask = ka.dmask | kb.dmask;
            for (std::size_t i = 0; i < dim; ++i) base.tpow[i] = ka.tpow[i] + kb.tpow[i];
            partial.emplace_back(sign, base);
            for (std::size_t i = 0; i < dim; ++i) {
                if (!kb.trig[i]) continue;
                auto prods = trig_product(ka.trig[i], kb.trig[i]);
                std::vector<std::pair<Rat, FieldKey>> next;
                for (const auto& [coeff, key] : partial) {
                    for (const auto& [pc, pf] : prods) {
                        FieldKey nk = key;
                        nk.trig[i] = pf;
                        next.emplace_back(coeff * pc, nk);
                    }
                }
                partial = std::move(next);
            }
            const CircleScalar cc = ca * cb;
            for (const auto& [coeff, key] : partial) out.add_term(key, coeff * cc);
        }
    }
    return out;
}

bool FieldForm::operator==(const FieldForm& o) const {
    return same_worldvolume(wv_, o.wv_) && terms_ == o.terms_;
}

FieldForm scale(const CircleScalar& c, const FieldForm& f) {
    FieldForm out = FieldForm::zero(f.worldvolume());
    for (const auto& [k, tc] : f.terms()) out.add_term(k, c * tc);
    return out;
}

FieldForm scale(const Rat& q, const FieldForm& f) { return scale(CircleScalar::rational(q), f); }

FieldForm d_dR(const FieldForm& f) {
    const auto& wv = *f.worldvolume();
    FieldForm out = FieldForm::zero(f.worldvolume());
    for (const auto& [k, c] : f.terms()) {
        for (std::size_t j = 0; j < wv.dimension(); ++j) {
            const std::uint64_t bit = std::uint64_t(1) << j;
            if (k.dmask & bit) continue;
            // d inserts dθ_j in front; sorting it into place passes the
            // differentials with smaller index.
            const int sign =
                std::popcount(k.dmask & (bit - 1)) % 2 == 0 ? 1 : -1;
            if (wv.factor(j).kind == FactorKind::circle) {
                if (!k.trig[j]) continue;
                const TrigFactor t = *k.trig[j];
                FieldKey nk = k;
                nk.dmask |= bit;
                nk.trig[j] = TrigFactor{!t.is_cos, t.freq};
                // d sin(2πk θ) = 2πk cos(2πk θ) dθ ; d cos = -2πk sin dθ
                Rat factor = Rat(sign) * Rat(t.freq);
                if (t.is_cos) factor = -factor;
                out.add_term(nk, CircleScalar::tau(factor, 1) * c);
            } else {
                if (k.tpow[j] == 0) continue;
                FieldKey nk = k;
                nk.dmask |= bit;
                nk.tpow[j] = k.tpow[j] - 1;
                out.add_term(nk, CircleScalar::rational(Rat(sign) * Rat(k.tpow[j])) * c);
            }
        }
    }
    return out;
}

CircleScalar integrate(const FieldForm& f) {
    const auto& wv = *f.worldvolume();
    const std::uint64_t full = wv.dimension() >= 64
                                   ? ~std::uint64_t(0)
                                   : ((std::uint64_t(1) << wv.dimension()) - 1);
    CircleScalar total;
    for (const auto& [k, c] : f.terms()) {
        if (k.dmask != full)
            throw DomainError("integrate: non-top-degree term in the integrand");
        Rat factor(1);
        bool zero = false;
        for (std::size_t j = 0; j < wv.dimension() && !zero; ++j) {
            if (wv.factor(j).kind == FactorKind::circle) {
                if (k.trig[j]) zero = true; // ∫ sin/cos over the full circle
            } else {
                factor /= Rat(k.tpow[j] + 1); // ∫_0^1 t^m dt
            }
        }
        if (!zero) total += factor * c;
    }
    return total;
}

FieldForm restrict_to_end(const FieldForm& f, int endpoint) {
    if (endpoint != 0 && endpoint != 1) throw DomainError("restrict_to_end: endpoint must be 0 or 1");
    const auto& wv = *f.worldvolume();
    const auto idx = wv.interval_index();
    if (!idx) throw DomainError("restrict_to_end: worldvolume has no interval factor");
    WvPtr bwv = wv.boundary();
    FieldForm out = FieldForm::zero(bwv);
    const std::uint64_t bit = std::uint64_t(1) << *idx;
    const std::uint64_t below = bit - 1;
    for (const auto& [k, c] : f.terms()) {
        if (k.dmask & bit) continue; // dt dies on the slice
        if (endpoint == 0 && k.tpow[*idx] > 0) continue; // t^m at t=0
        FieldKey nk;
        nk.trig.reserve(wv.dimension() - 1);
        nk.tpow.reserve(wv.dimension() - 1);
        for (std::size_t j = 0; j < wv.dimension(); ++j) {
            if (j == *idx) continue;
            nk.trig.push_back(k.trig[j]);
            nk.tpow.push_back(k.tpow[j]);
        }
        nk.dmask = (k.dmask & below) | ((k.dmask & ~below & ~bit) >> 1);
        out.add_term(nk, c);
    }
    return out;
}

namespace {

/// Gauss-Legendre nodes/weights on [0,1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    const double pi = std::acos(-1.0);
    for (int i = 0; i < n; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            dp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = 0.5 * (1.0 - z); // map [-1,1] -> [0,1], mirrored order is fine
        w[i] = 1.0 / ((1.0 - z * z) * dp * dp);
    }
}

} // namespace

double quadrature(const FieldForm& f) {
    const auto& wv = *f.worldvolume();
    const double tau = 2.0 * std::acos(-1.0);
    double total = 0.0;
    for (const auto& [k, c] : f.terms()) {
        double v = c.to_double();
        for (std::size_t j = 0; j < wv.dimension(); ++j) {
            if (wv.factor(j).kind == FactorKind::circle) {
                if (!k.trig[j]) continue; // ∫ 1 dθ = 1
                const TrigFactor t = *k.trig[j];
                const int N = static_cast<int>(2 * t.freq + 3);
                double s = 0.0;
                for (int i = 0; i < N; ++i) {
                    const double arg = tau * t.freq * (static_cast<double>(i) / N);
                    s += t.is_cos ? std::cos(arg) : std::sin(arg);
                }
                v *= s / N;
            } else {
                const int n = static_cast<int>(k.tpow[j] / 2 + 2);
                std::vector<double> x, w;
                gauss_legendre(n, x, w);
                double s = 0.0;
                for (int i = 0; i < n; ++i) s += w[i] * std::pow(x[i], static_cast<double>(k.tpow[j]));
                v *= s;
            }
        }
        total += v;
    }
    return total;
}

std::string to_string(const FieldForm& f) {
    if (f.is_zero()) return "0";
    const auto& wv = *f.worldvolume();
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (std::size_t j = 0; j < wv.dimension(); ++j) {
            if (k.trig[j])
                os << "*" << (k.trig[j]->is_cos ? "cos(" : "sin(") << k.trig[j]->freq << " "
                   << wv.factor(j).coord << ")";
            if (k.tpow[j] > 0) {
                os << "*" << wv.factor(j).coord;
                if (k.tpow[j] > 1) os << "^" << k.tpow[j];
            }
        }
        for (std::size_t j = 0; j < wv.dimension(); ++j)
            if (k.dmask & (std::uint64_t(1) << j)) os << "*d" << wv.factor(j).coord;
    }
    return os.str();
}

} // namespace gcw
