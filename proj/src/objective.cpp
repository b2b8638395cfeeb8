#include "seqsearch/objective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

namespace seqsearch {

namespace {

void check_arms(std::span<const Arm> s, const ParamVector& p) {
    for (Arm a : s) {
        if (a < 1 || static_cast<std::size_t>(a) > p.size())
            throw DimensionMismatch("arm " + std::to_string(a) + " outside a parameter vector of size " +
                                    std::to_string(p.size()));
    }
}

struct RatioParts {
    double numerator = 0.0;  // sum_i c_{s_i} (1 - W_{<i})
    double weight = 0.0;     // sum_i w_{s_i}
};

RatioParts ratio_parts(std::span<const Arm> s, const ParamVector& p) {
    RatioParts r;
    for (Arm a : s) {
        r.numerator += p.c(a) * (1.0 - r.weight);
        r.weight += p.w(a);
    }
    return r;
}

}  // namespace

double ExtendedReal::to_double() const noexcept {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

std::ostream& operator<<(std::ostream& os, const ExtendedReal& x) {
    if (x.is_infinite()) return os << "inf";
    return os << x.value();
}

ExtendedReal positive_part(ExtendedReal x) {
    if (x.is_infinite()) return x;
    return std::max(0.0, x.value());
}

ParamVector::ParamVector(std::vector<double> w, std::vector<double> c) : w_(std::move(w)), c_(std::move(c)) {
    if (w_.size() != c_.size())
        throw DimensionMismatch("weight vector has " + std::to_string(w_.size()) + " entries, cost vector " +
                                std::to_string(c_.size()));
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (!(w_[i] >= 0.0) || !(c_[i] >= 0.0) || !std::isfinite(w_[i]) || !std::isfinite(c_[i]))
            throw InvalidParameters("parameters must be finite and non-negative (arm " + std::to_string(i + 1) +
                                    ")");
    }
}

ParamVector ParamVector::true_parameters(std::vector<double> w, std::vector<double> c) {
    ParamVector p(std::move(w), std::move(c));
    double total = 0.0;
    for (double x : p.w_) {
        if (x > 1.0) throw NonTrueParameters("true weights must lie in [0,1]");
        total += x;
    }
    if (std::abs(total - 1.0) > kSimplexTolerance)
        throw NonTrueParameters("true weights sum to " + std::to_string(total) + ", not 1");
    for (double x : p.c_) {
        if (!(x > 0.0)) throw NonTrueParameters("true expected costs must be positive");
    }
    p.true_ = true;
    return p;
}

double weighted_completion(std::span<const Arm> s, const ParamVector& p) {
    check_arms(s, p);
    double elapsed = 0.0;
    double total = 0.0;
    for (Arm a : s) {
        elapsed += p.c(a);
        total += p.w(a) * elapsed;
    }
    return total;
}

ExtendedReal cost_ratio_j(std::span<const Arm> s, const ParamVector& p) {
    check_arms(s, p);
    const RatioParts r = ratio_parts(s, p);
    if (s.empty() || r.weight == 0.0) return ExtendedReal::infinity();
    return r.numerator / r.weight;
}

ExtendedReal cost_ratio_j_plus(std::span<const Arm> s, const ParamVector& p) {
    return positive_part(cost_ratio_j(s, p));
}

ExtendedReal density(std::span<const Arm> arms, const ParamVector& p) {
    check_arms(arms, p);
    double w = 0.0;
    double c = 0.0;
    for (Arm a : arms) {
        w += p.w(a);
        c += p.c(a);
    }
    if (c == 0.0) return w > 0.0 ? ExtendedReal::infinity() : ExtendedReal(0.0);
    return w / c;
}

double gap(std::span<const Arm> s, const ParamVector& true_p, double j_star) {
    if (!true_p.is_true()) throw NonTrueParameters("gap() needs the true parameter vector");
    if (!(j_star > 0.0)) throw InvalidParameters("gap() needs J* > 0");
    check_arms(s, true_p);
    const RatioParts r = ratio_parts(s, true_p);
    const double value = r.numerator / j_star - r.weight;
    // Optimal searches evaluate to 0 up to accumulated round-off.
    const double noise = 1e-12 * std::max(1.0, r.numerator / j_star);
    return value <= noise ? 0.0 : value;
}

}  // namespace seqsearch
