#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <vector>

#include "seqsearch/poset_graph.hpp"

namespace seqsearch {

// A non-NaN real or +infinity. Infinity is a separate state, never a sentinel
// double, and compares greater than every finite value.
class ExtendedReal {
public:
    constexpr ExtendedReal() = default;
    constexpr ExtendedReal(double v) : value_(v) {}  // NOLINT(implicit)
    static constexpr ExtendedReal infinity() {
        ExtendedReal r;
        r.infinite_ = true;
        return r;
    }

    constexpr bool is_infinite() const noexcept { return infinite_; }
    constexpr bool is_finite() const noexcept { return !infinite_; }
    // Finite value; callers must check is_finite() first.
    constexpr double value() const noexcept { return value_; }
    // std::numeric_limits<double>::infinity() for the infinite state.
    double to_double() const noexcept;

    friend constexpr bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend constexpr std::partial_ordering operator<=>(const ExtendedReal& a, const ExtendedReal& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }

private:
    double value_ = 0.0;
    bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const ExtendedReal& x);

// max{0, x}; infinity stays infinity.
ExtendedReal positive_part(ExtendedReal x);

// Hider weights w and expected costs c over arms 1..n (stored 0-based).
// General vectors only need non-negative entries. The "true parameter" form,
// built by true_parameters(), additionally guarantees sum(w) = 1 within 1e-12
// and c > 0, and is the only form accepted by gap().
class ParamVector {
public:
    ParamVector(std::vector<double> w, std::vector<double> c);
    static ParamVector true_parameters(std::vector<double> w, std::vector<double> c);

    std::size_t size() const noexcept { return w_.size(); }
    const std::vector<double>& w() const noexcept { return w_; }
    const std::vector<double>& c() const noexcept { return c_; }
    double w(Arm a) const { return w_[static_cast<std::size_t>(a - 1)]; }
    double c(Arm a) const { return c_[static_cast<std::size_t>(a - 1)]; }
    bool is_true() const noexcept { return true_; }

private:
    std::vector<double> w_;
    std::vector<double> c_;
    bool true_ = false;
};

inline constexpr double kSimplexTolerance = 1e-12;

// d(s|w,c) = sum_i w_{s_i} * (c_{s_1} + ... + c_{s_i}); 0 for the empty search.
double weighted_completion(std::span<const Arm> s, const ParamVector& p);

// J(s|w,c) = sum_i c_{s_i} (1 - sum_{j<i} w_{s_j}) / sum_i w_{s_i}.
// Infinite for the empty search and for searches of zero total weight.
ExtendedReal cost_ratio_j(std::span<const Arm> s, const ParamVector& p);
ExtendedReal cost_ratio_j_plus(std::span<const Arm> s, const ParamVector& p);

// rho(A) = w(A) / c(A) with rho(empty) = 0, 0/0 = 0 and x/0 = +inf for x > 0.
ExtendedReal density(std::span<const Arm> arms, const ParamVector& p);

// Local regret of selecting s under the true parameters:
// sum_i c*_{s_i}(1 - sum_{j<i} w*_{s_j}) / J* - sum_i w*_{s_i}, clamped at 0.
// Values within round-off of zero are reported as exactly 0.
double gap(std::span<const Arm> s, const ParamVector& true_p, double j_star);

}  // namespace seqsearch
