#pragma once

#include <cmath>

namespace polycc {

/// Neumaier-compensated accumulator. Drop-in for a plain double sum built
/// with += and read once at the end; keeps trigonometric identity checks at
/// the 1e-12 level without extended precision.
class KahanSum {
public:
    KahanSum() = default;
    explicit KahanSum(double init) : sum_(init) {}

    KahanSum& operator+=(double value) {
        const double t = sum_ + value;
        if (std::abs(sum_) >= std::abs(value)) {
            comp_ += (sum_ - t) + value;
        } else {
            comp_ += (value - t) + sum_;
        }
        sum_ = t;
        return *this;
    }

    double get() const { return sum_ + comp_; }
    operator double() const { return get(); }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace polycc
