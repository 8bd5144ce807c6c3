#pragma once

#include <cmath>
#include <complex>

namespace hardy {

// Neumaier's variant of Kahan summation. The state (sum, correction) is
// exposed so a reduction can be paused and resumed bit-for-bit.
class CompensatedSum {
public:
    CompensatedSum() = default;
    CompensatedSum(double sum, double correction) : sum_(sum), cor_(correction) {}

    CompensatedSum& operator+=(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            cor_ += (sum_ - t) + x;
        else
            cor_ += (x - t) + sum_;
        sum_ = t;
        return *this;
    }

    double value() const noexcept { return sum_ + cor_; }
    double raw_sum() const noexcept { return sum_; }
    double correction() const noexcept { return cor_; }

private:
    double sum_ = 0.0;
    double cor_ = 0.0;
};

class CompensatedComplexSum {
public:
    CompensatedComplexSum& operator+=(std::complex<double> z) noexcept {
        re_ += z.real();
        im_ += z.imag();
        return *this;
    }

    std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }

    const CompensatedSum& re() const noexcept { return re_; }
    const CompensatedSum& im() const noexcept { return im_; }
    void restore(const CompensatedSum& re, const CompensatedSum& im) noexcept {
        re_ = re;
        im_ = im;
    }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

}  // namespace hardy
