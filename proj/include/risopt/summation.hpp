#ifndef RISOPT_SUMMATION_HPP
#define RISOPT_SUMMATION_HPP

#include <cmath>
#include <complex>

namespace risopt {

// Kahan-Babuska-Neumaier running sum.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    void add(const CompensatedSum& other) {
        add(other.sum_);
        add(other.comp_);
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class CompensatedComplexSum {
public:
    void add(std::complex<double> z) {
        re_.add(z.real());
        im_.add(z.imag());
    }

    void add(const CompensatedComplexSum& other) {
        re_.add(other.re_);
        im_.add(other.im_);
    }

    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

}  // namespace risopt

#endif
