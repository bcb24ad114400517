#pragma once

#include <stdexcept>
#include <vector>

namespace fhdet {

// Dense square matrix of doubles, row-major, 0-based.
class DenseMatrix {
  public:
    explicit DenseMatrix(int order) : n_(order) {
        if (order < 1) throw std::invalid_argument("DenseMatrix: order must be >= 1");
        a_.assign(static_cast<std::size_t>(order) * order, 0.0);
    }

    int order() const { return n_; }

    double& operator()(int i, int j) { return a_[index(i, j)]; }
    const double& operator()(int i, int j) const { return a_[index(i, j)]; }

    static DenseMatrix identity(int order) {
        DenseMatrix m(order);
        for (int i = 0; i < order; ++i) m(i, i) = 1.0;
        return m;
    }

  private:
    std::size_t index(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_)
            throw std::out_of_range("DenseMatrix: index out of range");
        return static_cast<std::size_t>(i) * n_ + j;
    }

    int n_;
    std::vector<double> a_;
};

}  // namespace fhdet
