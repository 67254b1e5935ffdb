#pragma once

// Small dense matrix of exact complex rationals. Deliberately minimal: the
// library only needs assembly, Hermitian checks, adjoints, and conversion to
// floating point for the numeric back ends.

#include "hankel/scalar.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace hankel {

class CMat {
  public:
    CMat() = default;
    CMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), d_(rows * cols, Complex(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Complex& at(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
    const Complex& at(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

    bool is_hermitian() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i; j < cols_; ++j)
                if (at(i, j) != conj(at(j, i))) return false;
        return true;
    }

    CMat adjoint() const {
        CMat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = conj(at(i, j));
        return r;
    }

    Eigen::MatrixXcd to_eigen() const {
        Eigen::MatrixXcd m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = to_std_complex(at(i, j));
        return m;
    }

    friend bool operator==(const CMat& a, const CMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }
    friend bool operator!=(const CMat& a, const CMat& b) { return !(a == b); }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> d_;
};

}  // namespace hankel
