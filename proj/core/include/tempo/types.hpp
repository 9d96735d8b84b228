#ifndef TEMPO_TYPES_HPP
#define TEMPO_TYPES_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace tempo {

// State layout convention throughout the library: y = (p, q),
// momenta first, then positions. For an n-degree-of-freedom
// Hamiltonian system the state has 2n components.
using StateVector = std::vector<double>;

inline double max_norm(const StateVector& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

inline double l2_norm(const StateVector& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

inline bool all_finite(const StateVector& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

// Small dense row-major matrix. Sized for method tableaux and
// coefficient tables, not for large linear algebra.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    double operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

}  // namespace tempo

#endif
