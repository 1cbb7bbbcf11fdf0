#ifndef P1CODES_LINALG_HPP
#define P1CODES_LINALG_HPP

#include <cstdint>
#include <vector>

#include "p1codes/field.hpp"

namespace p1codes {

// Dense row-major matrix of field element indices.  Elimination uses
// deterministic first-nonzero pivoting, so echelon forms are reproducible.
class Mat {
  public:
    Mat(const Field& f, std::size_t rows, std::size_t cols) : f_(&f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    const Field& field() const { return *f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<std::uint32_t>& data() const { return a_; }
    std::vector<std::uint32_t>& data() { return a_; }

    static Mat identity(const Field& f, std::size_t n);
    Mat transposed() const;
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  private:
    const Field* f_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> a_;
};

Mat mat_mul(const Mat& a, const Mat& b);
std::vector<std::uint32_t> mat_vec(const Mat& a, const std::vector<std::uint32_t>& v);

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(Mat& m);
std::size_t rank(Mat m);

// Basis of the right null space {x : m x = 0}, rows of the result.
Mat null_space(const Mat& m);

// Membership of v in the row space, via the reduced echelon form.
bool rowspace_contains(const Mat& rref_m, const std::vector<std::size_t>& pivots,
                       const std::vector<std::uint32_t>& v);
bool rowspace_contains(const Mat& m, const std::vector<std::uint32_t>& v);
bool rowspace_equal(const Mat& a, const Mat& b);

// Solves the square system a x = b (b may have several right-hand sides as
// columns); throws if a is singular.
Mat solve(Mat a, Mat b);

bool is_invertible(const Mat& m);

// Trace of a square matrix.
std::uint32_t mat_trace(const Mat& m);

}  // namespace p1codes

#endif
