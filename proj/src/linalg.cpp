#include "p1codes/linalg.hpp"

#include <stdexcept>

namespace p1codes {

Mat Mat::identity(const Field& f, std::size_t n) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::transposed() const {
    Mat t(*f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    const Field& f = a.field();
    Mat c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            std::uint32_t v = a.at(i, l);
            if (v == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) = f.add(c.at(i, j), f.mul(v, b.at(l, j)));
        }
    return c;
}

std::vector<std::uint32_t> mat_vec(const Mat& a, const std::vector<std::uint32_t>& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    const Field& f = a.field();
    std::vector<std::uint32_t> out(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::uint32_t acc = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) acc = f.add(acc, f.mul(a.at(i, j), v[j]));
        out[i] = acc;
    }
    return out;
}

std::vector<std::size_t> rref(Mat& m) {
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        std::uint32_t inv = f.inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = f.mul(m.at(row, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            std::uint32_t c = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Mat m) { return rref(m).size(); }

Mat null_space(const Mat& m) {
    const Field& f = m.field();
    Mat r = m;
    std::vector<std::size_t> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Mat ns(f, free_cols.size(), m.cols());
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        std::size_t fc = free_cols[t];
        ns.at(t, fc) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) ns.at(t, pivots[i]) = f.neg(r.at(i, fc));
    }
    return ns;
}

bool rowspace_contains(const Mat& rref_m, const std::vector<std::size_t>& pivots,
                       const std::vector<std::uint32_t>& v) {
    const Field& f = rref_m.field();
    std::vector<std::uint32_t> w = v;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        std::uint32_t c = w[pivots[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < w.size(); ++j) w[j] = f.sub(w[j], f.mul(c, rref_m.at(i, j)));
    }
    for (auto x : w)
        if (x != 0) return false;
    return true;
}

bool rowspace_contains(const Mat& m, const std::vector<std::uint32_t>& v) {
    Mat r = m;
    auto pivots = rref(r);
    return rowspace_contains(r, pivots, v);
}

bool rowspace_equal(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) return false;
    Mat ra = a, rb = b;
    auto pa = rref(ra), pb = rref(rb);
    if (pa != pb) return false;
    // compare the nonzero rows of the two canonical forms
    for (std::size_t i = 0; i < pa.size(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (ra.at(i, j) != rb.at(i, j)) return false;
    return true;
}

Mat solve(Mat a, Mat b) {
    if (a.rows() != a.cols() || a.rows() != b.rows()) throw std::invalid_argument("solve: dimension mismatch");
    const Field& f = a.field();
    std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a.at(sel, col) == 0) ++sel;
        if (sel == n) throw std::domain_error("solve: singular matrix");
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(sel, j), a.at(col, j));
            for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b.at(sel, j), b.at(col, j));
        }
        std::uint32_t inv = f.inv(a.at(col, col));
        for (std::size_t j = 0; j < n; ++j) a.at(col, j) = f.mul(a.at(col, j), inv);
        for (std::size_t j = 0; j < b.cols(); ++j) b.at(col, j) = f.mul(b.at(col, j), inv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col) == 0) continue;
            std::uint32_t c = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) = f.sub(a.at(i, j), f.mul(c, a.at(col, j)));
            for (std::size_t j = 0; j < b.cols(); ++j) b.at(i, j) = f.sub(b.at(i, j), f.mul(c, b.at(col, j)));
        }
    }
    return b;
}

bool is_invertible(const Mat& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::uint32_t mat_trace(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("trace: not square");
    const Field& f = m.field();
    std::uint32_t t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t = f.add(t, m.at(i, i));
    return t;
}

}  // namespace p1codes
