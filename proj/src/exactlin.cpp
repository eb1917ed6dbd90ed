#include "koszulkit/exactlin.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace koszulkit {

Rat parse_rat(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto valid_int = [](std::string_view t) {
        if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
        return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) {
            return std::isdigit(c);
        });
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational literal: " + std::string(text));
    if (num.front() == '+') num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    Rat q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// ---------------------------------------------------------------- Mat

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw DimensionMismatch("Mat: entry count != rows*cols");
}

Mat Mat::from(std::initializer_list<std::initializer_list<Rat>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    Mat m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionMismatch("Mat::from: ragged rows");
        std::size_t j = 0;
        for (const auto& x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::column(const Vec& v) { return Mat(v.size(), 1, v); }
Mat Mat::row(const Vec& v) { return Mat(1, v.size(), v); }

Vec Mat::row_vec(std::size_t r) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Mat::col_vec(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Mat::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return sgn(x) == 0; });
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

Mat Mat::select_rows(const std::vector<std::size_t>& idx) const {
    Mat m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(idx[i], c);
    return m;
}

Mat Mat::select_cols(const std::vector<std::size_t>& idx) const {
    Mat m(rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t i = 0; i < idx.size(); ++i) m(r, i) = (*this)(r, idx[i]);
    return m;
}

Mat& Mat::operator+=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("Mat +: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (sgn(o.data_[i]) != 0) data_[i] += o.data_[i];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("Mat -: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (sgn(o.data_[i]) != 0) data_[i] -= o.data_[i];
    return *this;
}

Mat& Mat::operator*=(const Rat& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("Mat *: inner dimensions differ");
    Mat c(a.rows(), b.cols());
    Rat t;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rat& bkj = b(k, j);
                if (sgn(bkj) == 0) continue;
                t = aik * bkj;
                c(i, j) += t;
            }
        }
    return c;
}

Mat operator+(Mat a, const Mat& b) { return a += b; }
Mat operator-(Mat a, const Mat& b) { return a -= b; }
Mat operator*(const Rat& s, Mat a) { return a *= s; }

Vec operator*(const Mat& a, const Vec& v) {
    if (a.cols() != v.size()) throw DimensionMismatch("Mat * Vec: size mismatch");
    Vec out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0) out[i] += a(i, k) * v[k];
    return out;
}

Mat hstack(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("hstack: row counts differ");
    Mat m(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
    }
    return m;
}

Mat vstack(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) throw DimensionMismatch("vstack: column counts differ");
    std::vector<Rat> e = a.entries();
    e.insert(e.end(), b.entries().begin(), b.entries().end());
    return Mat(a.rows() + b.rows(), a.cols(), std::move(e));
}

Mat direct_sum(const Mat& a, const Mat& b) {
    Mat m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
    return m;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rat& aij = a(i, j);
            if (sgn(aij) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (sgn(b(k, l)) != 0) m(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return m;
}

Vec kron(const Vec& a, const Vec& b) {
    Vec v(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0)
            for (std::size_t j = 0; j < b.size(); ++j) v[i * b.size() + j] = a[i] * b[j];
    return v;
}

// ---------------------------------------------------------------- echelon

Echelon rref(const Mat& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<Vec> a(rows);
    for (std::size_t r = 0; r < rows; ++r) a[r] = m.row_vec(r);

    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    Rat factor;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t p = lead;
        while (p < rows && sgn(a[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[lead]);
        Vec& prow = a[lead];
        if (prow[c] != 1) {
            Rat inv = 1 / prow[c];
            for (std::size_t j = c; j < cols; ++j)
                if (sgn(prow[j]) != 0) prow[j] *= inv;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || sgn(a[r][c]) == 0) continue;
            factor = a[r][c];
            for (std::size_t j = c; j < cols; ++j)
                if (sgn(prow[j]) != 0) a[r][j] -= factor * prow[j];
        }
        pivots.push_back(c);
        ++lead;
    }

    Mat reduced(pivots.size(), cols);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) reduced(r, c) = std::move(a[r][c]);
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).rank(); }

Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse: matrix not square");
    const std::size_t n = m.rows();
    Echelon e = rref(hstack(m, Mat::identity(n)));
    if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1))
        throw std::domain_error("inverse: matrix is singular");
    Mat inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
    return inv;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(std::size_t ambient_dim, const Mat& spanning) {
    if (spanning.rows() > 0 && spanning.cols() != ambient_dim)
        throw DimensionMismatch("Subspace::span: vectors have wrong length");
    Subspace s;
    s.ambient_ = ambient_dim;
    if (spanning.rows() == 0) {
        s.basis_ = Mat(0, ambient_dim);
        return s;
    }
    Echelon e = rref(spanning);
    s.basis_ = std::move(e.reduced);
    s.pivots_ = std::move(e.pivots);
    return s;
}

Subspace Subspace::zero(std::size_t ambient_dim) { return span(ambient_dim, Mat(0, ambient_dim)); }
Subspace Subspace::full(std::size_t ambient_dim) {
    return span(ambient_dim, Mat::identity(ambient_dim));
}

Mat Subspace::pivot_selector() const {
    Mat sel(dim(), ambient_);
    for (std::size_t k = 0; k < pivots_.size(); ++k) sel(k, pivots_[k]) = 1;
    return sel;
}

Mat Subspace::coordinates(const Mat& vectors) const {
    if (vectors.rows() != ambient_) throw DimensionMismatch("coordinates: wrong vector length");
    Mat coords = pivot_selector() * vectors;
    Mat back = inclusion() * coords;
    if (!(back == vectors)) throw DimensionMismatch("coordinates: vector outside subspace");
    return coords;
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("contains: wrong vector length");
    Mat col = Mat::column(v);
    return inclusion() * (pivot_selector() * col) == col;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("contains: ambient mismatch");
    Mat cols = other.inclusion();
    return inclusion() * (pivot_selector() * cols) == cols;
}

Subspace Subspace::annihilator() const { return kernel(basis_); }

Subspace kernel(const Mat& m) {
    const std::size_t n = m.cols();
    Echelon e = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free.push_back(c);
    Mat basis(free.size(), n);
    for (std::size_t k = 0; k < free.size(); ++k) {
        basis(k, free[k]) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            if (sgn(e.reduced(r, free[k])) != 0) basis(k, e.pivots[r]) = -e.reduced(r, free[k]);
    }
    return Subspace::span(n, basis);
}

Subspace image(const Mat& m) { return Subspace::span(m.rows(), m.transpose()); }

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("intersect: ambient mismatch");
    // a ∩ b = ann(ann a + ann b)
    Mat constraints = vstack(a.annihilator().basis(), b.annihilator().basis());
    if (constraints.rows() == 0) return Subspace::full(a.ambient_dim());
    return kernel(constraints);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("sum: ambient mismatch");
    return Subspace::span(a.ambient_dim(), vstack(a.basis(), b.basis()));
}

Quotient quotient(std::size_t ambient_dim, const Subspace& s) {
    if (s.ambient_dim() != ambient_dim) throw DimensionMismatch("quotient: ambient mismatch");
    std::vector<long> row_of_pivot(ambient_dim, -1);
    for (std::size_t k = 0; k < s.pivots().size(); ++k)
        row_of_pivot[s.pivots()[k]] = static_cast<long>(k);
    Quotient q;
    std::vector<long> index_of(ambient_dim, -1);
    for (std::size_t c = 0; c < ambient_dim; ++c)
        if (row_of_pivot[c] < 0) {
            index_of[c] = static_cast<long>(q.basis_coords.size());
            q.basis_coords.push_back(c);
        }
    const std::size_t qd = q.basis_coords.size();
    q.projection = Mat(qd, ambient_dim);
    q.section = Mat(ambient_dim, qd);
    for (std::size_t k = 0; k < qd; ++k) q.section(q.basis_coords[k], k) = 1;
    // e_c reduces to itself when c is free, and to e_c - b_row (zero on all
    // pivots) when c is a pivot.
    for (std::size_t c = 0; c < ambient_dim; ++c) {
        if (index_of[c] >= 0) {
            q.projection(static_cast<std::size_t>(index_of[c]), c) = 1;
        } else {
            auto r = static_cast<std::size_t>(row_of_pivot[c]);
            for (std::size_t k = 0; k < qd; ++k)
                q.projection(k, c) = -s.basis()(r, q.basis_coords[k]);
        }
    }
    return q;
}

} // namespace koszulkit
