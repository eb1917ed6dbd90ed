#pragma once

// Exact linear algebra over the rationals.
//
// Conventions used by every other module:
//  - A Mat with r rows and c columns is a linear map Q^c -> Q^r acting on
//    column vectors.
//  - Subspaces are stored by their reduced row echelon basis (rows), which is
//    unique, so two equal subspaces compare bit-identical.
//  - Tensor products use row-major flattening: basis vector (i, j) of U (x) W
//    has flat index i * dim(W) + j. kron() is the only place that encodes it.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace koszulkit {

using Rat = mpq_class;
using Vec = std::vector<Rat>;

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rat parse_rat(std::string_view text);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& q);

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Mat(std::size_t rows, std::size_t cols, std::vector<Rat> entries);
    /// Row-major nested literal, e.g. Mat::from({{1, 2}, {3, 4}}).
    static Mat from(std::initializer_list<std::initializer_list<Rat>> rows);

    static Mat identity(std::size_t n);
    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
    static Mat column(const Vec& v);
    static Mat row(const Vec& v);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<Rat>& entries() const noexcept { return data_; }

    Vec row_vec(std::size_t r) const;
    Vec col_vec(std::size_t c) const;

    Mat transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    /// Rows (or columns) picked in the given order.
    Mat select_rows(const std::vector<std::size_t>& idx) const;
    Mat select_cols(const std::vector<std::size_t>& idx) const;

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    Mat& operator*=(const Rat& s);

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator*(const Rat& s, Mat a);
Vec operator*(const Mat& a, const Vec& v);

/// [a b]
Mat hstack(const Mat& a, const Mat& b);
/// [a; b]
Mat vstack(const Mat& a, const Mat& b);
/// Block diagonal.
Mat direct_sum(const Mat& a, const Mat& b);

Mat kron(const Mat& a, const Mat& b);
Vec kron(const Vec& a, const Vec& b);

struct Echelon {
    Mat reduced;                       // nonzero rows only
    std::vector<std::size_t> pivots;   // pivot column of each row
    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Unique reduced row echelon form with zero rows removed.
Echelon rref(const Mat& m);
std::size_t rank(const Mat& m);
/// Inverse of a square matrix; throws std::domain_error when singular.
Mat inverse(const Mat& m);

class Subspace {
public:
    Subspace() = default;
    /// Span of the rows of `spanning` inside Q^ambient_dim.
    static Subspace span(std::size_t ambient_dim, const Mat& spanning);
    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const Mat& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates (columns) of the columns of `vectors` in the canonical
    /// basis. Throws DimensionMismatch if some column lies outside.
    Mat coordinates(const Mat& vectors) const;
    /// The dim x ambient map that reads coordinates at the pivot columns;
    /// restricted to the subspace it is the coordinate map.
    Mat pivot_selector() const;
    /// Inclusion map, ambient x dim (the transposed basis).
    Mat inclusion() const { return basis_.transpose(); }

    /// Vectors w with <w, v> = 0 for all v here (standard dot product).
    Subspace annihilator() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    Mat basis_;
    std::vector<std::size_t> pivots_;
};

/// {v : m v = 0} inside the domain of m.
Subspace kernel(const Mat& m);
/// Column space of m inside its codomain.
Subspace image(const Mat& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

struct Quotient {
    Mat projection;                       // q x ambient
    Mat section;                          // ambient x q
    std::vector<std::size_t> basis_coords; // non-pivot coordinates of s
    std::size_t dim() const noexcept { return basis_coords.size(); }
};

/// Q^ambient / s with basis the classes of the non-pivot coordinate vectors.
Quotient quotient(std::size_t ambient_dim, const Subspace& s);

} // namespace koszulkit
