#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "grinv/field.hpp"

namespace grinv {

// Dense exact matrix over Q or GF(p). Entries are kept canonical (lowest
// terms / reduced residues). Zero-row and zero-column shapes are legal and
// used throughout: a map into or out of a 0-dimensional space is a 0xN or
// Nx0 matrix, never omitted.
class Matrix {
public:
    Matrix() : field_(FieldSpec::rationals()), rows_(0), cols_(0) {}
    Matrix(FieldSpec field, std::size_t rows, std::size_t cols); // zero matrix

    static Matrix identity(FieldSpec field, std::size_t n);
    static Matrix zero(FieldSpec field, std::size_t rows, std::size_t cols);
    // Rows given as nested lists of canonical-or-not scalars; normalized on entry.
    static Matrix from_rows(FieldSpec field, const std::vector<std::vector<Rational>>& rows);
    static Matrix from_ints(FieldSpec field,
                            const std::vector<std::vector<long long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, const Rational& v);

    Matrix transpose() const;
    Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
    // Columns selected by index, in the given order.
    Matrix select_columns(const std::vector<std::size_t>& idx) const;

    bool is_zero() const;
    bool is_identity() const;

    std::string to_string() const;

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Rational> a_; // row-major

    friend struct MatrixOps;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix subtract(const Matrix& a, const Matrix& b);
Matrix negate(const Matrix& a);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

// Reduced row echelon form; returns the RREF and the pivot column indices.
std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Columns form a basis of the null space {x : m x = 0}; column count equals
// cols(m) - rank(m). Basis derives from the RREF free columns, so it is
// deterministic for a given input.
Matrix kernel_basis(const Matrix& m);

// Full-row-rank projection q with q m = 0 and rows(q) = rows(m) - rank(m);
// realizes the quotient map target -> target / im(m) in a fixed basis.
Matrix cokernel_projection(const Matrix& m);

// Exact solution x of a x = b (b may have several columns); absent when the
// system is inconsistent. Free variables are set to zero.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// Extends independent columns to an invertible square matrix whose leading
// columns equal the input. Throws input_error if the columns are dependent.
Matrix complete_basis(const Matrix& cols);

bool is_invertible(const Matrix& m);
Matrix inverse(const Matrix& m); // throws input_error when singular

Rational parse_scalar(const FieldSpec& field, const std::string& text);
std::string scalar_to_string(const Rational& v);

} // namespace grinv
