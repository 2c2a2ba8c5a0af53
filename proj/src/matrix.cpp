#include "grinv/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace grinv {

namespace {

void check_same_field(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field())
        throw input_error("field mismatch: " + a.field().name() + " vs " + b.field().name());
}

// int64 residue arithmetic used as the hot path for GF(p); p <= 2^31 keeps
// every product below 2^62.
using Residues = std::vector<std::int64_t>;

Residues to_residues(const Matrix& m) {
    Residues r;
    r.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.push_back(static_cast<std::int64_t>(numerator(m.at(i, j))));
    return r;
}

Matrix from_residues(const FieldSpec& f, std::size_t rows, std::size_t cols, const Residues& r) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (r[i * cols + j] != 0) m.set(i, j, Rational(r[i * cols + j]));
    return m;
}

// In-place RREF over GF(p) with first-nonzero pivoting; returns pivot columns.
std::vector<std::size_t> rref_prime(Residues& a, std::size_t rows, std::size_t cols,
                                    std::int64_t p) {
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t sel = pr;
        while (sel < rows && a[sel * cols + pc] == 0) ++sel;
        if (sel == rows) continue;
        if (sel != pr)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a[sel * cols + j], a[pr * cols + j]);
        const std::int64_t inv = static_cast<std::int64_t>(
            mod_inverse(static_cast<std::uint64_t>(a[pr * cols + pc]),
                        static_cast<std::uint64_t>(p)));
        for (std::size_t j = pc; j < cols; ++j)
            a[pr * cols + j] = (a[pr * cols + j] * inv) % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr) continue;
            const std::int64_t factor = a[i * cols + pc];
            if (factor == 0) continue;
            for (std::size_t j = pc; j < cols; ++j) {
                std::int64_t v = a[i * cols + j] - factor * a[pr * cols + j] % p;
                v %= p;
                if (v < 0) v += p;
                a[i * cols + j] = v;
            }
        }
        pivots.push_back(pc);
        ++pr;
    }
    return pivots;
}

std::vector<std::size_t> rref_rational(std::vector<Rational>& a, std::size_t rows,
                                       std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t sel = pr;
        while (sel < rows && a[sel * cols + pc] == 0) ++sel;
        if (sel == rows) continue;
        if (sel != pr)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a[sel * cols + j], a[pr * cols + j]);
        const Rational inv = Rational(1) / a[pr * cols + pc];
        for (std::size_t j = pc; j < cols; ++j) a[pr * cols + j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr) continue;
            const Rational factor = a[i * cols + pc];
            if (factor == 0) continue;
            for (std::size_t j = pc; j < cols; ++j)
                a[i * cols + j] -= factor * a[pr * cols + j];
        }
        pivots.push_back(pc);
        ++pr;
    }
    return pivots;
}

} // namespace

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
    return m;
}

Matrix Matrix::zero(FieldSpec field, std::size_t rows, std::size_t cols) {
    return Matrix(field, rows, cols);
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<std::vector<Rational>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw input_error("ragged matrix literal");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_ints(FieldSpec field, const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<Rational>> conv(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        conv[i].assign(rows[i].begin(), rows[i].end());
    return from_rows(field, conv);
}

void Matrix::set(std::size_t i, std::size_t j, const Rational& v) {
    a_[i * cols_ + j] = field_normalize(field_, v);
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.a_[j * rows_ + i] = a_[i * cols_ + j];
    return t;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                     std::size_t ncols) const {
    if (row0 + nrows > rows_ || col0 + ncols > cols_)
        throw input_error("block out of range");
    Matrix b(field_, nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j)
            b.a_[i * ncols + j] = a_[(row0 + i) * cols_ + (col0 + j)];
    return b;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
    Matrix b(field_, rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] >= cols_) throw input_error("column index out of range");
        for (std::size_t i = 0; i < rows_; ++i)
            b.a_[i * idx.size() + j] = a_[i * cols_ + idx[j]];
    }
    return b;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& v) { return v == 0; });
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (a_[i * cols_ + j] != Rational(i == j ? 1 : 0)) return false;
    return true;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << a_[i * cols_ + j];
        os << "]";
    }
    os << "] (" << rows_ << "x" << cols_ << " over " << field_.name() << ")";
    return os.str();
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    if (a.cols() != b.rows())
        throw input_error("dimension mismatch in multiply: " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
    const FieldSpec f = a.field();
    Matrix c(f, a.rows(), b.cols());
    if (f.is_prime_field()) {
        const std::int64_t p = static_cast<std::int64_t>(f.p);
        Residues ra = to_residues(a), rb = to_residues(b);
        Residues rc(a.rows() * b.cols(), 0);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols(); ++k) {
                const std::int64_t v = ra[i * a.cols() + k];
                if (v == 0) continue;
                for (std::size_t j = 0; j < b.cols(); ++j)
                    rc[i * b.cols() + j] =
                        (rc[i * b.cols() + j] + v * rb[k * b.cols() + j]) % p;
            }
        return from_residues(f, a.rows(), b.cols(), rc);
    }
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& v = a.at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                Rational sum = c.at(i, j) + v * b.at(k, j);
                c.set(i, j, sum);
            }
        }
    return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return multiply(a, b); }

Matrix add(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw input_error("dimension mismatch in add");
    Matrix c(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c.set(i, j, a.at(i, j) + b.at(i, j));
    return c;
}

Matrix subtract(const Matrix& a, const Matrix& b) { return add(a, negate(b)); }

Matrix negate(const Matrix& a) {
    Matrix c(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, -a.at(i, j));
    return c;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    if (a.rows() != b.rows()) throw input_error("dimension mismatch in hstack");
    Matrix c(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, a.at(i, j));
        for (std::size_t j = 0; j < b.cols(); ++j) c.set(i, a.cols() + j, b.at(i, j));
    }
    return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    if (a.cols() != b.cols()) throw input_error("dimension mismatch in vstack");
    Matrix c(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) c.set(i, j, a.at(i, j));
        for (std::size_t i = 0; i < b.rows(); ++i) c.set(a.rows() + i, j, b.at(i, j));
    }
    return c;
}

std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m) {
    const FieldSpec f = m.field();
    if (f.is_prime_field()) {
        Residues a = to_residues(m);
        auto pivots = rref_prime(a, m.rows(), m.cols(), static_cast<std::int64_t>(f.p));
        return {from_residues(f, m.rows(), m.cols(), a), pivots};
    }
    std::vector<Rational> a;
    a.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a.push_back(m.at(i, j));
    auto pivots = rref_rational(a, m.rows(), m.cols());
    Matrix r(f, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.set(i, j, a[i * m.cols() + j]);
    return {r, pivots};
}

std::size_t rank(const Matrix& m) { return rref(m).second.size(); }

Matrix kernel_basis(const Matrix& m) {
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Matrix k(m.field(), m.cols(), free_cols.size());
    for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
        const std::size_t j = free_cols[idx];
        k.set(j, idx, Rational(1));
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            k.set(pivots[pi], idx, -r.at(pi, j));
    }
    return k;
}

Matrix cokernel_projection(const Matrix& m) {
    // rows of the projection = basis of the left null space
    return kernel_basis(m.transpose()).transpose();
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    if (a.rows() != b.rows()) throw input_error("dimension mismatch in solve");
    auto [r, pivots] = rref(hstack(a, b));
    // inconsistent iff some pivot lands in the b-part
    for (std::size_t p : pivots)
        if (p >= a.cols()) return std::nullopt;
    Matrix x(a.field(), a.cols(), b.cols());
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.set(pivots[pi], j, r.at(pi, a.cols() + j));
    return x;
}

Matrix complete_basis(const Matrix& cols) {
    const std::size_t n = cols.rows();
    if (rank(cols) != cols.cols()) throw input_error("complete_basis: columns are dependent");
    Matrix acc = cols;
    std::size_t current = rank(acc);
    for (std::size_t i = 0; i < n && current < n; ++i) {
        Matrix e(cols.field(), n, 1);
        e.set(i, 0, Rational(1));
        Matrix candidate = hstack(acc, e);
        if (rank(candidate) > current) {
            acc = candidate;
            ++current;
        }
    }
    if (acc.cols() != n) throw internal_error("complete_basis failed to reach full rank");
    return acc;
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw input_error("inverse of non-square matrix");
    auto x = solve(m, Matrix::identity(m.field(), m.rows()));
    if (!x || rank(m) != m.rows()) throw input_error("matrix is singular");
    return *x;
}

Rational parse_scalar(const FieldSpec& field, const std::string& text) {
    if (text.empty()) throw input_error("empty scalar");
    const std::string allowed = "-+/0123456789";
    for (char ch : text)
        if (allowed.find(ch) == std::string::npos)
            throw input_error("bad scalar '" + text + "'");
    if (field.is_prime_field() && text.find('/') != std::string::npos)
        throw input_error("prime-field entries must be integers mod p, got '" + text + "'");
    try {
        return field_normalize(field, Rational(text));
    } catch (const std::exception&) {
        throw input_error("bad scalar '" + text + "'");
    }
}

std::string scalar_to_string(const Rational& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace grinv
