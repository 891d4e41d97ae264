#include "isoform/linalg.hpp"

#include <stdexcept>

namespace isoform {

bool Vec::is_zero() const {
    for (const Rat& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

Vec Vec::operator+(const Vec& o) const {
    if (dim() != o.dim()) throw std::invalid_argument("vector dimension mismatch");
    std::vector<Rat> out(coords_.size());
    for (size_t i = 0; i < coords_.size(); ++i) out[i] = coords_[i] + o.coords_[i];
    return Vec(std::move(out));
}

Vec Vec::operator-(const Vec& o) const { return *this + (-o); }

Vec Vec::operator-() const {
    std::vector<Rat> out(coords_.size());
    for (size_t i = 0; i < coords_.size(); ++i) out[i] = -coords_[i];
    return Vec(std::move(out));
}

Vec Vec::scaled(const Rat& c) const {
    std::vector<Rat> out(coords_.size());
    for (size_t i = 0; i < coords_.size(); ++i) out[i] = coords_[i] * c;
    return Vec(std::move(out));
}

Rat Vec::dot(const Vec& o) const {
    if (dim() != o.dim()) throw std::invalid_argument("vector dimension mismatch");
    Rat acc;
    for (size_t i = 0; i < coords_.size(); ++i) acc += coords_[i] * o.coords_[i];
    return acc;
}

bool Vec::operator<(const Vec& o) const {
    if (dim() != o.dim()) return dim() < o.dim();
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] != o.coords_[i]) return coords_[i] < o.coords_[i];
    }
    return false;
}

std::string Vec::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ", ";
        s += coords_[i].to_string();
    }
    return s + ")";
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols) {
    if (cols.empty()) return Mat();
    Mat m(cols[0].dim(), static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols(); ++c) {
        if (cols[static_cast<size_t>(c)].dim() != m.rows())
            throw std::invalid_argument("ragged column set");
        for (int r = 0; r < m.rows(); ++r) m.at(r, c) = cols[static_cast<size_t>(c)][r];
    }
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat();
    Mat m(static_cast<int>(rows.size()), rows[0].dim());
    for (int r = 0; r < m.rows(); ++r) {
        if (rows[static_cast<size_t>(r)].dim() != m.cols())
            throw std::invalid_argument("ragged row set");
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[static_cast<size_t>(r)][c];
    }
    return m;
}

Vec Mat::apply(const Vec& v) const {
    if (v.dim() != cols_) throw std::invalid_argument("matrix/vector dimension mismatch");
    std::vector<Rat> out(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r) {
        Rat acc;
        for (int c = 0; c < cols_; ++c) acc += at(r, c) * v[c];
        out[static_cast<size_t>(r)] = acc;
    }
    return Vec(std::move(out));
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
    Mat out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            if (at(r, k).is_zero()) continue;
            for (int c = 0; c < o.cols_; ++c) out.at(r, c) += at(r, k) * o.at(k, c);
        }
    return out;
}

Mat Mat::transpose() const {
    Mat out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (at(r, c) != Rat(r == c ? 1 : 0)) return false;
    return true;
}

namespace {

// In-place fraction-free-ish row reduction; returns pivot column per row.
std::vector<int> row_reduce(Mat& m) {
    std::vector<int> pivot_cols;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows(); ++r) {
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(row, c));
        Rat inv = Rat(1) / m.at(row, col);
        for (int c = 0; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Rat factor = m.at(r, col);
            for (int c = 0; c < m.cols(); ++c) m.at(r, c) -= factor * m.at(row, c);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

} // namespace

Mat Mat::inverse() const {
    if (rows_ != cols_) throw std::domain_error("inverse of a non-square matrix");
    Mat aug(rows_, 2 * cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = Rat(1);
    }
    std::vector<int> pivots = row_reduce(aug);
    if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_)
        throw std::domain_error("matrix is singular");
    for (size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] != static_cast<int>(i)) throw std::domain_error("matrix is singular");
    Mat inv(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) inv.at(r, c) = aug.at(r, cols_ + c);
    return inv;
}

int Mat::rank() const {
    Mat copy = *this;
    return static_cast<int>(row_reduce(copy).size());
}

std::vector<Vec> Mat::kernel_basis() const {
    Mat reduced = *this;
    std::vector<int> pivots = row_reduce(reduced);
    std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;

    std::vector<Vec> basis;
    for (int free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[static_cast<size_t>(free_col)]) continue;
        std::vector<Rat> v(static_cast<size_t>(cols_));
        v[static_cast<size_t>(free_col)] = Rat(1);
        for (size_t i = 0; i < pivots.size(); ++i)
            v[static_cast<size_t>(pivots[i])] = -reduced.at(static_cast<int>(i), free_col);
        basis.emplace_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> coordinates_in(const std::vector<Vec>& basis, const Vec& target) {
    if (basis.empty()) {
        if (target.is_zero()) return std::vector<Rat>{};
        return std::nullopt;
    }
    int dim = basis[0].dim();
    Mat aug(dim, static_cast<int>(basis.size()) + 1);
    for (int c = 0; c < static_cast<int>(basis.size()); ++c)
        for (int r = 0; r < dim; ++r) aug.at(r, c) = basis[static_cast<size_t>(c)][r];
    for (int r = 0; r < dim; ++r) aug.at(r, static_cast<int>(basis.size())) = target[r];

    std::vector<int> pivots = row_reduce(aug);
    // A pivot in the last column means the system is inconsistent.
    if (!pivots.empty() && pivots.back() == static_cast<int>(basis.size())) return std::nullopt;

    std::vector<Rat> coords(basis.size());
    for (size_t i = 0; i < pivots.size(); ++i)
        coords[static_cast<size_t>(pivots[i])] = aug.at(static_cast<int>(i), static_cast<int>(basis.size()));
    return coords;
}

bool linearly_independent(const std::vector<Vec>& vectors) {
    if (vectors.empty()) return true;
    return Mat::from_rows(vectors).rank() == static_cast<int>(vectors.size());
}

} // namespace isoform
