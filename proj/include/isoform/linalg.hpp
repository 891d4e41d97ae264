#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isoform/rational.hpp"

namespace isoform {

// Vector with exact rational coordinates. Immutable after construction.
class Vec {
public:
    Vec() = default;
    explicit Vec(std::vector<Rat> coords) : coords_(std::move(coords)) {}

    static Vec zero(int dim) { return Vec(std::vector<Rat>(static_cast<size_t>(dim))); }

    int dim() const { return static_cast<int>(coords_.size()); }
    const Rat& operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const;

    Vec operator+(const Vec& o) const;
    Vec operator-(const Vec& o) const;
    Vec operator-() const;
    Vec scaled(const Rat& c) const;

    Rat dot(const Vec& o) const;
    Rat norm2() const { return dot(*this); }

    bool operator==(const Vec& o) const { return coords_ == o.coords_; }
    bool operator!=(const Vec& o) const { return !(*this == o); }
    // Lexicographic order; used to keep root sets sorted and deduplicated.
    bool operator<(const Vec& o) const;

    std::string to_string() const; // "(1, -1/2, 0)"

private:
    std::vector<Rat> coords_;
};

// Dense rational matrix, row-major. Sizes in this library stay below ~16x16.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols)) {}

    static Mat identity(int n);
    static Mat from_columns(const std::vector<Vec>& cols);
    static Mat from_rows(const std::vector<Vec>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rat& at(int r, int c) const { return data_[static_cast<size_t>(r * cols_ + c)]; }
    Rat& at(int r, int c) { return data_[static_cast<size_t>(r * cols_ + c)]; }

    Vec apply(const Vec& v) const;
    Mat operator*(const Mat& o) const;
    Mat transpose() const;

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    bool is_identity() const;

    // Exact inverse by Gauss-Jordan elimination; throws std::domain_error if singular.
    Mat inverse() const;

    int rank() const;

    // Basis of the null space {x : A x = 0}.
    std::vector<Vec> kernel_basis() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> data_;
};

// Exact coordinates of `target` in the given spanning vectors, or nullopt if
// `target` is outside their span. The vectors need not be independent; when
// they are, the coordinates are unique.
std::optional<std::vector<Rat>> coordinates_in(const std::vector<Vec>& basis, const Vec& target);

bool linearly_independent(const std::vector<Vec>& vectors);

} // namespace isoform
