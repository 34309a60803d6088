#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace codelat {

using Int = std::int64_t;
using IntVec = std::vector<Int>;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense row-major matrix. Keeps its column count even with zero rows.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols)
    {
        Matrix m(0, cols);
        for (const auto& r : rows) m.append_row(r);
        return m;
    }
    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::vector<T> row_vec(std::size_t i) const { return {row(i).begin(), row(i).end()}; }

    void append_row(std::span<const T> r)
    {
        if (r.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }
    void append_row(const std::vector<T>& r) { append_row(std::span<const T>(r)); }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    std::vector<std::vector<T>> to_rows() const
    {
        std::vector<std::vector<T>> out;
        for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vec(i));
        return out;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rational>;
using BigMatrix = Matrix<BigInt>;

/// A rational vector stored as integer numerators over one positive denominator.
struct RatVec {
    IntVec num;
    Int den = 1;
};

// Overflow-checked int64 arithmetic. Everything in the library goes through
// these so that a silent wraparound can never masquerade as a result.
inline Int add_ck(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in add");
    return r;
}
inline Int sub_ck(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in sub");
    return r;
}
inline Int mul_ck(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in mul");
    return r;
}
inline Int narrow(__int128 v)
{
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("int64 overflow in narrow");
    return static_cast<Int>(v);
}
inline Int narrow(const BigInt& v)
{
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("int64 overflow in narrow");
    return static_cast<Int>(v);
}

inline Int floor_div(Int a, Int b)
{
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
inline Int mod_pos(Int a, Int m)
{
    Int r = a % m;
    return r < 0 ? r + m : r;
}
inline Int lcm_ck(Int a, Int b)
{
    if (a == 0 || b == 0) return 0;
    return mul_ck(a / std::gcd(a, b), b);
}

inline Int dot_ck(std::span<const Int> a, std::span<const Int> b)
{
    __int128 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
    return narrow(s);
}

inline std::string to_string(const Rational& q)
{
    return q.str();
}

}  // namespace codelat
