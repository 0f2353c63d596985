// Exact complex-rational scalars and small dense matrices.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kra {

using Rational = boost::multiprecision::cpp_rational;

/// a + b i with a, b exact rationals.
struct ComplexRational {
    Rational re{0};
    Rational im{0};

    ComplexRational() = default;
    ComplexRational(Rational r, Rational i = Rational{0}) : re(std::move(r)), im(std::move(i)) {}

    [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }
    [[nodiscard]] ComplexRational conj() const { return {re, -im}; }

    friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
    friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b);
    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

/// Canonical text form accepted by the .kra matrix syntax, e.g. "1/2-3*i".
std::string to_string(const ComplexRational& z);
std::string to_string(const Rational& q);

/// Row-major dense matrix of exact complex rationals.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    CMatrix(std::size_t rows, std::size_t cols, std::vector<ComplexRational> data);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    ComplexRational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    [[nodiscard]] const ComplexRational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    [[nodiscard]] const std::vector<ComplexRational>& data() const { return data_; }

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] CMatrix conj() const;
    [[nodiscard]] CMatrix transpose() const;
    [[nodiscard]] CMatrix adjoint() const { return conj().transpose(); }
    [[nodiscard]] CMatrix negated() const;

    friend bool operator==(const CMatrix& a, const CMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<ComplexRational> data_;
};

/// Dimension over C of the span of equally shaped matrices (exact elimination).
std::size_t span_rank(std::span<const CMatrix> matrices);

/// Greedy basis selection: indices of the matrices that extend the span, in order.
std::vector<std::size_t> span_basis(std::span<const CMatrix> matrices);

/// Coordinates of `target` in the given basis, or nullopt if it is outside the span.
std::optional<std::vector<ComplexRational>> span_coordinates(std::span<const CMatrix> basis,
                                                             const CMatrix& target);

} // namespace kra
