#include "kra/rational.hpp"

#include <stdexcept>

namespace kra {

ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
    const Rational norm = b.re * b.re + b.im * b.im;
    if (norm == 0) {
        throw std::domain_error("division by zero complex rational");
    }
    return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
}

std::string to_string(const Rational& q) {
    return q.str();
}

std::string to_string(const ComplexRational& z) {
    if (z.im == 0) {
        return to_string(z.re);
    }
    std::string imag;
    const Rational mag = z.im < 0 ? Rational(-z.im) : z.im;
    imag = mag == 1 ? std::string("i") : to_string(mag) + "*i";
    if (z.re == 0) {
        return z.im < 0 ? "-" + imag : imag;
    }
    return to_string(z.re) + (z.im < 0 ? "-" : "+") + imag;
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<ComplexRational> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        throw std::invalid_argument("matrix data does not match its shape");
    }
}

bool CMatrix::is_zero() const {
    for (const auto& z : data_) {
        if (!z.is_zero()) {
            return false;
        }
    }
    return true;
}

CMatrix CMatrix::conj() const {
    CMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) {
        out.data_[k] = data_[k].conj();
    }
    return out;
}

CMatrix CMatrix::transpose() const {
    CMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out.at(c, r) = at(r, c);
        }
    }
    return out;
}

CMatrix CMatrix::negated() const {
    CMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) {
        out.data_[k] = -data_[k];
    }
    return out;
}

namespace {

// Incremental row-echelon form over Q(i). Each inserted vector is reduced
// against the pivots already stored; a nonzero remainder becomes a new pivot.
class Echelon {
public:
    explicit Echelon(std::size_t width) : width_(width) {}

    bool insert(std::vector<ComplexRational> v) {
        reduce(v);
        for (std::size_t c = 0; c < width_; ++c) {
            if (!v[c].is_zero()) {
                const ComplexRational lead = v[c];
                for (auto& z : v) {
                    z = z / lead;
                }
                rows_.push_back(std::move(v));
                pivots_.push_back(c);
                return true;
            }
        }
        return false;
    }

    [[nodiscard]] std::size_t rank() const { return rows_.size(); }

private:
    void reduce(std::vector<ComplexRational>& v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const ComplexRational factor = v[pivots_[k]];
            if (factor.is_zero()) {
                continue;
            }
            for (std::size_t c = 0; c < width_; ++c) {
                v[c] = v[c] - factor * rows_[k][c];
            }
        }
    }

    std::size_t width_;
    std::vector<std::vector<ComplexRational>> rows_;
    std::vector<std::size_t> pivots_;
};

void require_same_shape(std::span<const CMatrix> ms) {
    for (const auto& m : ms) {
        if (m.rows() != ms.front().rows() || m.cols() != ms.front().cols()) {
            throw std::invalid_argument("span computation over matrices of different shapes");
        }
    }
}

} // namespace

std::vector<std::size_t> span_basis(std::span<const CMatrix> matrices) {
    std::vector<std::size_t> basis;
    if (matrices.empty()) {
        return basis;
    }
    require_same_shape(matrices);
    Echelon ech(matrices.front().data().size());
    for (std::size_t k = 0; k < matrices.size(); ++k) {
        if (ech.insert(matrices[k].data())) {
            basis.push_back(k);
        }
    }
    return basis;
}

std::size_t span_rank(std::span<const CMatrix> matrices) {
    return span_basis(matrices).size();
}

std::optional<std::vector<ComplexRational>> span_coordinates(std::span<const CMatrix> basis,
                                                             const CMatrix& target) {
    const std::size_t n = basis.size();
    const std::size_t width = target.data().size();
    for (const auto& b : basis) {
        if (b.data().size() != width) {
            throw std::invalid_argument("span coordinates over matrices of different shapes");
        }
    }
    // Solve sum_k x_k basis_k = target: augmented system of `width` equations.
    std::vector<std::vector<ComplexRational>> rows(width, std::vector<ComplexRational>(n + 1));
    for (std::size_t r = 0; r < width; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            rows[r][k] = basis[k].data()[r];
        }
        rows[r][n] = target.data()[r];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < width; ++c) {
        std::size_t sel = rank;
        while (sel < width && rows[sel][c].is_zero()) {
            ++sel;
        }
        if (sel == width) {
            continue;
        }
        std::swap(rows[sel], rows[rank]);
        const ComplexRational lead = rows[rank][c];
        for (auto& z : rows[rank]) {
            z = z / lead;
        }
        for (std::size_t r = 0; r < width; ++r) {
            if (r != rank && !rows[r][c].is_zero()) {
                const ComplexRational f = rows[r][c];
                for (std::size_t k = 0; k <= n; ++k) {
                    rows[r][k] = rows[r][k] - f * rows[rank][k];
                }
            }
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (std::size_t r = rank; r < width; ++r) {
        if (!rows[r][n].is_zero()) {
            return std::nullopt;
        }
    }
    std::vector<ComplexRational> x(n);
    for (std::size_t r = 0; r < rank; ++r) {
        x[pivot_col[r]] = rows[r][n];
    }
    return x;
}

} // namespace kra
