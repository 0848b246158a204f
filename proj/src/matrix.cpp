#include "ellrc/matrix.hpp"

#include <algorithm>

namespace ellrc {

void Matrix::append_row(std::span<const Felt> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw Error(ErrorKind::InvalidArgument, "row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    }
    return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
    Matrix out(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t j = 0; j < cols.size(); ++j) out.at(r, j) = at(r, cols[j]);
    }
    return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
    Matrix out(rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto src = row(rows[i]);
        std::copy(src.begin(), src.end(), out.row(i).begin());
    }
    return out;
}

void axpy(const Field& F, std::span<Felt> row, Felt c, std::span<const Felt> src) {
    if (c.v == 0) return;
    const std::size_t n = row.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (src[i].v != 0) row[i] = F.add(row[i], F.mul(c, src[i]));
    }
}

std::vector<std::size_t> rref(const Field& F, Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m.at(sel, c).v == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r) {
            auto a = m.row(sel);
            auto b = m.row(r);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        Felt inv = F.inv(m.at(r, c));
        for (auto& x : m.row(r)) x = F.mul(x, inv);
        auto pivot_row = m.row(r);
        for (std::size_t k = 0; k < m.rows(); ++k) {
            if (k == r) continue;
            Felt f = m.at(k, c);
            if (f.v != 0) axpy(F, m.row(k), F.neg(f), pivot_row);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const Field& F, Matrix m) {
    // Forward elimination only.
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m.at(sel, c).v == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r) {
            auto a = m.row(sel);
            auto b = m.row(r);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        Felt inv = F.neg(F.inv(m.at(r, c)));
        auto pivot_row = m.row(r);
        for (std::size_t k = r + 1; k < m.rows(); ++k) {
            Felt f = m.at(k, c);
            if (f.v != 0) axpy(F, m.row(k).subspan(c), F.mul(f, inv), pivot_row.subspan(c));
        }
        ++r;
    }
    return r;
}

Matrix nullspace(const Field& F, Matrix m) {
    auto pivots = rref(F, m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix out(0, m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Felt> v(m.cols());
        v[free] = F.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(m.at(i, free));
        out.append_row(v);
    }
    return out;
}

Matrix left_nullspace(const Field& F, const Matrix& m) { return nullspace(F, m.transpose()); }

std::optional<std::vector<Felt>> solve(const Field& F, const Matrix& m, std::span<const Felt> b) {
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    auto pivots = rref(F, aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<Felt> x(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols());
    return x;
}

std::optional<std::vector<Felt>> solve_square(const Field& F, const Matrix& m, std::span<const Felt> b) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "solve_square needs a square matrix");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    auto pivots = rref(F, aug);
    if (pivots.size() < m.cols() || (!pivots.empty() && pivots.back() == m.cols())) return std::nullopt;
    std::vector<Felt> x(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i) x[i] = aug.at(i, m.cols());
    return x;
}

Matrix multiply(const Field& F, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) axpy(F, out.row(i), a.at(i, k), b.row(k));
    }
    return out;
}

std::vector<Felt> vec_mat(const Field& F, std::span<const Felt> v, const Matrix& m) {
    std::vector<Felt> out(m.cols());
    for (std::size_t k = 0; k < m.rows(); ++k) axpy(F, out, v[k], m.row(k));
    return out;
}

std::vector<Felt> mat_vec(const Field& F, const Matrix& m, std::span<const Felt> v) {
    std::vector<Felt> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Felt acc{};
        auto row = m.row(r);
        for (std::size_t c = 0; c < m.cols(); ++c) acc = F.fma(acc, row[c], v[c]);
        out[r] = acc;
    }
    return out;
}

bool EchelonBasis::insert(std::vector<Felt> row) {
    if (row.size() != cols_) throw Error(ErrorKind::InvalidArgument, "row length mismatch");
    const Field& F = field_;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (row[c].v == 0) continue;
        std::size_t p = pivot_of_col_[c];
        if (p == kNone) {
            Felt inv = F.inv(row[c]);
            for (std::size_t i = c; i < cols_; ++i) row[i] = F.mul(row[i], inv);
            pivot_of_col_[c] = rows_.size();
            rows_.push_back(std::move(row));
            return true;
        }
        const auto& prow = rows_[p];
        axpy(F, std::span<Felt>(row).subspan(c), F.neg(row[c]), std::span<const Felt>(prow).subspan(c));
    }
    return false;
}

}  // namespace ellrc
