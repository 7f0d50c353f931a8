#include "nilcone/int_matrix.hpp"

namespace nilcone {

IntegerMatrix::IntegerMatrix(std::vector<std::string> labels,
                             std::vector<std::vector<Int>> rows)
    : labels_(std::move(labels)), rows_(std::move(rows)) {
    if (rows_.size() != labels_.size())
        throw ParseError("matrix row count does not match label count");
    for (const auto& r : rows_)
        if (r.size() != labels_.size())
            throw ParseError("matrix is not square");
}

IntegerMatrix IntegerMatrix::identity(std::vector<std::string> labels) {
    std::size_t n = labels.size();
    std::vector<std::vector<Int>> rows(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        rows[i][i] = 1;
    return IntegerMatrix(std::move(labels), std::move(rows));
}

bool IntegerMatrix::is_lower_unitriangular() const {
    for (std::size_t i = 0; i < size(); ++i) {
        if (rows_[i][i] != 1)
            return false;
        for (std::size_t j = i + 1; j < size(); ++j)
            if (rows_[i][j] != 0)
                return false;
    }
    return true;
}

bool IntegerMatrix::is_identity() const {
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            if (rows_[i][j] != (i == j ? 1 : 0))
                return false;
    return true;
}

IntegerMatrix IntegerMatrix::multiply(const IntegerMatrix& other) const {
    if (size() != other.size())
        throw ParseError("matrix size mismatch in multiply");
    std::size_t n = size();
    std::vector<std::vector<Int>> out(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (rows_[i][k] == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                out[i][j] += rows_[i][k] * other.rows_[k][j];
        }
    return IntegerMatrix(labels_, std::move(out));
}

IntegerMatrix invert_unitriangular(const IntegerMatrix& m) {
    if (!m.is_lower_unitriangular())
        throw NotUnitriangular("matrix is not lower unitriangular");
    std::size_t n = m.size();
    std::vector<std::vector<Int>> inv(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    // inv[i][j] = -sum_{k=j..i-1} m[i][k] * inv[k][j]
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = j + 1; i < n; ++i) {
            Int acc = 0;
            for (std::size_t k = j; k < i; ++k)
                acc += m.at(i, k) * inv[k][j];
            inv[i][j] = -acc;
        }
    return IntegerMatrix(m.labels(), std::move(inv));
}

std::vector<std::vector<Int>> kronecker_entries(const std::vector<std::vector<Int>>& a,
                                                const std::vector<std::vector<Int>>& b) {
    std::size_t na = a.size(), nb = b.size();
    std::vector<std::vector<Int>> out(na * nb, std::vector<Int>(na * nb, 0));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    out[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
    return out;
}

} // namespace nilcone
