#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nilcone/errors.hpp"

namespace nilcone {

using Int = boost::multiprecision::cpp_int;

/// Square integer matrix with labelled rows/columns.  Row and column label
/// sequences are identical; entries are arbitrary-precision.
class IntegerMatrix {
public:
    IntegerMatrix(std::vector<std::string> labels, std::vector<std::vector<Int>> rows);

    static IntegerMatrix identity(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const Int& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    const std::vector<std::vector<Int>>& rows() const { return rows_; }

    bool is_lower_unitriangular() const;
    bool is_identity() const;

    IntegerMatrix multiply(const IntegerMatrix& other) const;

    bool operator==(const IntegerMatrix&) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Int>> rows_;
};

/// Exact inverse of a lower unitriangular matrix by back-substitution.
/// Throws NotUnitriangular if a diagonal entry differs from 1 or an upper
/// entry from 0.
IntegerMatrix invert_unitriangular(const IntegerMatrix& m);

/// Kronecker product of the raw entry arrays (left factor most significant).
std::vector<std::vector<Int>> kronecker_entries(const std::vector<std::vector<Int>>& a,
                                                const std::vector<std::vector<Int>>& b);

} // namespace nilcone
