#pragma once

#include "nilcone/int_matrix.hpp"
#include "nilcone/partition.hpp"

namespace nilcone {

/// Kostka number K_{lambda,nu}: the number of semistandard Young tableaux of
/// shape lambda and content nu.  Computed by counting chains of horizontal
/// strips (the test suite checks it against a direct tableau enumeration).
/// Throws WeightMismatch when |lambda| != |nu|.
Int kostka(const Partition& lambda, const Partition& nu);

/// The full Kostka matrix on partitions of d, rows and columns in the
/// canonical order (ascending lex, so (1^d) first).  Entry (row lambda,
/// col nu) = K_{lambda,nu}; lower unitriangular in this order.
IntegerMatrix kostka_matrix(int d);

/// dim End of a torsion module of type lambda at a single point:
/// sum_{i,j} min(lambda_i, lambda_j).
long long endo_dim(const Partition& lambda);

} // namespace nilcone
