#pragma once

// Closed-form exponent laws for the (-q)^k coefficients of the expansion
// identities. Each law was obtained by exact fitting and is re-checked
// against the frozen table in exponent_table.cpp. Positions are 1-based
// ranks inside the sorted row or column set of the expanded minor.

namespace qmv::laws {

/// Row expansion sum_j (-q)^{e} X_kj A(ij).
constexpr int row_laplace(int row, int col) { return col - row; }
/// Column expansion sum_i (-q)^{e} A(ij) X_il.
constexpr int col_laplace(int row, int col) { return col - row; }

/// Row expansion with the generator on the right:
/// [R|C] = sum_c (-q)^{e} [R \ r | C \ c] X_rc.
constexpr int right_row_expansion(int row_position, int col_position) { return row_position - col_position; }
/// Column expansion with the generator on the right:
/// [R|C] = sum_r (-q)^{e} [R \ r | C \ c] X_rc.
constexpr int right_col_expansion(int row_position, int col_position) { return col_position - row_position; }

/// Correction sum of X_1l [I'|J']' - [I'|J']' X_1l, summand j < l;
/// `between` counts the columns of J' strictly between j and l.
constexpr int thm25_first_row(int between) { return -1 - between; }
/// Correction sum of X_kn [I'|J']' - [I'|J']' X_kn, summand j > k;
/// `between` counts the rows of I' strictly between k and j.
constexpr int thm25_last_col(int between) { return 1 + between; }

}  // namespace qmv::laws
