#ifndef BG_LINALG_HPP
#define BG_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "bg/coalition.hpp"
#include "bg/rational.hpp"

namespace bg {

using Vector = std::vector<Rational>;
/// Row-major dense matrix.
using Matrix = std::vector<Vector>;

/// Exact rank by Gaussian elimination.
std::size_t rank(Matrix rows);

/// Dimension of the affine hull of `points`; -1 for an empty list.
int affine_dimension(const std::vector<Vector>& points);

/// Solves A x = b when the solution exists and is unique.
std::optional<Vector> solve_unique(Matrix a, Vector b);

/// Some solution of A x = b (free variables set to zero), if consistent.
std::optional<Vector> solve_any(Matrix a, Vector b);

/// Characteristic vector 1^S as a length-n rational vector.
Vector characteristic(int n, Coalition s);

/// Rank of {1^S : S in sets}.
std::size_t coalition_rank(int n, const std::vector<Coalition>& sets);

/// Incremental column echelon form over the characteristic vectors of
/// coalitions. Tracks how each reduced row is built from the inserted
/// coalitions, so the all-ones vector can be expressed in terms of them.
class CoalitionBasis {
 public:
  explicit CoalitionBasis(int n);

  std::size_t size() const { return rows_.size(); }

  /// Adds 1^S if independent of the current rows. Returns false (and leaves
  /// the basis unchanged) when dependent.
  bool try_add(Coalition s);

  /// Coefficients lambda with sum lambda_k 1^{S_k} = 1^N over the inserted
  /// coalitions (insertion order), or nullopt if 1^N is not in the span.
  std::optional<Vector> express_grand() const;

 private:
  struct Row {
    Vector values;      // reduced vector, length n
    int pivot;          // leading column
    Vector combination; // coefficients over inserted coalitions
  };
  int n_;
  std::vector<Row> rows_;
};

}  // namespace bg

#endif  // BG_LINALG_HPP
