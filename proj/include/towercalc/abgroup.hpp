#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "towercalc/errors.hpp"

namespace towercalc {

/// Exact integer type used everywhere; intermediate Smith-reduction values
/// can grow far past the inputs, so no fixed-width type is acceptable.
using Int = boost::multiprecision::cpp_int;

/// Dense integer matrix, row-major.  Zero-dimensional shapes are legal and
/// behave as the corresponding empty (co)domains.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  [[nodiscard]] static IntMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  [[nodiscard]] const Int& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  [[nodiscard]] IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

  /// Exact determinant via fraction-free (Bareiss) elimination.
  /// The empty 0x0 matrix has determinant 1.
  [[nodiscard]] Int determinant() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Smith normal form u*m*v = d with u, v unimodular and d a nonnegative
/// diagonal matrix whose entries form a divisibility chain d1 | d2 | ...
struct SnfResult {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
};

[[nodiscard]] SnfResult smith_normal_form(const IntMatrix& m);

/// Finitely generated abelian group in invariant-factor normal form:
/// Z^rank x Z/d1 x ... x Z/dk with every di >= 2 and d1 | d2 | ... | dk.
/// The normal form is unique, so operator== decides isomorphism.
class FgAbGroup {
 public:
  FgAbGroup() = default;  // the trivial group

  [[nodiscard]] static FgAbGroup free(std::size_t rank);
  /// Cyclic group of order n: n == 0 gives Z, n == 1 the trivial group.
  [[nodiscard]] static FgAbGroup cyclic(const Int& n);
  /// Canonicalizes an arbitrary bag of cyclic summands (order 0 = Z,
  /// order 1 dropped, signs ignored) into normal form.
  [[nodiscard]] static FgAbGroup from_summands(std::size_t rank,
                                               std::vector<Int> orders);

  [[nodiscard]] std::size_t rank() const { return rank_; }
  [[nodiscard]] const std::vector<Int>& invariant_factors() const {
    return factors_;
  }
  [[nodiscard]] bool is_trivial() const {
    return rank_ == 0 && factors_.empty();
  }
  /// Coordinates an element of this group carries: rank free ones followed
  /// by one residue per invariant factor.
  [[nodiscard]] std::size_t coord_count() const {
    return rank_ + factors_.size();
  }

  bool operator==(const FgAbGroup& rhs) const = default;

  /// Canonical rendering "Z^r x Z/d1 x ...", "Z", "Z/6", or "0";
  /// unicode swaps in the blackboard forms.
  [[nodiscard]] std::string str(bool unicode = false) const;

 private:
  std::size_t rank_ = 0;
  std::vector<Int> factors_;
};

[[nodiscard]] FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);
[[nodiscard]] FgAbGroup tensor(const FgAbGroup& a, const FgAbGroup& b);
[[nodiscard]] FgAbGroup hom(const FgAbGroup& a, const FgAbGroup& b);
[[nodiscard]] FgAbGroup ext(const FgAbGroup& a, const FgAbGroup& b);
[[nodiscard]] FgAbGroup tor(const FgAbGroup& a, const FgAbGroup& b);

/// Cokernel of the left-multiplication map Z^cols -> Z^rows given by m.
[[nodiscard]] FgAbGroup cokernel(const IntMatrix& m);

/// Element of an FgAbGroup: free coordinates first, then one residue per
/// invariant factor, always reduced into [0, di).
class GroupElement {
 public:
  GroupElement(FgAbGroup parent, std::vector<Int> coords);

  [[nodiscard]] static GroupElement zero(const FgAbGroup& parent);

  [[nodiscard]] const FgAbGroup& parent() const { return parent_; }
  [[nodiscard]] std::vector<Int> coords() const;
  [[nodiscard]] bool is_zero() const;

  [[nodiscard]] GroupElement operator+(const GroupElement& rhs) const;
  [[nodiscard]] GroupElement operator-() const;
  [[nodiscard]] GroupElement operator-(const GroupElement& rhs) const;
  bool operator==(const GroupElement& rhs) const = default;

  /// Renders as "(3, 1)"; the zero of the trivial group is "()".
  [[nodiscard]] std::string str() const;

 private:
  FgAbGroup parent_;
  std::vector<Int> free_;
  std::vector<Int> torsion_;
};

/// Parses "Z", "Z/6", "Z^2 x Z/2 x Z/4", "Z^0", "0".
[[nodiscard]] FgAbGroup parse_group(std::string_view text);

/// Parses "(3, 1)" against the parent's coordinate shape; a wrong
/// coordinate count is a shape-mismatch ParseError.
[[nodiscard]] GroupElement parse_element(const FgAbGroup& parent,
                                         std::string_view text);

/// Parses "2 4; 6 8" (rows ;-separated, entries by whitespace or commas).
[[nodiscard]] IntMatrix parse_matrix(std::string_view text);

/// Renders in the same rows-;-separated syntax parse_matrix accepts.
[[nodiscard]] std::string matrix_str(const IntMatrix& m);

}  // namespace towercalc
