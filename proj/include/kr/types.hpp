#pragma once

/*
  Affine type tags and the string grammar used by the CLI.

  A type is a family plus the classical rank n; the diagram nodes are
  I = {0,...,n}. The string form carries the affine label N and the twist
  order r as in X_N^{(r)}:

    "A3~1"    A_3^{(1)}                       n = 3
    "B3~1"    B_3^{(1)}                       n = 3
    "A4~2"    A_{2n}^{(2)}  with 2n = 4       n = 2
    "A4~2dag" A_{2n}^{(2)dagger} with 2n = 4  n = 2  (arrow-reversed variant)
    "A5~2"    A_{2n-1}^{(2)} with 2n-1 = 5    n = 3
    "D3~2"    D_{n+1}^{(2)} with n+1 = 3      n = 2
    "E6~2", "D4~3", "F4~1", "G2~1", ...       as expected
*/

#include <compare>
#include <stdexcept>
#include <string>

namespace kr {

// Error for inputs outside the supported families/ranks or outside the
// scope of an operation (for example a twisted type handed to the plain
// Kleber tree).
struct UnsupportedType : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when a per-instance check of a conjectural statement fails
// (these are verified case by case, never assumed).
struct ConjectureViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a generation cap (graph vertices, tree nodes) is exceeded.
struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Family {
  A1,
  B1,
  C1,
  D1,
  E61,
  E71,
  E81,
  F41,
  G21,
  A2Even,     // A_{2n}^{(2)}
  A2EvenDag,  // A_{2n}^{(2)dagger}: A_{2n}^{(2)} with all arrows reversed
  A2Odd,      // A_{2n-1}^{(2)}
  D2,         // D_{n+1}^{(2)}
  E62,        // E_6^{(2)}
  D43,        // D_4^{(3)}
};

struct AffineType {
  Family family;
  int n;  // classical rank; diagram nodes are 0..n

  auto operator<=>(const AffineType&) const = default;

  // Twist order r of X_N^{(r)}.
  int twist() const;
  // Affine label N of X_N^{(r)}.
  int label() const;
  bool untwisted() const { return twist() == 1; }
  // True when the classical subalgebra is simply laced AND the type is
  // untwisted (A/D/E families), i.e. the plain Kleber algorithm applies.
  bool simply_laced() const;
  // True for the six nonexceptional families that possess B^{1,s} crystals
  // in this artifact plus the untwisted A/D rows used on the ambient side.
  bool nonexceptional() const;

  std::string str() const;
  static AffineType parse(const std::string& s);

  // Throws UnsupportedType unless n satisfies the family's minimum rank.
  void validate() const;
};

inline AffineType make_type(Family f, int n) {
  AffineType t{f, n};
  t.validate();
  return t;
}

}  // namespace kr
