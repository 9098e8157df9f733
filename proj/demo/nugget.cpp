// McNugget numbers: boxes of 6, 9 and 20 reach every count above 43.
// Build a rational matrix whose integral powers are exactly those counts,
// then read the semigroup back from the matrix.

#include <iostream>

#include "expsg/expsg.hpp"

int main() {
  using namespace expsg;

  const auto s = SubsemigroupDesc::from_generators({6, 9, 20});
  std::cout << "S = " << s.str() << ", Frobenius number " << s.part().frobenius() << "\n";

  const auto v = find_superdiagonal(s);
  std::cout << "superdiagonal exponents (base " << v.base << "):";
  for (int x : v.entries) std::cout << ' ' << x;
  std::cout << "\n";

  const auto built = represent(s);
  std::cout << "realized by a " << built.matrix.rows() << "x" << built.matrix.cols() << " nilpotent matrix\n";

  const auto back = exponent_semigroup(built.matrix);
  std::cout << "exponent semigroup of that matrix: " << back.classification->str() << "\n";
  std::cout << "A^43 integral? " << (verify_membership(built.matrix, 43) ? "yes" : "no") << "\n";
  std::cout << "A^44 integral? " << (verify_membership(built.matrix, 44) ? "yes" : "no") << "\n";

  const auto b = bounds(s);
  std::cout << "smallest realizing dimension lies in [" << b.lower << ", " << b.upper << "]\n";
  for (const auto& j : b.justifications)
    std::cout << "  " << to_string(j.side) << " " << j.value << ": " << j.cite << "\n";
  return back.classification && *back.classification == s ? 0 : 1;
}
