#include "catalog.hpp"

namespace theta::cli {

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries{
      {"type II", "over R, C and H",
       "Moeglin [Mo] (real); Adams-Barbasch [AB1] (complex); Li-Paul-Tan-Zhu [LPTZ] (quaternion)"},
      {"complex type I", "all", "Adams-Barbasch [AB1]"},
      {"(O(p,q), Sp(2n,R))", "p+q = 2n or 2n+2", "Moeglin and Paul [Mo, Pa2]"},
      {"(O(p,q), Sp(2n,R))", "p+q = 2n+1", "Adams-Barbasch [AB2]"},
      {"(U(p,q), U(r,s))", "equal rank", "Paul [Pa1], where p+q=r+s"},
      {"(Sp(p,q), O*(2n))", "equal rank and beyond", "Li-Paul-Tan-Zhu [LPTZ], where p+q<=n"},
      {"(O(2,2), Sp(4,R))", "single pair", "Przebinda [Pr]"},
      {"(Sp(p,q), O*(4))", "all p, q", "Bao [Ba]"},
      {"(O(p,q), Sp(2n,R))", "p+q = 4", "Fan [Fa]"},
  };
  return entries;
}

}  // namespace theta::cli
