#ifndef STABLERING_SERIES_HPP
#define STABLERING_SERIES_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "stablering/errors.hpp"

namespace stablering {

/// Coefficients of q^0 .. q^(terms-1) of
/// prod_{r>=1} (1+q^r)^h_odd / (1-q^r)^h_even, exact.
/// Factors with r >= terms cannot affect the retained coefficients.
inline std::vector<boost::multiprecision::cpp_int> goettsche_series(int h_even,
                                                                    int h_odd,
                                                                    int terms) {
  if (h_even < 0 || h_odd < 0)
    throw validation_error("goettsche: Betti numbers must be nonnegative");
  if (terms < 1 || terms > 200)
    throw validation_error("goettsche: terms must be in 1..200");
  std::vector<boost::multiprecision::cpp_int> a(terms, 0);
  a[0] = 1;
  for (int r = 1; r < terms; ++r) {
    for (int rep = 0; rep < h_odd; ++rep)
      for (int i = terms - 1; i >= r; --i) a[i] += a[i - r];
    // multiply by 1/(1-q^r) = 1 + q^r + q^2r + ...
    for (int rep = 0; rep < h_even; ++rep)
      for (int i = r; i < terms; ++i) a[i] += a[i - r];
  }
  return a;
}

}  // namespace stablering

#endif
