#ifndef WEYLORDER_TESTS_FREUDENTHAL_HPP
#define WEYLORDER_TESTS_FREUDENTHAL_HPP

// Test-only dimension oracle: weight multiplicities by Freudenthal's
// recursion, summed over all weights of V(lambda). Shares no code with the
// library; the Cartan matrix and positive roots are rebuilt here.

#include <map>
#include <vector>

namespace oracle {

struct Algebra {
  char family;
  int rank;
  std::vector<std::vector<int>> cartan;   // [i][j] = alpha_j(h_i)
  std::vector<int> sym;                   // d_i with d_i * cartan[i][j] symmetric
  std::vector<std::vector<int>> positive; // positive roots, simple-root coordinates
};

Algebra make_algebra(char family, int rank);

/// Multiplicity of every weight lambda - sum c_i alpha_i, keyed by c.
std::map<std::vector<int>, long long> multiplicities(const Algebra& g, const std::vector<int>& lambda);

long long dimension(const Algebra& g, const std::vector<int>& lambda);

/// Positive coroots: positive roots of the transposed Cartan matrix.
std::vector<std::vector<int>> positive_coroots(char family, int rank);

}  // namespace oracle

#endif
