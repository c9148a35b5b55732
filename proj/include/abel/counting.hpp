#pragma once

#include <span>
#include <vector>

#include "abel/exact.hpp"
#include "abel/word.hpp"

namespace abel {

/// |T_n^k| for k = 0..K: planar rooted full n-ary increasingly labeled trees
/// on k parent vertices. counts[k+1]/counts[k] = (n-1)k + 1 for n >= 1.
struct TreeCountTable {
  int n = 0;
  std::vector<Integer> counts;
};

/// ((n-1)(k-1)+1)((n-1)(k-2)+1)...n, i.e. prod_{j<k} ((n-1)j+1); 1 for k = 0.
Integer tree_count_product(int n, int k);

/// Same table built solely from the subtree-splitting recurrence
/// |T_n^{k+1}| = sum over (l_1..l_n), sum l = k, of multinomial(k; l) prod |T_n^{l_j}|.
/// Requires n >= 1; n = 0 is served by the product formula only.
TreeCountTable tree_count_recurrence(int n, int K);

/// Number of integer partitions of k (k >= 1).
Integer partition_count(int k);

/// Partitions of k with largest part <= max_part; by conjugation this equals
/// the number of partitions into at most max_part parts, which is the exact
/// count of integrals one order of the product expansion performs.
Integer bounded_partition_count(int k, int max_part);

/// Chen-Fliess coefficient of the word v = a_{i_1}...a_{i_k}: the scalar in
/// X_v = I x^{sum i - k + 1} d/dx modulo second derivatives, with
/// I = i_k (i_k+i_{k-1}-1) ... (i_k+...+i_2-k+2). With evaluate_at_zero the
/// value of X_v(x)(0): I when sum i = k-1, else 0 (and delta_{i,0} for k = 1).
Integer cf_coefficient(const Word& v, bool evaluate_at_zero = true);

/// One letter-index sequence (i_1,...,i_k); member of M0(k) iff the sum
/// equality and the k-1 suffix inequalities hold.
using CFIndex = std::vector<int>;

/// True iff indices lie in {0..n}^k, sum to k-1, and every suffix satisfies
/// i_k+...+i_j >= k-j.
bool in_M0(std::span<const int> indices, int n);

/// All elements of M0(k) over the alphabet {a_0..a_n}, in lexicographic
/// order. |M0(k)| is the k-th Catalan number once n >= k.
std::vector<CFIndex> enumerate_M0(int k, int n);

}  // namespace abel
