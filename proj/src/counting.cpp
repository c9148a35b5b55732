#include "abel/counting.hpp"

#include <stdexcept>

namespace abel {

Integer tree_count_product(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("tree_count_product: n, k must be >= 0");
  Integer r = 1;
  for (int j = 0; j < k; ++j) r *= Integer(n - 1) * j + 1;
  return r;
}

TreeCountTable tree_count_recurrence(int n, int K) {
  if (n < 1) throw std::invalid_argument("tree_count_recurrence needs n >= 1");
  if (K < 0) throw std::invalid_argument("tree_count_recurrence: K must be >= 0");
  TreeCountTable table{n, {Integer(1)}};
  std::vector<int> parts(static_cast<std::size_t>(n));
  for (int k = 0; k < K; ++k) {
    Integer total = 0;
    // walk all (l_1..l_n) in N^n with sum l = k
    auto recurse = [&](auto&& self, int pos, int remaining) -> void {
      if (pos == n - 1) {
        parts[static_cast<std::size_t>(pos)] = remaining;
        Integer prod = multinomial(static_cast<unsigned>(k), parts);
        for (int l : parts) prod *= table.counts[static_cast<std::size_t>(l)];
        total += prod;
        return;
      }
      for (int l = 0; l <= remaining; ++l) {
        parts[static_cast<std::size_t>(pos)] = l;
        self(self, pos + 1, remaining - l);
      }
    };
    recurse(recurse, 0, k);
    table.counts.push_back(total);
  }
  return table;
}

namespace {

// p(k, m): partitions of k with every part <= m.
Integer partitions_with_max_part(int k, int m) {
  if (k == 0) return 1;
  if (k < 0 || m <= 0) return 0;
  std::vector<Integer> dp(static_cast<std::size_t>(k) + 1);
  dp[0] = 1;
  for (int part = 1; part <= m; ++part)
    for (int s = part; s <= k; ++s) dp[static_cast<std::size_t>(s)] += dp[static_cast<std::size_t>(s - part)];
  return dp[static_cast<std::size_t>(k)];
}

}  // namespace

Integer partition_count(int k) {
  if (k < 1) throw std::invalid_argument("partition_count needs k >= 1");
  return partitions_with_max_part(k, k);
}

Integer bounded_partition_count(int k, int max_part) {
  if (k < 1) throw std::invalid_argument("bounded_partition_count needs k >= 1");
  if (max_part < 0) throw std::invalid_argument("bounded_partition_count: max_part must be >= 0");
  return partitions_with_max_part(k, max_part);
}

Integer cf_coefficient(const Word& v, bool evaluate_at_zero) {
  const auto k = v.size();
  if (k == 0) throw std::invalid_argument("cf_coefficient needs a nonempty word");
  if (k == 1) {
    if (!evaluate_at_zero) return 1;
    return v[0] == 0 ? 1 : 0;  // X_i(x)(0) = delta_{i,0}
  }
  if (evaluate_at_zero) {
    long sum = 0;
    for (std::size_t j = 0; j < k; ++j) sum += v[j];
    if (sum != static_cast<long>(k) - 1) return 0;
  }
  // I = prod_{j=2..k} (i_k + ... + i_j - (k-j)), built from the tail inward
  Integer prod = 1;
  long suffix = 0;
  for (std::size_t j = k; j >= 2; --j) {
    suffix += v[j - 1];
    prod *= Integer(suffix) - static_cast<long>(k - j);
  }
  return prod;
}

bool in_M0(std::span<const int> indices, int n) {
  const int k = static_cast<int>(indices.size());
  if (k < 1) return false;
  long sum = 0;
  for (int i : indices) {
    if (i < 0 || i > n) return false;
    sum += i;
  }
  if (sum != k - 1) return false;
  long suffix = 0;
  for (int j = k; j >= 2; --j) {
    suffix += indices[static_cast<std::size_t>(j - 1)];
    if (suffix < k - j) return false;
  }
  return true;
}

std::vector<CFIndex> enumerate_M0(int k, int n) {
  if (k < 1) throw std::invalid_argument("enumerate_M0 needs k >= 1");
  if (n < 0) throw std::invalid_argument("enumerate_M0: n must be >= 0");
  // In prefix form the constraints read: P_j = i_1+...+i_j <= j for j < k,
  // and P_k = k-1. DFS in lexicographic order with capacity pruning.
  std::vector<CFIndex> out;
  CFIndex current(static_cast<std::size_t>(k));
  auto recurse = [&](auto&& self, int pos, int prefix_sum) -> void {
    if (pos == k) {
      if (prefix_sum == k - 1) out.push_back(current);
      return;
    }
    const int cap = std::min(n, (pos + 1 < k ? pos + 1 : k - 1) - prefix_sum);
    for (int i = 0; i <= cap; ++i) {
      // remaining positions must still be able to reach the total k-1
      if (prefix_sum + i + static_cast<long>(k - pos - 1) * n < k - 1) continue;
      current[static_cast<std::size_t>(pos)] = i;
      self(self, pos + 1, prefix_sum + i);
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

}  // namespace abel
