#include "lovelab/conjectures.hpp"
#include "lovelab/errors.hpp"

namespace lovelab::conjectures {

std::vector<BigRational> t_transform(const std::vector<BigRational>& seq) {
  if (seq.size() < 2) throw DomainError("t_transform needs at least two entries");
  std::vector<BigRational> out;
  out.reserve(seq.size() - 1);
  for (size_t k = 1; k < seq.size(); ++k) out.push_back((seq[k - 1] - seq[k]) / BigRational((long long)k));
  return out;
}

std::vector<BigRational> naturals(int length) {
  std::vector<BigRational> s;
  for (int k = 1; k <= length; ++k) s.emplace_back(k);
  return s;
}

std::vector<std::vector<BigRational>> t_table(int rows, int length) {
  if (rows < 1 || length < rows) throw ParameterError("t_table needs 1 <= rows <= length");
  std::vector<std::vector<BigRational>> table{naturals(length)};
  while ((int)table.size() < rows) table.push_back(t_transform(table.back()));
  return table;
}

BigRational tn_first(int n, int seed_length) {
  if (n < 1 || n > 7) throw DomainError("tn_first needs 1 <= n <= 7");
  if (seed_length == 0) seed_length = n + 1;
  if (seed_length < n + 1) throw ParameterError("tn_first needs at least n + 1 seed terms");
  return t_table(n + 1, seed_length).back().front();
}

}  // namespace lovelab::conjectures
